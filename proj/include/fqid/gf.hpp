#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fqid {

/// An element of F_q stored as its canonical index: the coefficient vector
/// (c_0, ..., c_{k-1}) in the polynomial basis 1, g, ..., g^{k-1} encodes as
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Index order is the canonical element
/// order (zero first, then 1, ..., then g, g+1, ...).
struct Scalar {
  std::uint16_t code = 0;

  bool is_zero() const { return code == 0; }
  friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^k <= 2^16, as F_p[g]/(modulus).
///
/// Multiplication goes through discrete log tables built once at construction
/// from the first primitive element in canonical order. Addition uses a full
/// table when q <= 1024.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Validates p, k and the modulus. When k > 1 and no modulus is given the
  /// built-in default for q in {4, 8, 9, 16, 25, 27} is used. `modulus` lists
  /// coefficients from the constant term up and must be monic of degree k.
  static FieldPtr create(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt);

  /// Field of order q using the default modulus.
  static FieldPtr of_order(std::uint32_t q);

  int p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Empty for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

  Scalar zero() const { return {}; }
  Scalar one() const { return {1}; }
  /// The polynomial-basis generator g (requires k > 1).
  Scalar generator() const;
  /// Image of an integer in the prime subfield.
  Scalar from_int(long long value) const;

  Scalar add(Scalar a, Scalar b) const {
    if (k_ == 1) {
      const std::uint32_t s = std::uint32_t(a.code) + b.code;
      return {static_cast<std::uint16_t>(s >= q_ ? s - q_ : s)};
    }
    if (!add_table_.empty()) return {add_table_[std::size_t(a.code) * q_ + b.code]};
    return add_digits(a, b);
  }
  Scalar neg(Scalar a) const { return {neg_table_[a.code]}; }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (a.code == 0 || b.code == 0) return {};
    return {exp_[std::size_t(log_[a.code]) + log_[b.code]]};
  }
  /// Throws ErrorKind::DivisionByZero on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  /// a^e with 0^0 = 1.
  Scalar pow(Scalar a, std::uint64_t e) const;

  std::vector<int> coeffs(Scalar a) const;
  Scalar from_coeffs(const std::vector<int>& coeffs) const;

  /// All q elements in canonical order.
  std::vector<Scalar> elements() const;

  /// Text form: "0", "2", "g", "g+1", "2*g^2+g". Integers for the prime
  /// subfield, `g` with `^j` powers for the generator.
  std::string literal(Scalar a) const;
  /// Parses sums, differences and products of integers, `g`, `g^j` and
  /// parenthesized literals. Throws SyntaxError.
  Scalar parse_literal(std::string_view text) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(int p, int k, std::vector<int> modulus);
  Scalar add_digits(Scalar a, Scalar b) const;
  Scalar slow_mul(Scalar a, Scalar b) const;

  int p_;
  int k_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint16_t> add_table_;
};

bool is_prime(long long n);

/// True iff `poly` (coefficients low to high, over F_p) has no factor of
/// degree 1..deg/2; brute force over monic candidates.
bool is_irreducible(int p, const std::vector<int>& poly);

/// Parses "q" as p^k; returns nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(std::uint32_t q);

}  // namespace fqid
