#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqid/algebra.hpp"
#include "fqid/freepoly.hpp"
#include "fqid/gf.hpp"

namespace fqid {

using Exponents = std::vector<std::uint32_t>;

/// Commutative polynomial in x1..xn over F_q, sparse in monomials.
class CommPoly {
 public:
  using MonomialMap = std::map<Exponents, Scalar>;

  CommPoly(FieldPtr field, int nvars);

  static CommPoly constant(FieldPtr field, int nvars, Scalar value);
  /// x_{index+1}.
  static CommPoly variable(FieldPtr field, int nvars, int index);
  /// Sums and products of field literals and x<i>, with `^` powers.
  static CommPoly parse(std::string_view text, FieldPtr field, std::optional<int> nvars = std::nullopt);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialMap& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  /// Total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;

  void add_monomial(const Exponents& exps, Scalar coeff);

  CommPoly& operator+=(const CommPoly& other);
  CommPoly& operator-=(const CommPoly& other);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  CommPoly scaled(Scalar s) const;

  /// Throws DimensionMismatch.
  Scalar eval(std::span<const Scalar> point) const;

  /// Monomials by descending degree, e.g. "x1^2*x2 + 2*x1 + 1".
  std::string str() const;

  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.nvars_ == b.nvars_ && *a.field_ == *b.field_ && a.monomials_ == b.monomials_;
  }

 private:
  FieldPtr field_;
  int nvars_;
  MonomialMap monomials_;
};

/// The representative modulo (x_i^q - x_i) with every exponent below q:
/// a positive exponent e becomes ((e - 1) mod (q - 1)) + 1.
CommPoly reduce(const CommPoly& poly);

inline constexpr std::uint64_t kDefaultPointCap = 1ull << 24;

/// Points of F_q^n where the polynomial is nonzero, by full enumeration.
/// Throws SearchSpaceTooLarge when q^n exceeds `cap`.
std::uint64_t count_nonzeros(const CommPoly& poly, std::uint64_t cap = kDefaultPointCap, int workers = 1);

/// Points where every polynomial vanishes; all must share field and nvars.
std::uint64_t count_common_zeros(std::span<const CommPoly> polys, std::uint64_t cap = kDefaultPointCap,
                                 int workers = 1);

/// Coordinates of e_Q on a generic tuple. Argument i (1-based) is
/// sum_j a_{i,j} b_j, and a_{i,j} is variable number (i - 1) * dim + j.
/// Returns dim polynomials of degree <= deg Q, unreduced.
/// `commutator` evaluates Lie-flavor products as u*v - v*u on an algebra
/// without the bracket flag. Throws FieldMismatch or FlavorMismatch.
std::vector<CommPoly> symbolic_coordinates(const FreePoly& q, const Algebra& algebra, bool commutator = false);

}  // namespace fqid

namespace fqid {

/// Whether products of `q` on `algebra` are evaluated as commutators.
/// Lie-flavor polynomials need either a bracket algebra or the explicit
/// `commutator` flag; otherwise this throws FlavorMismatch.
bool commutator_mode(const FreePoly& q, const Algebra& algebra, bool commutator);

}  // namespace fqid
