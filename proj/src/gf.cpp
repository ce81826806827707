#include "fqid/gf.hpp"

#include <cctype>

#include "fqid/error.hpp"

namespace fqid {

namespace {

// Remainder of `num` modulo monic `den` over F_p, coefficients low to high.
std::vector<int> poly_mod(std::vector<int> num, const std::vector<int>& den, int p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const int lead = num.back();
    const std::size_t shift = num.size() - 1 - dd;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dd; ++i) {
        num[shift + i] = ((num[shift + i] - lead * den[i]) % p + p) % p;
      }
    }
    num.pop_back();
  }
  return num;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<int> default_modulus(std::uint32_t q) {
  switch (q) {
    case 4: return {1, 1, 1};        // g^2 + g + 1
    case 8: return {1, 1, 0, 1};     // g^3 + g + 1
    case 9: return {2, 2, 1};        // g^2 + 2g + 2
    case 16: return {1, 1, 0, 0, 1}; // g^4 + g + 1
    case 25: return {2, 1, 1};       // g^2 + g + 2
    case 27: return {1, 2, 0, 1};    // g^3 + 2g + 1
    default: return {};
  }
}

class LiteralParser {
 public:
  LiteralParser(const Field& field, std::string_view text) : f_(field), text_(text) {}

  Scalar parse() {
    Scalar v = sum();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected character in field literal");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Scalar sum() {
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Scalar acc = product();
    if (negate) acc = f_.neg(acc);
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_++] == '-';
      const Scalar t = product();
      acc = minus ? f_.sub(acc, t) : f_.add(acc, t);
    }
    return acc;
  }

  Scalar product() {
    Scalar acc = atom();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = f_.mul(acc, atom());
      } else if (peek('g') || peek('(')) {
        acc = f_.mul(acc, atom());  // juxtaposition, e.g. "2g"
      } else {
        return acc;
      }
    }
  }

  Scalar atom() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected field literal");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return f_.from_int(integer());
    if (c == 'g') {
      if (f_.k() == 1) throw SyntaxError(pos_, "generator 'g' is undefined in a prime field");
      ++pos_;
      std::uint64_t e = 1;
      if (peek('^')) {
        ++pos_;
        skip();
        e = integer();
      }
      return f_.pow(f_.generator(), e);
    }
    if (c == '(') {
      ++pos_;
      const Scalar v = sum();
      if (!peek(')')) throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return v;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "' in field literal");
  }

  long long integer() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (1LL << 40)) throw SyntaxError(start, "integer literal too large");
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(start, "expected integer");
    return v;
  }

  const Field& f_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) return std::nullopt;
    int k = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) return std::nullopt;
    return std::pair{static_cast<int>(p), k};
  }
  return std::nullopt;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  const int n = static_cast<int>(poly.size()) - 1;
  if (n < 1) return false;
  for (int deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<int> cand(deg + 1);
      std::uint64_t r = idx;
      for (int i = 0; i < deg; ++i) {
        cand[i] = static_cast<int>(r % p);
        r /= p;
      }
      cand[deg] = 1;
      const auto rem = poly_mod(poly, cand, p);
      bool zero = true;
      for (int c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FieldPtr Field::create(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxOrder) throw Error(ErrorKind::FieldTooLarge, "fields are limited to q <= 2^16");
  }
  std::vector<int> mod;
  if (k > 1) {
    if (modulus) {
      mod = *modulus;
    } else {
      mod = default_modulus(static_cast<std::uint32_t>(q));
      if (mod.empty()) {
        throw Error(ErrorKind::NoDefaultModulus, "no built-in modulus for q = " + std::to_string(q));
      }
    }
    if (static_cast<int>(mod.size()) != k + 1) {
      throw Error(ErrorKind::ReducibleModulus, "modulus must have degree " + std::to_string(k));
    }
    for (int& c : mod) {
      if (c < 0 || c >= p) throw Error(ErrorKind::ReducibleModulus, "modulus coefficient out of range");
    }
    if (mod.back() != 1) throw Error(ErrorKind::ReducibleModulus, "modulus must be monic");
    if (!is_irreducible(p, mod)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
  } else if (modulus && !modulus->empty()) {
    // A degree-1 modulus carries no information for a prime field.
    if (modulus->size() != 2 || modulus->back() != 1) {
      throw Error(ErrorKind::ReducibleModulus, "prime field modulus must be monic of degree 1");
    }
  }
  return FieldPtr(new Field(p, k, std::move(mod)));
}

FieldPtr Field::of_order(std::uint32_t q) {
  const auto pk = prime_power(q);
  if (!pk) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return create(pk->first, pk->second);
}

Field::Field(int p, int k, std::vector<int> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= static_cast<std::uint32_t>(p_);

  neg_table_.resize(q_);
  for (std::uint32_t c = 0; c < q_; ++c) {
    auto co = coeffs({static_cast<std::uint16_t>(c)});
    for (int& x : co) x = (p_ - x) % p_;
    neg_table_[c] = from_coeffs(co).code;
  }
  if (k_ > 1 && q_ <= 1024) {
    add_table_.resize(std::size_t(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[std::size_t(a) * q_ + b] =
            add_digits({static_cast<std::uint16_t>(a)}, {static_cast<std::uint16_t>(b)}).code;
      }
    }
  }

  // Discrete logs from the first primitive element in canonical order.
  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Scalar base, std::uint32_t e) {
    Scalar r = one();
    while (e > 0) {
      if (e & 1u) r = slow_mul(r, base);
      base = slow_mul(base, base);
      e >>= 1u;
    }
    return r;
  };
  Scalar prim = one();
  for (std::uint32_t c = 1; c < q_; ++c) {
    const Scalar cand{static_cast<std::uint16_t>(c)};
    bool ok = true;
    for (auto f : factors) ok = ok && slow_pow(cand, order / f) != one();
    if (ok) {
      prim = cand;
      break;
    }
  }
  exp_.resize(2 * std::size_t(order));
  log_.assign(q_, 0);
  Scalar cur = one();
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = cur.code;
    exp_[i + order] = cur.code;
    log_[cur.code] = i;
    cur = slow_mul(cur, prim);
  }
}

Scalar Field::add_digits(Scalar a, Scalar b) const {
  std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    const std::uint32_t d = (x % p_ + y % p_) % p_;
    out += d * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return {static_cast<std::uint16_t>(out)};
}

Scalar Field::slow_mul(Scalar a, Scalar b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<int> prod(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    for (std::size_t j = 0; j < cb.size(); ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  if (k_ > 1) {
    prod = poly_mod(std::move(prod), modulus_, p_);
  } else {
    prod.resize(1);
  }
  prod.resize(k_, 0);
  return from_coeffs(prod);
}

Scalar Field::generator() const {
  if (k_ == 1) throw Error(ErrorKind::InvalidArgument, "prime field has no polynomial generator");
  return {static_cast<std::uint16_t>(p_)};
}

Scalar Field::from_int(long long value) const {
  long long r = value % p_;
  if (r < 0) r += p_;
  return {static_cast<std::uint16_t>(r)};
}

Scalar Field::inv(Scalar a) const {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t order = q_ - 1;
  return {exp_[(order - log_[a.code]) % order]};
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t order = q_ - 1;
  return {exp_[(std::uint64_t(log_[a.code]) * (e % order)) % order]};
}

std::vector<int> Field::coeffs(Scalar a) const {
  std::vector<int> out(k_);
  std::uint32_t c = a.code;
  for (int i = 0; i < k_; ++i) {
    out[i] = static_cast<int>(c % p_);
    c /= p_;
  }
  return out;
}

Scalar Field::from_coeffs(const std::vector<int>& coeffs) const {
  std::uint32_t code = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    const int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
    code += static_cast<std::uint32_t>(((c % p_) + p_) % p_) * place;
    place *= p_;
  }
  return {static_cast<std::uint16_t>(code)};
}

std::vector<Scalar> Field::elements() const {
  std::vector<Scalar> out(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out[c].code = static_cast<std::uint16_t>(c);
  return out;
}

std::string Field::literal(Scalar a) const {
  if (a.is_zero()) return "0";
  const auto co = coeffs(a);
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    if (co[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(co[i]);
      continue;
    }
    if (co[i] != 1) out += std::to_string(co[i]) + "*";
    out += "g";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Scalar Field::parse_literal(std::string_view text) const {
  return LiteralParser(*this, text).parse();
}

}  // namespace fqid
