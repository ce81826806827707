#include "fqid/commpoly.hpp"

#include <algorithm>
#include <cctype>

#include "fqid/enumerate.hpp"
#include "fqid/error.hpp"
#include "fqid/eval_program.hpp"

namespace fqid {

CommPoly::CommPoly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars_ < 0) throw Error(ErrorKind::InvalidArgument, "negative variable count");
}

CommPoly CommPoly::constant(FieldPtr field, int nvars, Scalar value) {
  CommPoly p(std::move(field), nvars);
  p.add_monomial(Exponents(nvars, 0), value);
  return p;
}

CommPoly CommPoly::variable(FieldPtr field, int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorKind::UnknownVariable, "x" + std::to_string(index + 1));
  CommPoly p(std::move(field), nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_monomial(e, p.field_->one());
  return p;
}

std::optional<int> CommPoly::degree() const {
  if (monomials_.empty()) return std::nullopt;
  std::uint64_t best = 0;
  for (const auto& [e, c] : monomials_) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return static_cast<int>(best);
}

void CommPoly::add_monomial(const Exponents& exps, Scalar coeff) {
  if (static_cast<int>(exps.size()) != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent vector length");
  if (coeff.is_zero()) return;
  auto [it, inserted] = monomials_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second = field_->add(it->second, coeff);
    if (it->second.is_zero()) monomials_.erase(it);
  }
}

CommPoly& CommPoly::operator+=(const CommPoly& other) {
  if (other.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "variable count");
  for (const auto& [e, c] : other.monomials_) add_monomial(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& other) {
  if (other.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "variable count");
  for (const auto& [e, c] : other.monomials_) add_monomial(e, field_->neg(c));
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::DimensionMismatch, "variable count");
  const Field& f = *a.field_;
  CommPoly out(a.field_, a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.monomials_) {
    for (const auto& [eb, cb] : b.monomials_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_monomial(e, f.mul(ca, cb));
    }
  }
  return out;
}

CommPoly CommPoly::scaled(Scalar s) const {
  CommPoly out(field_, nvars_);
  for (const auto& [e, c] : monomials_) out.add_monomial(e, field_->mul(c, s));
  return out;
}

Scalar CommPoly::eval(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorKind::DimensionMismatch, "point length");
  const Field& f = *field_;
  Scalar acc;
  for (const auto& [e, c] : monomials_) {
    Scalar term = c;
    for (int i = 0; i < nvars_ && !term.is_zero(); ++i) {
      if (e[i] != 0) term = f.mul(term, f.pow(point[i], e[i]));
    }
    acc = f.add(acc, term);
  }
  return acc;
}

std::string CommPoly::str() const {
  if (monomials_.empty()) return "0";
  std::vector<std::pair<Exponents, Scalar>> order(monomials_.begin(), monomials_.end());
  auto total = [](const Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const auto da = total(a.first), db = total(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : order) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const std::string lit = field_->literal(c);
    const std::string coeff = lit.find('+') == std::string::npos ? lit : "(" + lit + ")";
    if (mono.empty()) {
      out += coeff;
    } else if (c == field_->one()) {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

// ----------------------------------------------------------------- parse

namespace {

class CommParser {
 public:
  CommParser(std::string_view text, FieldPtr field, int nvars) : text_(text), field_(std::move(field)), n_(nvars) {}

  CommPoly parse() {
    CommPoly p = sum();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  CommPoly sum() {
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    CommPoly acc = product();
    if (negate) acc = acc.scaled(field_->neg(field_->one()));
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_++] == '-';
      if (minus) {
        acc -= product();
      } else {
        acc += product();
      }
    }
    return acc;
  }

  CommPoly product() {
    CommPoly acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('x') || peek('(') || peek('g')) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  CommPoly power() {
    CommPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const long long e = integer();
      CommPoly r = CommPoly::constant(field_, n_, field_->one());
      for (long long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  CommPoly atom() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return CommPoly::constant(field_, n_, field_->from_int(integer()));
    if (c == 'g') {
      if (field_->k() == 1) throw SyntaxError(pos_, "generator 'g' is undefined in a prime field");
      ++pos_;
      return CommPoly::constant(field_, n_, field_->generator());
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      const long long idx = integer();
      if (idx < 1 || idx > n_) {
        throw Error(ErrorKind::UnknownVariable, "x" + std::to_string(idx) + " at position " + std::to_string(at));
      }
      return CommPoly::variable(field_, n_, static_cast<int>(idx - 1));
    }
    if (c == '(') {
      ++pos_;
      CommPoly p = sum();
      if (!peek(')')) throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return p;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
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

  std::string_view text_;
  FieldPtr field_;
  int n_;
  std::size_t pos_ = 0;
};

int max_variable(std::string_view text) {
  int best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    int v = 0;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1000000) {
      v = v * 10 + (text[j] - '0');
      ++j;
    }
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

CommPoly CommPoly::parse(std::string_view text, FieldPtr field, std::optional<int> nvars) {
  const int n = nvars ? *nvars : std::max(1, max_variable(text));
  return CommParser(text, std::move(field), n).parse();
}

// ------------------------------------------------------------- counting

CommPoly reduce(const CommPoly& poly) {
  const std::uint32_t q = poly.field()->q();
  CommPoly out(poly.field(), poly.nvars());
  for (const auto& [e, c] : poly.monomials()) {
    Exponents r = e;
    for (auto& x : r) {
      if (x > 0) x = ((x - 1) % (q - 1)) + 1;
    }
    out.add_monomial(r, c);
  }
  return out;
}

std::uint64_t count_common_zeros(std::span<const CommPoly> polys, std::uint64_t cap, int workers) {
  if (polys.empty()) throw Error(ErrorKind::InvalidArgument, "no polynomials");
  const FieldPtr& field = polys.front().field();
  const int n = polys.front().nvars();
  for (const auto& p : polys) {
    if (!(*p.field() == *field)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
    if (p.nvars() != n) throw Error(ErrorKind::DimensionMismatch, "polynomials in different variable counts");
  }
  const std::uint64_t total = saturating_pow(field->q(), static_cast<std::uint64_t>(n));
  if (total > cap) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                std::to_string(field->q()) + "^" + std::to_string(n) + " points exceed the cap of " + std::to_string(cap));
  }
  return parallel_sum(total, workers, [&](std::uint64_t begin, std::uint64_t end) {
    Odometer od(field->q(), static_cast<std::size_t>(n), begin);
    std::uint64_t zeros = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      bool all = true;
      for (const auto& p : polys) {
        if (!p.eval(od.digits()).is_zero()) {
          all = false;
          break;
        }
      }
      zeros += all ? 1 : 0;
      od.next();
    }
    return zeros;
  });
}

std::uint64_t count_nonzeros(const CommPoly& poly, std::uint64_t cap, int workers) {
  const std::uint64_t total = saturating_pow(poly.field()->q(), static_cast<std::uint64_t>(poly.nvars()));
  return total - count_common_zeros(std::span(&poly, 1), cap, workers);
}

// ---------------------------------------------------------- coordinates

bool commutator_mode(const FreePoly& q, const Algebra& algebra, bool commutator) {
  if (q.flavor() != Flavor::Lie || algebra.is_bracket()) return false;
  if (!commutator) {
    throw Error(ErrorKind::FlavorMismatch,
                "Lie polynomial on an algebra without the bracket flag; request the commutator interpretation");
  }
  return true;
}

std::vector<CommPoly> symbolic_coordinates(const FreePoly& q, const Algebra& algebra, bool commutator) {
  if (!(*q.field() == *algebra.field())) throw Error(ErrorKind::FieldMismatch, "polynomial and algebra fields differ");
  const bool comm = commutator_mode(q, algebra, commutator);
  const FieldPtr& field = algebra.field();
  const int dim = algebra.dim();
  const int nv = q.nvars() * dim;
  using SymVec = std::vector<CommPoly>;
  const SymVec zero_vec(dim, CommPoly(field, nv));

  auto sym_mul = [&](const SymVec& u, const SymVec& v) {
    SymVec out = zero_vec;
    for (int i = 0; i < dim; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (v[j].is_zero()) continue;
        const Vec prod = algebra.product(i, j);
        if (vec_is_zero(prod)) continue;
        const CommPoly uv = u[i] * v[j];
        for (int s = 0; s < dim; ++s) {
          if (!prod[s].is_zero()) out[s] += uv.scaled(prod[s]);
        }
      }
    }
    return out;
  };

  const EvalProgram prog(q);
  std::vector<SymVec> values;
  values.reserve(prog.nodes().size());
  for (const auto& node : prog.nodes()) {
    if (node.var > 0) {
      SymVec x = zero_vec;
      for (int j = 0; j < dim; ++j) x[j] = CommPoly::variable(field, nv, (node.var - 1) * dim + j);
      values.push_back(std::move(x));
      continue;
    }
    SymVec v = sym_mul(values[node.left], values[node.right]);
    if (comm) {
      const SymVec w = sym_mul(values[node.right], values[node.left]);
      for (int s = 0; s < dim; ++s) v[s] -= w[s];
    }
    values.push_back(std::move(v));
  }
  SymVec out = zero_vec;
  for (const auto& t : prog.terms()) {
    for (int s = 0; s < dim; ++s) out[s] += values[t.node][s].scaled(t.coeff);
  }
  return out;
}

}  // namespace fqid
