#include "fqid/freepoly.hpp"

#include <algorithm>
#include <cctype>

#include "fqid/error.hpp"

namespace fqid {

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::Free: return "free";
    case Flavor::Associative: return "assoc";
    case Flavor::Lie: return "lie";
  }
  return "free";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "free") return Flavor::Free;
  if (text == "assoc" || text == "associative") return Flavor::Associative;
  if (text == "lie") return Flavor::Lie;
  throw Error(ErrorKind::InvalidArgument, "unknown flavor '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- Term

Term Term::leaf(int var) {
  Term t;
  t.code_ = {var};
  t.degree_ = 1;
  return t;
}

Term Term::node(const Term& left, const Term& right) {
  Term t;
  t.code_.reserve(1 + left.code_.size() + right.code_.size());
  t.code_.push_back(0);
  t.code_.insert(t.code_.end(), left.code_.begin(), left.code_.end());
  t.code_.insert(t.code_.end(), right.code_.begin(), right.code_.end());
  t.degree_ = left.degree_ + right.degree_;
  return t;
}

Term Term::word(std::span<const int> vars) {
  if (vars.empty()) throw Error(ErrorKind::InvalidArgument, "empty word");
  Term t = leaf(vars.front());
  for (std::size_t i = 1; i < vars.size(); ++i) t = node(t, leaf(vars[i]));
  return t;
}

std::size_t Term::subtree_end(std::size_t start) const {
  std::size_t need = 1;
  std::size_t i = start;
  while (need > 0) {
    need = code_[i] == 0 ? need + 1 : need - 1;
    ++i;
  }
  return i;
}

Term Term::left() const {
  const std::size_t mid = subtree_end(1);
  Term t;
  t.code_.assign(code_.begin() + 1, code_.begin() + static_cast<std::ptrdiff_t>(mid));
  t.degree_ = static_cast<int>(std::count_if(t.code_.begin(), t.code_.end(), [](int c) { return c != 0; }));
  return t;
}

Term Term::right() const {
  const std::size_t mid = subtree_end(1);
  Term t;
  t.code_.assign(code_.begin() + static_cast<std::ptrdiff_t>(mid), code_.end());
  t.degree_ = degree_ - left().degree_;
  return t;
}

std::vector<int> Term::leaves() const {
  std::vector<int> out;
  out.reserve(degree_);
  for (int c : code_) {
    if (c != 0) out.push_back(c);
  }
  return out;
}

Term multiply_terms(const Term& left, const Term& right, Flavor flavor) {
  if (flavor != Flavor::Associative) return Term::node(left, right);
  auto w = left.leaves();
  const auto r = right.leaves();
  w.insert(w.end(), r.begin(), r.end());
  return Term::word(w);
}

// ------------------------------------------------------------ printing

namespace {

std::string free_string(const Term& t) {
  if (t.is_leaf()) return "x" + std::to_string(t.var());
  const Term r = t.right();
  std::string rs = free_string(r);
  if (!r.is_leaf()) rs = "(" + rs + ")";
  return free_string(t.left()) + "*" + rs;
}

std::string lie_string(const Term& t) {
  if (t.is_leaf()) return "x" + std::to_string(t.var());
  std::vector<Term> args;
  Term cur = t;
  while (!cur.is_leaf()) {
    args.push_back(cur.right());
    cur = cur.left();
  }
  std::string out = "[" + lie_string(cur);
  for (auto it = args.rbegin(); it != args.rend(); ++it) out += "," + lie_string(*it);
  return out + "]";
}

}  // namespace

std::string term_string(const Term& term, Flavor flavor) {
  switch (flavor) {
    case Flavor::Lie: return lie_string(term);
    case Flavor::Free: return free_string(term);
    case Flavor::Associative: {
      std::string out;
      for (int v : term.leaves()) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(v);
      }
      return out;
    }
  }
  return {};
}

// ------------------------------------------------------------- FreePoly

FreePoly::FreePoly(FieldPtr field, Flavor flavor, int nvars)
    : field_(std::move(field)), flavor_(flavor), nvars_(nvars) {
  if (nvars_ < 1) throw Error(ErrorKind::InvalidArgument, "a polynomial needs at least one variable");
}

void FreePoly::add_term(const Term& term, Scalar coeff) {
  for (int v : term.leaves()) {
    if (v < 1 || v > nvars_) throw Error(ErrorKind::UnknownVariable, "x" + std::to_string(v));
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(term, coeff);
  if (!inserted) {
    it->second = field_->add(it->second, coeff);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyAnalysis FreePoly::analyze() const {
  PolyAnalysis a;
  a.multidegree.assign(nvars_, 0);
  if (terms_.empty()) return a;
  a.multilinear = true;
  int lo = terms_.begin()->first.degree();
  int hi = lo;
  for (const auto& [term, coeff] : terms_) {
    lo = std::min(lo, term.degree());
    hi = std::max(hi, term.degree());
    std::vector<int> counts(nvars_, 0);
    for (int v : term.leaves()) ++counts[v - 1];
    for (int i = 0; i < nvars_; ++i) {
      a.multidegree[i] = std::max(a.multidegree[i], counts[i]);
      if (counts[i] != 1) a.multilinear = false;
    }
  }
  a.degree = hi;
  a.homogeneous = lo == hi;
  return a;
}

int FreePoly::degree() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no degree");
  int d = 0;
  for (const auto& [term, coeff] : terms_) d = std::max(d, term.degree());
  return d;
}

std::string FreePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [term, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    if (coeff != field_->one()) {
      const std::string lit = field_->literal(coeff);
      out += lit.find('+') == std::string::npos ? lit : "(" + lit + ")";
      out += "*";
    }
    out += term_string(term, flavor_);
  }
  return out;
}

FreePoly FreePoly::engel(int m, FieldPtr field) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "Engel index must be >= 1");
  Term t = Term::leaf(1);
  for (int i = 0; i < m; ++i) t = Term::node(t, Term::leaf(2));
  FreePoly q(std::move(field), Flavor::Lie, 2);
  q.add_term(t, q.field()->one());
  return q;
}

FreePoly FreePoly::power_word(int d, FieldPtr field) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "power must be >= 1");
  const std::vector<int> w(d, 1);
  FreePoly q(std::move(field), Flavor::Associative, 1);
  q.add_term(Term::word(w), q.field()->one());
  return q;
}

// -------------------------------------------------------------- parsing

namespace {

// Intermediate value: scalar constant plus constant-free part.
struct Expr {
  Scalar constant;
  FreePoly::TermMap terms;
};

class PolyParser {
 public:
  PolyParser(std::string_view text, Flavor flavor, const Field& field, std::optional<int> nvars)
      : text_(text), flavor_(flavor), f_(field), nvars_(nvars) {}

  Expr parse() {
    Expr e = poly();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

  int max_var() const { return max_var_; }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void accumulate(FreePoly::TermMap& into, const Term& t, Scalar c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.try_emplace(t, c);
    if (!inserted) {
      it->second = f_.add(it->second, c);
      if (it->second.is_zero()) into.erase(it);
    }
  }

  Expr add(Expr a, const Expr& b, bool subtract) {
    a.constant = subtract ? f_.sub(a.constant, b.constant) : f_.add(a.constant, b.constant);
    for (const auto& [t, c] : b.terms) accumulate(a.terms, t, subtract ? f_.neg(c) : c);
    return a;
  }

  Expr scale(const Expr& a, Scalar s) {
    Expr out;
    out.constant = f_.mul(a.constant, s);
    for (const auto& [t, c] : a.terms) accumulate(out.terms, t, f_.mul(c, s));
    return out;
  }

  Expr multiply(const Expr& a, const Expr& b, std::size_t at) {
    if (flavor_ == Flavor::Lie && !a.terms.empty() && !b.terms.empty()) {
      throw SyntaxError(at, "Lie products are written as brackets [a,b]");
    }
    Expr out = scale(b, a.constant);
    for (const auto& [t, c] : a.terms) accumulate(out.terms, t, f_.mul(c, b.constant));
    for (const auto& [ta, ca] : a.terms) {
      for (const auto& [tb, cb] : b.terms) accumulate(out.terms, multiply_terms(ta, tb, flavor_), f_.mul(ca, cb));
    }
    return out;
  }

  Expr bracket(const Expr& a, const Expr& b, std::size_t at) {
    if (!a.constant.is_zero() || !b.constant.is_zero()) {
      throw Error(ErrorKind::ConstantTermForbidden, "bracket argument with constant term at position " +
                                                         std::to_string(at));
    }
    Expr out;
    for (const auto& [ta, ca] : a.terms) {
      for (const auto& [tb, cb] : b.terms) accumulate(out.terms, Term::node(ta, tb), f_.mul(ca, cb));
    }
    return out;
  }

  Expr poly() {
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    Expr acc = sterm();
    if (negate) acc = scale(acc, f_.neg(f_.one()));
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_++] == '-';
      acc = add(std::move(acc), sterm(), minus);
    }
    return acc;
  }

  Expr sterm() {
    bool scalar_prev = false;
    Expr acc = factor(scalar_prev);
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (peek('*')) {
        ++pos_;
        acc = multiply(acc, factor(scalar_prev), at);
      } else if (scalar_prev && (peek('x') || peek('(') || peek('[') || peek('g'))) {
        acc = multiply(acc, factor(scalar_prev), at);  // "2x1", "2g"
      } else {
        return acc;
      }
    }
  }

  Expr factor(bool& is_scalar_literal) {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    is_scalar_literal = false;
    Expr e;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e.constant = f_.from_int(integer());
      is_scalar_literal = true;
      return e;
    }
    if (c == 'g') {
      if (f_.k() == 1) throw SyntaxError(pos_, "generator 'g' is undefined in a prime field");
      ++pos_;
      std::uint64_t power = 1;
      if (peek('^')) {
        ++pos_;
        skip();
        power = static_cast<std::uint64_t>(integer());
      }
      e.constant = f_.pow(f_.generator(), power);
      is_scalar_literal = true;
      return e;
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw SyntaxError(pos_, "expected variable index after 'x'");
      }
      const long long idx = integer();
      if (idx < 1 || (nvars_ && idx > *nvars_) || idx > 1000000) {
        throw Error(ErrorKind::UnknownVariable,
                    "x" + std::to_string(idx) + " at position " + std::to_string(at));
      }
      max_var_ = std::max(max_var_, static_cast<int>(idx));
      e.terms.emplace(Term::leaf(static_cast<int>(idx)), f_.one());
      return e;
    }
    if (c == '(') {
      ++pos_;
      e = poly();
      expect(')');
      return e;
    }
    if (c == '[') {
      const std::size_t at = pos_;
      if (flavor_ != Flavor::Lie) throw SyntaxError(at, "brackets are only available in the lie flavor");
      ++pos_;
      e = poly();
      int args = 1;
      while (peek(',')) {
        ++pos_;
        e = bracket(e, poly(), at);
        ++args;
      }
      if (args < 2) throw SyntaxError(pos_, "a bracket needs at least two entries");
      expect(']');
      return e;
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
  Flavor flavor_;
  const Field& f_;
  std::optional<int> nvars_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
};

}  // namespace

FreePoly FreePoly::parse(std::string_view text, Flavor flavor, FieldPtr field, std::optional<int> nvars) {
  PolyParser parser(text, flavor, *field, nvars);
  Expr e = parser.parse();
  if (!e.constant.is_zero()) {
    throw Error(ErrorKind::ConstantTermForbidden, "constant term " + field->literal(e.constant));
  }
  const int n = nvars ? *nvars : std::max(1, parser.max_var());
  FreePoly q(std::move(field), flavor, n);
  q.terms_ = std::move(e.terms);
  return q;
}

}  // namespace fqid
