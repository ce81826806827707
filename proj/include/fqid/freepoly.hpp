#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqid/gf.hpp"

namespace fqid {

/// How products of terms are identified.
///   Free         full binary-tree bracketing (free magma algebra)
///   Associative  products flattened to words
///   Lie          formal bracket trees, no antisymmetry or Jacobi rewriting
enum class Flavor { Free, Associative, Lie };

std::string_view to_string(Flavor flavor);
/// Accepts "free", "assoc", "associative", "lie".
Flavor parse_flavor(std::string_view text);

/// A nonassociative monomial: a binary tree with variable indices at the
/// leaves, stored in prefix form (a leaf is its index >= 1, an inner node is
/// 0 followed by its left and right subtrees). Associative words are stored
/// as left combs.
class Term {
 public:
  static Term leaf(int var);
  static Term node(const Term& left, const Term& right);
  /// Left comb ((v1*v2)*v3)*... over a nonempty word.
  static Term word(std::span<const int> vars);

  bool is_leaf() const { return code_.size() == 1; }
  int var() const { return code_.front(); }
  Term left() const;
  Term right() const;
  int degree() const { return degree_; }
  std::vector<int> leaves() const;
  const std::vector<int>& code() const { return code_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  std::size_t subtree_end(std::size_t start) const;

  std::vector<int> code_;
  int degree_ = 0;
};

/// Product of two terms under the flavor's identification rule.
Term multiply_terms(const Term& left, const Term& right, Flavor flavor);

struct PolyAnalysis {
  std::optional<int> degree;  // nullopt for the zero polynomial
  std::vector<int> multidegree;  // max exponent of x_i over all terms
  bool homogeneous = true;
  bool multilinear = false;
};

/// A polynomial without constant term in n noncommuting variables over F_q.
class FreePoly {
 public:
  using TermMap = std::map<Term, Scalar>;

  FreePoly(FieldPtr field, Flavor flavor, int nvars);

  /// Parses the polynomial grammar. When `nvars` is omitted it is the
  /// largest variable index used (at least 1). Throws SyntaxError,
  /// Error(UnknownVariable) and Error(ConstantTermForbidden).
  static FreePoly parse(std::string_view text, Flavor flavor, FieldPtr field,
                        std::optional<int> nvars = std::nullopt);

  /// E_m = [x1, x2, ..., x2] with x2 repeated m times, left-normed.
  static FreePoly engel(int m, FieldPtr field);
  /// x1^d as an associative word.
  static FreePoly power_word(int d, FieldPtr field);

  const FieldPtr& field() const { return field_; }
  Flavor flavor() const { return flavor_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * term, dropping the entry if it cancels.
  void add_term(const Term& term, Scalar coeff);

  PolyAnalysis analyze() const;
  /// Throws Error(ZeroPolynomial) for the zero polynomial.
  int degree() const;

  /// Canonical text; parse(str()) reproduces the polynomial.
  std::string str() const;

  friend bool operator==(const FreePoly& a, const FreePoly& b) {
    return a.flavor_ == b.flavor_ && a.nvars_ == b.nvars_ && *a.field_ == *b.field_ && a.terms_ == b.terms_;
  }

 private:
  FieldPtr field_;
  Flavor flavor_;
  int nvars_;
  TermMap terms_;
};

std::string term_string(const Term& term, Flavor flavor);

}  // namespace fqid
