#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fqid/gf.hpp"

namespace fqid {

using Vec = std::vector<Scalar>;

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Scalar s, const Vec& a);
bool vec_is_zero(const Vec& a);

/// A subspace of F_q^ambient held in reduced row echelon form, so that equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace(FieldPtr field, int ambient);

  /// Span of arbitrary vectors.
  static Subspace span(FieldPtr field, int ambient, std::span<const Vec> vectors);
  static Subspace whole(FieldPtr field, int ambient);

  const FieldPtr& field() const { return field_; }
  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  int codim() const { return ambient_ - rank(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  /// Columns without a pivot, ascending; these index a complement basis.
  std::vector<int> free_columns() const;

  /// Canonical coset representative: v with every pivot coordinate cleared.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  bool contains(const Subspace& other) const;
  /// Coordinates of v (assumed inside) in the echelon basis: the entries
  /// of v at the pivot columns.
  Vec coordinates(const Vec& v) const;
  /// Adds v; returns false when v was already inside.
  bool insert(const Vec& v);

  /// Flattened rows, used for canonical ordering.
  std::vector<std::uint16_t> key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  friend std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n);

  FieldPtr field_;
  int ambient_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

/// Number of subspaces of F_q^n (sum of Gaussian binomials), saturating at
/// UINT64_MAX.
std::uint64_t count_subspaces(std::uint32_t q, int n);

/// Every subspace of F_q^n exactly once, enumerated through echelon forms.
/// Order: codimension ascending, then echelon rows lexicographically.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n);

}  // namespace fqid
