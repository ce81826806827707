#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqid/gf.hpp"
#include "fqid/linalg.hpp"

namespace fqid {

/// table[i][j] holds the coordinates of b_i * b_j.
using StructureTable = std::vector<std::vector<Vec>>;

/// A finite-dimensional algebra over F_q given by structure constants. No
/// associativity or unit is assumed. With the bracket flag set the product
/// is a Lie bracket and the Lie axioms are checked at construction.
class Algebra {
 public:
  /// Throws ShapeMismatch or LieAxiomViolation.
  static Algebra create(FieldPtr field, int dim, const StructureTable& table, bool bracket,
                        std::string name = {}, std::vector<std::string> basis_names = {});

  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }
  bool is_bracket() const { return bracket_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  /// Coordinates of b_i * b_j.
  Vec product(int i, int j) const;
  StructureTable table() const;

  /// Throws DimensionMismatch.
  Vec mul(const Vec& u, const Vec& v) const;

  /// out = u * v without shape checks; `out` must not alias the inputs.
  void mul_into(std::span<const Scalar> u, std::span<const Scalar> v, std::span<Scalar> out) const {
    const Field& f = *field_;
    std::fill(out.begin(), out.end(), Scalar{});
    for (int i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        const Scalar c = f.mul(u[i], v[j]);
        const std::size_t cell = std::size_t(i) * dim_ + j;
        for (std::uint32_t e = offsets_[cell]; e < offsets_[cell + 1]; ++e) {
          out[entries_[e].coord] = f.add(out[entries_[e].coord], f.mul(c, entries_[e].value));
        }
      }
    }
  }

  Vec zero() const { return Vec(dim_); }
  Vec basis(int i) const;

  /// Associativity on all basis triples.
  bool is_associative() const;
  bool is_commutative() const;

  /// Label for a vector, e.g. "t + t^2" or "0".
  std::string vector_string(const Vec& v) const;
  /// Inverse of vector_string: sums of [coeff*]basis_name, or "0".
  Vec parse_vector(std::string_view text) const;

 private:
  struct Entry {
    std::uint16_t coord;
    Scalar value;
  };

  FieldPtr field_;
  int dim_ = 0;
  bool bracket_ = false;
  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Entry> entries_;
};

/// A two-sided ideal, held as its echelon-form subspace.
class Ideal {
 public:
  /// Throws NotAnIdeal when `space` is not closed under multiplication by A
  /// on both sides.
  static Ideal from_subspace(const Algebra& algebra, Subspace space);

  const Subspace& space() const { return space_; }
  int rank() const { return space_.rank(); }
  int codim() const { return space_.codim(); }
  bool is_zero() const { return space_.rank() == 0; }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.space_ == b.space_; }

 private:
  explicit Ideal(Subspace space) : space_(std::move(space)) {}
  friend Ideal ideal_generated(const Algebra& algebra, std::span<const Vec> gens);
  friend std::vector<Ideal> enumerate_ideals(const Algebra& algebra, std::uint64_t cap);

  Subspace space_;
};

bool is_two_sided_ideal(const Algebra& algebra, const Subspace& space);

/// Least two-sided ideal containing `gens`, by fixed-point closure under
/// left and right multiplication by basis elements.
Ideal ideal_generated(const Algebra& algebra, std::span<const Vec> gens);

inline constexpr std::uint64_t kDefaultSubspaceCap = 1'000'000;

/// All two-sided ideals, codimension ascending then echelon rows
/// lexicographically. Throws SearchSpaceTooLarge when F_q^dim has more than
/// `cap` subspaces.
std::vector<Ideal> enumerate_ideals(const Algebra& algebra, std::uint64_t cap = kDefaultSubspaceCap);

/// Linear map A -> A/I: reduce modulo I, keep the non-pivot coordinates.
class Projection {
 public:
  explicit Projection(Subspace kernel) : kernel_(std::move(kernel)), columns_(kernel_.free_columns()) {}
  Vec apply(const Vec& v) const;
  /// Representative in A of a quotient vector (zeros at pivot columns).
  Vec lift(const Vec& w) const;
  const std::vector<int>& columns() const { return columns_; }

 private:
  Subspace kernel_;
  std::vector<int> columns_;
};

/// Linear map I -> A sending echelon coordinates to vectors.
class Inclusion {
 public:
  explicit Inclusion(std::vector<Vec> rows, int ambient) : rows_(std::move(rows)), ambient_(ambient) {}
  Vec apply(const Field& field, const Vec& coords) const;

 private:
  std::vector<Vec> rows_;
  int ambient_;
};

struct Quotient {
  Algebra algebra;
  Projection projection;
};

struct Restriction {
  Algebra algebra;
  Inclusion inclusion;
};

/// A/I with basis the images of b_c for the non-pivot columns c of I.
Quotient quotient(const Algebra& algebra, const Ideal& ideal);
/// I as an algebra in its echelon basis.
Restriction restrict_to(const Algebra& algebra, const Ideal& ideal);

/// Least N >= 1 such that every product of N elements vanishes under every
/// bracketing, or nullopt when the chain of product spaces stalls at a
/// nonzero subspace. Computed by dynamic programming over length splits:
/// S_1 = A, S_m = sum over i + j = m of S_i * S_j.
std::optional<int> nilpotency_index(const Algebra& algebra);

}  // namespace fqid
