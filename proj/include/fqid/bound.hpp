#pragma once

#include <cstdint>
#include <vector>

#include "fqid/commpoly.hpp"
#include "fqid/rational.hpp"

namespace fqid {

/// d = m (q - 1) + r with 0 <= r <= q - 2, and value = (q - r) / q^(m + 1):
/// the least density of nonzeros of a nonzero polynomial of degree d over
/// F_q.
struct FqDecomposition {
  std::uint32_t q = 2;
  int d = 0;
  int m = 0;
  int r = 0;
  Rational value;
};

FqDecomposition f_q(std::uint32_t q, int d);

struct SequenceMinimum {
  Rational minimum;
  std::vector<int> witness;  // nonzero entries only, non-increasing
  std::uint64_t visited = 0;
};

/// Brute-force minimum of prod (q - x_i) / q over sequences of integers in
/// [0, q - 1] summing to d. Real sequences need not be searched: concavity
/// of log(q - x) pushes any minimizer to the integer point
/// (q-1, ..., q-1, r, 0, ...), which this search contains. Returns the
/// lexicographically greatest optimal sequence. Throws BudgetExceeded when
/// more than `budget` multisets would be visited.
SequenceMinimum minimize_sequences(std::uint32_t q, int d, std::uint64_t budget = 1'000'000);

/// prod_{i<=m} (1 - x_i^(q-1)) * prod_{j<=r} (x_{m+1} - c_j) with c_j the
/// first r nonzero elements in canonical order. Degree d, with exactly
/// f_q(d) q^n nonzeros. Throws NotEnoughVariables.
CommPoly extremal_poly(std::uint32_t q, int n, int d);

struct ExhaustiveMinimum {
  std::uint64_t minimum = 0;
  CommPoly witness;
  std::uint64_t polynomials = 0;  // nonzero reduced polynomials checked
  Rational bound;                 // f_q(d) q^n
  std::uint64_t violations = 0;   // polynomials with fewer nonzeros than bound
};

inline constexpr std::uint64_t kDefaultPolyCap = 1ull << 20;

/// Minimum nonzero count over every nonzero reduced polynomial of degree
/// <= d in n variables. Ties go to the lexicographically least coefficient
/// vector (monomials by ascending degree, x1 before x2 within a degree).
/// Throws SearchSpaceTooLarge when the number of polynomials exceeds `cap`.
ExhaustiveMinimum exhaustive_min(std::uint32_t q, int n, int d, std::uint64_t cap = kDefaultPolyCap,
                                 int workers = 1);

/// Reduced monomials in n variables of degree <= d, in the coefficient
/// order used by exhaustive_min.
std::vector<Exponents> reduced_monomials(std::uint32_t q, int n, int d);

}  // namespace fqid
