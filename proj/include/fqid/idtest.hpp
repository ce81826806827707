#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqid/algebra.hpp"
#include "fqid/eval_program.hpp"
#include "fqid/freepoly.hpp"
#include "fqid/rational.hpp"

namespace fqid {

inline constexpr std::uint64_t kDefaultTupleCap = 1ull << 24;

struct EvalOptions {
  std::uint64_t cap = kDefaultTupleCap;
  int workers = 1;
  /// Evaluate Lie-flavor products as u*v - v*u on algebras without the
  /// bracket flag.
  bool commutator = false;
};

/// Exact enumeration, or `samples` uniform tuples drawn from one SplitMix64
/// stream started at `seed` (tuple i consumes outputs i*n*dim onwards, each
/// coordinate is output mod q).
struct EvalMode {
  bool sampled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static EvalMode exact() { return {}; }
  static EvalMode sampling(std::uint64_t samples, std::uint64_t seed) { return {true, samples, seed}; }
};

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  void skip(std::uint64_t n) { state_ += n * kGamma; }
  std::uint64_t next() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Evaluates one polynomial on one algebra repeatedly, reusing buffers. Not
/// thread-safe; give each worker its own copy.
class Evaluator {
 public:
  /// Throws FieldMismatch or FlavorMismatch.
  Evaluator(const FreePoly& q, const Algebra& algebra, bool commutator = false);

  int nvars() const { return nvars_; }
  int dim() const { return dim_; }

  /// `args` holds n*dim coordinates; argument i occupies [i*dim, (i+1)*dim).
  /// The result view is valid until the next call.
  std::span<const Scalar> evaluate(std::span<const Scalar> args);
  bool vanishes(std::span<const Scalar> args);

 private:
  const Algebra* algebra_;
  EvalProgram program_;
  bool commutator_;
  int nvars_;
  int dim_;
  std::vector<Scalar> values_;  // one dim-block per program node
  std::vector<Scalar> scratch_;
  std::vector<Scalar> result_;
};

/// e_Q(args). Throws DimensionMismatch, FieldMismatch, FlavorMismatch.
Vec evaluate(const FreePoly& q, const Algebra& algebra, std::span<const Vec> args, bool commutator = false);

/// Second route to the zero count: compose each coordinate functional with
/// e_Q, reduce, and bound nonzeros with f_q of the reduced degree.
struct FunctionalRoute {
  int nonzero_coordinates = 0;
  std::vector<std::optional<int>> reduced_degrees;  // per coordinate
  Rational nonzero_lower_bound;  // max over coordinates of f_q(reduced degree)
  Rational zero_upper_bound;     // 1 - nonzero_lower_bound
  std::optional<std::uint64_t> common_zero_count;  // when enumeration fits the cap
  bool consistent = true;
};

struct EvalReport {
  std::uint64_t zero_count = 0;
  std::uint64_t total = 0;
  Rational probability;
  std::optional<int> degree;   // nullopt for the zero polynomial
  Rational threshold;          // 1 - 2^-degree (1 for the zero polynomial)
  bool homogeneous = true;
  bool is_identity = false;
  bool verdict_consistent = true;
  EvalMode mode;
  std::optional<double> std_error;  // sampled mode only
  std::optional<FunctionalRoute> functional;
};

/// Fraction of tuples in A^n on which e_Q vanishes. In exact mode,
/// verdict_consistent means (is_identity or probability < threshold). In
/// sampled mode it is only evidence: the estimate may exceed the threshold
/// by up to three standard errors. Throws SearchSpaceTooLarge (exact mode).
EvalReport zero_probability(const FreePoly& q, const Algebra& algebra, EvalMode mode = EvalMode::exact(),
                            const EvalOptions& options = {});

/// Exact zero_probability plus the functional-composition cross-check.
EvalReport dixon_verdict(const FreePoly& q, const Algebra& algebra, const EvalOptions& options = {});

struct CosetWitness {
  Ideal ideal;
  std::vector<Vec> representatives;
  int codim = 0;
  bool trivial = false;  // zero ideal, or every representative inside the ideal
};

/// Checks that e_Q vanishes on (a_1 + I) x ... x (a_n + I) by enumeration.
bool coset_product_vanishes(const FreePoly& q, const Algebra& algebra, const Ideal& ideal,
                            std::span<const Vec> representatives, const EvalOptions& options = {});

/// Every coset identity with codim(I) <= max_codim: ideals in canonical
/// order, and for each, one canonical representative tuple per coset tuple
/// (lexicographic) whose coset product e_Q kills.
std::vector<CosetWitness> coset_identity_search(const FreePoly& q, const Algebra& algebra, int max_codim,
                                                const EvalOptions& options = {});

struct DescentStep {
  int stage = 0;
  std::string statement;
  std::uint64_t checked = 0;       // tuples enumerated
  bool expansion_verified = true;  // additivity in the stage's slot
  bool verified = false;
};

struct DescentCertificate {
  std::vector<DescentStep> steps;
  bool identity_on_ideal = false;  // checked on the restricted algebra
  bool verified = false;
};

/// Telescoping from a coset identity of a multilinear Q to an identity on
/// the ideal: stage s checks e_Q(y_1..y_s, a_{s+1}..a_n) = 0 for y in I^s.
/// Throws NotMultilinear or WitnessInvalid.
DescentCertificate multilinear_descent(const FreePoly& q, const Algebra& algebra, const CosetWitness& witness,
                                       const EvalOptions& options = {});

struct BlockStat {
  std::vector<Vec> representatives;  // block label: tuple of A/I representatives
  std::uint64_t zero_count = 0;
  std::uint64_t size = 0;
  bool over_zero = false;           // Q_I vanishes at the block label
  bool identically_zero = false;
  Rational fraction;
};

struct BlockReport {
  int degree = 0;
  Rational block_bound;    // 1 - 2^-degree
  Rational f_outer;        // f(Q, I)
  Rational f_inner;        // f(Q, J)
  std::vector<BlockStat> blocks;
  bool no_zeros_off_fiber = true;
  bool blocks_within_bound = true;
  bool hypothesis_holds = true;           // no block over Q_I^-1(0) is identically zero
  std::optional<bool> decay_holds;        // f(Q,J) <= (1 - 2^-d) f(Q,I), when hypothesis holds
  bool weighted_average_matches = true;
  bool quotient_consistent = true;        // both f values agree with evaluation on A/I, A/J
  bool consistent = true;
};

/// Partitions (A/J)^n into blocks over the points of (A/I)^n. Throws
/// NotNested, SearchSpaceTooLarge, ZeroPolynomial.
BlockReport block_statistics(const FreePoly& q, const Algebra& algebra, const Ideal& outer, const Ideal& inner,
                             const EvalOptions& options = {});

/// dixon_verdict for E_m. Throws NotALieAlgebra.
EvalReport engel_report(const Algebra& lie, int m, const EvalOptions& options = {});

struct NagataReport {
  int d = 0;
  int characteristic = 0;
  bool associative = false;
  bool identity = false;
  Rational probability;
  bool char_exceeds_degree = false;
  std::optional<int> nilpotency_index;
  bool asserted = false;  // identity, associative, and p > d
  bool consistent = true; // not asserted, or the nilpotency index is finite
};

NagataReport nagata_higman_check(const Algebra& algebra, int d, const EvalOptions& options = {});

}  // namespace fqid
