#include "fqid/idtest.hpp"

#include <algorithm>
#include <cmath>

#include "fqid/bound.hpp"
#include "fqid/commpoly.hpp"
#include "fqid/enumerate.hpp"
#include "fqid/error.hpp"

namespace fqid {

// ------------------------------------------------------------ evaluation

Evaluator::Evaluator(const FreePoly& q, const Algebra& algebra, bool commutator)
    : algebra_(&algebra), program_(q), nvars_(q.nvars()), dim_(algebra.dim()) {
  if (!(*q.field() == *algebra.field())) throw Error(ErrorKind::FieldMismatch, "polynomial and algebra fields differ");
  commutator_ = commutator_mode(q, algebra, commutator);
  values_.resize(program_.nodes().size() * static_cast<std::size_t>(dim_));
  scratch_.resize(dim_);
  result_.resize(dim_);
}

std::span<const Scalar> Evaluator::evaluate(std::span<const Scalar> args) {
  if (args.size() != static_cast<std::size_t>(nvars_) * dim_) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(nvars_) + " arguments of length " +
                                                  std::to_string(dim_));
  }
  const Field& f = *algebra_->field();
  const auto& nodes = program_.nodes();
  const std::size_t d = static_cast<std::size_t>(dim_);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto& node = nodes[k];
    std::span<Scalar> out(values_.data() + k * d, d);
    if (node.var > 0) {
      std::copy_n(args.begin() + static_cast<std::ptrdiff_t>((node.var - 1) * d), d, out.begin());
      continue;
    }
    std::span<const Scalar> left(values_.data() + static_cast<std::size_t>(node.left) * d, d);
    std::span<const Scalar> right(values_.data() + static_cast<std::size_t>(node.right) * d, d);
    algebra_->mul_into(left, right, out);
    if (commutator_) {
      algebra_->mul_into(right, left, scratch_);
      for (std::size_t s = 0; s < d; ++s) out[s] = f.sub(out[s], scratch_[s]);
    }
  }
  std::fill(result_.begin(), result_.end(), Scalar{});
  for (const auto& t : program_.terms()) {
    const Scalar* v = values_.data() + static_cast<std::size_t>(t.node) * d;
    for (std::size_t s = 0; s < d; ++s) result_[s] = f.add(result_[s], f.mul(t.coeff, v[s]));
  }
  return result_;
}

bool Evaluator::vanishes(std::span<const Scalar> args) {
  const auto r = evaluate(args);
  return std::all_of(r.begin(), r.end(), [](Scalar s) { return s.is_zero(); });
}

Vec evaluate(const FreePoly& q, const Algebra& algebra, std::span<const Vec> args, bool commutator) {
  if (static_cast<int>(args.size()) != q.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(q.nvars()) + " arguments");
  }
  std::vector<Scalar> flat;
  for (const auto& a : args) {
    if (static_cast<int>(a.size()) != algebra.dim()) throw Error(ErrorKind::DimensionMismatch, "argument length");
    flat.insert(flat.end(), a.begin(), a.end());
  }
  Evaluator ev(q, algebra, commutator);
  const auto r = ev.evaluate(flat);
  return Vec(r.begin(), r.end());
}

namespace {

Rational threshold_for(std::optional<int> degree) {
  if (!degree) return Rational(1);
  if (*degree > 62) throw Error(ErrorKind::Overflow, "degree too large for an exact threshold");
  const std::int64_t p = std::int64_t{1} << *degree;
  return Rational(p - 1, p);
}

std::uint64_t tuple_space(const Algebra& algebra, int nvars, std::uint64_t cap) {
  const std::uint64_t total =
      saturating_pow(algebra.field()->q(), static_cast<std::uint64_t>(nvars) * static_cast<std::uint64_t>(algebra.dim()));
  if (total > cap) {
    throw Error(ErrorKind::SearchSpaceTooLarge, "q^(n*dim) = " + std::to_string(total) + " tuples exceed the cap of " +
                                                    std::to_string(cap));
  }
  return total;
}

// All elements of a subspace in canonical coordinate order.
std::vector<Vec> subspace_elements(const Field& f, const std::vector<Vec>& rows, int ambient) {
  const std::uint64_t count = saturating_pow(f.q(), rows.size());
  std::vector<Vec> out;
  out.reserve(count);
  Odometer od(f.q(), rows.size());
  for (std::uint64_t i = 0; i < count; ++i, od.next()) {
    Vec v(ambient);
    for (std::size_t a = 0; a < rows.size(); ++a) {
      const Scalar c = od.digits()[a];
      if (c.is_zero()) continue;
      for (int j = 0; j < ambient; ++j) v[j] = f.add(v[j], f.mul(c, rows[a][j]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Canonical representatives of A/I: lifts of quotient coordinates.
std::vector<Vec> quotient_representatives(const Field& f, const Projection& proj, int ambient) {
  const std::size_t c = proj.columns().size();
  const std::uint64_t count = saturating_pow(f.q(), c);
  std::vector<Vec> out;
  out.reserve(count);
  Odometer od(f.q(), c);
  for (std::uint64_t i = 0; i < count; ++i, od.next()) {
    Vec w(od.digits().begin(), od.digits().end());
    Vec v = proj.lift(w);
    v.resize(ambient);
    out.push_back(std::move(v));
  }
  return out;
}

// Calls fn(indices) for every tuple in [0, base)^len, first index most
// significant; stops early when fn returns false. Returns false if stopped.
template <class Fn>
bool for_each_tuple(std::uint64_t base, std::size_t len, Fn fn) {
  std::vector<std::uint64_t> idx(len, 0);
  if (base == 0) return true;
  for (;;) {
    if (!fn(std::span<const std::uint64_t>(idx))) return false;
    std::size_t i = len;
    for (;;) {
      if (i == 0) return true;
      --i;
      if (++idx[i] < base) break;
      idx[i] = 0;
    }
  }
}

void add_into(const Field& f, std::span<Scalar> dst, const Vec& a, const Vec& b) {
  for (std::size_t j = 0; j < a.size(); ++j) dst[j] = f.add(a[j], b[j]);
}

}  // namespace

EvalReport zero_probability(const FreePoly& q, const Algebra& algebra, EvalMode mode, const EvalOptions& options) {
  Evaluator probe(q, algebra, options.commutator);  // validates field and flavor up front
  EvalReport rep;
  rep.mode = mode;
  const auto analysis = q.analyze();
  rep.degree = analysis.degree;
  rep.homogeneous = analysis.homogeneous;
  rep.threshold = threshold_for(rep.degree);
  const std::size_t len = static_cast<std::size_t>(q.nvars()) * algebra.dim();
  const std::uint32_t qq = algebra.field()->q();

  if (!mode.sampled) {
    rep.total = tuple_space(algebra, q.nvars(), options.cap);
    rep.zero_count = parallel_sum(rep.total, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
      Evaluator ev(q, algebra, options.commutator);
      Odometer od(qq, len, begin);
      std::uint64_t zeros = 0;
      for (std::uint64_t i = begin; i < end; ++i, od.next()) zeros += ev.vanishes(od.digits()) ? 1 : 0;
      return zeros;
    });
    rep.probability = Rational(static_cast<std::int64_t>(rep.zero_count), static_cast<std::int64_t>(rep.total));
    rep.is_identity = rep.zero_count == rep.total;
    rep.verdict_consistent = rep.is_identity || rep.probability < rep.threshold;
    return rep;
  }

  if (mode.samples == 0) throw Error(ErrorKind::InvalidArgument, "sampled mode needs at least one sample");
  if (mode.samples > (1ull << 40)) throw Error(ErrorKind::InvalidArgument, "too many samples");
  rep.total = mode.samples;
  rep.zero_count = parallel_sum(rep.total, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
    Evaluator ev(q, algebra, options.commutator);
    SplitMix64 rng(mode.seed);
    rng.skip(begin * len);
    std::vector<Scalar> args(len);
    std::uint64_t zeros = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      for (auto& a : args) a.code = static_cast<std::uint16_t>(rng.next() % qq);
      zeros += ev.vanishes(args) ? 1 : 0;
    }
    return zeros;
  });
  rep.probability = Rational(static_cast<std::int64_t>(rep.zero_count), static_cast<std::int64_t>(rep.total));
  rep.is_identity = rep.zero_count == rep.total;
  const double p = rep.probability.to_double();
  rep.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(rep.total));
  rep.verdict_consistent = rep.is_identity || rep.probability < rep.threshold ||
                           p - rep.threshold.to_double() <= 3.0 * *rep.std_error;
  return rep;
}

EvalReport dixon_verdict(const FreePoly& q, const Algebra& algebra, const EvalOptions& options) {
  EvalReport rep = zero_probability(q, algebra, EvalMode::exact(), options);
  FunctionalRoute route;
  const auto coords = symbolic_coordinates(q, algebra, options.commutator);
  std::vector<CommPoly> reduced;
  Rational best(0);
  for (const auto& c : coords) {
    reduced.push_back(reduce(c));
    const auto deg = reduced.back().degree();
    route.reduced_degrees.push_back(deg);
    if (!deg) continue;
    ++route.nonzero_coordinates;
    best = std::max(best, f_q(algebra.field()->q(), *deg).value);
  }
  route.nonzero_lower_bound = best;
  route.zero_upper_bound = Rational(1) - best;
  if (reduced.empty()) {
    route.common_zero_count = rep.total;
  } else if (rep.total <= options.cap) {
    route.common_zero_count = count_common_zeros(reduced, options.cap, options.workers);
  }
  route.consistent = (route.nonzero_coordinates == 0) == rep.is_identity &&
                     rep.probability <= route.zero_upper_bound &&
                     (!route.common_zero_count || *route.common_zero_count == rep.zero_count);
  rep.functional = std::move(route);
  return rep;
}

// ---------------------------------------------------------- coset search

bool coset_product_vanishes(const FreePoly& q, const Algebra& algebra, const Ideal& ideal,
                            std::span<const Vec> representatives, const EvalOptions& options) {
  if (static_cast<int>(representatives.size()) != q.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "one representative per variable");
  }
  const Field& f = *algebra.field();
  const auto elems = subspace_elements(f, ideal.space().rows(), algebra.dim());
  const std::uint64_t work = saturating_pow(elems.size(), representatives.size());
  if (work > options.cap) throw Error(ErrorKind::SearchSpaceTooLarge, "coset product exceeds the cap");
  Evaluator ev(q, algebra, options.commutator);
  const std::size_t d = static_cast<std::size_t>(algebra.dim());
  std::vector<Scalar> args(representatives.size() * d);
  return for_each_tuple(elems.size(), representatives.size(), [&](std::span<const std::uint64_t> idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      add_into(f, std::span(args).subspan(i * d, d), representatives[i], elems[idx[i]]);
    }
    return ev.vanishes(args);
  });
}

std::vector<CosetWitness> coset_identity_search(const FreePoly& q, const Algebra& algebra, int max_codim,
                                                const EvalOptions& options) {
  tuple_space(algebra, q.nvars(), options.cap);
  const Field& f = *algebra.field();
  const auto ideals = enumerate_ideals(algebra);
  Evaluator ev(q, algebra, options.commutator);
  const std::size_t n = static_cast<std::size_t>(q.nvars());
  const std::size_t d = static_cast<std::size_t>(algebra.dim());
  std::vector<Scalar> args(n * d);
  std::vector<CosetWitness> out;
  for (const auto& ideal : ideals) {
    if (ideal.codim() > max_codim) continue;
    const Projection proj(ideal.space());
    const auto reps = quotient_representatives(f, proj, algebra.dim());
    const auto elems = subspace_elements(f, ideal.space().rows(), algebra.dim());
    for_each_tuple(reps.size(), n, [&](std::span<const std::uint64_t> rep_idx) {
      const bool vanishes = for_each_tuple(elems.size(), n, [&](std::span<const std::uint64_t> idx) {
        for (std::size_t i = 0; i < n; ++i) {
          add_into(f, std::span(args).subspan(i * d, d), reps[rep_idx[i]], elems[idx[i]]);
        }
        return ev.vanishes(args);
      });
      if (vanishes) {
        CosetWitness w{ideal, {}, ideal.codim(), false};
        bool all_inside = true;
        for (auto i : rep_idx) {
          w.representatives.push_back(reps[i]);
          all_inside = all_inside && vec_is_zero(reps[i]);
        }
        w.trivial = ideal.is_zero() || all_inside;
        out.push_back(std::move(w));
      }
      return true;
    });
  }
  return out;
}

// --------------------------------------------------------------- descent

namespace {

std::string stage_statement(int stage, int n) {
  std::string args;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) args += ", ";
    args += (i <= stage ? "y" : "a") + std::to_string(i);
  }
  std::string out = "e_Q(" + args + ") = 0";
  if (stage == 0) return out;
  out += " for all ";
  for (int i = 1; i <= stage; ++i) out += (i > 1 ? ", y" : "y") + std::to_string(i);
  return out + " in I";
}

}  // namespace

DescentCertificate multilinear_descent(const FreePoly& q, const Algebra& algebra, const CosetWitness& witness,
                                       const EvalOptions& options) {
  if (!q.analyze().multilinear) throw Error(ErrorKind::NotMultilinear, "descent needs a multilinear polynomial");
  if (static_cast<int>(witness.representatives.size()) != q.nvars() ||
      !is_two_sided_ideal(algebra, witness.ideal.space()) ||
      !coset_product_vanishes(q, algebra, witness.ideal, witness.representatives, options)) {
    throw Error(ErrorKind::WitnessInvalid, "e_Q does not vanish on the coset product");
  }
  const Field& f = *algebra.field();
  const int n = q.nvars();
  const std::size_t d = static_cast<std::size_t>(algebra.dim());
  const auto elems = subspace_elements(f, witness.ideal.space().rows(), algebra.dim());
  const auto& a = witness.representatives;
  Evaluator ev(q, algebra, options.commutator);

  // args with y_1..y_s from `idx` and a_{s+1}.. after; slot `shift` (if any)
  // gets a_slot + y_slot instead of y_slot.
  auto fill = [&](std::vector<Scalar>& args, std::span<const std::uint64_t> idx, int upto) {
    for (int i = 0; i < n; ++i) {
      const Vec& v = i < upto ? elems[idx[i]] : a[i];
      std::copy(v.begin(), v.end(), args.begin() + static_cast<std::ptrdiff_t>(i * d));
    }
  };

  DescentCertificate cert;
  std::vector<Scalar> args(n * d), lhs_args(n * d), rhs1(n * d), rhs2(n * d);
  for (int s = 0; s <= n; ++s) {
    DescentStep step;
    step.stage = s;
    step.statement = stage_statement(s, n);
    step.verified = for_each_tuple(elems.size(), static_cast<std::size_t>(s), [&](std::span<const std::uint64_t> idx) {
      ++step.checked;
      fill(args, idx, s);
      return ev.vanishes(args);
    });
    if (s >= 1) {
      // e(y.., a_s + y_s, a..) = e(y.., a_s, a..) + e(y.., y_s, a..)
      step.expansion_verified =
          for_each_tuple(elems.size(), static_cast<std::size_t>(s), [&](std::span<const std::uint64_t> idx) {
            fill(rhs1, idx, s - 1);
            fill(rhs2, idx, s);
            lhs_args = rhs1;
            add_into(f, std::span(lhs_args).subspan((s - 1) * d, d), a[s - 1], elems[idx[s - 1]]);
            const auto l = ev.evaluate(lhs_args);
            const Vec lv(l.begin(), l.end());
            const auto r1 = ev.evaluate(rhs1);
            const Vec r1v(r1.begin(), r1.end());
            const auto r2 = ev.evaluate(rhs2);
            for (std::size_t j = 0; j < d; ++j) {
              if (lv[j] != f.add(r1v[j], r2[j])) return false;
            }
            return true;
          });
    }
    cert.steps.push_back(std::move(step));
  }
  const auto restricted = restrict_to(algebra, witness.ideal);
  cert.identity_on_ideal = zero_probability(q, restricted.algebra, EvalMode::exact(), options).is_identity;
  cert.verified = cert.identity_on_ideal && std::all_of(cert.steps.begin(), cert.steps.end(), [](const DescentStep& s) {
                    return s.verified && s.expansion_verified;
                  });
  return cert;
}

// ---------------------------------------------------------------- blocks

BlockReport block_statistics(const FreePoly& q, const Algebra& algebra, const Ideal& outer, const Ideal& inner,
                             const EvalOptions& options) {
  if (!outer.space().contains(inner.space())) throw Error(ErrorKind::NotNested, "J must be contained in I");
  if (!is_two_sided_ideal(algebra, outer.space()) || !is_two_sided_ideal(algebra, inner.space())) {
    throw Error(ErrorKind::NotAnIdeal, "block statistics need two-sided ideals");
  }
  const Field& f = *algebra.field();
  const std::size_t n = static_cast<std::size_t>(q.nvars());
  const std::size_t d = static_cast<std::size_t>(algebra.dim());
  const std::uint64_t work = saturating_pow(f.q(), n * static_cast<std::size_t>(inner.codim()));
  if (work > options.cap) throw Error(ErrorKind::SearchSpaceTooLarge, "(A/J)^n exceeds the cap");

  BlockReport rep;
  rep.degree = q.degree();
  rep.block_bound = threshold_for(rep.degree);

  const Projection proj(outer.space());
  const auto labels = quotient_representatives(f, proj, algebra.dim());
  // I/J as the image of I under reduction modulo J.
  std::vector<Vec> reduced_rows;
  for (const auto& r : outer.space().rows()) reduced_rows.push_back(inner.space().reduce(r));
  const Subspace fiber_space = Subspace::span(algebra.field(), algebra.dim(), reduced_rows);
  const auto fiber = subspace_elements(f, fiber_space.rows(), algebra.dim());

  Evaluator ev(q, algebra, options.commutator);
  std::vector<Scalar> args(n * d);
  std::uint64_t over_zero_blocks = 0, zeros_total = 0, points_total = 0;
  const std::uint64_t block_size = saturating_pow(fiber.size(), n);
  for_each_tuple(labels.size(), n, [&](std::span<const std::uint64_t> label_idx) {
    BlockStat b;
    for (auto i : label_idx) b.representatives.push_back(labels[i]);
    for (std::size_t i = 0; i < n; ++i) {
      std::copy(labels[label_idx[i]].begin(), labels[label_idx[i]].end(), args.begin() + static_cast<std::ptrdiff_t>(i * d));
    }
    {
      const auto v = ev.evaluate(args);
      b.over_zero = outer.space().contains(Vec(v.begin(), v.end()));
    }
    b.size = block_size;
    for_each_tuple(fiber.size(), n, [&](std::span<const std::uint64_t> idx) {
      for (std::size_t i = 0; i < n; ++i) {
        add_into(f, std::span(args).subspan(i * d, d), labels[label_idx[i]], fiber[idx[i]]);
      }
      const auto v = ev.evaluate(args);
      b.zero_count += inner.space().contains(Vec(v.begin(), v.end())) ? 1 : 0;
      return true;
    });
    b.identically_zero = b.zero_count == b.size;
    b.fraction = Rational(static_cast<std::int64_t>(b.zero_count), static_cast<std::int64_t>(b.size));
    if (b.over_zero) ++over_zero_blocks;
    zeros_total += b.zero_count;
    points_total += b.size;
    if (!b.over_zero && b.zero_count > 0) rep.no_zeros_off_fiber = false;
    if (!b.identically_zero && b.fraction > rep.block_bound) rep.blocks_within_bound = false;
    if (b.over_zero && b.identically_zero) rep.hypothesis_holds = false;
    rep.blocks.push_back(std::move(b));
    return true;
  });

  rep.f_outer = Rational(static_cast<std::int64_t>(over_zero_blocks), static_cast<std::int64_t>(rep.blocks.size()));
  rep.f_inner = Rational(static_cast<std::int64_t>(zeros_total), static_cast<std::int64_t>(points_total));
  Rational weighted(0);
  const Rational weight(1, static_cast<std::int64_t>(rep.blocks.size()));
  for (const auto& b : rep.blocks) weighted = weighted + weight * b.fraction;
  rep.weighted_average_matches = weighted == rep.f_inner;
  if (rep.hypothesis_holds) rep.decay_holds = rep.f_inner <= rep.block_bound * rep.f_outer;

  const auto outer_q = quotient(algebra, outer);
  const auto inner_q = quotient(algebra, inner);
  rep.quotient_consistent =
      zero_probability(q, outer_q.algebra, EvalMode::exact(), options).probability == rep.f_outer &&
      zero_probability(q, inner_q.algebra, EvalMode::exact(), options).probability == rep.f_inner;

  rep.consistent = rep.no_zeros_off_fiber && rep.blocks_within_bound && rep.weighted_average_matches &&
                   rep.quotient_consistent && rep.decay_holds.value_or(true);
  return rep;
}

// ------------------------------------------------------ Engel and Nagata

EvalReport engel_report(const Algebra& lie, int m, const EvalOptions& options) {
  if (!lie.is_bracket()) throw Error(ErrorKind::NotALieAlgebra, "Engel reports need the bracket flag");
  return dixon_verdict(FreePoly::engel(m, lie.field()), lie, options);
}

NagataReport nagata_higman_check(const Algebra& algebra, int d, const EvalOptions& options) {
  NagataReport rep;
  rep.d = d;
  rep.characteristic = algebra.field()->p();
  rep.associative = !algebra.is_bracket() && algebra.is_associative();
  const auto ev = zero_probability(FreePoly::power_word(d, algebra.field()), algebra, EvalMode::exact(), options);
  rep.identity = ev.is_identity;
  rep.probability = ev.probability;
  rep.char_exceeds_degree = rep.characteristic > d;
  rep.nilpotency_index = nilpotency_index(algebra);
  rep.asserted = rep.identity && rep.associative && rep.char_exceeds_degree;
  rep.consistent = !rep.asserted || rep.nilpotency_index.has_value();
  return rep;
}

}  // namespace fqid
