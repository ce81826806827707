#include "fqid/bound.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <thread>

#include "fqid/enumerate.hpp"
#include "fqid/error.hpp"

namespace fqid {

FqDecomposition f_q(std::uint32_t q, int d) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "d must be >= 0");
  FqDecomposition out;
  out.q = q;
  out.d = d;
  out.m = d / static_cast<int>(q - 1);
  out.r = d % static_cast<int>(q - 1);
  const std::uint64_t den = saturating_pow(q, static_cast<std::uint64_t>(out.m) + 1);
  if (den > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw Error(ErrorKind::Overflow, "q^(m+1) exceeds 64 bits");
  }
  out.value = Rational(static_cast<std::int64_t>(q) - out.r, static_cast<std::int64_t>(den));
  return out;
}

namespace {

struct SequenceSearch {
  std::uint32_t q;
  int d;
  std::uint64_t budget;
  std::vector<unsigned __int128> qpow;  // q^i for i <= d
  std::vector<int> current;
  std::vector<int> best;
  unsigned __int128 best_value = 0;  // prod (q - x_i) * q^(d - len), over q^d
  bool have_best = false;
  std::uint64_t visited = 0;

  // Parts in non-increasing order, largest first, so the first optimum met
  // is the lexicographically greatest.
  void run(int remaining, int max_part, unsigned __int128 num) {
    if (remaining == 0) {
      if (++visited > budget) throw Error(ErrorKind::BudgetExceeded, "sequence search exceeded its budget");
      const unsigned __int128 value = num * qpow[d - current.size()];
      if (!have_best || value < best_value) {
        best_value = value;
        best = current;
        have_best = true;
      }
      return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
      current.push_back(part);
      run(remaining - part, part, num * (q - static_cast<unsigned>(part)));
      current.pop_back();
    }
  }
};

}  // namespace

SequenceMinimum minimize_sequences(std::uint32_t q, int d, std::uint64_t budget) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "d must be >= 0");
  SequenceSearch s{q, d, budget, {}, {}, {}, 0, false, 0};
  unsigned __int128 p = 1;
  constexpr unsigned __int128 limit = (static_cast<unsigned __int128>(1) << 120);
  for (int i = 0; i <= d; ++i) {
    s.qpow.push_back(p);
    if (p > limit / q) {
      if (i < d) throw Error(ErrorKind::BudgetExceeded, "q^d exceeds exact range");
    }
    p *= q;
  }
  s.run(d, static_cast<int>(q - 1), 1);
  SequenceMinimum out;
  out.witness = s.best;
  out.visited = s.visited;
  // Reduce best_value / q^d to lowest terms.
  unsigned __int128 num = s.best_value;
  unsigned __int128 den = s.qpow[d];
  unsigned __int128 a = num, b = den;
  while (b != 0) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  num /= a;
  den /= a;
  constexpr auto hi = static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
  if (num > hi || den > hi) throw Error(ErrorKind::Overflow, "minimum exceeds 64-bit rational range");
  out.minimum = Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  return out;
}

CommPoly extremal_poly(std::uint32_t q, int n, int d) {
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "d must be >= 0");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  const auto dec = f_q(q, d);
  const int needed = dec.m + (dec.r > 0 ? 1 : 0);
  if (n < needed) {
    throw Error(ErrorKind::NotEnoughVariables,
                "degree " + std::to_string(d) + " over F_" + std::to_string(q) + " needs " + std::to_string(needed) +
                    " variables");
  }
  const FieldPtr field = Field::of_order(q);
  const Field& f = *field;
  CommPoly p = CommPoly::constant(field, n, f.one());
  for (int i = 0; i < dec.m; ++i) {
    Exponents e(n, 0);
    e[i] = q - 1;
    CommPoly factor = CommPoly::constant(field, n, f.one());
    factor.add_monomial(e, f.neg(f.one()));
    p = p * factor;
  }
  for (int j = 1; j <= dec.r; ++j) {
    CommPoly factor = CommPoly::variable(field, n, dec.m);
    factor -= CommPoly::constant(field, n, Scalar{static_cast<std::uint16_t>(j)});
    p = p * factor;
  }
  return p;
}

std::vector<Exponents> reduced_monomials(std::uint32_t q, int n, int d) {
  Exponents e(n, 0);
  // Collect all exponent vectors with entries < q and total <= d.
  std::vector<Exponents> all;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n) {
      all.push_back(e);
      return;
    }
    for (int x = 0; x < static_cast<int>(q) && x <= left; ++x) {
      e[var] = static_cast<std::uint32_t>(x);
      rec(var + 1, left - x);
    }
    e[var] = 0;
  };
  rec(0, d);
  auto total = [](const Exponents& v) {
    std::uint64_t s = 0;
    for (auto x : v) s += x;
    return s;
  };
  std::stable_sort(all.begin(), all.end(), [&](const Exponents& a, const Exponents& b) {
    const auto ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    return a > b;
  });
  return all;
}

ExhaustiveMinimum exhaustive_min(std::uint32_t q, int n, int d, std::uint64_t cap, int workers) {
  if (n < 0 || d < 0) throw Error(ErrorKind::InvalidArgument, "n and d must be >= 0");
  const FieldPtr field = Field::of_order(q);
  const Field& f = *field;
  const auto monos = reduced_monomials(q, n, d);
  const std::uint64_t polys = saturating_pow(q, monos.size());
  if (polys > cap) {
    throw Error(ErrorKind::SearchSpaceTooLarge, std::to_string(q) + "^" + std::to_string(monos.size()) +
                                                    " polynomials exceed the cap of " + std::to_string(cap));
  }
  const std::uint64_t points = saturating_pow(q, static_cast<std::uint64_t>(n));
  if (points > kDefaultPointCap) throw Error(ErrorKind::SearchSpaceTooLarge, "too many evaluation points");

  // values[m * points + pt] = monomial m at point pt.
  std::vector<Scalar> values(monos.size() * points);
  {
    Odometer od(q, static_cast<std::size_t>(n));
    for (std::uint64_t pt = 0; pt < points; ++pt, od.next()) {
      for (std::size_t m = 0; m < monos.size(); ++m) {
        Scalar v = f.one();
        for (int i = 0; i < n; ++i) v = f.mul(v, f.pow(od.digits()[i], monos[m][i]));
        values[m * points + pt] = v;
      }
    }
  }
  const Rational bound = f_q(q, d).value * Rational(static_cast<std::int64_t>(points));

  struct Partial {
    std::uint64_t minimum = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t index = 0;
    std::uint64_t violations = 0;
  };
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    Partial part;
    Odometer coeffs(q, monos.size(), begin);
    std::vector<Scalar> acc(points);
    for (std::uint64_t idx = begin; idx < end; ++idx, coeffs.next()) {
      if (idx == 0) continue;  // the zero polynomial
      std::fill(acc.begin(), acc.end(), Scalar{});
      const auto c = coeffs.digits();
      for (std::size_t m = 0; m < monos.size(); ++m) {
        if (c[m].is_zero()) continue;
        const Scalar* row = values.data() + m * points;
        for (std::uint64_t pt = 0; pt < points; ++pt) acc[pt] = f.add(acc[pt], f.mul(c[m], row[pt]));
      }
      std::uint64_t nonzero = 0;
      for (Scalar s : acc) nonzero += s.is_zero() ? 0 : 1;
      if (Rational(static_cast<std::int64_t>(nonzero)) < bound) ++part.violations;
      if (nonzero < part.minimum) {
        part.minimum = nonzero;
        part.index = idx;
      }
    }
    return part;
  };

  const std::uint64_t w = std::clamp<std::uint64_t>(workers < 1 ? 1 : workers, 1, polys);
  std::vector<Partial> parts(w);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 0; t < w; ++t) {
      const std::uint64_t begin = polys / w * t + std::min(t, polys % w);
      const std::uint64_t end = begin + polys / w + (t < polys % w ? 1 : 0);
      pool.emplace_back([&, t, begin, end] { parts[t] = scan(begin, end); });
    }
  }
  Partial best;
  for (const auto& p : parts) {
    best.violations += p.violations;
    if (p.minimum < best.minimum) best = {p.minimum, p.index, best.violations};
  }

  ExhaustiveMinimum out{0, CommPoly(field, n), polys - 1, bound, best.violations};
  if (polys <= 1) return out;
  out.minimum = best.minimum;
  Odometer coeffs(q, monos.size(), best.index);
  for (std::size_t m = 0; m < monos.size(); ++m) out.witness.add_monomial(monos[m], coeffs.digits()[m]);
  return out;
}

}  // namespace fqid
