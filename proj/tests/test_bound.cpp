#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqid/bound.hpp"
#include <cmath>

#include "fqid/error.hpp"

using namespace fqid;

namespace {

// Minimum of prod (q - x_i)/q over ordered integer sequences summing to d,
// by plain recursion over the first entry.
Rational naive_min(std::uint32_t q, int d) {
  if (d == 0) return Rational(1);
  Rational best(1);
  for (int x = 1; x <= std::min<int>(d, q - 1); ++x) {
    best = std::min(best, Rational(q - x, q) * naive_min(q, d - x));
  }
  return best;
}

Rational pow2_inv(int d) { return Rational(1, std::int64_t{1} << d); }

}  // namespace

TEST_CASE("f_q examples") {
  const auto a = f_q(2, 3);
  CHECK(a.m == 3);
  CHECK(a.r == 0);
  CHECK(a.value == Rational(1, 8));
  const auto b = f_q(3, 3);
  CHECK(b.m == 1);
  CHECK(b.r == 1);
  CHECK(b.value == Rational(2, 9));
  const auto c = f_q(5, 6);
  CHECK(c.m == 1);
  CHECK(c.r == 2);
  CHECK(c.value == Rational(3, 25));
  CHECK(f_q(7, 0).value == Rational(1));
  CHECK(c.value.str() == "3/25");
}

TEST_CASE("minimize_sequences examples") {
  const auto a = minimize_sequences(3, 3);
  CHECK(a.minimum == Rational(2, 9));
  CHECK(a.witness == std::vector<int>{2, 1});
  const auto b = minimize_sequences(4, 0);
  CHECK(b.minimum == Rational(1));
  CHECK(b.witness.empty());
  const auto c = minimize_sequences(2, 4);
  CHECK(c.minimum == Rational(1, 16));
  CHECK(c.witness == std::vector<int>{1, 1, 1, 1});
  CHECK_THROWS_AS(minimize_sequences(5, 60, 1000), Error);
}

TEST_CASE("formula, oracle and recursion agree") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    for (int d = 0; d <= 12; ++d) {
      CAPTURE(q);
      CAPTURE(d);
      const auto f = f_q(q, d);
      REQUIRE(f.value == naive_min(q, d));
      REQUIRE(f.value == minimize_sequences(q, d).minimum);
      REQUIRE(d == f.m * static_cast<int>(q - 1) + f.r);
      Rational prod(1);
      for (int x : minimize_sequences(q, d).witness) prod = prod * Rational(q - x, q);
      REQUIRE(prod == f.value);
    }
  }
}

TEST_CASE("recurrence properties") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (int d = 0; d <= 12; ++d) {
      const auto f = f_q(q, d);
      // f_q(d) >= 2^-d, equality exactly when q = 2 or d = 0
      CHECK(f.value >= pow2_inv(d));
      CHECK((f.value == pow2_inv(d)) == (q == 2 || d == 0));
      for (int k = 1; k <= static_cast<int>(q) - 1 && k <= d; ++k) {
        CHECK(f.value <= Rational(q - k, q) * f_q(q, d - k).value);
      }
      const auto next = f_q(q, d + 1).value;
      CHECK(next / f.value == Rational(q - f.r - 1, q - f.r));
      CHECK(next / f.value >= Rational(1, 2));
      CHECK(next <= f.value);
    }
  }
}

TEST_CASE("extremal polynomials") {
  const auto a = extremal_poly(2, 3, 2);
  CHECK(a == CommPoly::parse("(x1 + 1)*(x2 + 1)", Field::of_order(2), 3));
  CHECK(count_nonzeros(a) == 2);
  const auto b = extremal_poly(3, 1, 1);
  CHECK(b == CommPoly::parse("x1 - 1", Field::of_order(3), 1));
  CHECK(count_nonzeros(b) == 2);
  CHECK(count_nonzeros(extremal_poly(4, 2, 0)) == 16);
  CHECK_THROWS_AS(extremal_poly(2, 2, 3), Error);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (int n = 1; n <= 3; ++n) {
      for (int d = 0; d <= 8; ++d) {
        const auto f = f_q(q, d);
        if (n < f.m + (f.r > 0 ? 1 : 0)) continue;
        const auto p = extremal_poly(q, n, d);
        REQUIRE(p.degree() == d);
        const auto total = static_cast<std::int64_t>(std::pow(q, n));
        REQUIRE(Rational(static_cast<std::int64_t>(count_nonzeros(p))) == f.value * Rational(total));
      }
    }
  }
}

TEST_CASE("exhaustive minima") {
  const auto a = exhaustive_min(2, 2, 2);
  CHECK(a.minimum == 1);
  CHECK(a.polynomials == 15);
  CHECK(a.witness == CommPoly::parse("x1*x2", Field::of_order(2), 2));
  const auto b = exhaustive_min(3, 2, 3);
  CHECK(b.minimum == 2);
  CHECK(b.polynomials == 6560);
  CHECK(b.violations == 0);
  CHECK(exhaustive_min(2, 3, 2).minimum == 2);
  CHECK(exhaustive_min(3, 2, 3, kDefaultPolyCap, 4).witness == b.witness);
  CHECK_THROWS_AS(exhaustive_min(5, 3, 6, 1000), Error);
  CHECK(reduced_monomials(2, 2, 2).size() == 4);
}
