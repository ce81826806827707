#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fqid/bound.hpp"
#include "fqid/commpoly.hpp"
#include "fqid/enumerate.hpp"
#include "fqid/error.hpp"
#include "fqid/idtest.hpp"
#include "fqid/library.hpp"

using namespace fqid;

namespace {

CommPoly random_poly(std::mt19937& rng, const FieldPtr& f, int nvars, int max_exp) {
  CommPoly p(f, nvars);
  const int terms = std::uniform_int_distribution<int>(0, 6)(rng);
  std::uniform_int_distribution<int> e(0, max_exp), c(0, f->q() - 1);
  for (int t = 0; t < terms; ++t) {
    Exponents x(nvars);
    for (auto& v : x) v = e(rng);
    p.add_monomial(x, Scalar{static_cast<std::uint16_t>(c(rng))});
  }
  return p;
}

std::vector<std::vector<Scalar>> all_points(std::uint32_t q, int n) {
  std::vector<std::vector<Scalar>> out;
  Odometer od(q, n);
  for (std::uint64_t i = 0, total = saturating_pow(q, n); i < total; ++i, od.next()) {
    out.emplace_back(od.digits().begin(), od.digits().end());
  }
  return out;
}

}  // namespace

TEST_CASE("reduce examples") {
  const auto f2 = Field::of_order(2), f3 = Field::of_order(3);
  CHECK(reduce(CommPoly::parse("x1^2", f2)) == CommPoly::parse("x1", f2));
  CHECK(reduce(CommPoly::parse("x1^3 + x1", f2)).is_zero());
  CHECK(reduce(CommPoly::parse("x1^3", f3)) == CommPoly::parse("x1", f3));
  CHECK(reduce(CommPoly::parse("x1^5*x2^4 + 2", f3)) == CommPoly::parse("x1*x2^2 + 2", f3));
}

TEST_CASE("count_nonzeros and eval examples") {
  const auto f2 = Field::of_order(2), f3 = Field::of_order(3), f4 = Field::of_order(4);
  CHECK(count_nonzeros(CommPoly::parse("x1*x2", f2)) == 1);
  CHECK(count_nonzeros(CommPoly(f2, 3)) == 0);
  CHECK(count_nonzeros(CommPoly::parse("x1", f3)) == 2);
  const std::vector<Scalar> one_one{f2->one(), f2->one()};
  CHECK(CommPoly::parse("x1 + x2", f2).eval(one_one).is_zero());
  CHECK(CommPoly::parse("x1*x2", f2).eval(one_one) == f2->one());
  const std::vector<Scalar> g{f4->generator()};
  CHECK(f4->literal(CommPoly::parse("g*x1", f4).eval(g)) == "g+1");
  CHECK_THROWS_AS(CommPoly::parse("x1", f2).eval(one_one), Error);
  CHECK_THROWS_AS(count_nonzeros(CommPoly::parse("x1", f2, 30), 1u << 24), Error);
  CHECK_FALSE(CommPoly(f2, 2).degree().has_value());
}

TEST_CASE("arithmetic and text") {
  const auto f3 = Field::of_order(3);
  const auto a = CommPoly::parse("x1 + x2", f3);
  CHECK(a * a == CommPoly::parse("x1^2 + 2*x1*x2 + x2^2", f3));
  CHECK((a - a).is_zero());
  CHECK(a.scaled(f3->from_int(2)) == CommPoly::parse("2*x1 + 2*x2", f3));
  std::mt19937 rng(7);
  for (auto q : {2u, 3u, 4u, 9u}) {
    const auto f = Field::of_order(q);
    for (int i = 0; i < 300; ++i) {
      const auto p = random_poly(rng, f, 3, 5);
      REQUIRE(CommPoly::parse(p.str(), f, 3) == p);
    }
  }
}

TEST_CASE("reduce is idempotent, function-preserving and bounded") {
  std::mt19937 rng(99);
  for (auto q : {2u, 3u, 4u, 5u}) {
    const auto f = Field::of_order(q);
    const int n = q <= 3 ? 3 : 2;
    const auto points = all_points(q, n);
    for (int i = 0; i < 200; ++i) {
      const auto p = random_poly(rng, f, n, 3 * q);
      const auto r = reduce(p);
      REQUIRE(reduce(r) == r);
      for (const auto& [e, c] : r.monomials())
        for (auto x : e) REQUIRE(x < q);
      if (p.degree() && r.degree()) REQUIRE(*r.degree() <= *p.degree());
      for (const auto& pt : points) REQUIRE(p.eval(pt) == r.eval(pt));
      if (!r.is_zero()) {
        const auto bound = f_q(q, *r.degree()).value * Rational(static_cast<std::int64_t>(points.size()));
        REQUIRE(Rational(static_cast<std::int64_t>(count_nonzeros(p))) >= bound);
      }
      REQUIRE(count_nonzeros(p, kDefaultPointCap, 3) == count_nonzeros(p));
    }
  }
}

TEST_CASE("symbolic_coordinates examples") {
  const auto tr = builtin_algebra("truncated(2,3)");
  const auto sq = FreePoly::parse("x1*x1", Flavor::Associative, tr.field());
  const auto c = symbolic_coordinates(sq, tr);
  REQUIRE(c.size() == 2);
  CHECK(c[0].is_zero());
  CHECK(c[1] == CommPoly::parse("x1^2", tr.field(), 2));
  CHECK(reduce(c[1]) == CommPoly::parse("x1", tr.field(), 2));

  const auto comm = builtin_algebra("truncated(3,3)");
  for (const auto& p : symbolic_coordinates(FreePoly::parse("x1*x2 - x2*x1", Flavor::Free, comm.field()), comm)) {
    CHECK(p.is_zero());
  }
  const auto f = builtin_algebra("field(2)");
  const auto prod = symbolic_coordinates(FreePoly::parse("x1*x2", Flavor::Free, f.field()), f);
  REQUIRE(prod.size() == 1);
  CHECK(prod[0] == CommPoly::parse("x1*x2", f.field(), 2));

  const auto lie = FreePoly::parse("[x1,x2]", Flavor::Lie, f.field());
  CHECK_THROWS_AS(symbolic_coordinates(lie, f), Error);
  CHECK(symbolic_coordinates(lie, f, true)[0].is_zero());
  CHECK_THROWS_AS(symbolic_coordinates(sq, builtin_algebra("field(3)")), Error);
}

TEST_CASE("symbolic coordinates reproduce evaluation") {
  const char* polys[] = {"x1*x1", "x1*x2", "x1*x2 - x2*x1", "(x1*x1)*x1", "x1*(x2*x1) + 2*x2"};
  for (const auto& spec : library_specs()) {
    const auto a = builtin_algebra(spec);
    if (a.is_bracket()) continue;
    for (const char* text : polys) {
      const auto q = FreePoly::parse(text, Flavor::Free, a.field());
      const int len = q.nvars() * a.dim();
      if (saturating_pow(a.field()->q(), len) > 4096) continue;
      CAPTURE(spec);
      CAPTURE(text);
      const auto coords = symbolic_coordinates(q, a);
      for (const auto& c : coords) REQUIRE((!c.degree() || *c.degree() <= q.degree()));
      Evaluator ev(q, a);
      for (const auto& pt : all_points(a.field()->q(), len)) {
        const auto direct = ev.evaluate(pt);
        for (int s = 0; s < a.dim(); ++s) REQUIRE(coords[s].eval(pt) == direct[s]);
      }
    }
  }
}
