#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fqid/error.hpp"
#include "fqid/freepoly.hpp"

using namespace fqid;

namespace {

Term random_term(std::mt19937& rng, int nvars, int leaves, Flavor flavor) {
  if (leaves == 1) return Term::leaf(std::uniform_int_distribution<int>(1, nvars)(rng));
  const int split = std::uniform_int_distribution<int>(1, leaves - 1)(rng);
  return multiply_terms(random_term(rng, nvars, split, flavor), random_term(rng, nvars, leaves - split, flavor),
                        flavor);
}

FreePoly random_poly(std::mt19937& rng, Flavor flavor, const FieldPtr& field) {
  const int nvars = std::uniform_int_distribution<int>(1, 4)(rng);
  FreePoly p(field, flavor, nvars);
  const int terms = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int t = 0; t < terms; ++t) {
    const int leaves = std::uniform_int_distribution<int>(1, 5)(rng);
    const Scalar c{static_cast<std::uint16_t>(std::uniform_int_distribution<int>(1, field->q() - 1)(rng))};
    p.add_term(random_term(rng, nvars, leaves, flavor), c);
  }
  return p;
}

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("parse examples") {
  const auto f3 = Field::of_order(3);
  const auto comm = FreePoly::parse("x1*x2 - x2*x1", Flavor::Associative, f3);
  CHECK(comm.terms().size() == 2);
  const auto a = comm.analyze();
  CHECK(a.degree == 2);
  CHECK(a.homogeneous);
  CHECK(a.multilinear);

  const auto f2 = Field::of_order(2);
  const auto lie = FreePoly::parse("[x1,x2,x2]", Flavor::Lie, f2);
  CHECK(lie == FreePoly::parse("[[x1,x2],x2]", Flavor::Lie, f2));
  CHECK(lie == FreePoly::engel(2, f2));
  CHECK(lie.degree() == 3);

  const auto left = FreePoly::parse("(x1*x1)*x1", Flavor::Free, f2);
  const auto right = FreePoly::parse("x1*(x1*x1)", Flavor::Free, f2);
  CHECK_FALSE(left == right);
  CHECK(left == FreePoly::parse("x1*x1*x1", Flavor::Free, f2));
}

TEST_CASE("associativity is flavor dependent") {
  const auto f = Field::of_order(5);
  CHECK(FreePoly::parse("x1*(x2*x3)", Flavor::Associative, f) == FreePoly::parse("(x1*x2)*x3", Flavor::Associative, f));
  CHECK_FALSE(FreePoly::parse("x1*(x2*x3)", Flavor::Free, f) == FreePoly::parse("(x1*x2)*x3", Flavor::Free, f));
}

TEST_CASE("analysis") {
  const auto f2 = Field::of_order(2);
  const auto p = FreePoly::parse("x1*x1 + x1", Flavor::Associative, f2);
  CHECK(p.degree() == 2);
  CHECK_FALSE(p.analyze().homogeneous);
  CHECK_FALSE(p.analyze().multilinear);
  const auto e2 = FreePoly::engel(2, f2).analyze();
  CHECK(e2.homogeneous);
  CHECK_FALSE(e2.multilinear);
  CHECK(e2.multidegree == std::vector<int>{1, 2});
  for (int m = 1; m <= 8; ++m) CHECK(FreePoly::engel(m, f2).degree() == m + 1);
  CHECK(FreePoly::engel(3, f2).str() == "[x1,x2,x2,x2]");
  CHECK(FreePoly::power_word(3, f2).str() == "x1*x1*x1");
  CHECK(FreePoly::power_word(1, f2).degree() == 1);

  const auto zero = FreePoly::parse("x1 - x1", Flavor::Free, Field::of_order(3));
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0");
  CHECK_FALSE(zero.analyze().degree.has_value());
  CHECK(kind_of([&] { zero.degree(); }) == ErrorKind::ZeroPolynomial);
  CHECK(FreePoly::parse("0", Flavor::Free, f2).is_zero());
}

TEST_CASE("coefficients and cancellation") {
  const auto f3 = Field::of_order(3);
  CHECK(FreePoly::parse("x1*x2 + x1*x2 + x1*x2", Flavor::Free, f3).is_zero());
  CHECK(FreePoly::parse("2*x1 + 2x1", Flavor::Free, f3) == FreePoly::parse("x1", Flavor::Free, f3));
  CHECK(FreePoly::parse("(x1 + x2)*x3", Flavor::Free, f3) == FreePoly::parse("x1*x3 + x2*x3", Flavor::Free, f3));
  CHECK(FreePoly::parse("[x1 + x2, x3]", Flavor::Lie, f3) == FreePoly::parse("[x1,x3] + [x2,x3]", Flavor::Lie, f3));
  const auto f4 = Field::of_order(4);
  const auto p = FreePoly::parse("(g+1)*x1*x2", Flavor::Associative, f4);
  CHECK(p == FreePoly::parse(p.str(), Flavor::Associative, f4));
  CHECK(FreePoly::parse("g*x1 + g*x1", Flavor::Free, f4).is_zero());
}

TEST_CASE("parse errors") {
  const auto f2 = Field::of_order(2);
  CHECK(kind_of([&] { FreePoly::parse("x1 + 1", Flavor::Free, f2); }) == ErrorKind::ConstantTermForbidden);
  CHECK(kind_of([&] { FreePoly::parse("x0", Flavor::Free, f2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([&] { FreePoly::parse("x3", Flavor::Free, f2, 2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([&] { FreePoly::parse("[x1,x2]", Flavor::Free, f2); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { FreePoly::parse("x1 *", Flavor::Free, f2); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { FreePoly::parse("(x1", Flavor::Free, f2); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { FreePoly::parse("[x1]", Flavor::Lie, f2); }) == ErrorKind::SyntaxError);
  try {
    FreePoly::parse("x1 + $", Flavor::Free, f2);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 5);
  }
  CHECK(FreePoly::parse("x1 + 2", Flavor::Free, Field::of_order(2)).str() == "x1");  // 2 = 0 in F_2
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(12345);
  for (auto q : {2u, 3u, 4u, 9u}) {
    const auto f = Field::of_order(q);
    for (auto flavor : {Flavor::Free, Flavor::Associative, Flavor::Lie}) {
      for (int i = 0; i < 1000; ++i) {
        const FreePoly p = random_poly(rng, flavor, f);
        const std::string text = p.str();
        CAPTURE(text);
        const FreePoly back = FreePoly::parse(text, flavor, f, p.nvars());
        REQUIRE(back == p);
        REQUIRE(back.str() == text);
      }
    }
  }
}

TEST_CASE("flavor names") {
  CHECK(parse_flavor("assoc") == Flavor::Associative);
  CHECK(to_string(Flavor::Lie) == "lie");
  CHECK_THROWS_AS(parse_flavor("jordan"), Error);
}
