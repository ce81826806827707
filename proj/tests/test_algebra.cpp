#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fqid/algebra.hpp"
#include "fqid/algebra_io.hpp"
#include "fqid/enumerate.hpp"
#include "fqid/error.hpp"
#include "fqid/library.hpp"

using namespace fqid;

namespace {

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

std::vector<Vec> all_vectors(const Algebra& a) {
  std::vector<Vec> out;
  const auto count = saturating_pow(a.field()->q(), a.dim());
  Odometer od(a.field()->q(), a.dim());
  for (std::uint64_t i = 0; i < count; ++i, od.next()) out.emplace_back(od.digits().begin(), od.digits().end());
  return out;
}

std::uint64_t index_of(const Algebra& a, const Vec& v) {
  std::uint64_t idx = 0;
  for (auto s : v) idx = idx * a.field()->q() + s.code;
  return idx;
}

using ElementSet = std::vector<std::uint64_t>;

ElementSet elements_of(const Algebra& a, const Subspace& s) {
  ElementSet out;
  for (const auto& v : all_vectors(a)) {
    if (s.contains(v)) out.push_back(index_of(a, v));
  }
  return out;
}

// Ideals found by brute force: span every tuple of dim vectors as an
// element set, then test closure elementwise.
std::set<ElementSet> brute_force_ideals(const Algebra& a) {
  const Field& f = *a.field();
  const auto vecs = all_vectors(a);
  const auto coeffs = all_vectors(a);
  std::set<ElementSet> spaces;
  std::vector<std::uint64_t> idx(a.dim(), 0);
  for (;;) {
    ElementSet s;
    for (const auto& c : coeffs) {
      Vec v(a.dim());
      for (int i = 0; i < a.dim(); ++i) v = vec_add(f, v, vec_scale(f, c[i], vecs[idx[i]]));
      s.push_back(index_of(a, v));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    spaces.insert(s);
    int i = a.dim() - 1;
    while (i >= 0 && ++idx[i] == vecs.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  std::set<ElementSet> ideals;
  for (const auto& s : spaces) {
    bool closed = true;
    for (auto e : s) {
      for (int b = 0; b < a.dim() && closed; ++b) {
        closed = std::binary_search(s.begin(), s.end(), index_of(a, a.mul(vecs[e], a.basis(b)))) &&
                 std::binary_search(s.begin(), s.end(), index_of(a, a.mul(a.basis(b), vecs[e])));
      }
    }
    if (closed) ideals.insert(s);
  }
  return ideals;
}

Vec v(const Algebra& a, const char* text) { return a.parse_vector(text); }

}  // namespace

TEST_CASE("construction and validation") {
  const auto f2 = Field::of_order(2);
  const auto h = heisenberg(f2);
  CHECK(h.dim() == 3);
  CHECK(h.is_bracket());
  CHECK(h.mul(h.basis(0), h.basis(1)) == h.basis(2));

  StructureTable bad(1, std::vector<Vec>(1, Vec{f2->one()}));
  CHECK(kind_of([&] { Algebra::create(f2, 1, bad, true); }) == ErrorKind::LieAxiomViolation);
  CHECK(kind_of([&] { Algebra::create(f2, 2, bad, false); }) == ErrorKind::ShapeMismatch);

  // [b1,b2] = b1, [b2,b3] = b2, [b3,b1] = b3 is antisymmetric but breaks Jacobi over F_3.
  const auto f3 = Field::of_order(3);
  StructureTable t(3, std::vector<Vec>(3, Vec(3)));
  auto set = [&](int i, int j, int k) {
    t[i][j][k] = f3->one();
    t[j][i][k] = f3->neg(f3->one());
  };
  set(0, 1, 0);
  set(1, 2, 1);
  set(2, 0, 2);
  CHECK(kind_of([&] { Algebra::create(f3, 3, t, true); }) == ErrorKind::LieAxiomViolation);

  const auto tr = truncated(f2, 3);
  CHECK(tr.dim() == 2);
  CHECK(tr.basis_names() == std::vector<std::string>{"t", "t^2"});
  CHECK(tr.mul(v(tr, "t + t^2"), v(tr, "t + t^2")) == v(tr, "t^2"));
  CHECK(vec_is_zero(tr.mul(tr.zero(), v(tr, "t"))));
  CHECK_THROWS_AS(tr.mul(tr.zero(), Vec(3)), Error);
}

TEST_CASE("builders") {
  const auto m = builtin_algebra("matrix(2,2)");
  CHECK(m.dim() == 4);
  CHECK(m.basis_names() == std::vector<std::string>{"e11", "e12", "e21", "e22"});
  CHECK(m.is_associative());
  CHECK_FALSE(m.is_commutative());
  CHECK(builtin_algebra("truncated(2,3)").dim() == 2);
  CHECK(builtin_algebra("field(4)").dim() == 1);
  CHECK(kind_of([] { builtin_algebra("octonions(2)"); }) == ErrorKind::UnknownBuilder);
  CHECK(kind_of([] { builtin_algebra("matrix(2)"); }) == ErrorKind::UnknownBuilder);

  // basis e12, e13, e23 against b1, b3... of heisenberg: b1 = e12, b2 = e23, b3 = e13
  const auto n3 = builtin_algebra("strictly_upper_triangular_lie(3,2)");
  const auto h = builtin_algebra("heisenberg(2)");
  const int perm[3] = {0, 2, 1};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Vec hp = h.product(i, j);
      Vec mapped(3);
      for (int k = 0; k < 3; ++k) mapped[perm[k]] = hp[k];
      CHECK(n3.product(perm[i], perm[j]) == mapped);
    }
  }
  for (const auto& spec : library_specs()) {
    const auto a = builtin_algebra(spec);
    if (a.is_bracket()) CHECK(a.mul(a.basis(0), a.basis(0)) == a.zero());
  }
}

TEST_CASE("ideal_generated examples") {
  const auto ut = builtin_algebra("upper_triangular(2,2)");
  const std::vector<Vec> g{v(ut, "e12")};
  const auto i = ideal_generated(ut, g);
  CHECK(i.rank() == 1);
  CHECK(i.space().contains(v(ut, "e12")));
  CHECK(ideal_generated(ut, {}).is_zero());
  const auto tr = builtin_algebra("truncated(2,3)");
  const std::vector<Vec> t{v(tr, "t")};
  CHECK(ideal_generated(tr, t).codim() == 0);
}

TEST_CASE("enumerate_ideals examples") {
  const auto tr = builtin_algebra("truncated(2,3)");
  const auto ideals = enumerate_ideals(tr);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0].codim() == 0);
  CHECK(ideals[1].space().rows() == std::vector<Vec>{v(tr, "t^2")});
  CHECK(ideals[2].is_zero());
  CHECK(enumerate_ideals(builtin_algebra("heisenberg(2)")).size() == 6);
  CHECK(kind_of([] { enumerate_ideals(builtin_algebra("matrix(3,3)")); }) == ErrorKind::SearchSpaceTooLarge);
  CHECK(count_subspaces(2, 3) == 16);
  CHECK(count_subspaces(3, 2) == 6);
}

TEST_CASE("enumerate_ideals matches the brute-force oracle") {
  for (const auto& spec : library_specs()) {
    const auto a = builtin_algebra(spec);
    if (saturating_pow(a.field()->q(), a.dim() * a.dim()) > (1u << 17)) continue;
    CAPTURE(spec);
    const auto ideals = enumerate_ideals(a);
    std::set<ElementSet> found;
    for (const auto& i : ideals) found.insert(elements_of(a, i.space()));
    CHECK(found.size() == ideals.size());
    CHECK(found == brute_force_ideals(a));
    for (std::size_t k = 1; k < ideals.size(); ++k) CHECK(ideals[k - 1].codim() <= ideals[k].codim());
  }
}

TEST_CASE("ideal invariants on the library") {
  for (const auto& spec : library_specs()) {
    const auto a = builtin_algebra(spec);
    if (saturating_pow(a.field()->q(), a.dim()) > 256) continue;
    CAPTURE(spec);
    const auto elems = all_vectors(a);
    const auto ideals = enumerate_ideals(a);
    CHECK(ideals.front().codim() == 0);
    CHECK(ideals.back().is_zero());
    for (const auto& i : ideals) {
      for (const auto& u : elems) {
        if (!i.space().contains(u)) continue;
        for (const auto& w : elems) {
          REQUIRE(i.space().contains(a.mul(u, w)));
          REQUIRE(i.space().contains(a.mul(w, u)));
        }
      }
      const auto q = quotient(a, i);
      const auto r = restrict_to(a, i);
      CHECK(q.algebra.dim() + r.algebra.dim() == a.dim());
      // projection is multiplicative
      for (const auto& x : elems) {
        for (const auto& y : elems) {
          REQUIRE(q.projection.apply(a.mul(x, y)) == q.algebra.mul(q.projection.apply(x), q.projection.apply(y)));
        }
      }
      // inclusion is multiplicative
      const auto rel = all_vectors(r.algebra);
      for (const auto& x : rel) {
        for (const auto& y : rel) {
          REQUIRE(r.inclusion.apply(*a.field(), r.algebra.mul(x, y)) ==
                  a.mul(r.inclusion.apply(*a.field(), x), r.inclusion.apply(*a.field(), y)));
        }
      }
    }
    // ideal_generated is the least listed ideal containing the generator
    for (const auto& g : elems) {
      const std::vector<Vec> gens{g};
      const auto gen = ideal_generated(a, gens);
      const Ideal* least = nullptr;
      for (const auto& i : ideals) {
        if (i.space().contains(g) && (!least || i.rank() < least->rank())) least = &i;
      }
      REQUIRE(least);
      CHECK(gen == *least);
    }
  }
}

TEST_CASE("quotient and restriction examples") {
  const auto tr = builtin_algebra("truncated(2,3)");
  const std::vector<Vec> g{v(tr, "t^2")};
  const auto i = ideal_generated(tr, g);
  const auto q = quotient(tr, i);
  CHECK(q.algebra.dim() == 1);
  CHECK(vec_is_zero(q.algebra.product(0, 0)));
  const auto r = restrict_to(tr, i);
  CHECK(r.algebra.dim() == 1);
  CHECK(vec_is_zero(r.algebra.product(0, 0)));

  const auto zero = ideal_generated(tr, {});
  CHECK(quotient(tr, zero).algebra.table() == tr.table());
  const auto whole = Ideal::from_subspace(tr, Subspace::whole(tr.field(), 2));
  CHECK(quotient(tr, whole).algebra.dim() == 0);
  CHECK(restrict_to(tr, whole).algebra.table() == tr.table());

  const auto ut = builtin_algebra("upper_triangular(2,2)");
  const std::vector<Vec> e12{v(ut, "e12")};
  CHECK(vec_is_zero(restrict_to(ut, ideal_generated(ut, e12)).algebra.product(0, 0)));
  const std::vector<Vec> e11{v(ut, "e11")};
  CHECK(kind_of([&] { Ideal::from_subspace(ut, Subspace::span(ut.field(), 3, e11)); }) == ErrorKind::NotAnIdeal);
}

TEST_CASE("nilpotency") {
  CHECK(nilpotency_index(builtin_algebra("truncated(2,3)")) == 3);
  CHECK(nilpotency_index(builtin_algebra("truncated(5,3)")) == 3);
  CHECK(nilpotency_index(builtin_algebra("truncated(2,4)")) == 4);
  CHECK_FALSE(nilpotency_index(builtin_algebra("matrix(2,2)")).has_value());
  CHECK(nilpotency_index(builtin_algebra("heisenberg(2)")) == 3);
  CHECK(nilpotency_index(builtin_algebra("strictly_upper_triangular_lie(4,2)")) == 4);
  const auto f3 = Field::of_order(3);
  CHECK(nilpotency_index(Algebra::create(f3, 2, StructureTable(2, std::vector<Vec>(2, Vec(2))), false)) == 2);
  // b1*b1 = b2 only: (b1 b1) b1 = 0 and b1 (b1 b1) = 0, index 3
  StructureTable t(2, std::vector<Vec>(2, Vec(2)));
  t[0][0][1] = f3->one();
  CHECK(nilpotency_index(Algebra::create(f3, 2, t, false)) == 3);
}

TEST_CASE("vector text round-trips") {
  const auto a = builtin_algebra("matrix(2,3)");
  for (const auto& x : all_vectors(builtin_algebra("upper_triangular(2,3)"))) {
    const auto ut = builtin_algebra("upper_triangular(2,3)");
    REQUIRE(ut.parse_vector(ut.vector_string(x)) == x);
  }
  CHECK(a.parse_vector("2*e11 + e22") == a.parse_vector("e22 - e11"));
  CHECK_THROWS_AS(a.parse_vector("e33"), Error);
  const auto f4 = builtin_algebra("field(4)");
  const Vec gv{f4.field()->generator()};
  CHECK(f4.parse_vector(f4.vector_string(gv)) == gv);
}

TEST_CASE("JSON file format") {
  for (const auto& spec : library_specs()) {
    const auto a = builtin_algebra(spec);
    const auto j = algebra_to_json(a);
    const auto b = algebra_from_json(j);
    CHECK(b.table() == a.table());
    CHECK(b.is_bracket() == a.is_bracket());
    CHECK(b.basis_names() == a.basis_names());
    CHECK(algebra_to_json(b) == j);
  }
  const auto doc = nlohmann::json::parse(R"({
    "field": {"p": 2, "k": 2, "modulus": [1, 1, 1]}, "dim": 1, "bracket": false,
    "basis_names": ["u"], "table": [[["g"]]]})");
  const auto a = algebra_from_json(doc);
  CHECK(a.mul(a.basis(0), a.basis(0)) == Vec{a.field()->generator()});
  auto bad = doc;
  bad["table"] = nlohmann::json::parse(R"([[["g", "1"]]])");
  CHECK(kind_of([&] { algebra_from_json(bad); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] { load_algebra("builtin:nope(2)"); }) == ErrorKind::UnknownBuilder);
}
