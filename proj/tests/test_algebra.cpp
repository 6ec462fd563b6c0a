#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ddo/algebra.hpp"
#include "ddo/kernels.hpp"
#include "ddo/oracles.hpp"
#include "ddo/recognition.hpp"

using namespace ddo;

namespace {

// Element 0 is the identity in all three.
FiniteMonoid trivial() { return FiniteMonoid(1, 0, {0}); }
FiniteMonoid left_zero() { return FiniteMonoid(3, 0, {0, 1, 2, 1, 1, 1, 2, 2, 2}); }
FiniteMonoid right_zero() { return FiniteMonoid(3, 0, {0, 1, 2, 1, 1, 2, 2, 1, 2}); }
// {1, x, x²} with x³ = x.
FiniteMonoid cyclic() { return FiniteMonoid(3, 0, {0, 1, 2, 1, 2, 1, 2, 1, 2}); }

std::vector<LinkedPair> sorted(std::vector<LinkedPair> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("construction validates the table", "[algebra]") {
  CHECK_THROWS(FiniteMonoid(2, 0, {0, 1, 1}));
  CHECK_THROWS(FiniteMonoid(2, 0, {0, 1, 1, 2}));
  CHECK_THROWS(FiniteMonoid(2, 1, {0, 1, 1, 1}));
  // Identity laws hold but (1·1)·2 = 1 while 1·(1·2) = 2.
  CHECK_THROWS(FiniteMonoid(3, 0, {0, 1, 2, 1, 2, 1, 2, 2, 1}));
}

TEST_CASE("idempotent_power", "[algebra]") {
  auto m = cyclic();
  CHECK(m.idempotent_power(0) == 0);
  CHECK(m.idempotent_power(2) == 2);
  CHECK(m.idempotent_power(1) == 2);
}

TEST_CASE("exponent", "[algebra]") {
  CHECK(exponent(trivial()) == 1);
  CHECK(exponent(left_zero()) == 1);
  CHECK(exponent(cyclic()) == 2);
}

TEST_CASE("Green's relations", "[algebra]") {
  auto g0 = green(trivial());
  CHECK(g0.r_equiv(0, 0));
  auto gl = green(left_zero());
  CHECK_FALSE(gl.r_equiv(1, 2));
  CHECK(gl.l_equiv(1, 2));
  CHECK(gl.lt_r(1, 0));
  auto gr = green(right_zero());
  CHECK(gr.r_equiv(1, 2));
  CHECK_FALSE(gr.l_equiv(1, 2));
}

TEST_CASE("linked pairs", "[algebra]") {
  CHECK(linked_pairs(trivial()) == std::vector<LinkedPair>{{0, 0}});
  CHECK(sorted(linked_pairs(left_zero()))
        == std::vector<LinkedPair>{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  // x·x² = x, so (x, x²) is linked as well.
  CHECK(sorted(linked_pairs(cyclic()))
        == std::vector<LinkedPair>{{0, 0}, {1, 0}, {1, 2}, {2, 0}, {2, 2}});
}

TEST_CASE("B1 membership and aperiodicity", "[algebra]") {
  auto t = trivial();
  CHECK(is_b1(SubSemigroup::whole(t)).holds);
  CHECK(is_aperiodic(SubSemigroup::whole(t)));

  auto l = left_zero();
  auto ls = SubSemigroup::without_identity(l);
  CHECK(is_b1(ls).holds);
  CHECK(is_aperiodic(ls));

  auto c = cyclic();
  auto cs = SubSemigroup::without_identity(c);
  auto r = is_b1(cs);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK_FALSE(b1_check_equation(cs, *r.witness));
  CHECK_FALSE(is_aperiodic(cs));
}

TEST_CASE("b1_check_equation trivial instances", "[algebra]") {
  auto c = cyclic();
  auto cs = SubSemigroup::without_identity(c);
  CHECK(b1_check_equation(cs, {2, 2, 2, 2, 2, 2}));
  for (Element s : cs.elements()) {
    for (Element t : cs.elements()) {
      for (Element y : cs.elements()) {
        CHECK(b1_check_equation(cs, {2, 2, s, t, s, y}));
      }
    }
  }
}

TEST_CASE("monoid JSON round trip", "[algebra]") {
  auto m = cyclic();
  CHECK(FiniteMonoid::from_json(m.to_json()) == m);
}

TEST_CASE("serial and OpenMP kernels agree", "[algebra][kernels]") {
  AutomatonGrid g;
  g.max_states = 2;
  g.modes = {Mode::star, Mode::omega, Mode::infty};
  g.sample = 300;
  g.seed = 7;
  for (auto const& a : enumerate_automata(g)) {
    auto h = build_pure_profile_hom(a);
    CHECK(kernels::congruence_classes(h.monoid, h.accept)
          == kernels::congruence_classes_serial(h.monoid, h.accept));
    auto q = syntactic_quotient(h);
    auto s = SubSemigroup::without_identity(q.monoid);
    CHECK(kernels::find_b1_violation(s) == kernels::find_b1_violation_serial(s));
  }
}
