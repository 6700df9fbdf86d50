#include "helpers.hpp"

using namespace testing_helpers;

namespace {

Jet worked_f() {
  return make_jet(1, 1,
                  {poly(3, {{{1, 0, 0}, q("1/2")}, {{1, 1, 0}, 1}}), poly(3, {{{0, 1, 0}, q("1/2")}}),
                   poly(3, {{{0, 0, 1}, q("1/4")}})});
}

Jet worked_h() {
  return make_jet(1, 1, {poly(3, {{{1, 0, 0}, 1}, {{1, 1, 0}, -4}}), Poly::variable(3, 1), Poly::variable(3, 2)});
}

}  // namespace

TEST_CASE("make_jet truncates and validates") {
  // x1 x2^2 in the first component has level 2
  Jet f = make_jet(1, 1, {poly(3, {{{1, 0, 0}, 1}, {{1, 2, 0}, 1}}), Poly::variable(3, 1), Poly::variable(3, 2)});
  CHECK(f == identity_jet(1, 1));
  // constant term: does not fix the origin
  CHECK_THROWS(make_jet(1, 2, {poly(3, {{{0, 0, 0}, 1}}), Poly::variable(3, 1), Poly::variable(3, 2)}));
}

TEST_CASE("compose and invert linear jets") {
  Jet i2 = scaling_jet(1, 3, Rational(2));
  CHECK(compose(i2, i2) == scaling_jet(1, 3, Rational(4)));
  CHECK(invert(i2) == scaling_jet(1, 3, q("1/2")));
  CHECK(invert(identity_jet(2, 4)) == identity_jet(2, 4));
  CHECK(decompose_levels(i2).size() == 1);
  CHECK(decompose_levels(i2).count(0) == 1);
}

TEST_CASE("worked conjugacy in P1") {
  Jet lhs = compose(worked_f(), worked_h());
  Jet rhs = compose(worked_h(), scaling_jet(1, 1, Rational(2)));
  Jet expected = make_jet(1, 1,
                          {poly(3, {{{1, 0, 0}, q("1/2")}, {{1, 1, 0}, -1}}), poly(3, {{{0, 1, 0}, q("1/2")}}),
                           poly(3, {{{0, 0, 1}, q("1/4")}})});
  CHECK(lhs == expected);
  CHECK(rhs == expected);
}

TEST_CASE("property: group laws on random unipotent jets") {
  std::mt19937_64 rng(23);
  for (int n : {1, 2})
    for (int r = 1; r <= 4; ++r) {
      Jet f = random_unipotent_jet(n, r, rng), g = random_unipotent_jet(n, r, rng), h = random_unipotent_jet(n, r, rng);
      Jet l = compose(scaling_jet(n, r, Rational(3)), f);
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      CHECK(compose(l, invert(l)) == identity_jet(n, r));
      CHECK(compose(invert(l), l) == identity_jet(n, r));
      CHECK(compose(f, identity_jet(n, r)) == f);
      // projection is a homomorphism
      for (int s = 0; s <= r; ++s) CHECK(project(compose(l, g), s) == compose(project(l, s), project(g, s)));
      // (FG)^(0) = F^(0) G^(0)
      CHECK(p0_part(compose(l, g)) == compose(p0_part(l), p0_part(g)));
      CHECK(jet_power(l, 3) == compose(l, compose(l, l)));
      CHECK(compose(jet_power(l, -2), jet_power(l, 2)) == identity_jet(n, r));
    }
}

TEST_CASE("jet exponential") {
  VectorField d = field(1, {{0, {1, 1, 0}, 1}});
  Jet e = jet_exp(d, 1);
  CHECK(e == make_jet(1, 1, {poly(3, {{{1, 0, 0}, 1}, {{1, 1, 0}, 1}}), Poly::variable(3, 1), Poly::variable(3, 2)}));
  CHECK(jet_exp(VectorField(2), 3) == identity_jet(2, 3));
  std::mt19937_64 rng(29);
  for (int n : {1, 2})
    for (int r = 1; r <= 4; ++r) {
      VectorField x = random_field(n, 1, r, rng, 5);
      CHECK(jet_log(jet_exp(x, r)) == x);
      Jet f = random_unipotent_jet(n, r, rng);
      CHECK(jet_exp(jet_log(f), r) == f);
    }
}

TEST_CASE("action of level 0 jets on fields") {
  std::mt19937_64 rng(31);
  for (int n : {1, 2})
    for (long k : {2L, 3L})
      for (int lvl = -2; lvl <= 3; ++lvl) {
        VectorField x = random_field(n, lvl, lvl, rng);
        CHECK(act_on_field(scaling_jet(n, 0, Rational(k)), x) == Rational(k).pow(lvl) * x);
      }
  CHECK(act_on_field(scaling_jet(1, 0, Rational(2)), VectorField::partial(1, 2)) ==
        q("1/4") * VectorField::partial(1, 2));
  // F_*[X, Y] = [F_* X, F_* Y] for F with a quadratic level 0 part
  Jet f = make_jet(1, 0, {poly(3, {{{1, 0, 0}, 2}, {{0, 1, 0}, 1}}), poly(3, {{{0, 1, 0}, q("1/3")}}),
                          poly(3, {{{0, 0, 1}, q("1/2")}, {{2, 0, 0}, 1}, {{1, 1, 0}, -3}})});
  for (int trial = 0; trial < 15; ++trial) {
    VectorField x = random_field(1, -2, 2, rng), y = random_field(1, -2, 2, rng);
    CHECK(act_on_field(f, lie_bracket(x, y)) == lie_bracket(act_on_field(f, x), act_on_field(f, y)));
  }
  CHECK(act_on_field(identity_jet(2, 0), random_field(2, -2, 2, rng)).dim() == 5);
}

TEST_CASE("kill_level_minus_one") {
  // I(2) with (1/10) x1 added to the x3 row
  Jet f{1, 2, {poly(3, {{{1, 0, 0}, q("1/2")}}), poly(3, {{{0, 1, 0}, q("1/2")}}),
               poly(3, {{{0, 0, 1}, q("1/4")}, {{1, 0, 0}, q("1/10")}})}};
  CHECK(has_level_minus_one(f));
  KillResult k = kill_level_minus_one(f);
  CHECK_FALSE(has_level_minus_one(k.result));
  // conjugator L = (x', x3 + <v, x'>)
  CHECK(k.conjugator.comps[2] == Poly::variable(3, 2) + k.v[0] * Poly::variable(3, 0));
  CHECK(k.v[1].is_zero());
  CHECK(k.v[0] == q("-2/5"));
  KillResult again = kill_level_minus_one(k.result);
  CHECK(again.result == k.result);
  for (const auto& v : again.v) CHECK(v.is_zero());
  KillResult none = kill_level_minus_one(scaling_jet(1, 2, Rational(2)));
  for (const auto& v : none.v) CHECK(v.is_zero());
}
