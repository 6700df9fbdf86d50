#include "helpers.hpp"

using namespace testing_helpers;

namespace {

Jet worked_f() {
  return make_jet(1, 1,
                  {poly(3, {{{1, 0, 0}, q("1/2")}, {{1, 1, 0}, 1}}), poly(3, {{{0, 1, 0}, q("1/2")}}),
                   poly(3, {{{0, 0, 1}, q("1/4")}})});
}

Jet normal_input(int n, long k, int r, std::uint64_t seed) {
  Jet f = random_perturbation(n, k, r, seed);
  return has_level_minus_one(f) ? kill_level_minus_one(f).result : f;
}

}  // namespace

TEST_CASE("worked normalization in P1") {
  NormalizationResult res = sternberg_normalize(worked_f());
  CHECK(res.h == make_jet(1, 1, {poly(3, {{{1, 0, 0}, 1}, {{1, 1, 0}, -4}}), Poly::variable(3, 1), Poly::variable(3, 2)}));
  CHECK(res.g == scaling_jet(1, 1, Rational(2)));
  REQUIRE(res.diagnostics.size() == 1);
  CHECK(res.diagnostics[0].level == 1);
  CHECK(res.diagnostics[0].rank == res.diagnostics[0].unknowns);
  CHECK(compose(worked_f(), res.h) == compose(res.h, res.g));
}

TEST_CASE("normal jets are left alone") {
  for (int n : {1, 2}) {
    NormalizationResult res = sternberg_normalize(scaling_jet(n, 4, Rational(3)));
    CHECK(res.h == identity_jet(n, 4));
  }
  Jet bad{1, 2, {poly(3, {{{1, 0, 0}, q("1/2")}}), poly(3, {{{0, 1, 0}, q("1/2")}}),
                 poly(3, {{{0, 0, 1}, q("1/4")}, {{1, 0, 0}, 1}})}};
  CHECK_THROWS_AS(sternberg_normalize(bad), std::invalid_argument);
}

TEST_CASE("linear part of the level equation agrees with probing the residual") {
  // For H = id + e, (F o H - H o G)^(q) is exactly DG.e - e o G when F = G.
  for (int n : {1, 2})
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      Jet g = p0_part(normal_input(n, 2, 2, seed));
      int r = 3;
      Jet gr = make_jet(n, r, g.comps);
      for (int lvl = 1; lvl <= 2; ++lvl) {
        auto basis = level_basis(n, lvl, lvl);
        auto images = level_operator(gr, basis);
        REQUIRE(images.size() == basis.size());
        for (size_t j = 0; j < basis.size(); j += 3) {
          std::vector<Poly> h;
          for (int i = 0; i < 2 * n + 1; ++i) h.push_back(Poly::variable(2 * n + 1, i) + basis[j][i]);
          Jet hj = make_jet(n, r, h);
          VectorField probe = level_residual(gr, hj, gr, lvl) - level_residual(gr, identity_jet(n, r), gr, lvl);
          CHECK(probe == images[j]);
        }
      }
    }
}

TEST_CASE("random perturbations normalize exactly and independently of basis order") {
  for (int n : {1, 2})
    for (long k : {2L, 3L})
      for (int r = 1; r <= (n == 1 ? 4 : 3); ++r)
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          Jet f = normal_input(n, k, r, seed * 97 + static_cast<std::uint64_t>(r));
          NormalizationResult a = sternberg_normalize(f);
          CHECK(compose(f, a.h) == compose(a.h, a.g));
          CHECK(a.g == p0_part(f));
          CHECK(p0_part(a.h) == p0_part(identity_jet(n, r)));
          NormalizationResult b = sternberg_normalize(f, {seed + 1000});
          CHECK(a.h == b.h);
        }
}

TEST_CASE("random_perturbation is deterministic and starts from I(k)") {
  CHECK(random_perturbation(2, 3, 4, 7) == random_perturbation(2, 3, 4, 7));
  Jet f = random_perturbation(1, 2, 3, 5);
  CHECK(f.r == 3);
  CHECK_FALSE(f == scaling_jet(1, 3, Rational(2)));
}

TEST_CASE("operator invertibility") {
  for (int n : {1, 2})
    for (int lvl = 1; lvl <= 3; ++lvl) {
      auto rep = operator_invertibility(scaling_jet(n, 0, Rational(2)), lvl);
      CHECK(rep.invertible);
      CHECK(rep.rank == rep.dimension);
    }
  // the map is multiplication by k^q - 1 on each basis monomial
  for (const auto& e : level_basis(1, 2, 2)) {
    Jet l = scaling_jet(1, 0, Rational(3));
    CHECK(act_on_field(l, e) - e == Rational(8) * e);
  }
  auto zero = operator_invertibility(identity_jet(1, 0), 2);
  CHECK_FALSE(zero.invertible);
  CHECK(zero.rank == 0);
  CHECK(static_cast<int>(zero.kernel.size()) == zero.dimension);

  // L = diag(1/2, 1/3, 1/5): the basis monomial x^a d_i has eigenvalue prod(lambda^a) / lambda_i
  QMatrix d = QMatrix::Zero(3, 3);
  d(0, 0) = q("1/2");
  d(1, 1) = q("1/3");
  d(2, 2) = q("1/5");
  Jet l = linear_jet(1, 0, d);
  std::vector<Rational> lam = {q("1/2"), q("1/3"), q("1/5")};
  for (int lvl = 0; lvl <= 3; ++lvl) {
    auto basis = level_basis(1, lvl, lvl);
    int expected_kernel = 0;
    for (const auto& e : basis)
      for (int i = 0; i < 3; ++i)
        for (const auto& [m, c] : e[i].terms()) {
          Rational ev(1);
          for (int v = 0; v < 3; ++v) ev *= lam[v].pow(m.exponent(v));
          if (ev / lam[i] == Rational(1)) ++expected_kernel;
        }
    auto rep = operator_invertibility(l, lvl);
    CHECK(rep.dimension == static_cast<int>(basis.size()));
    CHECK(rep.dimension - rep.rank == expected_kernel);
    CHECK(rep.invertible == (expected_kernel == 0));
  }
}

TEST_CASE("resonance") {
  CHECK_FALSE(resonance_check({q("1/2"), q("1/2"), q("1/4")}, 4));
  CHECK(resonance_check({q("1/2"), q("1/3")}, 6));
  CHECK(resonance_check({q("1/2")}, 2));
  CHECK_FALSE(resonance_check({q("1/2"), q("1/8")}, 3));
  CHECK(resonance_check({q("1/2"), q("1/8")}, 2));
}

TEST_CASE("reconstruction from low levels") {
  for (long k : {2L, 3L}) {
    LatticePresentation l = standard_lattice(1, k);
    for (int i = 1; i <= 2; ++i) {
      Jet full = phi_chart_jet({{'b', i, 1}}, l, 6);
      Jet rebuilt = reconstruct_from_low_order(project(full, 1), k, k, 6);
      CHECK(rebuilt == full);
      // idempotence
      CHECK(reconstruct_from_low_order(project(rebuilt, 1), k, k, 6) == rebuilt);
    }
    Jet c = phi_chart_jet({{'c', 0, 1}}, l, 6);
    CHECK(reconstruct_from_low_order(project(c, 2), k, k * k, 6) == c);
    CHECK_THROWS_AS(reconstruct_from_low_order(project(c, 1), k, k * k, 6), std::domain_error);
  }
  CHECK(reconstruct_from_low_order(identity_jet(2, 1), 2, 2, 5) == identity_jet(2, 5));
  CHECK_THROWS(reconstruct_from_low_order(scaling_jet(1, 1, Rational(2)), 2, 2, 4));
}

TEST_CASE("contraction certificates") {
  auto u = chart_affine_data(standard_lattice(1, 2)).u;
  ContractionCertificate c = contraction_certificate(2, q("3/5"), q("1/5"), u);
  CHECK(c.ok);
  CHECK(c.c1 > Rational(0));
  CHECK(c.c2 > Rational(0));
  bool saw2 = false, saw4 = false;
  for (const auto& n : c.checks) {
    CHECK(n.ok);
    CHECK(n.margin > Rational(0));
    CHECK(n.co_norm > n.bound);
    CHECK(n.operator_norm >= n.co_norm);
    saw2 = saw2 || n.m == 2;
    saw4 = saw4 || n.m == 4;
  }
  CHECK(saw2);
  CHECK(saw4);
  auto u3 = chart_affine_data(standard_lattice(1, 3)).u;
  CHECK(contraction_certificate(3, q("1/2"), q("1/10"), u3).ok);
  auto u2 = chart_affine_data(standard_lattice(2, 2)).u;
  CHECK(contraction_certificate(2, q("3/5"), q("1/5"), u2).ok);
  CHECK(contraction_certificate(2, q("3/5"), q("1/5"), {QVector::Zero(2)}).ok);
  CHECK_THROWS_AS(contraction_certificate(2, q("3/5"), q("1/4"), u), std::invalid_argument);
  CHECK_THROWS_AS(contraction_certificate(2, q("1/2"), q("1/5"), u), std::invalid_argument);
}

TEST_CASE("germ constants") {
  CHECK(germ_constant_check(2, 2, 10, q("21/20")));
  for (int r0 = 1; r0 <= 12; ++r0) CHECK_FALSE(germ_constant_check(2, 2, r0, Rational(2)));
  CHECK_FALSE(germ_constant_check(2, 2, 1, q("101/100")));
}
