#include "helpers.hpp"

using namespace testing_helpers;

namespace {

ComplexRational cr(long re, long im) { return {Rational(re), Rational(im)}; }

QMatrix qm2(long a, long b, long c, long d) {
  QMatrix m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}

}  // namespace

TEST_CASE("Heisenberg group law") {
  HeisenbergElement g{{cr(1, 0)}, Rational(0)}, h{{cr(0, 1)}, Rational(0)};
  CHECK(symplectic_phi({cr(1, 0)}, {cr(0, 1)}) == Rational(-1));
  HeisenbergElement gh = group_product(g, h);
  CHECK(gh.z[0] == cr(1, 1));
  CHECK(gh.t == Rational(1));
  CHECK(group_product(g, heisenberg_identity(1)) == g);
  HeisenbergElement x{{cr(2, -3), ComplexRational(q("1/2"), q("1/3"))}, q("5/7")};
  CHECK(group_product(x, group_inverse(x)) == heisenberg_identity(2));
  CHECK(group_product(group_inverse(x), x) == heisenberg_identity(2));
}

TEST_CASE("exp and log") {
  CHECK(algebra_exp({{cr(0, 0)}, Rational(0)}) == heisenberg_identity(1));
  HeisenbergAlgebraElement a{{cr(1, 0)}, Rational(0)}, b{{cr(0, 1)}, Rational(0)};
  HeisenbergElement p = group_product(algebra_exp(a), algebra_exp(b));
  // BCH: exp(a) exp(b) = exp(a + b + [a, b]/2)
  HeisenbergAlgebraElement br = algebra_bracket(a, b);
  HeisenbergAlgebraElement sum{{cr(1, 1)}, br.tau / Rational(2)};
  CHECK(p == algebra_exp(sum));
  CHECK(p.t == Rational(1));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    HeisenbergAlgebraElement x{{ComplexRational(small_rational(rng), small_rational(rng))}, small_rational(rng)};
    CHECK(algebra_log(algebra_exp(x)) == x);
  }
}

TEST_CASE("lattice matrix check") {
  CHECK(lattice_matrix_check(qm2(0, -1, 1, 0)));
  CHECK(lattice_matrix_check(qm2(0, 2, -2, 0)));
  CHECK_FALSE(lattice_matrix_check(qm2(0, 0, 0, 0)));
  CHECK_FALSE(lattice_matrix_check(qm2(1, 1, -1, 0)));
  QMatrix half = qm2(0, 1, -1, 0);
  half(0, 1) = q("1/2");
  half(1, 0) = q("-1/2");
  CHECK_FALSE(lattice_matrix_check(half));
}

TEST_CASE("lattice embedding satisfies every relator") {
  // The relator fixes the orientation: M = [[0,-1],[1,0]], tau = 2 gives {e1, -i e1}.
  LatticePresentation l = build_lattice_embedding(qm2(0, -1, 1, 0), Rational(2), 2);
  REQUIRE(l.xi_basis.size() == 2);
  CHECK(l.xi_basis[0].xi[0] == cr(1, 0));
  CHECK(l.xi_basis[1].xi[0] == cr(0, -1));
  LatticePresentation s = standard_lattice(1, 2);
  CHECK(s.xi_basis[0].xi[0] == cr(1, 0));
  CHECK(s.xi_basis[1].xi[0] == cr(0, 1));
  LatticePresentation l4 = build_lattice_embedding(qm2(0, -2, 2, 0), Rational(4), 3);
  for (const auto& [name, w] : relators(l4)) CHECK_MESSAGE(evaluate_word(w, l4) == an_identity(1), name);
  CHECK_THROWS(build_lattice_embedding(qm2(0, 0, 0, 0), Rational(2), 2));

  QMatrix m(4, 4);
  m << Rational(0), Rational(3), Rational(1), Rational(0), Rational(-3), Rational(0), Rational(0), Rational(2),
      Rational(-1), Rational(0), Rational(0), Rational(-1), Rational(0), Rational(-2), Rational(1), Rational(0);
  LatticePresentation l2 = build_lattice_embedding(m, q("2/3"), 3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(Rational(-2) * symplectic_phi(l2.xi_basis[i].xi, l2.xi_basis[j].xi) == q("2/3") * m(i, j));
  for (const auto& [name, w] : relators(l2)) CHECK_MESSAGE(evaluate_word(w, l2) == an_identity(2), name);
}

TEST_CASE("relators of the standard lattices evaluate to the identity") {
  for (int n : {1, 2, 3})
    for (long k : {2L, 3L, 5L}) {
      LatticePresentation l = standard_lattice(n, k);
      auto rels = relators(l);
      CHECK(rels.size() == static_cast<size_t>(2 * n + 1 + n * (2 * n - 1) + 2 * n));
      for (const auto& [name, w] : rels) {
        CHECK_MESSAGE(evaluate_word(w, l) == an_identity(n), name);
        CHECK_MESSAGE(is_zero_matrix(CMatrix(word_matrix(w, l) - CMatrix::Identity(n + 2, n + 2))), name);
      }
      // a non-relator is not killed
      CHECK_FALSE(evaluate_word(parse_word("b1 b2 b1^-1 b2^-1"), l) == an_identity(n));
    }
}

TEST_CASE("AN product agrees with matrices") {
  LatticePresentation l = standard_lattice(2, 3);
  std::vector<std::string> words = {"a b1 c^2", "b3^-1 a^-2 b4", "c a b2 a^-1 b1^5", "a^3 b1 b2 b3 b4 c^-1"};
  for (const auto& s : words) {
    GroupWord w = parse_word(s);
    CHECK(an_matrix(evaluate_word(w, l), 3) == word_matrix(w, l));
    CHECK(an_product(evaluate_word(w, l), evaluate_word(word_inverse(w), l), 3) == an_identity(2));
  }
}

TEST_CASE("word parsing") {
  GroupWord w = parse_word("a b1 a^-1 b1^-2");
  REQUIRE(w.size() == 4);
  CHECK(w[1] == Letter{'b', 1, 1});
  CHECK(w[3] == Letter{'b', 1, -2});
  CHECK(word_to_string(w) == "a b1 a^-1 b1^-2");
  CHECK(parse_word_tokens({"c^4", "b2"}) == parse_word("c^4,b2"));
  CHECK_THROWS(parse_word("d1"));
  CHECK_THROWS(parse_word("b"));
  CHECK_THROWS(parse_word("a^x"));
  CHECK(evaluate_word(w, standard_lattice(1, 2)) == an_identity(1));
}

TEST_CASE("lattice hom from the chart jets") {
  LatticePresentation l = standard_lattice(1, 2);
  int r = 4;
  std::vector<Jet> b;
  for (int i = 1; i <= 2; ++i) b.push_back(phi_chart_jet({{'b', i, 1}}, l, r));
  Jet c = phi_chart_jet({{'c', 0, 1}}, l, r);
  LatticeHom h = extend_lattice_hom(b, c, l);
  CHECK(h.r == r);
  CHECK(lie_bracket(h.x_images[0], h.x_images[1]) == h.y_image);
  LatticeHom zero = extend_lattice_hom({identity_jet(1, r), identity_jet(1, r)}, identity_jet(1, r), l);
  CHECK(zero.y_image.is_zero());
  // break the relation by a level 2 perturbation of b1
  Jet bad = compose(b[0], jet_exp(field(1, {{2, {0, 0, 2}, 1}}), r));
  CHECK_THROWS_AS(extend_lattice_hom({bad, b[1]}, c, l), std::domain_error);
}
