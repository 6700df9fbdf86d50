#include "helpers.hpp"

using namespace testing_helpers;

TEST_CASE("generators lie in su(n+1,1) with their declared grades") {
  for (int n : {1, 2, 3}) {
    auto basis = su_basis(n);
    CHECK(basis.size() == static_cast<size_t>((n + 2) * (n + 2) - 1));
    for (const auto& g : basis) {
      CMatrix m = materialize(g, n);
      CHECK_MESSAGE(in_su(m), g.label);
      auto grades = grade_of(m);
      REQUIRE_MESSAGE(grades.size() == 1, g.label);
      CHECK_MESSAGE(grades.begin()->first == declared_grade(g), g.label);
    }
    // the basis is linearly independent over R
    std::vector<CMatrix> mats;
    for (const auto& g : basis) mats.push_back(materialize(g, n));
    for (size_t i = 0; i < mats.size(); ++i) {
      auto c = matrix_coordinates(mats, mats[i]);
      REQUIRE(c.has_value());
      for (Eigen::Index j = 0; j < c->size(); ++j) CHECK((*c)(j) == Rational(static_cast<long>(j) == static_cast<long>(i) ? 1 : 0));
    }
  }
}

TEST_CASE("grade decomposition of matrices") {
  int n = 1;
  auto ge = grade_of(gen_e(n));
  CHECK(ge.size() == 1);
  CHECK(ge.count(0) == 1);
  CHECK(grade_of(gen_f_minus(n)).count(-2) == 1);
  CMatrix mixed = gen_xi_plus(unit_vector(n, 0, false)) + gen_f_minus(n);
  auto g = grade_of(mixed);
  REQUIRE(g.size() == 2);
  CHECK(g.at(1) == gen_xi_plus(unit_vector(n, 0, false)));
  CHECK(g.at(-2) == gen_f_minus(n));
}

TEST_CASE("bracket relation table holds") {
  for (int n : {1, 2, 3}) {
    auto table = bracket_relation_table(n);
    CHECK(table.size() > 0);
    for (const auto& c : table) CHECK_MESSAGE(c.ok, (c.id + " " + c.detail));
  }
  // [e1+, (ie1)+] = 2 F+
  CMatrix a = gen_xi_plus(unit_vector(1, 0, false)), b = gen_xi_plus(unit_vector(1, 0, true));
  CHECK(commutator(a, b) == ComplexRational(2) * gen_f_plus(1));
  CHECK(is_zero_matrix(commutator(a, a)));
  CHECK(commutator(gen_f_minus(1), gen_f_plus(1)) == gen_e(1));
}

TEST_CASE("chart fields of the graded generators") {
  int n = 1;
  VectorField e = induced_vector_field(gen_e(n));
  CHECK(e == field(1, {{0, {1, 0, 0}, -1}, {1, {0, 1, 0}, -1}, {2, {0, 0, 1}, -2}}));
  CHECK(induced_vector_field(gen_f_minus(n)) == Rational(-1) * VectorField::partial(1, 2));
  CHECK(induced_vector_field(gen_xi_minus(unit_vector(n, 0, false))) ==
        field(1, {{0, {0, 0, 0}, 1}, {2, {0, 1, 0}, -1}}));
  CHECK(induced_vector_field(gen_xi_minus(unit_vector(n, 0, true))) ==
        field(1, {{1, {0, 0, 0}, 1}, {2, {1, 0, 0}, 1}}));
  // computed independently by a computer-algebra oracle from the projective action
  VectorField fp = field(1, {{0, {0, 3, 0}, q("1/2")},
                             {0, {1, 0, 1}, -1},
                             {0, {2, 1, 0}, q("1/2")},
                             {1, {0, 1, 1}, -1},
                             {1, {1, 2, 0}, q("-1/2")},
                             {1, {3, 0, 0}, q("-1/2")},
                             {2, {0, 0, 2}, -1},
                             {2, {0, 4, 0}, q("1/4")},
                             {2, {2, 2, 0}, q("1/2")},
                             {2, {4, 0, 0}, q("1/4")}});
  CHECK(induced_vector_field(gen_f_plus(n)) == fp);
  CHECK(pure_level(fp) == 2);
  // xi+ = [iota0 (i xi)-, iota0 F+]
  for (int j = 0; j < 2; ++j) {
    CVec xi = unit_vector(n, 0, j == 1);
    CVec ixi = {ComplexRational::i_unit() * xi[0]};
    CHECK(induced_vector_field(gen_xi_plus(xi)) == lie_bracket(induced_vector_field(gen_xi_minus(ixi)), fp));
  }
}

TEST_CASE("chart fields for n = 2 follow the same pattern") {
  int n = 2;
  VectorField e = induced_vector_field(gen_e(n));
  CHECK(e == field(2, {{0, {1, 0, 0, 0, 0}, -1},
                       {1, {0, 1, 0, 0, 0}, -1},
                       {2, {0, 0, 1, 0, 0}, -1},
                       {3, {0, 0, 0, 1, 0}, -1},
                       {4, {0, 0, 0, 0, 1}, -2}}));
  CHECK(induced_vector_field(gen_xi_minus(unit_vector(n, 1, false))) ==
        field(2, {{2, {0, 0, 0, 0, 0}, 1}, {4, {0, 0, 0, 1, 0}, -1}}));
  CHECK(induced_vector_field(gen_f_minus(n)) == Rational(-1) * VectorField::partial(2, 4));
}

TEST_CASE("chart map is a Lie algebra homomorphism") {
  for (int n : {1, 2}) {
    auto check = verify_homomorphism(n, su_basis(n));
    CHECK(check.pairs == static_cast<int>(su_basis(n).size() * (su_basis(n).size() + 1) / 2));
    CHECK(check.ok);
    for (const auto& f : check.failures) INFO(f);
  }
  // linearity
  std::mt19937_64 rng(41);
  auto basis = su_basis(2);
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = small_rational(rng), b = small_rational(rng);
    const auto& x = basis[rng() % basis.size()];
    const auto& y = basis[rng() % basis.size()];
    CHECK(induced_vector_field(ComplexRational(a) * materialize(x, 2) + ComplexRational(b) * materialize(y, 2)) ==
          a * induced_vector_field(materialize(x, 2)) + b * induced_vector_field(materialize(y, 2)));
  }
}

TEST_CASE("second chart action is affine") {
  LatticePresentation l = standard_lattice(1, 2);
  AffineMap a = psi_chart_action(parse_word("a"), l);
  QMatrix expected = QMatrix::Zero(3, 3);
  expected(0, 0) = Rational(4);
  expected(1, 1) = Rational(2);
  expected(2, 2) = Rational(2);
  CHECK(a.lin == expected);
  CHECK(is_zero_matrix(QMatrix(a.shift)));
  AffineMap id = psi_chart_action(parse_word("b1 b1^-1"), l);
  CHECK(id.lin == QMatrix::Identity(3, 3));
  CHECK(is_zero_matrix(QMatrix(id.shift)));
  AffineMap c = psi_chart_action(parse_word("c"), l);
  CHECK(c.lin == QMatrix::Identity(3, 3));
  ChartAffineData d = chart_affine_data(l);
  CHECK(c.shift(0) == -d.t);
  CHECK(d.t == Rational(2));
  REQUIRE(d.u.size() == 2);
  CHECK(d.u[0](0) == Rational(0));
  CHECK(d.u[0](1) == Rational(1));
  CHECK(d.v[0](0) == Rational(1));
  CHECK(d.v[0](1) == Rational(0));
}

TEST_CASE("first chart jets") {
  LatticePresentation l = standard_lattice(1, 2);
  CHECK(phi_chart_jet(parse_word("a"), l, 3) == scaling_jet(1, 3, Rational(2)));
  Jet c = phi_chart_jet(parse_word("c"), l, 1);
  CHECK(p0_part(c) == p0_part(identity_jet(1, 1)));
  CHECK(phi_chart_jet(parse_word("a b1 a^-1"), l, 4) == phi_chart_jet(parse_word("b1^2"), l, 4));
  Jet b1 = phi_chart_jet(parse_word("b1"), l, 2);
  // differential is [[I, u], [0, 1]] in the coordinates (x, x_{2n+1})
  P0Data p = p0_data(b1);
  CHECK(p.a == QMatrix::Identity(2, 2));
  CHECK(p.b == Rational(1));
  for (int n : {2, 3}) {
    LatticePresentation ln = standard_lattice(n, 3);
    CHECK(phi_chart_jet(parse_word("a"), ln, 2) == scaling_jet(n, 2, Rational(3)));
    for (int i = 1; i <= 2 * n; ++i) {
      std::string bi = "b" + std::to_string(i);
      CHECK(phi_chart_jet(parse_word("a " + bi + " a^-1"), ln, 3) == phi_chart_jet(parse_word(bi + "^3"), ln, 3));
    }
  }
}
