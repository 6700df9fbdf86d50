#include "helpers.hpp"

using namespace testing_helpers;

TEST_CASE("rational parsing and canonical form") {
  CHECK(q("6/4").str() == "3/2");
  CHECK(q("-3").str() == "-3/1");
  CHECK(q("0/7").is_zero());
  CHECK(Rational(2, -4) == q("-1/2"));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK(q("2/3").pow(-2) == q("9/4"));
}

TEST_CASE("complex rationals") {
  ComplexRational z(q("1/2"), q("-3"));
  ComplexRational w(2, 1);
  CHECK((z * w) / w == z);
  CHECK(z.norm2() == q("37/4"));
  CHECK((z * z.conj()).im.is_zero());
}

TEST_CASE("monomial weighted degree counts the last variable twice") {
  Monomial m({1, 0, 2});
  CHECK(m.weighted_degree() == 5);
  CHECK(m.degree() == 3);
  CHECK(Monomial({0, 1, 0}) < Monomial({0, 0, 1}));
  CHECK(m.lowered(2) == Monomial({1, 0, 1}));
}

TEST_CASE("polynomial arithmetic") {
  Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), t = Poly::variable(3, 2);
  Poly p = x * x + t;
  CHECK(p.derivative(0) == Rational(2) * x);
  CHECK(p.derivative(2) == Poly::constant(3, 1));
  CHECK(p.min_wdeg() == 2);
  CHECK(multiply(p, p, 3).is_zero());
  CHECK(multiply(p, p, 4) == x * x * x * x + Rational(2) * x * x * t + t * t);
  CHECK(substitute(p, {y, x, x * y}) == y * y + x * y);
  CHECK(p.evaluate({Rational(3), Rational(0), Rational(-1)}) == Rational(8));
  CHECK(p.str().find("x1") != std::string::npos);
}

TEST_CASE("property: ring axioms and truncated products on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = random_poly(3, 3, rng), b = random_poly(3, 3, rng), c = random_poly(3, 3, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    int cap = static_cast<int>(rng() % 8);
    CHECK(multiply(a, b, cap) == (a * b).wdeg_range(0, cap));
    // product rule
    CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
  }
}

TEST_CASE("dense exact linear algebra") {
  QMatrix a(3, 3);
  a << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6), Rational(1), Rational(0),
      Rational(1);
  CHECK(rank(a) == 2);
  QMatrix k = kernel(a);
  REQUIRE(k.cols() == 1);
  CHECK(is_zero_matrix(QMatrix(a * k)));
  CHECK(determinant(a).is_zero());
  CHECK_FALSE(inverse(a).has_value());
  QVector b(3);
  b << Rational(1), Rational(2), Rational(0);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  b(1) = Rational(3);
  CHECK_FALSE(solve(a, b).has_value());

  QMatrix m(2, 2);
  m << q("1/2"), Rational(1), Rational(0), q("1/4");
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == QMatrix::Identity(2, 2));
  CHECK(determinant(m) == q("1/8"));
}

TEST_CASE("sparse system rank, consistency and kernel") {
  SparseSystem s(3);
  s.add_row({{0, Rational(1)}, {1, Rational(1)}}, Rational(2));
  s.add_row({{1, Rational(1)}, {2, Rational(-1)}}, Rational(0));
  s.add_row({{0, Rational(2)}, {1, Rational(3)}, {2, Rational(-1)}}, Rational(4));
  CHECK(s.rows() == 3);
  CHECK(s.rank() == 2);
  CHECK(s.consistent());
  auto sol = s.solution();
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] + (*sol)[1] == Rational(2));
  CHECK((*sol)[1] == (*sol)[2]);
  auto ker = s.kernel();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] + ker[0][1] == Rational(0));
  s.add_row({{0, Rational(1)}, {1, Rational(1)}}, Rational(5));
  CHECK_FALSE(s.consistent());
  CHECK_FALSE(s.solution().has_value());
}
