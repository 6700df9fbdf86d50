#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sunjet/rational.hpp"

namespace sunjet {

// Exponent vector packed into one word: the top byte holds the weighted
// degree, then one byte per variable. Ordering on the packed key is weighted
// degree first, then lexicographic with x1 most significant.
// The last variable carries weight 2; every other variable weight 1.
class Monomial {
 public:
  static constexpr int kMaxVars = 7;
  static constexpr int kMaxDegree = 255;

  Monomial() = default;
  explicit Monomial(const std::vector<int>& exponents);
  static Monomial one(int dim);
  static Monomial var(int dim, int i, int power = 1);

  int dim() const { return dim_; }
  int exponent(int i) const { return static_cast<int>((key_ >> shift(i)) & 0xff); }
  std::vector<int> exponents() const;
  int weighted_degree() const { return static_cast<int>(key_ >> 56); }
  int degree() const;
  std::uint64_t key() const { return key_; }

  Monomial operator*(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  // Lowers the exponent of variable i by one; exponent must be positive.
  Monomial lowered(int i) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.key_ <=> b.key_;
  }

 private:
  static int shift(int i) { return 8 * (6 - i); }
  int weight(int i) const { return i == dim_ - 1 ? 2 : 1; }

  std::uint64_t key_ = 0;
  std::uint8_t dim_ = 0;
};

int weighted_degree(const Monomial& m);

// Sparse polynomial in nvars variables, terms sorted by monomial, no zeros.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);
  static Poly term(const Monomial& m, const Rational& c);
  // Sorts, merges duplicates and drops zero coefficients.
  static Poly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Rational coeff(const Monomial& m) const;
  int min_wdeg() const;  // -1 for the zero polynomial
  int max_wdeg() const;  // -1 for the zero polynomial

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly derivative(int i) const;
  // Terms whose weighted degree lies in [lo, hi].
  Poly wdeg_range(int lo, int hi) const;
  Rational evaluate(const std::vector<Rational>& x) const;
  std::string str() const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Product keeping only terms of weighted degree <= cap (cap < 0: keep all).
// Dropping early is safe because weighted degrees only add.
Poly multiply(const Poly& a, const Poly& b, int cap = -1);
Poly power(const Poly& a, int e, int cap = -1);

// Evaluates polynomials at fixed images of the variables, caching the image
// of every monomial it meets. Terms above the cap are dropped.
class Substitution {
 public:
  Substitution(std::vector<Poly> images, int cap);
  const Poly& image(const Monomial& m);
  Poly apply(const Poly& p);
  int cap() const { return cap_; }

 private:
  std::vector<Poly> images_;
  int cap_;
  int out_vars_;
  std::map<Monomial, Poly> cache_;
};

Poly substitute(const Poly& p, const std::vector<Poly>& images, int cap = -1);

// Polynomial with Gaussian-rational coefficients, as a real/imaginary pair.
struct ComplexPoly {
  Poly re;
  Poly im;

  ComplexPoly() = default;
  explicit ComplexPoly(int nvars) : re(nvars), im(nvars) {}
  ComplexPoly(Poly r, Poly i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexPoly constant(int nvars, const ComplexRational& c);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexPoly& operator+=(const ComplexPoly& o);
  ComplexPoly& operator-=(const ComplexPoly& o);
  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(const ComplexRational& c, const ComplexPoly& p);
  ComplexPoly wdeg_range(int lo, int hi) const;
};

ComplexPoly multiply(const ComplexPoly& a, const ComplexPoly& b, int cap = -1);

}  // namespace sunjet
