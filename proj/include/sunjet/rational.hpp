#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace sunjet {

// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p/q" or "p".
  static Rational parse(const std::string& s);

  const mpq_class& value() const { return q_; }
  // Canonical "p/q", with "/1" kept for integers.
  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  long to_long() const;
  Rational inverse() const;
  Rational pow(int e) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.q_ = -q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational abs(const Rational& a);
std::ostream& operator<<(std::ostream& os, const Rational& r);

// Element of Q(i), stored as real and imaginary rational parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(long v) : re(v) {}
  ComplexRational(Rational r) : re(std::move(r)) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexRational i_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  ComplexRational& operator+=(const ComplexRational& o) { re += o.re; im += o.im; return *this; }
  ComplexRational& operator-=(const ComplexRational& o) { re -= o.re; im -= o.im; return *this; }
  ComplexRational& operator*=(const ComplexRational& o);
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  ComplexRational operator-() const { return {-re, -im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline bool is_zero(const ComplexRational& a) { return a.is_zero(); }

}  // namespace sunjet

namespace Eigen {

template <>
struct NumTraits<sunjet::Rational> : GenericNumTraits<sunjet::Rational> {
  typedef sunjet::Rational Real;
  typedef sunjet::Rational NonInteger;
  typedef sunjet::Rational Nested;
  typedef sunjet::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 20
  };
  static inline int digits10() { return 0; }
};

// IsComplex stays 0 so Eigen never reaches for std::conj on this type.
template <>
struct NumTraits<sunjet::ComplexRational> : GenericNumTraits<sunjet::ComplexRational> {
  typedef sunjet::ComplexRational Real;
  typedef sunjet::ComplexRational NonInteger;
  typedef sunjet::ComplexRational Nested;
  typedef sunjet::ComplexRational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 60
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
