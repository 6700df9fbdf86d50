#include "sunjet/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sunjet {

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<size_t>(kMaxVars))
    throw std::invalid_argument("too many variables for a monomial");
  dim_ = static_cast<std::uint8_t>(exponents.size());
  int w = 0;
  for (int i = 0; i < dim_; ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    w += weight(i) * exponents[i];
    if (w > kMaxDegree) throw std::overflow_error("monomial degree too large");
    key_ |= static_cast<std::uint64_t>(exponents[i]) << shift(i);
  }
  key_ |= static_cast<std::uint64_t>(w) << 56;
}

Monomial Monomial::one(int dim) { return Monomial(std::vector<int>(dim, 0)); }

Monomial Monomial::var(int dim, int i, int power) {
  std::vector<int> e(dim, 0);
  e.at(i) = power;
  return Monomial(e);
}

std::vector<int> Monomial::exponents() const {
  std::vector<int> e(dim_);
  for (int i = 0; i < dim_; ++i) e[i] = exponent(i);
  return e;
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < dim_; ++i) d += exponent(i);
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (weighted_degree() + o.weighted_degree() > kMaxDegree)
    throw std::overflow_error("monomial degree too large");
  Monomial m;
  m.dim_ = dim_;
  m.key_ = key_ + o.key_;  // no byte overflows: each exponent <= weighted degree
  return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (int i = 0; i < dim_; ++i)
    if (exponent(i) < o.exponent(i)) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!divisible_by(o)) throw std::invalid_argument("monomial not divisible");
  Monomial m;
  m.dim_ = dim_;
  m.key_ = key_ - o.key_;
  return m;
}

Monomial Monomial::lowered(int i) const {
  if (exponent(i) == 0) throw std::invalid_argument("exponent already zero");
  Monomial m;
  m.dim_ = dim_;
  m.key_ = key_ - (std::uint64_t{1} << shift(i)) - (static_cast<std::uint64_t>(weight(i)) << 56);
  return m;
}

int weighted_degree(const Monomial& m) { return m.weighted_degree(); }

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial::one(nvars), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  p.terms_.emplace_back(Monomial::var(nvars, i), Rational(1));
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.dim());
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Poly p(nvars);
  for (auto& t : terms) {
    if (t.first.dim() != nvars) throw std::invalid_argument("monomial dimension mismatch");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

int Poly::min_wdeg() const { return terms_.empty() ? -1 : terms_.front().first.weighted_degree(); }
int Poly::max_wdeg() const { return terms_.empty() ? -1 : terms_.back().first.weighted_degree(); }

namespace {

void check_dims(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial dimension mismatch");
}

std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                              bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      Rational v = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    nvars_ = o.nvars_;
    terms_ = o.terms_;
    return *this;
  }
  check_dims(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) nvars_ = o.nvars_;
  check_dims(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

Poly multiply(const Poly& a, const Poly& b, int cap) {
  if (a.is_zero() || b.is_zero()) return Poly(a.is_zero() ? b.nvars() : a.nvars());
  check_dims(a, b);
  if (a.size() == 1 || b.size() == 1) {
    const Poly& single = a.size() == 1 ? a : b;
    const Poly& other = a.size() == 1 ? b : a;
    const auto& [m, c] = single.terms().front();
    std::vector<Poly::Term> out;
    out.reserve(other.size());
    for (const auto& [m2, c2] : other.terms()) {
      if (cap >= 0 && m.weighted_degree() + m2.weighted_degree() > cap) break;
      out.emplace_back(m * m2, c * c2);
    }
    return Poly::from_terms(a.nvars(), std::move(out));
  }
  std::unordered_map<std::uint64_t, std::pair<Monomial, Rational>> acc;
  acc.reserve(a.size() * b.size());
  mpq_class tmp;
  for (const auto& [ma, ca] : a.terms()) {
    int wa = ma.weighted_degree();
    for (const auto& [mb, cb] : b.terms()) {
      if (cap >= 0 && wa + mb.weighted_degree() > cap) break;  // terms sorted by wdeg
      Monomial m = ma * mb;
      auto [it, fresh] = acc.try_emplace(m.key(), m, Rational(0));
      mpq_mul(tmp.get_mpq_t(), ca.value().get_mpq_t(), cb.value().get_mpq_t());
      it->second.second += Rational(tmp);
    }
  }
  std::vector<Poly::Term> out;
  out.reserve(acc.size());
  for (auto& [k, v] : acc)
    if (!v.second.is_zero()) out.push_back(std::move(v));
  return Poly::from_terms(a.nvars(), std::move(out));
}

Poly power(const Poly& a, int e, int cap) {
  Poly result = Poly::constant(a.nvars(), Rational(1));
  Poly base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base, cap);
    e >>= 1;
    if (e) base = multiply(base, base, cap);
  }
  return result;
}

Poly Poly::derivative(int i) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(i);
    if (e == 0) continue;
    out.emplace_back(m.lowered(i), c * Rational(e));
  }
  return from_terms(nvars_, std::move(out));
}

Poly Poly::wdeg_range(int lo, int hi) const {
  Poly p(nvars_);
  for (const auto& t : terms_) {
    int w = t.first.weighted_degree();
    if (w >= lo && w <= hi) p.terms_.push_back(t);
  }
  return p;
}

Rational Poly::evaluate(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluation point size");
  Rational s(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i) {
      int e = m.exponent(i);
      if (e) v *= x[i].pow(e);
    }
    s += v;
  }
  return s;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool is_one = m.degree() == 0;
    bool unit = a == Rational(1);
    if (!unit || is_one) os << (a.is_integer() ? a.value().get_num().get_str() : a.str());
    bool need_star = !unit || is_one;
    for (int i = 0; i < nvars_; ++i) {
      int e = m.exponent(i);
      if (!e) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

Substitution::Substitution(std::vector<Poly> images, int cap)
    : images_(std::move(images)), cap_(cap), out_vars_(0) {
  for (const auto& p : images_) out_vars_ = std::max(out_vars_, p.nvars());
}

const Poly& Substitution::image(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  Poly result;
  int first = -1;
  for (int i = 0; i < m.dim(); ++i)
    if (m.exponent(i) > 0) {
      first = i;
      break;
    }
  if (first < 0) {
    result = Poly::constant(out_vars_, Rational(1));
  } else {
    Poly rest = image(m.lowered(first));  // copy: the cache may rehash below
    result = multiply(rest, images_.at(first), cap_);
  }
  return cache_.emplace(m, std::move(result)).first->second;
}

Poly Substitution::apply(const Poly& p) {
  if (p.nvars() != static_cast<int>(images_.size()) && !p.is_zero())
    throw std::invalid_argument("substitution arity mismatch");
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    const Poly& img = image(m);
    for (const auto& [m2, c2] : img.terms()) out.emplace_back(m2, c * c2);
  }
  return Poly::from_terms(out_vars_, std::move(out));
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, int cap) {
  Substitution s(images, cap);
  return s.apply(p);
}

ComplexPoly ComplexPoly::constant(int nvars, const ComplexRational& c) {
  return {Poly::constant(nvars, c.re), Poly::constant(nvars, c.im)};
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexPoly operator*(const ComplexRational& c, const ComplexPoly& p) {
  return {p.re * c.re - p.im * c.im, p.re * c.im + p.im * c.re};
}

ComplexPoly ComplexPoly::wdeg_range(int lo, int hi) const {
  return {re.wdeg_range(lo, hi), im.wdeg_range(lo, hi)};
}

ComplexPoly multiply(const ComplexPoly& a, const ComplexPoly& b, int cap) {
  return {multiply(a.re, b.re, cap) - multiply(a.im, b.im, cap),
          multiply(a.re, b.im, cap) + multiply(a.im, b.re, cap)};
}

}  // namespace sunjet
