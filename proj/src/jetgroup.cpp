#include "sunjet/jetgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace sunjet {

namespace {

int shift_of(int dim, int i) { return i == dim - 1 ? 2 : 1; }

std::vector<Poly> range_of(const std::vector<Poly>& comps, int lo, int hi) {
  int d = static_cast<int>(comps.size());
  std::vector<Poly> out;
  out.reserve(d);
  for (int i = 0; i < d; ++i) out.push_back(comps[i].wdeg_range(lo + shift_of(d, i), hi + shift_of(d, i)));
  return out;
}

void require_same_n(const Jet& f, const Jet& g) {
  if (f.n != g.n) throw std::invalid_argument("jet dimension mismatch");
}

void require_no_level_minus_one(const Jet& f) {
  if (has_level_minus_one(f))
    throw std::invalid_argument("jet has a level -1 part; apply kill_level_minus_one first");
}

Poly linear_form(int d, const std::vector<Rational>& coeffs) {
  std::vector<Poly::Term> t;
  for (size_t j = 0; j < coeffs.size(); ++j)
    if (!coeffs[j].is_zero()) t.emplace_back(Monomial::var(d, static_cast<int>(j)), coeffs[j]);
  return Poly::from_terms(d, std::move(t));
}

}  // namespace

Jet make_jet(int n, int r, std::vector<Poly> comps) {
  int d = 2 * n + 1;
  if (n < 1 || n > 3) throw std::invalid_argument("n must be in 1..3");
  if (r < 0) throw std::invalid_argument("truncation level must be >= 0");
  if (static_cast<int>(comps.size()) != d) throw std::invalid_argument("jet needs 2n+1 components");
  for (int i = 0; i < d; ++i) {
    if (comps[i].is_zero()) comps[i] = Poly(d);
    if (comps[i].nvars() != d) throw std::invalid_argument("jet component dimension mismatch");
    if (comps[i].min_wdeg() == 0) throw std::invalid_argument("jet does not fix the origin");
    comps[i] = comps[i].wdeg_range(1, r + shift_of(d, i));
  }
  return Jet{n, r, std::move(comps)};
}

Jet identity_jet(int n, int r) {
  int d = 2 * n + 1;
  std::vector<Poly> c;
  for (int i = 0; i < d; ++i) c.push_back(Poly::variable(d, i));
  return make_jet(n, r, std::move(c));
}

Jet scaling_jet(int n, int r, const Rational& k) { return linear_jet(n, r, scaling_matrix(n, k)); }

Jet linear_jet(int n, int r, const QMatrix& l) {
  int d = 2 * n + 1;
  if (l.rows() != d || l.cols() != d) throw std::invalid_argument("linear map size mismatch");
  std::vector<Poly> c;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> row(d);
    for (int j = 0; j < d; ++j) row[j] = l(i, j);
    c.push_back(linear_form(d, row));
  }
  return make_jet(n, r, std::move(c));
}

std::vector<Poly> level_components(const Jet& f, int lo, int hi) { return range_of(f.comps, lo, hi); }

Jet with_levels(const Jet& f, int lo, int hi) { return Jet{f.n, f.r, range_of(f.comps, lo, hi)}; }

bool has_level_minus_one(const Jet& f) { return f.comps.back().min_wdeg() == 1; }

std::map<int, Jet> decompose_levels(const Jet& f) {
  std::map<int, Jet> out;
  for (int q = -1; q <= f.r; ++q) {
    Jet part = with_levels(f, q, q);
    bool zero = true;
    for (const auto& c : part.comps) zero = zero && c.is_zero();
    if (!zero) out.emplace(q, std::move(part));
  }
  return out;
}

Jet p0_part(const Jet& f) { return with_levels(f, 0, 0); }

P0Data p0_data(const Jet& f) {
  int d = f.dim();
  P0Data out;
  out.a = QMatrix::Zero(d - 1, d - 1);
  for (int i = 0; i < d - 1; ++i)
    for (int j = 0; j < d - 1; ++j) out.a(i, j) = f.comps[i].coeff(Monomial::var(d, j));
  out.b = f.comps[d - 1].coeff(Monomial::var(d, d - 1));
  std::vector<Poly::Term> q;
  for (const auto& [m, c] : f.comps[d - 1].terms())
    if (m.weighted_degree() == 2 && m.exponent(d - 1) == 0) q.emplace_back(m, c);
  out.q = Poly::from_terms(d, std::move(q));
  return out;
}

bool p0_invertible(const Jet& f) {
  auto p = p0_data(f);
  return !p.b.is_zero() && inverse<Rational>(p.a).has_value();
}

Jet p0_inverse(const Jet& f) {
  int d = f.dim();
  auto p = p0_data(f);
  auto ainv = inverse<Rational>(p.a);
  if (!ainv || p.b.is_zero()) throw std::domain_error("singular linear data");
  std::vector<Poly> images;
  for (int i = 0; i < d - 1; ++i) {
    std::vector<Rational> row(d);
    for (int j = 0; j < d - 1; ++j) row[j] = (*ainv)(i, j);
    images.push_back(linear_form(d, row));
  }
  Poly q_back = substitute(p.q, [&] {
    auto im = images;
    im.push_back(Poly(d));
    return im;
  }());
  images.push_back((Poly::variable(d, d - 1) - q_back) * p.b.inverse());
  return make_jet(f.n, f.r, std::move(images));
}

Jet compose(const Jet& f, const Jet& g) {
  require_same_n(f, g);
  require_no_level_minus_one(f);
  require_no_level_minus_one(g);
  int r = std::min(f.r, g.r);
  int d = f.dim();
  Substitution sub(range_of(g.comps, -1, r), r + 2);
  std::vector<Poly> out;
  for (int i = 0; i < d; ++i) {
    Poly fi = f.comps[i].wdeg_range(1, r + shift_of(d, i));
    out.push_back(sub.apply(fi).wdeg_range(1, r + shift_of(d, i)));
  }
  return Jet{f.n, r, std::move(out)};
}

Jet invert(const Jet& f) {
  require_no_level_minus_one(f);
  Jet g0 = p0_inverse(f);
  Jet k = compose(f, g0);  // identity at level 0
  Jet h = identity_jet(f.n, f.r);
  for (int q = 1; q <= f.r; ++q) {
    Jet kh = compose(k, h);
    auto err = range_of(kh.comps, q, q);
    for (int i = 0; i < f.dim(); ++i) h.comps[i] -= err[i];
  }
  return compose(g0, h);
}

Jet project(const Jet& f, int r) {
  require_no_level_minus_one(f);
  if (r > f.r) throw std::invalid_argument("cannot project to a higher level");
  return make_jet(f.n, r, f.comps);
}

Jet jet_power(const Jet& f, int m) {
  if (m < 0) return jet_power(invert(f), -m);
  Jet result = identity_jet(f.n, f.r);
  Jet base = f;
  while (m > 0) {
    if (m & 1) result = compose(result, base);
    m >>= 1;
    if (m) base = compose(base, base);
  }
  return result;
}

KillResult kill_level_minus_one(const Jet& f) {
  int d = f.dim();
  auto p = p0_data(f);
  std::vector<Rational> w(d - 1);
  for (int j = 0; j < d - 1; ++j) w[j] = f.comps[d - 1].coeff(Monomial::var(d, j));
  // Linearized condition (A^T - b I) v = -w.
  QMatrix m = p.a.transpose() - p.b * QMatrix::Identity(d - 1, d - 1);
  QVector rhs(d - 1);
  for (int j = 0; j < d - 1; ++j) rhs(j) = -w[j];
  if (rank<Rational>(m) < d - 1) throw std::domain_error("singular solve: linear data too far from I(k)");
  auto sol = solve<Rational>(m, rhs);
  std::vector<Rational> v(d - 1);
  for (int j = 0; j < d - 1; ++j) v[j] = (*sol)(j);

  Poly vx = linear_form(d, v);
  std::vector<Poly> linv;
  for (int i = 0; i < d - 1; ++i) linv.push_back(Poly::variable(d, i));
  linv.push_back(Poly::variable(d, d - 1) - vx);
  std::vector<Poly> conj;
  for (int i = 0; i < d; ++i) conj.push_back(substitute(f.comps[i], linv));
  Poly last = conj[d - 1];
  for (int j = 0; j < d - 1; ++j)
    if (!v[j].is_zero()) last += conj[j] * v[j];
  conj[d - 1] = last;
  for (auto& c : conj) c = c.wdeg_range(1, Monomial::kMaxDegree);
  Jet result = make_jet(f.n, f.r, std::move(conj));
  if (has_level_minus_one(result))
    throw std::domain_error(
        "level -1 part survives the linear solve (quadratic term <v,U>v is nonzero)");

  std::vector<Poly> lc;
  for (int i = 0; i < d - 1; ++i) lc.push_back(Poly::variable(d, i));
  lc.push_back(Poly::variable(d, d - 1) + vx);
  return {make_jet(f.n, f.r, std::move(lc)), std::move(v), std::move(result)};
}

Jet jet_exp(const VectorField& dfield, int r) {
  int n = dfield.n();
  int d = dfield.dim();
  for (const auto& [level, part] : grade_decompose(dfield))
    if (level < 1 || level > r) throw std::invalid_argument("derivation levels must lie in [1, r]");
  std::vector<Poly> out;
  for (int i = 0; i < d; ++i) {
    int cap = r + shift_of(d, i);
    Poly term = Poly::variable(d, i);
    Poly sum = term;
    for (int j = 1; !term.is_zero(); ++j) {
      term = apply_derivation(dfield, term).wdeg_range(0, cap) * Rational(1, j);
      sum += term;
    }
    out.push_back(sum);
  }
  return make_jet(n, r, std::move(out));
}

VectorField jet_log(const Jet& f) {
  require_no_level_minus_one(f);
  if (!(p0_part(f) == p0_part(identity_jet(f.n, f.r))))
    throw std::invalid_argument("jet_log needs F^(0) = identity");
  VectorField dfield(f.n);
  for (int q = 1; q <= f.r; ++q) {
    Jet e = jet_exp(dfield, f.r);
    auto target = range_of(f.comps, q, q);
    auto have = range_of(e.comps, q, q);
    std::vector<Poly> delta;
    for (int i = 0; i < f.dim(); ++i) delta.push_back(target[i] - have[i]);
    dfield += VectorField(f.n, std::move(delta));
  }
  return dfield;
}

VectorField act_on_field(const Jet& f, const VectorField& x) {
  if (!(p0_part(f) == f)) throw std::invalid_argument("act_on_field needs F in P_0");
  if (f.n != x.n()) throw std::invalid_argument("dimension mismatch");
  int d = f.dim();
  Jet finv = p0_inverse(f);
  Substitution sub(finv.comps, -1);
  std::vector<Poly> out;
  for (int i = 0; i < d; ++i) {
    Poly s(d);
    for (int j = 0; j < d; ++j)
      if (!x[j].is_zero()) s += f.comps[i].derivative(j) * x[j];
    out.push_back(sub.apply(s));
  }
  return VectorField(f.n, std::move(out));
}

VectorField pushforward(const Jet& f, const VectorField& x, int truncation) {
  if (p0_part(f) == f) return level_range(act_on_field(f, x), -2, truncation);
  require_no_level_minus_one(f);
  if (f.r < truncation + 2) throw std::invalid_argument("jet order too low for this truncation");
  int d = f.dim();
  Jet finv = invert(f);
  Substitution sub(finv.comps, truncation + 2);
  std::vector<Poly> out;
  VectorField xt = level_range(x, -2, truncation);
  for (int i = 0; i < d; ++i) {
    int cap = truncation + shift_of(d, i);
    Poly s(d);
    for (int j = 0; j < d; ++j)
      if (!xt[j].is_zero()) s += multiply(f.comps[i].derivative(j), xt[j], cap);
    out.push_back(sub.apply(s).wdeg_range(0, cap));
  }
  return VectorField(f.n, std::move(out));
}

}  // namespace sunjet
