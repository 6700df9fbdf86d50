#include "sunjet/normalization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sunjet {

namespace {

VectorField as_field(const Jet& f) { return VectorField(f.n, f.comps); }

Jet add_field(Jet f, const VectorField& delta) {
  for (int i = 0; i < f.dim(); ++i) f.comps[i] += delta[i];
  return f;
}

// Weighted l1 norm c1 sum |x_i| + c2 |x_last|.
Rational weighted_norm(const QVector& x, const Rational& c1, const Rational& c2) {
  Rational s(0);
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) s += abs(x(i));
  return c1 * s + c2 * abs(x(x.size() - 1));
}

// Operator norm for the weighted l1 norm: the unit ball has extreme points
// +-e_i / c1 and +-e_last / c2.
Rational operator_norm(const QMatrix& s, const Rational& c1, const Rational& c2) {
  Rational best(0);
  Eigen::Index d = s.cols();
  for (Eigen::Index i = 0; i < d; ++i) {
    Rational w = i + 1 == d ? c2 : c1;
    Rational v = weighted_norm(QVector(s.col(i)), c1, c2) / w;
    if (v > best) best = v;
  }
  return best;
}

}  // namespace

std::vector<VectorField> level_operator(const Jet& g, const std::vector<VectorField>& basis) {
  int d = g.dim();
  std::vector<std::vector<Poly>> dg(d, std::vector<Poly>(d));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) dg[j][i] = g.comps[j].derivative(i);
  Substitution sub(g.comps, -1);
  std::vector<VectorField> out;
  out.reserve(basis.size());
  for (const auto& e : basis) {
    std::vector<Poly> comps(d, Poly(d));
    for (int i = 0; i < d; ++i) {
      if (e[i].is_zero()) continue;
      for (int j = 0; j < d; ++j)
        if (!dg[j][i].is_zero()) comps[j] += dg[j][i] * e[i];
      comps[i] -= sub.apply(e[i]);
    }
    out.emplace_back(g.n, std::move(comps));
  }
  return out;
}

VectorField level_residual(const Jet& f, const Jet& h, const Jet& g, int q) {
  Jet fq = project(f, q), hq = project(h, q), gq = project(g, q);
  Jet lhs = compose(fq, hq);
  Jet rhs = compose(hq, gq);
  return level_part(as_field(lhs) - as_field(rhs), q);
}

NormalizationResult sternberg_normalize(const Jet& f, const NormalizeOptions& options) {
  if (has_level_minus_one(f))
    throw std::invalid_argument("jet has a level -1 part; apply kill_level_minus_one first");
  if (!p0_invertible(f)) throw std::domain_error("singular linear data");
  NormalizationResult out{identity_jet(f.n, f.r), p0_part(f), {}};
  std::mt19937_64 rng(options.permutation_seed.value_or(0));
  for (int q = 1; q <= f.r; ++q) {
    std::vector<VectorField> basis = level_basis(f.n, q, q);
    if (options.permutation_seed) std::shuffle(basis.begin(), basis.end(), rng);
    std::vector<VectorField> images = level_operator(out.g, basis);
    VectorField residual = level_residual(f, out.h, out.g, q);

    int unknowns = static_cast<int>(basis.size());
    FieldSystem fs(unknowns);
    for (int b = 0; b < unknowns; ++b) fs.add_image(b, 0, images[b]);
    fs.add_rhs(0, -residual);
    SparseSystem sys = fs.build();
    LevelDiagnostics diag{q, unknowns, sys.rows(), sys.rank()};
    out.diagnostics.push_back(diag);
    if (diag.rank < unknowns || !sys.consistent())
      throw std::domain_error("singular level system at level " + std::to_string(q) + " (rank " +
                              std::to_string(diag.rank) + " of " + std::to_string(unknowns) + ")");
    auto sol = sys.solution();
    VectorField delta(f.n);
    for (int b = 0; b < unknowns; ++b)
      if (!(*sol)[b].is_zero()) delta += (*sol)[b] * basis[b];
    out.h = add_field(std::move(out.h), delta);
  }
  return out;
}

InvertibilityReport operator_invertibility(const Jet& l, int q) {
  if (!(p0_part(l) == l)) throw std::invalid_argument("operator_invertibility needs L in P_0");
  if (!p0_invertible(l)) throw std::invalid_argument("L must be invertible");
  std::vector<VectorField> basis = level_basis(l.n, q, q);
  int dim = static_cast<int>(basis.size());
  FieldSystem fs(dim);
  for (int b = 0; b < dim; ++b) fs.add_image(b, 0, act_on_field(l, basis[b]) - basis[b]);
  SparseSystem sys = fs.build();
  InvertibilityReport out;
  out.dimension = dim;
  out.rank = sys.rank();
  out.invertible = out.rank == dim;
  for (const auto& v : sys.kernel()) {
    VectorField k(l.n);
    for (int b = 0; b < dim; ++b)
      if (!v[b].is_zero()) k += v[b] * basis[b];
    out.kernel.push_back(std::move(k));
  }
  return out;
}

bool resonance_check(const std::vector<Rational>& eigenvalues, int max_degree) {
  int m = static_cast<int>(eigenvalues.size());
  bool resonant = false;
  // Products over multi-indices l_j >= 0 with l_0 + ... + l_{m-1} = total.
  std::function<void(int, int, const Rational&, int)> walk = [&](int j, int left, const Rational& prod,
                                                                  int total) {
    if (resonant) return;
    if (j == m - 1) {
      Rational p = prod * eigenvalues[j].pow(left);
      if (total >= 2)
        for (const auto& l : eigenvalues)
          if (l == p) resonant = true;
      return;
    }
    Rational p = prod;
    for (int e = 0; e <= left; ++e) {
      walk(j + 1, left - e, p, total);
      p *= eigenvalues[j];
    }
  };
  for (int total = 2; total <= max_degree && !resonant && m > 0; ++total)
    walk(0, total, Rational(1), total);
  return !resonant;
}

Jet reconstruct_from_low_order(const Jet& low, long k, long m, int r) {
  if (has_level_minus_one(low)) throw std::invalid_argument("low-order data has a level -1 part");
  if (!(p0_part(low) == identity_jet(low.n, low.r)))
    throw std::invalid_argument("low-order data must have F^(0) = identity");
  if (low.r > r) throw std::invalid_argument("more levels supplied than requested");
  Jet f = make_jet(low.n, r, low.comps);
  for (int q = low.r + 1; q <= r; ++q) {
    Rational denom = Rational(k).pow(q) - Rational(m);
    if (denom.is_zero())
      throw std::domain_error("singular level equation at level " + std::to_string(q) +
                              " (k^q = m); supply this level");
    Jet power = jet_power(project(f, q), static_cast<int>(m));
    VectorField phi = level_part(as_field(power), q);
    f = add_field(std::move(f), denom.inverse() * phi);
  }
  return f;
}

ContractionCertificate contraction_certificate(long k, const Rational& lambda, const Rational& eps,
                                               const std::vector<QVector>& u) {
  Rational kinv = Rational(1, k);
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (!(kinv < lambda && lambda < Rational(1))) throw std::invalid_argument("need 1/k < lambda < 1");
  if (!(Rational(0) < eps && eps < kinv * kinv)) throw std::invalid_argument("need 0 < eps < 1/k^2");
  if (u.empty()) throw std::invalid_argument("no generator vectors");
  Eigen::Index dim = u.front().size() + 1;

  struct Gen {
    std::string name;
    long m;
    QVector u;
  };
  std::vector<Gen> gens;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].size() + 1 != dim) throw std::invalid_argument("generator vectors differ in length");
    for (long m : {k, k * k}) gens.push_back({"b" + std::to_string(i + 1), m, u[i]});
  }
  gens.push_back({"c", k * k, QVector::Zero(dim - 1)});

  ContractionCertificate out;
  out.k = k;
  out.lambda = lambda;
  out.eps = eps;
  out.u = u;
  out.c1 = Rational(1);
  // c2 > m^2 ||u||_1 c1 / ((1 - eps) m - lambda) for every generator.
  Rational need(0);
  for (const auto& g : gens) {
    Rational slack = (Rational(1) - eps) * Rational(g.m) - lambda;
    if (slack.sign() <= 0) throw std::domain_error("infeasible constants: (1 - eps) m <= lambda");
    Rational norm(0);
    for (Eigen::Index i = 0; i < g.u.size(); ++i) norm += abs(g.u(i));
    Rational v = Rational(g.m * g.m) * norm / slack;
    if (v > need) need = v;
  }
  out.c2 = need + Rational(1);

  out.ok = true;
  for (const auto& g : gens) {
    NormCheck c;
    c.generator = g.name;
    c.m = g.m;
    for (Eigen::Index i = 0; i < g.u.size(); ++i) c.u_norm += abs(g.u(i));
    c.margin = -Rational(g.m * g.m) * c.u_norm * out.c1 +
               ((Rational(1) - eps) * Rational(g.m) - lambda) * out.c2;
    // sum_{j<m} A^j = [[m I, m(m-1)/2 u], [0, m]]
    QMatrix s = QMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) s(i, i) = Rational(g.m);
    for (Eigen::Index i = 0; i + 1 < dim; ++i) s(i, dim - 1) = Rational(g.m * (g.m - 1) / 2) * g.u(i);
    c.operator_norm = operator_norm(s, out.c1, out.c2);
    auto sinv = inverse<Rational>(s);
    if (!sinv) throw std::logic_error("sum of powers is singular");
    c.co_norm = operator_norm(*sinv, out.c1, out.c2).inverse();
    c.bound = eps * Rational(g.m) + lambda;
    c.ok = c.margin.sign() > 0 && c.operator_norm > c.bound && c.co_norm > c.bound;
    out.ok = out.ok && c.ok;
    out.checks.push_back(std::move(c));
  }
  return out;
}

bool germ_constant_check(long k, long m, int r0, const Rational& c) {
  return Rational(m) * c.pow(r0 + 1) < Rational(k).pow(r0 - 2);
}

namespace {

Jet draw_perturbation(int n, long k, int r, std::mt19937_64& rng) {
  int d = 2 * n + 1;
  Jet base = scaling_jet(n, r, Rational(k));
  std::vector<Poly> comps = base.comps;
  bool minus_one = rng() % 2 == 0;
  int count = 3 + static_cast<int>(rng() % static_cast<unsigned>(r + 3));
  std::vector<std::vector<VectorField>> bases(r + 1);
  for (int t = 0; t < count; ++t) {
    int lo = minus_one ? -1 : 0;
    int q = lo + static_cast<int>(rng() % static_cast<unsigned>(r - lo + 1));
    Rational c = rng() % 2 ? Rational(1, 10) : Rational(-1, 10);
    if (q == -1) {
      int j = static_cast<int>(rng() % static_cast<unsigned>(d - 1));
      comps[d - 1] += Poly::variable(d, j) * c;
      continue;
    }
    if (bases[q].empty()) bases[q] = level_basis(n, q, q);
    const VectorField& e = bases[q][rng() % bases[q].size()];
    bool touches_u = false;
    for (int i = 0; i < d - 1; ++i)
      touches_u = touches_u || (!e[i].is_zero() && e[i] == Poly::variable(d, d - 1));
    if (minus_one && touches_u) continue;
    for (int i = 0; i < d; ++i)
      if (!e[i].is_zero()) comps[i] += e[i] * c;
  }
  return make_jet(n, r, std::move(comps));
}

// Level -1 part removable and every level system in [1, r] nonsingular.
bool normalizable(const Jet& f) {
  try {
    Jet g = has_level_minus_one(f) ? kill_level_minus_one(f).result : f;
    Jet l = p0_part(g);
    for (int q = 1; q <= f.r; ++q)
      if (!operator_invertibility(l, q).invertible) return false;
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

}  // namespace

Jet random_perturbation(int n, long k, int r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Jet f = draw_perturbation(n, k, r, rng);
    if (normalizable(f)) return f;
  }
}

}  // namespace sunjet
