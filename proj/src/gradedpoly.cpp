#include "sunjet/gradedpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sunjet {

VectorField::VectorField(int n) : n_(n), comps_(2 * n + 1, Poly(2 * n + 1)) {}

VectorField::VectorField(int n, std::vector<Poly> components)
    : n_(n), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != 2 * n + 1)
    throw std::invalid_argument("vector field needs 2n+1 components");
  for (auto& c : comps_) {
    if (c.is_zero()) c = Poly(2 * n + 1);
    if (c.nvars() != 2 * n + 1) throw std::invalid_argument("component dimension mismatch");
  }
}

VectorField VectorField::partial(int n, int i) {
  return single(n, i, Poly::constant(2 * n + 1, Rational(1)));
}

VectorField VectorField::single(int n, int component, const Poly& p) {
  VectorField v(n);
  v.comps_.at(component) = p.is_zero() ? Poly(2 * n + 1) : p;
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (o.n_ != n_) throw std::invalid_argument("vector field dimension mismatch");
  for (size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (o.n_ != n_) throw std::invalid_argument("vector field dimension mismatch");
  for (size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

VectorField VectorField::operator-() const {
  VectorField v = *this;
  for (auto& p : v.comps_) p = -p;
  return v;
}

std::string VectorField::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    for (const auto& [m, c] : comps_[i].terms()) {
      std::string t = Poly::term(m, abs(c)).str();
      if (t == "1") t = "";
      else t += "*";
      os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ")) << t << "d"
         << (i + 1);
      first = false;
    }
  }
  return first ? "0" : os.str();
}

Poly apply_derivation(const VectorField& x, const Poly& f) {
  Poly out(x.dim());
  for (int j = 0; j < x.dim(); ++j) {
    if (x[j].is_zero()) continue;
    Poly d = f.derivative(j);
    if (!d.is_zero()) out += x[j] * d;
  }
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.n() != y.n()) throw std::invalid_argument("bracket dimension mismatch");
  std::vector<Poly> comps;
  comps.reserve(x.dim());
  for (int i = 0; i < x.dim(); ++i) comps.push_back(apply_derivation(y, x[i]) - apply_derivation(x, y[i]));
  return VectorField(x.n(), std::move(comps));
}

std::map<int, VectorField> grade_decompose(const VectorField& x) {
  std::map<int, std::vector<std::vector<Poly::Term>>> parts;
  for (int i = 0; i < x.dim(); ++i)
    for (const auto& t : x[i].terms()) {
      auto& slot = parts[field_term_level(x.dim(), i, t.first)];
      if (slot.empty()) slot.resize(x.dim());
      slot[i].push_back(t);
    }
  std::map<int, VectorField> out;
  for (auto& [level, comps] : parts) {
    std::vector<Poly> polys;
    for (auto& c : comps) polys.push_back(Poly::from_terms(x.dim(), std::move(c)));
    out.emplace(level, VectorField(x.n(), std::move(polys)));
  }
  return out;
}

VectorField level_range(const VectorField& x, int lo, int hi) {
  std::vector<Poly> comps;
  for (int i = 0; i < x.dim(); ++i) {
    int shift = i == x.dim() - 1 ? 2 : 1;
    comps.push_back(x[i].wdeg_range(lo + shift, hi + shift));
  }
  return VectorField(x.n(), std::move(comps));
}

VectorField level_part(const VectorField& x, int level) { return level_range(x, level, level); }

std::optional<int> pure_level(const VectorField& x) {
  auto parts = grade_decompose(x);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

QMatrix scaling_matrix(int n, const Rational& k) {
  QMatrix m = QMatrix::Zero(2 * n + 1, 2 * n + 1);
  for (int i = 0; i < 2 * n; ++i) m(i, i) = k.inverse();
  m(2 * n, 2 * n) = k.pow(-2);
  return m;
}

VectorField pushforward_linear(const QMatrix& l, const VectorField& x) {
  int d = x.dim();
  if (l.rows() != d || l.cols() != d) throw std::invalid_argument("linear map size mismatch");
  auto inv = inverse<Rational>(l);
  if (!inv) throw std::invalid_argument("linear map is not invertible");
  std::vector<Poly> images;
  for (int i = 0; i < d; ++i) {
    std::vector<Poly::Term> t;
    for (int j = 0; j < d; ++j)
      if (!(*inv)(i, j).is_zero()) t.emplace_back(Monomial::var(d, j), (*inv)(i, j));
    images.push_back(Poly::from_terms(d, std::move(t)));
  }
  Substitution sub(images, -1);
  std::vector<Poly> moved;
  for (int j = 0; j < d; ++j) moved.push_back(sub.apply(x[j]));
  std::vector<Poly> comps(d, Poly(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!l(i, j).is_zero()) comps[i] += moved[j] * l(i, j);
  return VectorField(x.n(), std::move(comps));
}

namespace {

// All exponent vectors of the given weighted degree, in increasing order.
std::vector<Monomial> monomials_of_wdeg(int dim, int w) {
  std::vector<Monomial> out;
  std::vector<int> e(dim, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == dim - 1) {
      if (left % 2 == 0) {
        e[i] = left / 2;
        out.emplace_back(e);
      }
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
    e[i] = 0;
  };
  if (w >= 0) rec(rec, 0, w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<VectorField> level_basis(int n, int lo, int hi) {
  int d = 2 * n + 1;
  std::vector<VectorField> out;
  for (int level = std::max(lo, -2); level <= hi; ++level)
    for (int i = 0; i < d; ++i) {
      int w = level + (i == d - 1 ? 2 : 1);
      for (const auto& m : monomials_of_wdeg(d, w))
        out.push_back(VectorField::single(n, i, Poly::term(m, Rational(1))));
    }
  return out;
}

int FieldSystem::row_of(const Key& k) {
  auto [it, fresh] = rows_.try_emplace(k, static_cast<int>(entries_.size()));
  if (fresh) {
    entries_.emplace_back();
    rhs_.emplace_back(0);
  }
  return it->second;
}

void FieldSystem::add_image(int unknown, int equation, const VectorField& image) {
  for (int i = 0; i < image.dim(); ++i)
    for (const auto& [m, c] : image[i].terms())
      entries_[row_of({equation, i, m})].emplace_back(unknown, c);
}

void FieldSystem::add_rhs(int equation, const VectorField& rhs) {
  for (int i = 0; i < rhs.dim(); ++i)
    for (const auto& [m, c] : rhs[i].terms()) rhs_[row_of({equation, i, m})] += c;
}

void FieldSystem::add_scalar_row(SparseSystem::Row row, const Rational& rhs) {
  entries_.push_back(std::move(row));
  rhs_.push_back(rhs);
}

SparseSystem FieldSystem::build() const {
  SparseSystem sys(unknowns_);
  for (size_t r = 0; r < entries_.size(); ++r) {
    SparseSystem::Row row = entries_[r];
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseSystem::Row merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
      else merged.push_back(std::move(e));
    }
    sys.add_row(std::move(merged), rhs_[r]);
  }
  return sys;
}

namespace {

VectorField combine(int n, const std::vector<VectorField>& basis, const std::vector<Rational>& c) {
  VectorField v(n);
  for (size_t j = 0; j < basis.size(); ++j)
    if (!c[j].is_zero()) v += c[j] * basis[j];
  return v;
}

}  // namespace

std::vector<VectorField> centralizer(int n, const std::vector<VectorField>& basis, int max_level) {
  auto unknowns = level_basis(n, -2, max_level);
  FieldSystem fs(static_cast<int>(unknowns.size()));
  for (size_t e = 0; e < basis.size(); ++e)
    for (size_t j = 0; j < unknowns.size(); ++j)
      fs.add_image(static_cast<int>(j), static_cast<int>(e), lie_bracket(basis[e], unknowns[j]));
  auto sys = fs.build();
  std::vector<VectorField> out;
  for (const auto& k : sys.kernel()) out.push_back(combine(n, unknowns, k));
  return out;
}

HeisenbergStructure standard_structure(int n) {
  QMatrix s = QMatrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    s(2 * j, 2 * j + 1) = Rational(-2);
    s(2 * j + 1, 2 * j) = Rational(2);
  }
  return {s};
}

namespace {

std::vector<VectorField> connection_with_sign(int n, int sign) {
  int d = 2 * n + 1;
  std::vector<VectorField> out;
  for (int j = 0; j < n; ++j) {
    std::vector<Poly> a(d, Poly(d)), b(d, Poly(d));
    a[2 * j] = Poly::constant(d, Rational(1));
    a[d - 1] = Poly::variable(d, 2 * j + 1) * Rational(-sign);
    b[2 * j + 1] = Poly::constant(d, Rational(1));
    b[d - 1] = Poly::variable(d, 2 * j) * Rational(sign);
    out.emplace_back(n, std::move(a));
    out.emplace_back(n, std::move(b));
  }
  out.push_back(VectorField::partial(n, d - 1));
  return out;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m, int nvars) {
  int d = static_cast<int>(m.size());
  std::map<unsigned, Poly> memo;  // used-column mask -> minor of the remaining rows
  auto rec = [&](auto&& self, int row, unsigned used) -> Poly {
    if (row == d) return Poly::constant(nvars, Rational(1));
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Poly acc(nvars);
    int sign = 1;
    for (int c = 0; c < d; ++c) {
      if (used & (1u << c)) continue;
      if (!m[row][c].is_zero()) {
        Poly t = m[row][c] * self(self, row + 1, used | (1u << c));
        if (sign > 0) acc += t;
        else acc -= t;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0u);
}

}  // namespace

std::vector<VectorField> standard_connection(int n) { return connection_with_sign(n, 1); }
std::vector<VectorField> standard_centralizer(int n) { return connection_with_sign(n, -1); }

HeisenbergCheck verify_heisenberg(const std::vector<VectorField>& basis,
                                  const HeisenbergStructure& structure,
                                  const std::vector<Rational>& base_point) {
  HeisenbergCheck out;
  if (basis.empty()) {
    out.failure = "empty basis";
    return out;
  }
  int n = basis.front().n();
  int d = 2 * n + 1;
  if (static_cast<int>(basis.size()) != d || structure.s.rows() != 2 * n ||
      structure.s.cols() != 2 * n) {
    out.failure = "basis or structure has the wrong size";
    return out;
  }
  const VectorField& z = basis.back();
  out.residual = VectorField(n);
  for (int a = 0; a < 2 * n && out.failure.empty(); ++a) {
    for (int b = a + 1; b < 2 * n; ++b) {
      VectorField r = lie_bracket(basis[a], basis[b]) - structure.s(a, b) * z;
      if (!r.is_zero()) {
        out.failure = "[X" + std::to_string(a + 1) + ",X" + std::to_string(b + 1) + "]";
        out.residual = r;
        break;
      }
    }
  }
  for (int a = 0; a < 2 * n && out.failure.empty(); ++a) {
    VectorField r = lie_bracket(basis[a], z);
    if (!r.is_zero()) {
      out.failure = "[X" + std::to_string(a + 1) + ",Z]";
      out.residual = r;
    }
  }
  std::vector<std::vector<Poly>> frame(d);
  for (int a = 0; a < d; ++a) frame[a] = basis[a].components();
  out.frame_determinant = poly_det(frame, d);
  out.frame_everywhere = out.frame_determinant.max_wdeg() == 0;
  if (out.failure.empty() && out.frame_determinant.evaluate(base_point).is_zero())
    out.failure = "not a frame at the base point";
  out.ok = out.failure.empty();
  return out;
}

std::optional<QVector> coordinates(const std::vector<VectorField>& basis, const VectorField& v) {
  FieldSystem fs(static_cast<int>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) fs.add_image(static_cast<int>(j), 0, basis[j]);
  fs.add_rhs(0, v);
  auto sys = fs.build();
  auto sol = sys.solution();
  if (!sol) return std::nullopt;
  QVector x(static_cast<Eigen::Index>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) x(j) = (*sol)[j];
  return x;
}

bool dilates(const VectorField& e, const std::vector<VectorField>& algebra, const Rational& c) {
  int m = static_cast<int>(algebra.size());
  QMatrix a(m, m);
  for (int j = 0; j < m; ++j) {
    auto col = coordinates(algebra, lie_bracket(e, algebra[j]));
    if (!col) return false;
    a.col(j) = *col;
  }
  QMatrix id = QMatrix::Identity(m, m);
  QMatrix ac = a - c * id;
  QMatrix a2c = a - (Rational(2) * c) * id;
  if (!is_zero_matrix<Rational>(QMatrix(ac * a2c))) return false;
  if (c.is_zero()) return is_zero_matrix<Rational>(a);
  // Eigenvalue 2c must have a one-dimensional eigenspace spanned by the center.
  auto k = kernel<Rational>(a2c);
  if (k.cols() != 1) return false;
  VectorField center(e.n());
  for (int j = 0; j < m; ++j)
    if (!k(j, 0).is_zero()) center += k(j, 0) * algebra[j];
  for (const auto& x : algebra)
    if (!lie_bracket(center, x).is_zero()) return false;
  return true;
}

FormalLogField find_dilation(const std::vector<VectorField>& basis,
                             const HeisenbergStructure& structure, const Rational& log_lambda,
                             const std::vector<Rational>& base_point, int max_level) {
  auto check = verify_heisenberg(basis, structure, base_point);
  if (!check.ok) throw std::invalid_argument("not a Heisenberg connection: " + check.failure);
  int n = basis.front().n();
  int d = 2 * n + 1;
  auto unknowns = level_basis(n, -2, max_level);
  FieldSystem fs(static_cast<int>(unknowns.size()));
  for (int e = 0; e < d; ++e) {
    for (size_t j = 0; j < unknowns.size(); ++j)
      fs.add_image(static_cast<int>(j), e, lie_bracket(unknowns[j], basis[e]));
    fs.add_rhs(e, Rational(e == d - 1 ? 2 : 1) * basis[e]);
  }
  for (int i = 0; i < d; ++i) {
    SparseSystem::Row row;
    for (size_t j = 0; j < unknowns.size(); ++j) {
      Rational v = unknowns[j][i].evaluate(base_point);
      if (!v.is_zero()) row.emplace_back(static_cast<int>(j), v);
    }
    fs.add_scalar_row(std::move(row), Rational(0));
  }
  auto sys = fs.build();
  auto sol = sys.solution();
  if (!sol) throw std::runtime_error("no dilation within the level bound");
  return {log_lambda, combine(n, unknowns, *sol)};
}

}  // namespace sunjet
