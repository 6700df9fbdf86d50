#include "sunjet/su_grading.hpp"

#include <stdexcept>

namespace sunjet {

namespace {

const ComplexRational kI = ComplexRational::i_unit();

CMatrix zero_matrix(int n) { return CMatrix::Zero(n + 2, n + 2); }

CMatrix adjoint(const CMatrix& x) {
  CMatrix y(x.cols(), x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) y(j, i) = x(i, j).conj();
  return y;
}

ComplexRational scalar(const Rational& r) { return ComplexRational(r); }

// Im(conj(xi)^T eta)
Rational im_inner(const std::vector<ComplexRational>& xi, const std::vector<ComplexRational>& eta) {
  Rational s(0);
  for (size_t j = 0; j < xi.size(); ++j) s += (xi[j].conj() * eta[j]).im;
  return s;
}

std::vector<ComplexRational> times_i(const std::vector<ComplexRational>& xi, int power) {
  std::vector<ComplexRational> out = xi;
  for (auto& z : out)
    for (int p = 0; p < ((power % 4) + 4) % 4; ++p) z = kI * z;
  return out;
}

std::string vec_name(int j, bool imaginary) {
  return (imaginary ? "ie" : "e") + std::to_string(j + 1);
}

}  // namespace

CMatrix hermitian_form(int n) {
  CMatrix h = zero_matrix(n);
  h(0, n + 1) = 1;
  h(n + 1, 0) = 1;
  for (int i = 1; i <= n; ++i) h(i, i) = 1;
  return h;
}

bool in_su(const CMatrix& x) {
  int n = static_cast<int>(x.rows()) - 2;
  CMatrix h = hermitian_form(n);
  if (!is_zero_matrix<ComplexRational>(CMatrix(adjoint(x) * h + h * x))) return false;
  ComplexRational tr(0);
  for (Eigen::Index i = 0; i < x.rows(); ++i) tr += x(i, i);
  return tr.is_zero();
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return CMatrix(a * b - b * a); }

CMatrix gen_e(int n) {
  CMatrix m = zero_matrix(n);
  m(0, 0) = 1;
  m(n + 1, n + 1) = -1;
  return m;
}

CMatrix gen_f_plus(int n) {
  CMatrix m = zero_matrix(n);
  m(0, n + 1) = -kI;
  return m;
}

CMatrix gen_f_minus(int n) {
  CMatrix m = zero_matrix(n);
  m(n + 1, 0) = -kI;
  return m;
}

CMatrix gen_xi_plus(const std::vector<ComplexRational>& xi) {
  int n = static_cast<int>(xi.size());
  CMatrix m = zero_matrix(n);
  for (int j = 0; j < n; ++j) {
    m(0, j + 1) = -xi[j].conj();
    m(j + 1, n + 1) = xi[j];
  }
  return m;
}

CMatrix gen_xi_minus(const std::vector<ComplexRational>& xi) {
  int n = static_cast<int>(xi.size());
  CMatrix m = zero_matrix(n);
  for (int j = 0; j < n; ++j) {
    m(j + 1, 0) = xi[j];
    m(n + 1, j + 1) = -xi[j].conj();
  }
  return m;
}

std::vector<ComplexRational> unit_vector(int n, int j, bool imaginary) {
  std::vector<ComplexRational> v(n);
  v.at(j) = imaginary ? kI : ComplexRational(1);
  return v;
}

int declared_grade(const GradedGenerator& g) {
  switch (g.kind) {
    case GenKind::FPlus: return 2;
    case GenKind::XiPlus: return 1;
    case GenKind::XiMinus: return -1;
    case GenKind::FMinus: return -2;
    default: return 0;
  }
}

CMatrix materialize(const GradedGenerator& g, int n) {
  switch (g.kind) {
    case GenKind::E: return gen_e(n);
    case GenKind::FPlus: return gen_f_plus(n);
    case GenKind::FMinus: return gen_f_minus(n);
    case GenKind::XiPlus: return gen_xi_plus(g.xi);
    case GenKind::XiMinus: return gen_xi_minus(g.xi);
    case GenKind::Zero: {
      CMatrix m = zero_matrix(n);
      m(0, 0) = g.z;
      m(n + 1, n + 1) = -g.z.conj();
      m.block(1, 1, n, n) = g.u;
      return m;
    }
  }
  throw std::logic_error("unknown generator kind");
}

std::vector<GradedGenerator> nplus_basis(int n) {
  std::vector<GradedGenerator> out;
  for (int j = 0; j < n; ++j)
    for (bool im : {false, true})
      out.push_back({GenKind::XiPlus, unit_vector(n, j, im), {}, {}, "(" + vec_name(j, im) + ")+"});
  out.push_back({GenKind::FPlus, {}, {}, {}, "F+"});
  return out;
}

std::vector<GradedGenerator> nminus_basis(int n) {
  std::vector<GradedGenerator> out;
  for (int j = 0; j < n; ++j)
    for (bool im : {false, true})
      out.push_back({GenKind::XiMinus, unit_vector(n, j, im), {}, {}, "(" + vec_name(j, im) + ")-"});
  out.push_back({GenKind::FMinus, {}, {}, {}, "F-"});
  return out;
}

std::vector<GradedGenerator> su_basis(int n) {
  std::vector<GradedGenerator> out = nminus_basis(n);
  out.push_back({GenKind::E, {}, {}, {}, "E"});
  for (int j = 0; j < n; ++j) {
    CMatrix u = CMatrix::Zero(n, n);
    u(j, j) = kI;
    out.push_back({GenKind::Zero, {}, ComplexRational(Rational(0), Rational(-1, 2)), u,
                   "h" + std::to_string(j + 1)});
  }
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l) {
      CMatrix u = CMatrix::Zero(n, n);
      u(j, l) = 1;
      u(l, j) = -1;
      out.push_back({GenKind::Zero, {}, {}, u, "r" + std::to_string(j + 1) + std::to_string(l + 1)});
      CMatrix s = CMatrix::Zero(n, n);
      s(j, l) = kI;
      s(l, j) = kI;
      out.push_back({GenKind::Zero, {}, {}, s, "s" + std::to_string(j + 1) + std::to_string(l + 1)});
    }
  auto plus = nplus_basis(n);
  out.insert(out.end(), plus.begin(), plus.end());
  return out;
}

std::map<int, CMatrix> grade_of(const CMatrix& x) {
  int n = static_cast<int>(x.rows()) - 2;
  auto weight = [&](Eigen::Index i) { return i == 0 ? 1 : (i == n + 1 ? -1 : 0); };
  std::map<int, CMatrix> out;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero()) continue;
      int g = weight(i) - weight(j);
      auto it = out.try_emplace(g, zero_matrix(n)).first;
      it->second(i, j) = x(i, j);
    }
  return out;
}

std::optional<QVector> matrix_coordinates(const std::vector<CMatrix>& basis, const CMatrix& x) {
  Eigen::Index cells = x.rows() * x.cols();
  QMatrix a(2 * cells, static_cast<Eigen::Index>(basis.size()));
  QVector b(2 * cells);
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      Eigen::Index r = 2 * (i * x.cols() + j);
      for (size_t c = 0; c < basis.size(); ++c) {
        a(r, c) = basis[c](i, j).re;
        a(r + 1, c) = basis[c](i, j).im;
      }
      b(r) = x(i, j).re;
      b(r + 1) = x(i, j).im;
    }
  auto sol = solve<Rational>(a, b);
  if (!sol) return std::nullopt;
  if (!is_zero_matrix<Rational>(QMatrix(a * (*sol) - b))) return std::nullopt;
  return sol;
}

std::vector<RelationCase> bracket_relation_table(int n) {
  std::vector<RelationCase> out;
  auto add = [&](std::string id, const CMatrix& lhs, const CMatrix& rhs) {
    bool ok = lhs == rhs;
    out.push_back({std::move(id), ok, ok ? "" : "commutator differs"});
  };
  std::string tag = "n=" + std::to_string(n) + " ";
  CMatrix e = gen_e(n), fp = gen_f_plus(n), fm = gen_f_minus(n);
  std::vector<std::pair<std::string, std::vector<ComplexRational>>> vecs;
  for (int j = 0; j < n; ++j)
    for (bool im : {false, true}) vecs.emplace_back(vec_name(j, im), unit_vector(n, j, im));

  std::vector<std::pair<std::string, CMatrix>> gens = {{"E", e}, {"F+", fp}, {"F-", fm}};
  for (const auto& [name, xi] : vecs) {
    gens.emplace_back("(" + name + ")+", gen_xi_plus(xi));
    gens.emplace_back("(" + name + ")-", gen_xi_minus(xi));
  }
  for (const auto& [name, m] : gens)
    out.push_back({tag + "su membership " + name, in_su(m), in_su(m) ? "" : "not in su(n+1,1)"});
  for (const auto& [name, m] : gens) {
    auto parts = grade_of(m);
    int g = parts.begin()->first;
    add(tag + "[E," + name + "] = " + std::to_string(g) + " " + name, commutator(e, m),
        CMatrix(scalar(Rational(g)) * m));
  }
  for (const auto& [a, xi] : vecs)
    for (const auto& [b, eta] : vecs) {
      ComplexRational c = scalar(Rational(2) * im_inner(xi, eta));
      add(tag + "[xi+,eta+] = 2Im(xi*eta)F+ xi=" + a + " eta=" + b,
          commutator(gen_xi_plus(xi), gen_xi_plus(eta)), CMatrix(c * fp));
      add(tag + "[xi-,eta-] = 2Im(xi*eta)F- xi=" + a + " eta=" + b,
          commutator(gen_xi_minus(xi), gen_xi_minus(eta)), CMatrix(c * fm));
    }
  for (const auto& [a, xi] : vecs) {
    add(tag + "[F-,xi+] = (i xi)- xi=" + a, commutator(fm, gen_xi_plus(xi)), gen_xi_minus(times_i(xi, 1)));
    add(tag + "[F+,xi-] = (i xi)+ xi=" + a, commutator(fp, gen_xi_minus(xi)), gen_xi_plus(times_i(xi, 1)));
    add(tag + "xi- = [F-,(-i xi)+] xi=" + a, gen_xi_minus(xi), commutator(fm, gen_xi_plus(times_i(xi, 3))));
  }
  add(tag + "[F-,F+] = E", commutator(fm, fp), e);
  add(tag + "2F- = ad(F-)^2 F+", CMatrix(scalar(Rational(2)) * fm), commutator(fm, commutator(fm, fp)));
  return out;
}

VectorField induced_vector_field(const CMatrix& x) {
  int n = static_cast<int>(x.rows()) - 2;
  int d = 2 * n + 1;
  // Lift (1, z, -|z|^2/2 + i x_{2n+1}).
  std::vector<ComplexPoly> z(n + 2, ComplexPoly(d));
  z[0] = ComplexPoly::constant(d, ComplexRational(1));
  Poly norm(d);
  for (int j = 0; j < n; ++j) {
    Poly re = Poly::variable(d, 2 * j), im = Poly::variable(d, 2 * j + 1);
    z[j + 1] = ComplexPoly(re, im);
    norm += re * re + im * im;
  }
  z[n + 1] = ComplexPoly(norm * Rational(-1, 2), Poly::variable(d, d - 1));
  std::vector<ComplexPoly> v(n + 2, ComplexPoly(d));
  for (int i = 0; i < n + 2; ++i)
    for (int j = 0; j < n + 2; ++j)
      if (!x(i, j).is_zero()) v[i] += x(i, j) * z[j];
  // d/dt of (Z + tV) / (1 + t V_0) at t = 0 is V - V_0 Z.
  std::vector<Poly> comps(d, Poly(d));
  for (int j = 1; j <= n + 1; ++j) {
    ComplexPoly w = v[j] - multiply(v[0], z[j]);
    if (j <= n) {
      comps[2 * j - 2] = w.re;
      comps[2 * j - 1] = w.im;
    } else {
      comps[d - 1] = w.im;
    }
  }
  VectorField field(n, std::move(comps));
  auto grades = grade_of(x);
  if (grades.size() == 1 && !field.is_zero()) {
    auto level = pure_level(field);
    if (!level || *level != grades.begin()->first)
      throw std::logic_error("chart field does not have the grade of its matrix");
  }
  return field;
}

HomomorphismCheck verify_homomorphism(int n, const std::vector<GradedGenerator>& basis) {
  HomomorphismCheck out;
  std::vector<CMatrix> mats;
  std::vector<VectorField> images;
  for (const auto& g : basis) {
    mats.push_back(materialize(g, n));
    images.push_back(induced_vector_field(mats.back()));
  }
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a; b < basis.size(); ++b) {
      ++out.pairs;
      VectorField lhs = induced_vector_field(commutator(mats[a], mats[b]));
      VectorField rhs = lie_bracket(images[a], images[b]);
      if (!(lhs == rhs)) {
        out.ok = false;
        out.failures.push_back("[" + basis[a].label + "," + basis[b].label + "]");
      }
    }
  return out;
}

CMatrix an_matrix(const ANElement& g, long k) {
  int n = static_cast<int>(g.point.z.size());
  CMatrix m = CMatrix::Identity(n + 2, n + 2);
  Rational norm(0);
  for (int j = 0; j < n; ++j) {
    m(0, j + 1) = -g.point.z[j].conj();
    m(j + 1, n + 1) = g.point.z[j];
    norm += g.point.z[j].norm2();
  }
  m(0, n + 1) = ComplexRational(-norm / Rational(2), -g.point.t);
  CMatrix a = CMatrix::Identity(n + 2, n + 2);
  Rational s = Rational(k).pow(static_cast<int>(g.p));
  a(0, 0) = s;
  a(n + 1, n + 1) = s.inverse();
  return CMatrix(m * a);
}

CMatrix word_matrix(const GroupWord& w, const LatticePresentation& l) {
  int n = l.n;
  CMatrix acc = CMatrix::Identity(n + 2, n + 2);
  for (const auto& letter : w) {
    CMatrix g;
    if (letter.gen == 'a') {
      g = CMatrix::Identity(n + 2, n + 2);
      g(0, 0) = Rational(l.k);
      g(n + 1, n + 1) = Rational(1, l.k);
    } else {
      // exp(xi+ + tau F+) is I + X + X^2/2 since X^3 = 0.
      CMatrix x = letter.gen == 'b' ? gen_xi_plus(l.xi_basis.at(letter.index - 1).xi)
                                    : CMatrix(scalar(l.tau) * gen_f_plus(n));
      g = CMatrix::Identity(n + 2, n + 2) + x + CMatrix(scalar(Rational(1, 2)) * CMatrix(x * x));
    }
    long p = letter.power;
    CMatrix base = g;
    if (p < 0) {
      auto inv = inverse<ComplexRational>(g);
      if (!inv) throw std::logic_error("generator matrix is singular");
      base = *inv;
      p = -p;
    }
    for (long t = 0; t < p; ++t) acc = CMatrix(acc * base);
  }
  return acc;
}

AffineMap psi_chart_action(const GroupWord& w, const LatticePresentation& l) {
  int n = l.n;
  int d = 2 * n + 1;
  CMatrix g = an_matrix(evaluate_word(w, l), l.k);
  // Variables (x0, x1, ..., x2n); lift to (-|z|^2/2 + i x0, z, 1).
  std::vector<ComplexPoly> z(n + 2, ComplexPoly(d));
  Poly norm(d);
  for (int j = 0; j < n; ++j) {
    Poly re = Poly::variable(d, 2 * j + 1), im = Poly::variable(d, 2 * j + 2);
    z[j + 1] = ComplexPoly(re, im);
    norm += re * re + im * im;
  }
  z[0] = ComplexPoly(norm * Rational(-1, 2), Poly::variable(d, 0));
  z[n + 1] = ComplexPoly::constant(d, ComplexRational(1));
  std::vector<ComplexPoly> v(n + 2, ComplexPoly(d));
  for (int i = 0; i < n + 2; ++i)
    for (int j = 0; j < n + 2; ++j)
      if (!g(i, j).is_zero()) v[i] += g(i, j) * z[j];
  const ComplexPoly& last = v[n + 1];
  if (last.re.max_wdeg() > 0 || last.im.max_wdeg() > 0 || last.is_zero())
    throw std::domain_error("last homogeneous coordinate is not a nonzero constant");
  ComplexRational denom(last.re.coeff(Monomial::one(d)), last.im.coeff(Monomial::one(d)));
  ComplexRational inv = ComplexRational(1) / denom;
  std::vector<Poly> out(d, Poly(d));
  ComplexPoly w0 = inv * v[0];
  out[0] = w0.im;
  for (int j = 1; j <= n; ++j) {
    ComplexPoly wj = inv * v[j];
    out[2 * j - 1] = wj.re;
    out[2 * j] = wj.im;
  }
  AffineMap map{QMatrix::Zero(d, d), QVector::Zero(d)};
  for (int i = 0; i < d; ++i)
    for (const auto& [m, c] : out[i].terms()) {
      if (m.degree() > 1) throw std::domain_error("chart action is not affine");
      if (m.degree() == 0) {
        map.shift(i) = c;
      } else {
        for (int j = 0; j < d; ++j)
          if (m.exponent(j)) map.lin(i, j) = c;
      }
    }
  return map;
}

ChartAffineData chart_affine_data(const LatticePresentation& l) {
  int n = l.n;
  int d = 2 * n + 1;
  ChartAffineData out;
  for (int i = 1; i <= 2 * n; ++i) {
    AffineMap m = psi_chart_action({{'b', i, 1}}, l);
    bool shape = m.lin(0, 0) == Rational(1) && m.shift(0).is_zero();
    for (int r = 1; r < d; ++r) {
      shape = shape && m.lin(r, 0).is_zero();
      for (int c = 1; c < d; ++c) shape = shape && m.lin(r, c) == Rational(r == c ? 1 : 0);
    }
    if (!shape) throw std::domain_error("b" + std::to_string(i) + " is not of the shape (x0 - <u,x>, x + v)");
    QVector u(2 * n), v(2 * n);
    for (int j = 0; j < 2 * n; ++j) {
      u(j) = -m.lin(0, j + 1);
      v(j) = m.shift(j + 1);
    }
    out.u.push_back(u);
    out.v.push_back(v);
  }
  AffineMap c = psi_chart_action({{'c', 0, 1}}, l);
  if (!(c.lin == QMatrix(QMatrix::Identity(d, d))) || !c.shift.tail(2 * n).isZero())
    throw std::domain_error("c is not of the shape (x0 - t, x)");
  out.t = -c.shift(0);
  return out;
}

Jet phi_chart_jet(const GroupWord& w, const LatticePresentation& l, int r) {
  int n = l.n;
  int d = 2 * n + 1;
  int cap = r + 2;
  CMatrix g = word_matrix(w, l);
  std::vector<ComplexPoly> z(n + 2, ComplexPoly(d));
  z[0] = ComplexPoly::constant(d, ComplexRational(1));
  Poly norm(d);
  for (int j = 0; j < n; ++j) {
    Poly re = Poly::variable(d, 2 * j), im = Poly::variable(d, 2 * j + 1);
    z[j + 1] = ComplexPoly(re, im);
    norm += re * re + im * im;
  }
  z[n + 1] = ComplexPoly(norm * Rational(-1, 2), Poly::variable(d, d - 1));
  std::vector<ComplexPoly> v(n + 2, ComplexPoly(d));
  for (int i = 0; i < n + 2; ++i)
    for (int j = 0; j < n + 2; ++j)
      if (!g(i, j).is_zero()) v[i] += g(i, j) * z[j];
  ComplexRational c0(v[0].re.coeff(Monomial::one(d)), v[0].im.coeff(Monomial::one(d)));
  if (c0.is_zero()) throw std::domain_error("projective denominator vanishes at the origin");
  for (int j = 1; j <= n + 1; ++j)
    if (!v[j].wdeg_range(0, 0).is_zero()) throw std::domain_error("word does not fix the base point");
  // 1/V_0 = (1/c0) sum_j (-u)^j with u = V_0/c0 - 1 of positive weighted order.
  ComplexRational inv0 = ComplexRational(1) / c0;
  ComplexPoly u = (inv0 * v[0]).wdeg_range(1, cap);
  ComplexPoly neg_u = ComplexRational(-1) * u;
  ComplexPoly term = ComplexPoly::constant(d, ComplexRational(1));
  ComplexPoly series = term;
  while (!term.is_zero()) {
    term = multiply(term, neg_u, cap);
    series += term;
  }
  ComplexPoly recip = inv0 * series;
  std::vector<Poly> comps(d, Poly(d));
  for (int j = 1; j <= n + 1; ++j) {
    ComplexPoly wj = multiply(v[j], recip, cap);
    if (j <= n) {
      comps[2 * j - 2] = wj.re;
      comps[2 * j - 1] = wj.im;
    } else {
      comps[d - 1] = wj.im;
    }
  }
  Jet jet = make_jet(n, r, std::move(comps));
  if (has_level_minus_one(jet)) throw std::logic_error("chart jet has a level -1 part");
  return jet;
}

}  // namespace sunjet
