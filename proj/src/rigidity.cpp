#include "sunjet/rigidity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sunjet {

namespace {

CVec scaled(const CVec& xi, const ComplexRational& c) {
  CVec out = xi;
  for (auto& z : out) z = c * z;
  return out;
}

std::string vec_label(const CVec& xi) {
  std::string s = "(";
  for (size_t j = 0; j < xi.size(); ++j) {
    if (j) s += ",";
    s += xi[j].re.str();
    if (!xi[j].im.is_zero()) s += (xi[j].im.sign() > 0 ? "+" : "") + xi[j].im.str() + "i";
  }
  return s + ")";
}

bool has_grade(const VectorField& v, int grade) {
  if (v.is_zero()) return true;
  auto level = pure_level(v);
  return level && *level == grade;
}

std::vector<CVec> real_basis(int n) {
  std::vector<CVec> out;
  for (int j = 0; j < n; ++j)
    for (bool im : {false, true}) out.push_back(unit_vector(n, j, im));
  return out;
}

}  // namespace

VectorField GradedLieHom::apply(const CMatrix& x) const {
  std::vector<CMatrix> mats;
  for (const auto& g : generators) mats.push_back(materialize(g, n));
  auto c = matrix_coordinates(mats, x);
  if (!c) throw std::invalid_argument("element is outside the domain of the homomorphism");
  VectorField out(n);
  for (size_t j = 0; j < images.size(); ++j)
    if (!(*c)(j).is_zero()) out += (*c)(j) * images[j];
  return out;
}

std::vector<GradedGenerator> domain_basis(int n, HomDomain domain) {
  switch (domain) {
    case HomDomain::NPlus: return nplus_basis(n);
    case HomDomain::NMinus: return nminus_basis(n);
    case HomDomain::Full: return su_basis(n);
  }
  throw std::logic_error("unknown domain");
}

GradedLieHom iota0_hom(int n, HomDomain domain) {
  GradedLieHom out{domain, n, domain_basis(n, domain), {}};
  for (const auto& g : out.generators) out.images.push_back(induced_vector_field(materialize(g, n)));
  return out;
}

HomVerification verify_graded_hom(const GradedLieHom& iota) {
  HomVerification out;
  std::vector<CMatrix> mats;
  for (const auto& g : iota.generators) mats.push_back(materialize(g, iota.n));
  for (size_t a = 0; a < iota.generators.size(); ++a)
    if (!has_grade(iota.images[a], declared_grade(iota.generators[a]))) {
      out.ok = false;
      out.failures.push_back("grade of " + iota.generators[a].label);
    }
  for (size_t a = 0; a < mats.size(); ++a)
    for (size_t b = a; b < mats.size(); ++b) {
      std::string pair = "[" + iota.generators[a].label + "," + iota.generators[b].label + "]";
      auto c = matrix_coordinates(mats, commutator(mats[a], mats[b]));
      if (!c) {
        out.ok = false;
        out.failures.push_back(pair + " leaves the domain");
        continue;
      }
      VectorField lhs(iota.n);
      for (size_t j = 0; j < mats.size(); ++j)
        if (!(*c)(j).is_zero()) lhs += (*c)(j) * iota.images[j];
      if (!(lhs == lie_bracket(iota.images[a], iota.images[b]))) {
        out.ok = false;
        out.failures.push_back(pair);
      }
    }
  return out;
}

GradedLieHom theta(const GradedLieHom& iota) {
  if (iota.domain != HomDomain::NPlus) throw std::invalid_argument("theta needs a map on n^+");
  int n = iota.n;
  VectorField fm = induced_vector_field(gen_f_minus(n));
  VectorField fp_image = iota.apply(gen_f_plus(n));
  const ComplexRational minus_i(Rational(0), Rational(-1));
  GradedLieHom out{HomDomain::NMinus, n, nminus_basis(n), {}};
  for (const auto& g : out.generators) {
    VectorField image(n);
    if (g.kind == GenKind::XiMinus)
      image = lie_bracket(fm, iota.apply(gen_xi_plus(scaled(g.xi, minus_i))));
    else
      image = Rational(1, 2) * lie_bracket(fm, lie_bracket(fm, fp_image));
    if (!has_grade(image, declared_grade(g)))
      throw std::domain_error("theta image of " + g.label + " has the wrong level");
    out.images.push_back(std::move(image));
  }
  return out;
}

bool IdentityReport::ok() const {
  return precondition_ok &&
         std::all_of(cases.begin(), cases.end(), [](const IdentityCase& c) { return c.ok; });
}

IdentityReport verify_normalized_bracket_identities(const GradedLieHom& iota) {
  IdentityReport out;
  int n = iota.n;
  GradedLieHom reference = iota0_hom(n, HomDomain::NMinus);
  try {
    out.precondition_ok = theta(iota).images == reference.images;
  } catch (const std::domain_error&) {
    out.precondition_ok = false;
  }
  if (!out.precondition_ok) return out;

  VectorField fm = induced_vector_field(gen_f_minus(n));
  VectorField fp = iota.apply(gen_f_plus(n));
  VectorField r0 = lie_bracket(fm, fp) - induced_vector_field(gen_e(n));
  out.cases.push_back({"[iota0 F-, iota F+] = iota0 E", r0.is_zero(), r0});
  const ComplexRational i_unit = ComplexRational::i_unit();
  for (const auto& xi : real_basis(n)) {
    VectorField lhs = iota.apply(gen_xi_plus(xi));
    VectorField rhs = lie_bracket(induced_vector_field(gen_xi_minus(scaled(xi, i_unit))), fp);
    VectorField r = lhs - rhs;
    out.cases.push_back({"iota xi+ = [iota0 (i xi)-, iota F+] xi=" + vec_label(xi), r.is_zero(), r});
  }
  return out;
}

KernelResult final_kernel(int n, bool use_norm, bool use_rel) {
  std::vector<VectorField> basis = level_basis(n, 2, 2);
  VectorField fm = induced_vector_field(gen_f_minus(n));
  VectorField fp = induced_vector_field(gen_f_plus(n));
  std::vector<VectorField> xs, xs_fp;
  for (const auto& xi : real_basis(n)) {
    xs.push_back(induced_vector_field(gen_xi_minus(xi)));
    xs_fp.push_back(lie_bracket(xs.back(), fp));
  }
  int unknowns = static_cast<int>(basis.size());
  FieldSystem fs(unknowns);
  for (int b = 0; b < unknowns; ++b) {
    if (use_norm) fs.add_image(b, 0, lie_bracket(fm, basis[b]));
    if (use_rel)
      for (size_t s = 0; s < xs.size(); ++s)
        fs.add_image(b, 1 + static_cast<int>(s),
                     lie_bracket(lie_bracket(xs[s], basis[b]), fp) + lie_bracket(xs_fp[s], basis[b]));
  }
  SparseSystem sys = fs.build();
  KernelResult out;
  out.unknowns = unknowns;
  out.rank = sys.rank();
  for (const auto& v : sys.kernel()) {
    VectorField k(n);
    for (int b = 0; b < unknowns; ++b)
      if (!v[b].is_zero()) k += v[b] * basis[b];
    out.basis.push_back(std::move(k));
  }
  return out;
}

VectorField nested_ad(const VectorField& x, const std::vector<CVec>& xis) {
  VectorField out = x;
  for (auto it = xis.rbegin(); it != xis.rend(); ++it)
    out = lie_bracket(induced_vector_field(gen_xi_minus(*it)), out);
  return out;
}

MultilinearReport phi_psi_evaluate(const VectorField& x, const std::vector<std::vector<CVec>>& phi_tuples,
                                   const std::vector<std::vector<CVec>>& psi_tuples) {
  if (!has_grade(x, 2)) throw std::invalid_argument("X must have pure level +2");
  MultilinearReport out;
  auto run = [&](const std::vector<std::vector<CVec>>& tuples, size_t arity, std::vector<VectorField>& values,
                 bool& symmetric, bool& vanishes) {
    for (const auto& t : tuples) {
      if (t.size() != arity) throw std::invalid_argument("wrong number of slots");
      VectorField v = nested_ad(x, t);
      values.push_back(v);
      vanishes = vanishes && v.is_zero();
      std::vector<size_t> perm(arity);
      std::iota(perm.begin(), perm.end(), 0);
      while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<CVec> p;
        for (size_t i : perm) p.push_back(t[i]);
        if (!(nested_ad(x, p) == v)) {
          if (symmetric) {
            out.asymmetry = "";
            for (const auto& xi : t) out.asymmetry += vec_label(xi);
          }
          symmetric = false;
          break;
        }
      }
    }
  };
  run(phi_tuples, 4, out.phi_values, out.phi_symmetric, out.phi_vanishes);
  run(psi_tuples, 3, out.psi_values, out.psi_symmetric, out.psi_vanishes);
  return out;
}

std::vector<AdIdentity> ad_identity_report(int n, const CVec& xi) {
  const ComplexRational minus_i(Rational(0), Rational(-1));
  CMatrix x = gen_xi_minus(xi), eta = gen_xi_minus(scaled(xi, minus_i));
  CMatrix fp = gen_f_plus(n), fm = gen_f_minus(n), e = gen_e(n);
  Rational norm(0);
  for (const auto& z : xi) norm += z.norm2();
  auto ad = [](const CMatrix& a, const CMatrix& b) { return commutator(a, b); };
  struct Row {
    std::string id;
    CMatrix lhs;
    std::string target;
    Rational displayed;
  };
  std::vector<Row> rows = {
      {"ad(F-)ad(eta-)^2 F+", ad(fm, ad(eta, ad(eta, fp))), "0", Rational(0)},
      {"ad(F-)ad(xi-)^2 F+", ad(fm, ad(x, ad(x, fp))), "0", Rational(0)},
      {"ad(eta-)^3 F+", ad(eta, ad(eta, ad(eta, fp))), "xi-", Rational(1)},
      {"ad(eta-)ad(xi-) F+", ad(eta, ad(x, fp)), "E", Rational(1)},
      {"ad(eta-)ad(xi-)^2 F+", ad(eta, ad(x, ad(x, fp))), "xi-", Rational(1)},
      {"ad(xi-)^3 F+", ad(x, ad(x, ad(x, fp))), "eta-", Rational(-1)},
  };
  std::vector<AdIdentity> out;
  for (const auto& r : rows) {
    AdIdentity a{r.id, r.target, r.displayed, std::nullopt, false};
    if (r.target == "0") {
      if (is_zero_matrix<ComplexRational>(r.lhs)) a.actual = Rational(0);
    } else {
      const CMatrix& t = r.target == "E" ? e : (r.target == "xi-" ? x : eta);
      auto c = matrix_coordinates({t}, r.lhs);
      if (c && !norm.is_zero()) a.actual = (*c)(0) / norm;
    }
    a.matches = a.actual && *a.actual == a.displayed;
    out.push_back(std::move(a));
  }
  return out;
}

HeisenbergHom hconn_construct(const LatticeHom& f, const LatticePresentation& l) {
  if (f.r < 3) throw std::invalid_argument("hconn_construct needs r >= 3");
  if (static_cast<int>(f.x_images.size()) != 2 * l.n) throw std::invalid_argument("need 2n generator images");
  if (!level_part(f.y_image, 1).is_zero()) throw std::domain_error("f(Y) has a level 1 part");
  HeisenbergHom out;
  for (const auto& x : f.x_images) out.x_images.push_back(level_part(x, 1));
  out.y_image = level_part(f.y_image, 2);
  for (int i = 0; i < 2 * l.n; ++i) {
    if (!lie_bracket(out.x_images[i], out.y_image).is_zero())
      throw std::domain_error("[phi X" + std::to_string(i + 1) + ", phi Y] != 0");
    for (int j = i + 1; j < 2 * l.n; ++j)
      if (!(lie_bracket(out.x_images[i], out.x_images[j]) == l.m(i, j) * out.y_image))
        throw std::domain_error("[phi X" + std::to_string(i + 1) + ", phi X" + std::to_string(j + 1) +
                                "] != m_ij phi Y");
  }
  return out;
}

WeilCheck weil_check(int n, long k) {
  std::vector<VectorField> basis = level_basis(n, 0, 0);
  QMatrix s = scaling_matrix(n, Rational(k));
  WeilCheck out;
  out.dimension = static_cast<int>(basis.size());
  out.adjoint_trivial = true;
  FieldSystem fs(out.dimension);
  for (int b = 0; b < out.dimension; ++b) {
    VectorField ad = pushforward_linear(s, basis[b]);
    out.adjoint_trivial = out.adjoint_trivial && ad == basis[b];
    fs.add_image(b, 0, ad - Rational(k) * basis[b]);
  }
  out.rank = fs.build().rank();
  return out;
}

}  // namespace sunjet
