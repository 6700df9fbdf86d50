#include "sunjet/json_io.hpp"

#include <stdexcept>

namespace sunjet {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
  }
}

Monomial monomial_from_json(const json& j, int nvars) {
  if (!j.is_array() || static_cast<int>(j.size()) != nvars)
    throw std::invalid_argument("exponent vector must have " + std::to_string(nvars) + " entries");
  std::vector<int> e;
  for (const auto& v : j) {
    int x = v.get<int>();
    if (x < 0) throw std::invalid_argument("negative exponent");
    e.push_back(x);
  }
  return Monomial(e);
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

}  // namespace

json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"exponents", m.exponents()}, {"coeff", c.str()}});
  return out;
}

Poly poly_from_json(const json& j, int nvars) {
  return guarded("polynomial", [&] {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
    std::vector<Poly::Term> terms;
    for (const auto& t : j)
      terms.emplace_back(monomial_from_json(t.at("exponents"), nvars), rational_from_json(t.at("coeff")));
    return Poly::from_terms(nvars, std::move(terms));
  });
}

json field_to_json(const VectorField& x) {
  json out = json::array();
  for (int i = 0; i < x.dim(); ++i)
    for (const auto& [m, c] : x[i].terms())
      out.push_back({{"component", i + 1}, {"exponents", m.exponents()}, {"coeff", c.str()}});
  return out;
}

VectorField field_from_json(const json& j, int n) {
  return guarded("vector field", [&] {
    if (!j.is_array()) throw std::invalid_argument("vector field must be an array of terms");
    int d = 2 * n + 1;
    std::vector<std::vector<Poly::Term>> terms(d);
    for (const auto& t : j) {
      int comp = int_field(t, "component");
      if (comp < 1 || comp > d) throw std::invalid_argument("component out of range");
      terms[comp - 1].emplace_back(monomial_from_json(t.at("exponents"), d), rational_from_json(t.at("coeff")));
    }
    std::vector<Poly> comps;
    for (auto& t : terms) comps.push_back(Poly::from_terms(d, std::move(t)));
    return VectorField(n, std::move(comps));
  });
}

json jet_to_json(const Jet& f) {
  return {{"n", f.n}, {"r", f.r}, {"terms", field_to_json(VectorField(f.n, f.comps))}};
}

Jet jet_from_json(const json& j) {
  return guarded("jet", [&] {
    int n = int_field(j, "n");
    int r = int_field(j, "r");
    if (n < 1 || n > 3) throw std::invalid_argument("n must be in 1..3");
    VectorField x = field_from_json(j.at("terms"), n);
    return make_jet(n, r, x.components());
  });
}

json lattice_to_json(const LatticePresentation& l) {
  json xi = json::array();
  for (const auto& b : l.xi_basis) {
    json z = json::array();
    for (const auto& c : b.xi) z.push_back(complex_to_json(c));
    xi.push_back(z);
  }
  return {{"n", l.n}, {"m", qmatrix_to_json(l.m)}, {"k", l.k}, {"tau", l.tau.str()}, {"xi_basis", xi}};
}

LatticePresentation lattice_from_json(const json& j) {
  return guarded("lattice", [&] {
    int n = int_field(j, "n");
    long k = int_field(j, "k");
    const json& m = j.at("m");
    if (!m.is_array() || static_cast<int>(m.size()) != 2 * n)
      throw std::invalid_argument("m must be a 2n x 2n matrix");
    QMatrix q(2 * n, 2 * n);
    for (int a = 0; a < 2 * n; ++a) {
      if (!m[a].is_array() || static_cast<int>(m[a].size()) != 2 * n)
        throw std::invalid_argument("m must be a 2n x 2n matrix");
      for (int b = 0; b < 2 * n; ++b) q(a, b) = rational_from_json(m[a][b]);
    }
    if (!lattice_matrix_check(q)) throw std::invalid_argument("m must be integer, skew and nonsingular");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    return build_lattice_embedding(q, rational_from_json(j.at("tau")), k);
  });
}

json word_to_json(const GroupWord& w) {
  json out = json::array();
  for (const auto& l : w) out.push_back(word_to_string({l}));
  return out;
}

GroupWord word_from_json(const json& j) {
  return guarded("word", [&] {
    if (j.is_string()) return parse_word(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("word must be a string or an array of tokens");
    std::vector<std::string> tokens;
    for (const auto& t : j) tokens.push_back(t.get<std::string>());
    return parse_word_tokens(tokens);
  });
}

json complex_to_json(const ComplexRational& z) { return json::array({z.re.str(), z.im.str()}); }

json an_to_json(const ANElement& g) {
  json z = json::array();
  for (const auto& c : g.point.z) z.push_back(complex_to_json(c));
  return {{"p", g.p}, {"z", z}, {"t", g.point.t.str()}};
}

json matrix_to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

json qmatrix_to_json(const QMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

json qvector_to_json(const QVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

json chart_affine_to_json(const ChartAffineData& d) {
  json u = json::array(), v = json::array();
  for (const auto& x : d.u) u.push_back(qvector_to_json(x));
  for (const auto& x : d.v) v.push_back(qvector_to_json(x));
  return {{"u", u}, {"v", v}, {"t", d.t.str()}};
}

json normalization_to_json(const NormalizationResult& r) {
  json diag = json::array();
  for (const auto& d : r.diagnostics)
    diag.push_back({{"level", d.level}, {"unknowns", d.unknowns}, {"equations", d.equations}, {"rank", d.rank}});
  return {{"H", jet_to_json(r.h)}, {"G", jet_to_json(r.g)}, {"diagnostics", diag}};
}

json certificate_to_json(const ContractionCertificate& c) {
  json checks = json::array();
  for (const auto& n : c.checks)
    checks.push_back({{"generator", n.generator},
                      {"m", n.m},
                      {"u_norm", n.u_norm.str()},
                      {"margin", n.margin.str()},
                      {"operator_norm", n.operator_norm.str()},
                      {"co_norm", n.co_norm.str()},
                      {"bound", n.bound.str()},
                      {"ok", n.ok}});
  json u = json::array();
  for (const auto& x : c.u) u.push_back(qvector_to_json(x));
  return {{"k", c.k},   {"lambda", c.lambda.str()}, {"eps", c.eps.str()}, {"c1", c.c1.str()},
          {"c2", c.c2.str()}, {"u", u}, {"checks", checks}, {"ok", c.ok}};
}

}  // namespace sunjet
