#include "sunjet/heisenberg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sunjet {

Rational symplectic_phi(const std::vector<ComplexRational>& z,
                        const std::vector<ComplexRational>& zp) {
  if (z.size() != zp.size()) throw std::invalid_argument("dimension mismatch");
  Rational s(0);
  for (size_t j = 0; j < z.size(); ++j) s += zp[j].re * z[j].im - zp[j].im * z[j].re;
  return s;
}

HeisenbergElement heisenberg_identity(int n) {
  return {std::vector<ComplexRational>(n), Rational(0)};
}

HeisenbergElement group_product(const HeisenbergElement& g, const HeisenbergElement& h) {
  if (g.z.size() != h.z.size()) throw std::invalid_argument("dimension mismatch");
  HeisenbergElement out{g.z, g.t + h.t - symplectic_phi(g.z, h.z)};
  for (size_t j = 0; j < g.z.size(); ++j) out.z[j] += h.z[j];
  return out;
}

HeisenbergElement group_inverse(const HeisenbergElement& g) {
  HeisenbergElement out{g.z, -g.t};
  for (auto& z : out.z) z = -z;
  return out;
}

HeisenbergAlgebraElement algebra_bracket(const HeisenbergAlgebraElement& x,
                                         const HeisenbergAlgebraElement& y) {
  return {std::vector<ComplexRational>(x.xi.size()), Rational(-2) * symplectic_phi(x.xi, y.xi)};
}

HeisenbergElement algebra_exp(const HeisenbergAlgebraElement& x) { return {x.xi, x.tau}; }
HeisenbergAlgebraElement algebra_log(const HeisenbergElement& g) { return {g.z, g.t}; }

bool lattice_matrix_check(const QMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) return false;
      if (m(i, j) != -m(j, i)) return false;
    }
  return !determinant<Rational>(m).is_zero();
}

QMatrix basis_matrix(const LatticePresentation& l) {
  QMatrix g(2 * l.n, 2 * l.n);
  for (int c = 0; c < 2 * l.n; ++c)
    for (int j = 0; j < l.n; ++j) {
      g(2 * j, c) = l.xi_basis[c].xi[j].re;
      g(2 * j + 1, c) = l.xi_basis[c].xi[j].im;
    }
  return g;
}

LatticePresentation build_lattice_embedding(const QMatrix& m, const Rational& tau, long k) {
  if (!lattice_matrix_check(m)) throw std::invalid_argument("m must be integer, skew and nonsingular");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (tau.is_zero()) throw std::invalid_argument("tau must be nonzero");
  int dim = static_cast<int>(m.rows());
  int n = dim / 2;
  // Want G^T Omega G = S with Omega(a,b) = Phi(basis_a, basis_b) and
  // S = -(tau/2) m. Build P with P^T S P = Omega by symplectic Gram-Schmidt,
  // then G = P^{-1}.
  QMatrix s = (Rational(-1) * tau / Rational(2)) * m;
  auto omega = [&](const QVector& x, const QVector& y) { return Rational((x.transpose() * s * y)(0, 0)); };
  std::vector<QVector> pool;
  for (int i = 0; i < dim; ++i) pool.push_back(QVector::Unit(dim, i));
  QMatrix p(dim, dim);
  for (int j = 0; j < n; ++j) {
    QVector a = pool.front();
    size_t qi = 1;
    while (qi < pool.size() && omega(a, pool[qi]).is_zero()) ++qi;
    if (qi == pool.size()) throw std::logic_error("degenerate form during Gram-Schmidt");
    QVector b = pool[qi] * (Rational(-1) / omega(a, pool[qi]));  // omega(a, b) = -1
    std::vector<QVector> rest;
    for (size_t t = 1; t < pool.size(); ++t) {
      if (t == qi) continue;
      QVector w = pool[t];
      Rational beta = omega(a, w);
      Rational alpha = -omega(b, w);
      w = w + alpha * a + beta * b;
      rest.push_back(w);
    }
    pool = std::move(rest);
    p.col(2 * j) = a;
    p.col(2 * j + 1) = b;
  }
  auto g = inverse<Rational>(p);
  if (!g) throw std::logic_error("symplectic basis is singular");
  LatticePresentation l;
  l.n = n;
  l.m = m;
  l.k = k;
  l.tau = tau;
  for (int c = 0; c < dim; ++c) {
    HeisenbergAlgebraElement x{std::vector<ComplexRational>(n), Rational(0)};
    for (int j = 0; j < n; ++j) x.xi[j] = ComplexRational((*g)(2 * j, c), (*g)(2 * j + 1, c));
    l.xi_basis.push_back(x);
  }
  // The relators need -2 Phi(xi_a, xi_b) = tau m_ab exactly.
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      if (Rational(-2) * symplectic_phi(l.xi_basis[a].xi, l.xi_basis[b].xi) != tau * m(a, b))
        throw std::logic_error("lattice embedding failed its own check");
  return l;
}

LatticePresentation standard_lattice(int n, long k) {
  QMatrix m = QMatrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    m(2 * j, 2 * j + 1) = Rational(1);
    m(2 * j + 1, 2 * j) = Rational(-1);
  }
  return build_lattice_embedding(m, Rational(2), k);
}

namespace {

Letter parse_token(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty word token");
  Letter l;
  l.gen = tok[0];
  if (l.gen != 'a' && l.gen != 'b' && l.gen != 'c') throw std::invalid_argument("bad generator in " + tok);
  size_t pos = 1;
  if (l.gen == 'b') {
    size_t start = pos;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("b needs an index: " + tok);
    l.index = std::stoi(tok.substr(start, pos - start));
    if (l.index < 1) throw std::invalid_argument("b index must be >= 1: " + tok);
  }
  if (pos < tok.size()) {
    if (tok[pos] != '^') throw std::invalid_argument("bad token " + tok);
    std::string e = tok.substr(pos + 1);
    size_t i = (!e.empty() && (e[0] == '-' || e[0] == '+')) ? 1 : 0;
    if (i == e.size()) throw std::invalid_argument("bad exponent in " + tok);
    for (size_t t = i; t < e.size(); ++t)
      if (!std::isdigit(static_cast<unsigned char>(e[t]))) throw std::invalid_argument("bad exponent in " + tok);
    l.power = std::stol(e);
  }
  return l;
}

}  // namespace

GroupWord parse_word_tokens(const std::vector<std::string>& tokens) {
  GroupWord w;
  for (const auto& t : tokens) w.push_back(parse_token(t));
  return w;
}

GroupWord parse_word(const std::string& s) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return parse_word_tokens(tokens);
}

std::string word_to_string(const GroupWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i].gen;
    if (w[i].gen == 'b') os << w[i].index;
    if (w[i].power != 1) os << '^' << w[i].power;
  }
  return os.str();
}

GroupWord word_inverse(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.power = -l.power;
  return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

ANElement an_identity(int n) { return {0, heisenberg_identity(n)}; }

ANElement an_product(const ANElement& g, const ANElement& h, long k) {
  Rational s = Rational(k).pow(static_cast<int>(g.p));
  HeisenbergElement moved{h.point.z, h.point.t * s * s};
  for (auto& z : moved.z) z = ComplexRational(s) * z;
  return {g.p + h.p, group_product(g.point, moved)};
}

ANElement an_inverse(const ANElement& g, long k) {
  Rational s = Rational(k).pow(static_cast<int>(-g.p));
  HeisenbergElement h{g.point.z, -g.point.t * s * s};
  for (auto& z : h.z) z = -(ComplexRational(s) * z);
  return {-g.p, h};
}

ANElement evaluate_word(const GroupWord& w, const LatticePresentation& l) {
  ANElement acc = an_identity(l.n);
  for (const auto& letter : w) {
    ANElement e = an_identity(l.n);
    Rational pw(letter.power);
    switch (letter.gen) {
      case 'a':
        e.p = letter.power;
        break;
      case 'b': {
        if (letter.index > 2 * l.n) throw std::invalid_argument("b index out of range");
        const auto& xi = l.xi_basis[letter.index - 1].xi;
        for (int j = 0; j < l.n; ++j) e.point.z[j] = ComplexRational(pw) * xi[j];
        break;
      }
      case 'c':
        e.point.t = pw * l.tau;
        break;
      default:
        throw std::invalid_argument("bad generator");
    }
    acc = an_product(acc, e, l.k);
  }
  return acc;
}

std::vector<std::pair<std::string, GroupWord>> relators(const LatticePresentation& l) {
  std::vector<std::pair<std::string, GroupWord>> out;
  long k = l.k;
  for (int i = 1; i <= 2 * l.n; ++i)
    out.push_back({"a b" + std::to_string(i) + " a^-1 = b" + std::to_string(i) + "^k",
                   {{'a', 0, 1}, {'b', i, 1}, {'a', 0, -1}, {'b', i, -k}}});
  out.push_back({"a c a^-1 = c^(k^2)", {{'a', 0, 1}, {'c', 0, 1}, {'a', 0, -1}, {'c', 0, -k * k}}});
  for (int i = 1; i <= 2 * l.n; ++i)
    for (int j = i + 1; j <= 2 * l.n; ++j) {
      long mij = l.m(i - 1, j - 1).to_long();
      GroupWord w{{'b', i, 1}, {'b', j, 1}, {'b', i, -1}, {'b', j, -1}};
      if (mij != 0) w.push_back({'c', 0, -mij});
      out.push_back({"[b" + std::to_string(i) + ",b" + std::to_string(j) + "] = c^m" +
                         std::to_string(i) + std::to_string(j),
                     w});
    }
  for (int i = 1; i <= 2 * l.n; ++i)
    out.push_back({"[b" + std::to_string(i) + ",c] = 1",
                   {{'b', i, 1}, {'c', 0, 1}, {'b', i, -1}, {'c', 0, -1}}});
  return out;
}

LatticeHom extend_lattice_hom(const std::vector<Jet>& b_images, const Jet& c_image,
                              const LatticePresentation& l) {
  if (static_cast<int>(b_images.size()) != 2 * l.n) throw std::invalid_argument("need 2n images");
  LatticeHom h;
  h.r = c_image.r;
  for (const auto& b : b_images) {
    if (b.n != l.n) throw std::invalid_argument("image dimension mismatch");
    h.x_images.push_back(jet_log(b));
    h.r = std::min(h.r, b.r);
  }
  h.y_image = jet_log(c_image);
  int dim = 2 * l.n;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      VectorField res =
          level_range(lie_bracket(h.x_images[i], h.x_images[j]), -2, h.r) - l.m(i, j) * h.y_image;
      if (!level_range(res, -2, h.r).is_zero())
        throw std::domain_error("hom property fails on [X" + std::to_string(i + 1) + ",X" +
                                std::to_string(j + 1) + "]: " + res.str());
    }
    VectorField res = level_range(lie_bracket(h.x_images[i], h.y_image), -2, h.r);
    if (!res.is_zero())
      throw std::domain_error("hom property fails on [X" + std::to_string(i + 1) + ",Y]: " + res.str());
  }
  return h;
}

}  // namespace sunjet
