#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sunjet/jetgroup.hpp"

namespace sunjet {

// Point (z, t) of C^n x R.
struct HeisenbergElement {
  std::vector<ComplexRational> z;
  Rational t;
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

// Lie algebra element (xi, tau); [(xi,tau),(xi',tau')] = (0, -2 Phi(xi, xi')).
struct HeisenbergAlgebraElement {
  std::vector<ComplexRational> xi;
  Rational tau;
  friend bool operator==(const HeisenbergAlgebraElement&, const HeisenbergAlgebraElement&) = default;
};

// Phi(z, z') = Im(conj(z')^T z)
Rational symplectic_phi(const std::vector<ComplexRational>& z,
                        const std::vector<ComplexRational>& zp);

HeisenbergElement heisenberg_identity(int n);
HeisenbergElement group_product(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement group_inverse(const HeisenbergElement& g);
HeisenbergAlgebraElement algebra_bracket(const HeisenbergAlgebraElement& x,
                                         const HeisenbergAlgebraElement& y);
// exp and log are the identity in these coordinates.
HeisenbergElement algebra_exp(const HeisenbergAlgebraElement& x);
HeisenbergAlgebraElement algebra_log(const HeisenbergElement& g);

// Integer, skew-symmetric, nonsingular, even size.
bool lattice_matrix_check(const QMatrix& m);

struct LatticePresentation {
  int n = 0;
  QMatrix m;  // integer skew matrix m_ij
  long k = 2;
  Rational tau;
  std::vector<HeisenbergAlgebraElement> xi_basis;  // log b_1 .. log b_{2n}
};

// Real 2n x 2n matrix of xi_basis in coordinates (Re z_1, Im z_1, ...).
QMatrix basis_matrix(const LatticePresentation& l);
// Finds rational xi_1..xi_{2n} with -2 Phi(xi_i, xi_j) = tau m_ij, which is
// what the relators [b_i, b_j] = c^{m_ij} require.
LatticePresentation build_lattice_embedding(const QMatrix& m, const Rational& tau, long k);
// m_{2j-1,2j} = 1, tau = 2; the embedding is then xi = {e_1, i e_1, ...}.
LatticePresentation standard_lattice(int n, long k);

// Letter of a word in a, b_1..b_{2n}, c with an integer power.
struct Letter {
  char gen = 'a';  // 'a', 'b' or 'c'
  int index = 0;   // 1-based for 'b'
  long power = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using GroupWord = std::vector<Letter>;

// Tokens separated by spaces or commas: "a", "b1^-1", "c^4".
GroupWord parse_word(const std::string& s);
GroupWord parse_word_tokens(const std::vector<std::string>& tokens);
std::string word_to_string(const GroupWord& w);
GroupWord word_inverse(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);

// Element n(h) a^p of AN. Product (p,h)(p',h') = (p+p', h (k^p z', k^{2p} t')).
struct ANElement {
  long p = 0;
  HeisenbergElement point;
  friend bool operator==(const ANElement&, const ANElement&) = default;
};

ANElement an_identity(int n);
ANElement an_product(const ANElement& g, const ANElement& h, long k);
ANElement an_inverse(const ANElement& g, long k);
ANElement evaluate_word(const GroupWord& w, const LatticePresentation& l);

// The relators of the presentation, with readable names.
std::vector<std::pair<std::string, GroupWord>> relators(const LatticePresentation& l);

// Lie algebra map log o f on the generators of the lattice.
struct LatticeHom {
  std::vector<VectorField> x_images;  // phi(X_i) = log f(b_i)
  VectorField y_image;                // phi(Y) = log f(c)
  int r = 0;
};

// Checks [phi X_i, phi X_j] = m_ij phi Y and [phi X_i, phi Y] = 0 up to level r.
// Throws std::domain_error on a violation.
LatticeHom extend_lattice_hom(const std::vector<Jet>& b_images, const Jet& c_image,
                              const LatticePresentation& l);

}  // namespace sunjet
