#pragma once

#include <map>
#include <string>
#include <vector>

#include "sunjet/heisenberg.hpp"

namespace sunjet {

// Matrices of size n+2, rows and columns indexed 0, 1..n, n+1.
// H(0,n+1) = H(n+1,0) = 1, H(i,i) = 1 for 1 <= i <= n.
CMatrix hermitian_form(int n);
// X* H + H X = 0 and trace X = 0.
bool in_su(const CMatrix& x);
CMatrix commutator(const CMatrix& a, const CMatrix& b);

enum class GenKind { E, FPlus, FMinus, XiPlus, XiMinus, Zero };

// One of E, F+, F-, xi+, xi-, or an element diag(z, U, -conj z) of g^(0).
struct GradedGenerator {
  GenKind kind = GenKind::E;
  std::vector<ComplexRational> xi;  // for XiPlus / XiMinus
  ComplexRational z;                // for Zero
  CMatrix u;                        // for Zero, n x n skew-Hermitian
  std::string label;
};

int declared_grade(const GradedGenerator& g);
CMatrix materialize(const GradedGenerator& g, int n);

CMatrix gen_e(int n);
CMatrix gen_f_plus(int n);
CMatrix gen_f_minus(int n);
CMatrix gen_xi_plus(const std::vector<ComplexRational>& xi);
CMatrix gen_xi_minus(const std::vector<ComplexRational>& xi);
// e_j and i e_j as complex vectors (j 0-based).
std::vector<ComplexRational> unit_vector(int n, int j, bool imaginary);

// Real bases, labelled: e_j^±, (ie_j)^±, F^±, E and a basis of the rest of g^(0).
std::vector<GradedGenerator> nplus_basis(int n);
std::vector<GradedGenerator> nminus_basis(int n);
std::vector<GradedGenerator> su_basis(int n);

// ad(E)-eigendecomposition; keys in [-2, 2].
std::map<int, CMatrix> grade_of(const CMatrix& x);

// Real coordinates of x in the span of the given matrices, if x lies in it.
std::optional<QVector> matrix_coordinates(const std::vector<CMatrix>& basis, const CMatrix& x);

struct RelationCase {
  std::string id;
  bool ok = false;
  std::string detail;
};
// All displayed bracket relations of the graded pieces, by exact commutators
// over every pair of basis vectors xi, eta in {e_j, i e_j}.
std::vector<RelationCase> bracket_relation_table(int n);

// Chart field of X: lift x to (1, z, -|z|^2/2 + i x_{2n+1}), move it by
// (I + tX) with t^2 = 0, renormalize the first coordinate and read off the
// t-coefficient in the chart (Re z, Im z, Im w).
VectorField induced_vector_field(const CMatrix& x);

struct HomomorphismCheck {
  bool ok = true;
  std::vector<std::string> failures;
  int pairs = 0;
};
HomomorphismCheck verify_homomorphism(int n, const std::vector<GradedGenerator>& basis);

// Affine map (x0, x) -> lin * (x0, x) + shift of R^{2n+1}, coordinate x0 first.
struct AffineMap {
  QMatrix lin;
  QVector shift;
  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.lin == b.lin && a.shift == b.shift;
  }
};

struct ChartAffineData {
  std::vector<QVector> u;  // (x0, x) -> (x0 - <u_i, x>, x + v_i) for b_i
  std::vector<QVector> v;
  Rational t;              // c acts by (x0 - t, x)
};

// Matrix of an element of AN: n(z,t) a^p with n(z,t) = [[1, -z*, -|z|^2/2 - it], [0, I, z], [0, 0, 1]]
// and a = diag(k, I, 1/k).
CMatrix an_matrix(const ANElement& g, long k);
CMatrix word_matrix(const GroupWord& w, const LatticePresentation& l);

// Action of the word in the second chart, lifting (x0, x) to
// (-|z|^2/2 + i x0, z, 1). Throws if the result is not affine.
AffineMap psi_chart_action(const GroupWord& w, const LatticePresentation& l);
ChartAffineData chart_affine_data(const LatticePresentation& l);

// Jet at the origin of the action in the first chart, to level r.
Jet phi_chart_jet(const GroupWord& w, const LatticePresentation& l, int r);

}  // namespace sunjet
