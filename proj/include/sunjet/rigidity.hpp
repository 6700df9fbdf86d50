#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sunjet/su_grading.hpp"

namespace sunjet {

enum class HomDomain { NPlus, NMinus, Full };

// Linear map from a graded subalgebra of su(n+1,1) into vector fields, given
// on a basis.
struct GradedLieHom {
  HomDomain domain = HomDomain::NPlus;
  int n = 1;
  std::vector<GradedGenerator> generators;
  std::vector<VectorField> images;

  // Image of an arbitrary element of the domain (by coordinates).
  VectorField apply(const CMatrix& x) const;
};

std::vector<GradedGenerator> domain_basis(int n, HomDomain domain);
GradedLieHom iota0_hom(int n, HomDomain domain);

struct HomVerification {
  bool ok = true;
  std::vector<std::string> failures;  // generator labels or "[a,b]"
};
// Grading of every image and bracket preservation on every basis pair.
HomVerification verify_graded_hom(const GradedLieHom& iota);

// Theta iota on n^-: xi^- -> [iota0 F^-, iota (-i xi)^+] and
// F^- -> 1/2 [iota0 F^-, [iota0 F^-, iota F^+]]. Throws std::domain_error if an
// image has the wrong level.
GradedLieHom theta(const GradedLieHom& iota);

struct IdentityCase {
  std::string id;
  bool ok = false;
  VectorField residual;
};
struct IdentityReport {
  bool precondition_ok = false;  // Theta iota = iota0 on n^-
  std::vector<IdentityCase> cases;
  bool ok() const;
};
// [iota0 F^-, iota F^+] = iota0 E and iota xi^+ = [iota0 (i xi)^-, iota F^+].
IdentityReport verify_normalized_bracket_identities(const GradedLieHom& iota);

struct KernelResult {
  int unknowns = 0;
  int rank = 0;
  std::vector<VectorField> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};
// Level +2 fields X with [iota0 F^-, X] = 0 (norm) and, for all basis xi,
// [[iota0 xi^-, X], iota0 F^+] + [[iota0 xi^-, iota0 F^+], X] = 0 (rel).
KernelResult final_kernel(int n, bool use_norm = true, bool use_rel = true);

using CVec = std::vector<ComplexRational>;

// ad(iota0 xi_1^-) ... ad(iota0 xi_k^-) X
VectorField nested_ad(const VectorField& x, const std::vector<CVec>& xis);

struct MultilinearReport {
  std::vector<VectorField> phi_values;
  std::vector<VectorField> psi_values;
  bool phi_symmetric = true;
  bool psi_symmetric = true;
  bool phi_vanishes = true;
  bool psi_vanishes = true;
  std::string asymmetry;  // first offending tuple
};
// Phi (4 slots, level -2) and Psi (3 slots, level -1) on the given tuples, with
// symmetry checked over all permutations of each tuple. Throws
// std::invalid_argument unless X has pure level +2 (or is zero).
MultilinearReport phi_psi_evaluate(const VectorField& x, const std::vector<std::vector<CVec>>& phi_tuples,
                                   const std::vector<std::vector<CVec>>& psi_tuples);

// Matrix identities used for eta = -i xi, each compared with the coefficient
// (a multiple of |xi|^2) shown in the argument.
struct AdIdentity {
  std::string id;
  std::string target;            // "0", "E", "xi-" or "eta-"
  Rational displayed;            // coefficient of |xi|^2 * target
  std::optional<Rational> actual;  // nullopt if not a multiple of target
  bool matches = false;
};
std::vector<AdIdentity> ad_identity_report(int n, const CVec& xi);

// Lattice data reduced to graded pieces: phi(X_i) = f(X_i)^(1), phi(Y) = f(Y)^(2).
struct HeisenbergHom {
  std::vector<VectorField> x_images;
  VectorField y_image;
};
// Needs r >= 3. Checks f(Y)^(1) = 0, [phi X_i, phi X_j] = m_ij phi Y and
// [phi X_i, phi Y] = 0; throws std::domain_error on failure.
HeisenbergHom hconn_construct(const LatticeHom& f, const LatticePresentation& l);

struct WeilCheck {
  bool adjoint_trivial = false;  // Ad(I(k)) = id on level 0 fields
  int dimension = 0;
  int rank = 0;                  // of Y -> Ad(I(k)) Y - k Y on level 0
  bool ok() const { return adjoint_trivial && rank == dimension; }
};
WeilCheck weil_check(int n, long k);

}  // namespace sunjet
