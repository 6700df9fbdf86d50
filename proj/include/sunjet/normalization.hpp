#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sunjet/jetgroup.hpp"

namespace sunjet {

struct LevelDiagnostics {
  int level = 0;
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
};

struct NormalizationResult {
  Jet h;  // conjugator, H^(0) = identity
  Jet g;  // F^(0)
  std::vector<LevelDiagnostics> diagnostics;
};

struct NormalizeOptions {
  // Shuffle the monomial basis of every level system with this seed.
  std::optional<std::uint64_t> permutation_seed;
};

// Linear part of delta -> (F o (H + delta) - (H + delta) o G)^(q) on level-q
// fields: DG . delta - delta o G, one image per basis element.
std::vector<VectorField> level_operator(const Jet& g, const std::vector<VectorField>& basis);
// (F o H - H o G)^(q) as a field.
VectorField level_residual(const Jet& f, const Jet& h, const Jet& g, int q);

// H with F o H = H o F^(0) in P_r, level by level. F must have no level -1
// part. Throws std::domain_error naming the level whose system is singular.
NormalizationResult sternberg_normalize(const Jet& f, const NormalizeOptions& options = {});

struct InvertibilityReport {
  bool invertible = false;
  int dimension = 0;
  int rank = 0;
  std::vector<VectorField> kernel;
};

// delta -> (DL . delta) o L^{-1} - delta on level-q fields, which is
// L o delta o L^{-1} - delta for linear L and its linearization otherwise.
InvertibilityReport operator_invertibility(const Jet& l, int q);

// True iff no lambda_i equals a product of the lambdas with total degree in
// [2, max_degree].
bool resonance_check(const std::vector<Rational>& eigenvalues, int max_degree);

// Rebuilds F from its low levels using I(k) o F o I(k)^{-1} = F^m:
// F^(q) = ((F_{<q})^m)^(q) / (k^q - m) for q above the supplied levels.
// low must have F^(0) = identity.
Jet reconstruct_from_low_order(const Jet& low, long k, long m, int r);

struct NormCheck {
  std::string generator;
  long m = 0;
  Rational u_norm;          // ||u||_1
  Rational margin;          // -m^2 ||u||_1 c1 + ((1 - eps) m - lambda) c2
  Rational operator_norm;   // ||sum_{j<m} A^j||
  Rational co_norm;         // 1 / ||(sum_{j<m} A^j)^{-1}||
  Rational bound;           // eps m + lambda
  bool ok = false;
};

struct ContractionCertificate {
  long k = 2;
  Rational lambda;
  Rational eps;
  Rational c1;
  Rational c2;
  std::vector<QVector> u;
  std::vector<NormCheck> checks;
  bool ok = false;
};

// A_gamma = [[I, u], [0, 1]]. Each u is checked with m = k and m = k^2, and
// the central generator with u = 0, m = k^2. Throws std::invalid_argument
// unless 1/k < lambda < 1 and 0 < eps < 1/k^2.
ContractionCertificate contraction_certificate(long k, const Rational& lambda, const Rational& eps,
                                               const std::vector<QVector>& u);

// m c^{r0+1} < k^{r0-2}
bool germ_constant_check(long k, long m, int r0, const Rational& c);

// I(k) plus a few +-1/10 coefficients at levels -1..r (level -1 terms are
// only added when the level 1 block x_{2n+1} d_i, i <= 2n, is left alone).
// Draws whose linear part is resonant at some level in [1, r] are redrawn.
Jet random_perturbation(int n, long k, int r, std::uint64_t seed);

}  // namespace sunjet
