#pragma once

#include <map>
#include <vector>

#include "sunjet/gradedpoly.hpp"

namespace sunjet {

// Truncated formal transformation of R^{2n+1} fixing the origin. A term of
// component i has level wdeg - 1 (i < 2n) or wdeg - 2 (last component); only
// levels in [-1, r] are kept.
struct Jet {
  int n = 0;
  int r = 0;
  std::vector<Poly> comps;

  int dim() const { return 2 * n + 1; }
  friend bool operator==(const Jet& a, const Jet& b) {
    return a.n == b.n && a.r == b.r && a.comps == b.comps;
  }
};

// Validates the level bounds and the fixed origin, then drops levels above r.
Jet make_jet(int n, int r, std::vector<Poly> comps);
Jet identity_jet(int n, int r);
// I(k) = diag(1/k I_{2n}, 1/k^2)
Jet scaling_jet(int n, int r, const Rational& k);
Jet linear_jet(int n, int r, const QMatrix& l);

// Components restricted to levels [lo, hi]; not a transformation in general.
std::vector<Poly> level_components(const Jet& f, int lo, int hi);
Jet with_levels(const Jet& f, int lo, int hi);
bool has_level_minus_one(const Jet& f);
// Nonzero homogeneous parts keyed by level. Parts are stored as Jet values.
std::map<int, Jet> decompose_levels(const Jet& f);
Jet p0_part(const Jet& f);

// Linear data of F^(0): x' -> A x', x_{2n+1} -> b x_{2n+1} + Q(x').
struct P0Data {
  QMatrix a;
  Rational b;
  Poly q;
};
P0Data p0_data(const Jet& f);
bool p0_invertible(const Jet& f);
// Inverse of F^(0), exact.
Jet p0_inverse(const Jet& f);

// F o G truncated at level min(F.r, G.r). Both must have no level -1 part.
Jet compose(const Jet& f, const Jet& g);
Jet invert(const Jet& f);
Jet project(const Jet& f, int r);
Jet jet_power(const Jet& f, int m);

// Conjugation by L_v: x_{2n+1} -> x_{2n+1} + <v, x'> removing the level -1 part.
struct KillResult {
  Jet conjugator;
  std::vector<Rational> v;
  Jet result;
};
KillResult kill_level_minus_one(const Jet& f);

// Derivation D with levels in [1, r] -> time-one map sum_j D^j(x_i)/j!.
Jet jet_exp(const VectorField& d, int r);
// Inverse of jet_exp on {F : F^(0) = identity, no level -1}.
VectorField jet_log(const Jet& f);

// F_* X for F with only level 0 terms; exact.
VectorField act_on_field(const Jet& f, const VectorField& x);
// (DF X) o F^{-1} truncated at the given level; needs F.r >= truncation + 2
// unless F has only level 0 terms.
VectorField pushforward(const Jet& f, const VectorField& x, int truncation);

}  // namespace sunjet
