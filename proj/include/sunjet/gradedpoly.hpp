#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sunjet/linalg.hpp"
#include "sunjet/poly.hpp"

namespace sunjet {

// Polynomial vector field on R^{2n+1}. Component i multiplies d/dx_{i+1}.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int n);
  VectorField(int n, std::vector<Poly> components);
  // d/dx_{i+1}
  static VectorField partial(int n, int i);
  static VectorField single(int n, int component, const Poly& p);

  int n() const { return n_; }
  int dim() const { return 2 * n_ + 1; }
  const Poly& operator[](int i) const { return comps_.at(i); }
  const std::vector<Poly>& components() const { return comps_; }
  bool is_zero() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Rational& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  VectorField operator-() const;
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.n_ == b.n_ && a.comps_ == b.comps_;
  }

  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Poly> comps_;
};

// Level of the term m * d/dx_{component+1}.
inline int field_term_level(int dim, int component, const Monomial& m) {
  return m.weighted_degree() - (component == dim - 1 ? 2 : 1);
}

// [X,Y]_i = sum_j (Y_j d_j X_i - X_j d_j Y_i): the bracket of the Lie algebra
// of the diffeomorphism group, for which the chart map of su(n+1,1) and the
// jet exponential are homomorphisms.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// X applied to a function.
Poly apply_derivation(const VectorField& x, const Poly& f);

std::map<int, VectorField> grade_decompose(const VectorField& x);
VectorField level_part(const VectorField& x, int level);
VectorField level_range(const VectorField& x, int lo, int hi);
// Level of a homogeneous field; nullopt when zero or mixed.
std::optional<int> pure_level(const VectorField& x);

// (L X) o L^{-1} for an invertible linear map x -> L x of R^{2n+1}.
VectorField pushforward_linear(const QMatrix& l, const VectorField& x);
// I(k) = diag(1/k I_{2n}, 1/k^2).
QMatrix scaling_matrix(int n, const Rational& k);

// Monomial fields m * d/dx_i of every level in [lo, hi], in canonical order.
std::vector<VectorField> level_basis(int n, int lo, int hi);

// Basis of the fields of level <= max_level commuting with every element of basis.
std::vector<VectorField> centralizer(int n, const std::vector<VectorField>& basis, int max_level);

// Bracket data of a Heisenberg-type algebra: basis X_1..X_{2n}, Z with
// [X_a, X_b] = s(a,b) Z and Z central.
struct HeisenbergStructure {
  QMatrix s;
};

// s(2j-1, 2j) = -2 under lie_bracket: the bracket data of the standard
// connection below and of the chart image of n^-.
HeisenbergStructure standard_structure(int n);
// d_{2j-1} - x_{2j} d_{2n+1}, d_{2j} + x_{2j-1} d_{2n+1}, d_{2n+1}
std::vector<VectorField> standard_connection(int n);
// d_{2j-1} + x_{2j} d_{2n+1}, d_{2j} - x_{2j-1} d_{2n+1}, d_{2n+1}
std::vector<VectorField> standard_centralizer(int n);

struct HeisenbergCheck {
  bool ok = false;
  std::string failure;
  VectorField residual;
  Poly frame_determinant;
  bool frame_everywhere = false;  // determinant is a nonzero constant
};

HeisenbergCheck verify_heisenberg(const std::vector<VectorField>& basis,
                                  const HeisenbergStructure& structure,
                                  const std::vector<Rational>& base_point);

// E = log_lambda * unit, with log(lambda) carried as the rational log_lambda.
struct FormalLogField {
  Rational log_lambda;
  VectorField unit;
  VectorField value() const { return log_lambda * unit; }
};

// The field E with ad(E) X_a = (log lambda) X_a and ad(E) Z = 2 (log lambda) Z,
// vanishing at base_point. Such E is unique up to the centralizer, which the
// base point condition removes. Throws if basis is not a Heisenberg connection.
FormalLogField find_dilation(const std::vector<VectorField>& basis,
                             const HeisenbergStructure& structure, const Rational& log_lambda,
                             const std::vector<Rational>& base_point, int max_level = 2);

// True iff ad(e) preserves span(algebra) and acts there with eigenvalue 2c on
// the center (one-dimensional) and c on a complement. algebra must be a
// Heisenberg-type algebra in any basis.
bool dilates(const VectorField& e, const std::vector<VectorField>& algebra, const Rational& c);

// Coordinates of v in a linearly independent list of fields, if v lies in the span.
std::optional<QVector> coordinates(const std::vector<VectorField>& basis, const VectorField& v);

// Linear equations sum_j c_j A_j[e] = B[e] over field-valued equations e,
// split into one scalar row per (equation, component, monomial).
class FieldSystem {
 public:
  explicit FieldSystem(int unknowns) : unknowns_(unknowns) {}
  void add_image(int unknown, int equation, const VectorField& image);
  void add_rhs(int equation, const VectorField& rhs);
  void add_scalar_row(SparseSystem::Row row, const Rational& rhs);
  SparseSystem build() const;

 private:
  using Key = std::tuple<int, int, Monomial>;
  int row_of(const Key& k);
  int unknowns_;
  std::map<Key, int> rows_;
  std::vector<SparseSystem::Row> entries_;
  std::vector<Rational> rhs_;
};

}  // namespace sunjet
