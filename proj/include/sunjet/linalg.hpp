#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "sunjet/rational.hpp"

namespace sunjet {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using QMatrix = Mat<Rational>;
using QVector = Vec<Rational>;
using CMatrix = Mat<ComplexRational>;
using CVector = Vec<ComplexRational>;

template <class S>
struct RowEchelon {
  Mat<S> reduced;           // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination, exact.
template <class S>
RowEchelon<S> row_reduce(Mat<S> a) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    S inv = S(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      S f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) {
        if (!is_zero(a(row, j))) a(i, j) = a(i, j) - f * a(row, j);
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <class S>
int rank(const Mat<S>& a) {
  return static_cast<int>(row_reduce<S>(a).pivots.size());
}

// Columns form a basis of the null space; free variables set to unit vectors.
template <class S>
Mat<S> kernel(const Mat<S>& a) {
  auto e = row_reduce<S>(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<int> free;
  for (int j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Mat<S> k = Mat<S>::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = S(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

// Some solution of a x = b (free variables zero), or nullopt if inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto e = row_reduce<S>(aug);
  Vec<S> x = Vec<S>::Zero(a.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(r, a.cols());
  }
  return x;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Mat<S> aug(a.rows(), 2 * a.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(a.cols()) = Mat<S>::Identity(a.rows(), a.cols());
  auto e = row_reduce<S>(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < a.rows() || e.pivots.back() >= a.cols())
    return std::nullopt;
  return Mat<S>(e.reduced.rightCols(a.cols()));
}

template <class S>
bool is_zero_matrix(const Mat<S>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

// Determinant by Gaussian elimination.
template <class S>
S determinant(Mat<S> a) {
  S det(1);
  for (Eigen::Index col = 0; col < a.cols(); ++col) {
    Eigen::Index p = col;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) return S(0);
    if (p != col) {
      a.row(p).swap(a.row(col));
      det = -det;
    }
    det = det * a(col, col);
    S inv = S(1) / a(col, col);
    for (Eigen::Index i = col + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, col))) continue;
      S f = a(i, col) * inv;
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(col, j);
    }
  }
  return det;
}

// Sparse exact linear system built row by row. Rows are reduced against the
// current pivots as they arrive, pivoting on the smallest remaining column.
class SparseSystem {
 public:
  using Row = std::vector<std::pair<int, Rational>>;  // sorted by column

  explicit SparseSystem(int ncols);

  void add_row(Row row, Rational rhs = Rational(0));

  int cols() const { return ncols_; }
  int rows() const { return nrows_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  bool consistent() const { return consistent_; }

  // Free variables zero; nullopt if inconsistent.
  std::optional<std::vector<Rational>> solution() const;
  // One vector per free column, that column set to 1.
  std::vector<std::vector<Rational>> kernel() const;

 private:
  struct Pivot {
    Row row;  // leading entry is 1 at the pivot column
    Rational rhs;
  };
  std::vector<Rational> back_substitute(std::vector<Rational> x) const;

  int ncols_;
  int nrows_ = 0;
  bool consistent_ = true;
  std::vector<int> pivot_of_col_;
  std::vector<Pivot> pivots_;
};

}  // namespace sunjet
