#include "sunjet/linalg.hpp"

#include <stdexcept>

namespace sunjet {

SparseSystem::SparseSystem(int ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

namespace {

// a - f * b on sorted sparse rows.
SparseSystem::Row axpy(const SparseSystem::Row& a, const Rational& f, const SparseSystem::Row& b) {
  SparseSystem::Row out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void SparseSystem::add_row(Row row, Rational rhs) {
  ++nrows_;
  for (auto& [c, v] : row)
    if (c < 0 || c >= ncols_) throw std::out_of_range("sparse column index");
  std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
  // Reduce against existing pivots, smallest column first. A pivot row only
  // has entries right of its pivot, so the leading column strictly grows.
  while (!row.empty()) {
    int p = pivot_of_col_[row[0].first];
    if (p < 0) break;
    Rational f = row[0].second;
    rhs -= f * pivots_[p].rhs;
    row = axpy(row, f, pivots_[p].row);
  }
  if (row.empty()) {
    if (!rhs.is_zero()) consistent_ = false;
    return;
  }
  Rational inv = row[0].second.inverse();
  for (auto& e : row) e.second *= inv;
  rhs *= inv;
  pivot_of_col_[row[0].first] = static_cast<int>(pivots_.size());
  pivots_.push_back({std::move(row), std::move(rhs)});
}

std::vector<Rational> SparseSystem::back_substitute(std::vector<Rational> x) const {
  for (int c = ncols_ - 1; c >= 0; --c) {
    int p = pivot_of_col_[c];
    if (p < 0) continue;
    const Pivot& piv = pivots_[p];
    Rational v = x[c];
    for (size_t i = 1; i < piv.row.size(); ++i) {
      const auto& [j, a] = piv.row[i];
      if (!x[j].is_zero()) v -= a * x[j];
    }
    x[c] = std::move(v);
  }
  return x;
}

std::optional<std::vector<Rational>> SparseSystem::solution() const {
  if (!consistent_) return std::nullopt;
  std::vector<Rational> x(ncols_);
  for (const auto& piv : pivots_) x[piv.row[0].first] = piv.rhs;
  return back_substitute(std::move(x));
}

std::vector<std::vector<Rational>> SparseSystem::kernel() const {
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < ncols_; ++f) {
    if (pivot_of_col_[f] >= 0) continue;
    std::vector<Rational> x(ncols_);
    x[f] = Rational(1);
    basis.push_back(back_substitute(std::move(x)));
  }
  return basis;
}

}  // namespace sunjet
