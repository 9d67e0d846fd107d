#include "exchg/linalg.hpp"

namespace exchg {

SpanBasis::SpanBasis(std::size_t dimension, const std::vector<Vector>& generators) : dimension_(dimension) {
  for (const auto& g : generators) add(g);
}

Vector SpanBasis::reduce(Vector v) const {
  if (v.size() != dimension_) throw SpaceMismatch("span basis dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational factor = v[pivots_[i]];
    if (factor.is_zero()) continue;
    const Vector& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < dimension_; ++j) {
      if (!row[j].is_zero()) v[j] -= factor * row[j];
    }
  }
  return v;
}

bool SpanBasis::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dimension_ && r[pivot].is_zero()) ++pivot;
  if (pivot == dimension_) return false;
  const Rational inv = Rational(1) / r[pivot];
  for (std::size_t j = pivot; j < dimension_; ++j) {
    if (!r[j].is_zero()) r[j] *= inv;
  }
  // Eliminate the new pivot from older rows so every row stays reduced at
  // every pivot column; reduce() then only needs one pass in any order.
  for (auto& row : rows_) {
    const Rational factor = row[pivot];
    if (factor.is_zero()) continue;
    for (std::size_t j = pivot; j < dimension_; ++j) {
      if (!r[j].is_zero()) row[j] -= factor * r[j];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool SpanBasis::contains(const Vector& v) const { return vec_is_zero(reduce(v)); }

std::optional<Vector> solve_linear(const std::vector<Vector>& columns, const Vector& target) {
  const std::size_t n = columns.size();
  const std::size_t m = target.size();
  for (const auto& c : columns) {
    if (c.size() != m) throw SpaceMismatch("solve_linear: column dimension mismatch");
  }
  // Augmented matrix, row-major.
  std::vector<Vector> a(m, Vector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
    a[i][n] = target[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j <= n; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j <= n; ++j) {
        if (!a[row][j].is_zero()) a[i][j] -= factor * a[row][j];
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (!a[i][n].is_zero()) return std::nullopt;
  }
  Vector x(n);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = a[i][n];
  return x;
}

std::size_t rank_of(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  return SpanBasis(vectors.front().size(), vectors).rank();
}

}  // namespace exchg
