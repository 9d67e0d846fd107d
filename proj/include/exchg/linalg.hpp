#pragma once

#include <optional>
#include <vector>

#include "exchg/core.hpp"

namespace exchg {

/// Incrementally maintained row-echelon basis of a subspace of Q^d.
/// Membership tests reduce against the stored pivots, so a basis built
/// once can answer many queries.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dimension) : dimension_(dimension) {}
  SpanBasis(std::size_t dimension, const std::vector<Vector>& generators);

  /// Returns true when v was independent of the current span.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  Vector reduce(Vector v) const;

  std::size_t dimension_;
  std::vector<Vector> rows_;            // each row has a leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

/// Solves sum_k x_k columns[k] = target exactly. Returns one solution (free
/// variables set to zero) or nullopt when the system is inconsistent.
std::optional<Vector> solve_linear(const std::vector<Vector>& columns, const Vector& target);

/// Rank of a family of vectors.
std::size_t rank_of(const std::vector<Vector>& vectors);

}  // namespace exchg
