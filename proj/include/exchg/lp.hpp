#pragma once

#include <vector>

#include "exchg/core.hpp"

namespace exchg {

/// Outcome of the exact feasibility test "exists lambda >= 0 with
/// sum_k lambda_k v_k = t".
///
/// When feasible, `coefficients` holds one such lambda. When infeasible,
/// `separating` holds a Farkas functional c with <c, v_k> >= 0 for every
/// generator and <c, t> < 0.
struct NonnegSolution {
  bool feasible = false;
  Vector coefficients;
  Vector separating;
  std::size_t pivots = 0;
};

/// Exact rational Phase-I simplex with Bland's rule. Every returned
/// certificate is re-verified with exact arithmetic before returning; a
/// failed verification throws std::logic_error.
NonnegSolution solve_nonneg_combination(const std::vector<Vector>& generators, const Vector& target);

/// Checks a certificate independently of how it was produced.
bool verify_nonneg_solution(const std::vector<Vector>& generators, const Vector& target, const NonnegSolution& s);

}  // namespace exchg
