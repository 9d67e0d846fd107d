#include "exchg/lp.hpp"

#include <stdexcept>

namespace exchg {

namespace {

class PhaseOneTableau {
 public:
  PhaseOneTableau(const std::vector<Vector>& generators, const Vector& target)
      : rows_(target.size()), structural_(generators.size()), width_(structural_ + rows_ + 1) {
    signs_.resize(rows_);
    table_.assign(rows_, Vector(width_));
    objective_.assign(width_, Rational());
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      signs_[i] = target[i].sign() < 0 ? -1 : 1;
      Vector& row = table_[i];
      for (std::size_t j = 0; j < structural_; ++j) {
        const Rational& v = generators[j][i];
        if (!v.is_zero()) row[j] = signs_[i] < 0 ? -v : v;
      }
      row[structural_ + i] = 1;
      row[width_ - 1] = signs_[i] < 0 ? -target[i] : target[i];
      basis_[i] = structural_ + i;
      // Reduced costs of the artificial-sum objective: c_j - sum_i T_ij.
      for (std::size_t j = 0; j < structural_; ++j) {
        if (!row[j].is_zero()) objective_[j] -= row[j];
      }
      objective_[width_ - 1] -= row[width_ - 1];
    }
  }

  std::size_t solve() {
    std::size_t pivots = 0;
    while (true) {
      // Bland: lowest-index column with negative reduced cost.
      std::size_t entering = width_;
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        if (objective_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == width_) return pivots;
      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& a = table_[i][entering];
        if (a.sign() <= 0) continue;
        Rational ratio = table_[i][width_ - 1] / a;
        if (leaving == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase I is bounded below by zero, so a negative reduced cost always
      // has a positive entry in its column.
      if (leaving == rows_) throw std::logic_error("phase-one simplex: unbounded direction");
      pivot(leaving, entering);
      ++pivots;
    }
  }

  bool feasible() const { return objective_[width_ - 1].is_zero(); }

  Vector primal() const {
    Vector lambda(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) lambda[basis_[i]] = table_[i][width_ - 1];
    }
    return lambda;
  }

  /// Farkas functional in the original (unsigned) row coordinates.
  Vector separating() const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      // Dual y_i = 1 - reduced cost of artificial i; c = -S y.
      Rational y = Rational(1) - objective_[structural_ + i];
      c[i] = signs_[i] < 0 ? y : -y;
    }
    return c;
  }

 private:
  void pivot(std::size_t r, std::size_t col) {
    Vector& prow = table_[r];
    const Rational inv = Rational(1) / prow[col];
    for (auto& v : prow) {
      if (!v.is_zero()) v *= inv;
    }
    auto eliminate = [&](Vector& row) {
      const Rational factor = row[col];
      if (factor.is_zero()) return;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!prow[j].is_zero()) row[j].sub_product(factor, prow[j]);
      }
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(table_[i]);
    }
    eliminate(objective_);
    basis_[r] = col;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t width_;
  std::vector<int> signs_;
  std::vector<Vector> table_;
  Vector objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

bool verify_nonneg_solution(const std::vector<Vector>& generators, const Vector& target, const NonnegSolution& s) {
  if (s.feasible) {
    if (s.coefficients.size() != generators.size()) return false;
    Vector sum(target.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
      if (s.coefficients[k].sign() < 0) return false;
      if (s.coefficients[k].is_zero()) continue;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i].add_product(s.coefficients[k], generators[k][i]);
    }
    return sum == target;
  }
  if (s.separating.size() != target.size()) return false;
  for (const auto& g : generators) {
    if (dot(s.separating, g).sign() < 0) return false;
  }
  return dot(s.separating, target).sign() < 0;
}

NonnegSolution solve_nonneg_combination(const std::vector<Vector>& generators, const Vector& target) {
  for (const auto& g : generators) {
    if (g.size() != target.size()) throw SpaceMismatch("solve_nonneg_combination: dimension mismatch");
  }
  PhaseOneTableau tableau(generators, target);
  NonnegSolution result;
  result.pivots = tableau.solve();
  result.feasible = tableau.feasible();
  if (result.feasible) {
    result.coefficients = tableau.primal();
  } else {
    result.separating = tableau.separating();
  }
  if (!verify_nonneg_solution(generators, target, result)) {
    throw std::logic_error("solve_nonneg_combination produced an invalid certificate");
  }
  return result;
}

}  // namespace exchg
