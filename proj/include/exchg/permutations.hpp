#pragma once

#include <vector>

#include "exchg/core.hpp"

namespace exchg {

/// Largest sequence length for which symmetrize enumerates all N!
/// permutations unless the caller raises the cap.
inline constexpr std::size_t kDefaultMaxLength = 7;

/// A bijection of {0, ..., N-1}, stored as its image array.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t k) const { return image_[k]; }
  const std::vector<std::size_t>& image() const { return image_; }

  /// All N! permutations, in lexicographic order of their image arrays.
  static std::vector<Permutation> all(std::size_t n);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// (pi x)_k = x_{pi(k)}.
Sequence apply_permutation(const Permutation& pi, const Sequence& x);

/// (pi^t f)(x) = f(pi x).
Gamble lift_gamble(const Permutation& pi, const Gamble& f);

/// The projection ex: the uniform average of pi^t f over all N! permutations.
/// Throws BudgetExceeded when N exceeds max_length.
Gamble symmetrize(const Gamble& f, std::size_t max_length = kDefaultMaxLength);

/// True iff f is constant on every permutation-invariant atom.
bool is_permutation_invariant(const Gamble& f);

/// Basis {1_y - 1_{y_m}} of the exchangeability indifference space, with
/// y_m the lexicographically smallest sequence of each atom.
struct IndifferenceBasis {
  SequenceSpace space;
  std::vector<Gamble> vectors;
};

IndifferenceBasis indifference_basis(const SequenceSpace& space);

}  // namespace exchg
