#include "exchg/permutations.hpp"

#include <algorithm>
#include <numeric>

#include "exchg/counts.hpp"

namespace exchg {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) throw PreconditionFailed("image array is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Sequence apply_permutation(const Permutation& pi, const Sequence& x) {
  if (pi.size() != x.size()) throw SpaceMismatch("permutation and sequence lengths differ");
  Sequence y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[pi(k)];
  return y;
}

Gamble lift_gamble(const Permutation& pi, const Gamble& f) {
  const auto& space = f.space();
  if (pi.size() != space.length()) throw SpaceMismatch("permutation and gamble lengths differ");
  Vector values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    values[i] = f[space.index_of(apply_permutation(pi, space.sequence_at(i)))];
  }
  return Gamble(space, std::move(values));
}

Gamble symmetrize(const Gamble& f, std::size_t max_length) {
  const auto& space = f.space();
  const std::size_t n = space.length();
  if (n > max_length) {
    throw BudgetExceeded("symmetrize: N = " + std::to_string(n) + " exceeds permutation cap " +
                         std::to_string(max_length));
  }
  Vector sums(space.size());
  std::int64_t count = 0;
  std::vector<Sequence> sequences(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) sequences[i] = space.sequence_at(i);
  for (const auto& pi : Permutation::all(n)) {
    ++count;
    for (std::size_t i = 0; i < space.size(); ++i) {
      const Rational& v = f[space.index_of(apply_permutation(pi, sequences[i]))];
      if (!v.is_zero()) sums[i] += v;
    }
  }
  const Rational inv(1, count);
  for (auto& s : sums) {
    if (!s.is_zero()) s *= inv;
  }
  return Gamble(space, std::move(sums));
}

bool is_permutation_invariant(const Gamble& f) {
  const CountSpace counts(f.space());
  for (const auto& m : counts.vectors()) {
    const auto members = atom_members(m);
    const Rational& first = f.at(members.front());
    for (std::size_t k = 1; k < members.size(); ++k) {
      if (f.at(members[k]) != first) return false;
    }
  }
  return true;
}

IndifferenceBasis indifference_basis(const SequenceSpace& space) {
  IndifferenceBasis basis{space, {}};
  const CountSpace counts(space);
  for (const auto& m : counts.vectors()) {
    const auto members = atom_members(m);
    const Gamble representative = Gamble::indicator(space, members.front());
    for (std::size_t k = 1; k < members.size(); ++k) {
      basis.vectors.push_back(gamble_sub(Gamble::indicator(space, members[k]), representative));
    }
  }
  return basis;
}

}  // namespace exchg
