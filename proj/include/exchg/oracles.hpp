#pragma once

#include <vector>

#include "exchg/choice.hpp"
#include "exchg/desirability.hpp"

namespace exchg {

// Deliberately naive cross-checks for the LP kernel and the axiom filters.

inline constexpr std::size_t kFmMaxDimension = 12;
inline constexpr std::size_t kFmMaxGenerators = 6;

/// Exists lambda >= 0 with sum_k lambda_k v_k = t, by Fourier-Motzkin
/// elimination. Throws BudgetExceeded beyond 12 dimensions or 6 generators.
bool fm_feasible(const std::vector<Vector>& generators, const Vector& target);

/// Membership in Posi(A u {1_x}) + span(B), decided by elimination over the
/// A and B multipliers only (the indicator slack becomes an inequality).
/// Same budget as fm_feasible, counted over A and B.
bool fm_cone_member(const ConeModel& model, const Vector& target);
bool fm_coherent(const ConeModel& model);

inline constexpr std::size_t kEnumerationBudget = 1000000;

/// Every table over a fixed pool and domain with non-empty chosen sets, in
/// mixed-radix order (the last entry varies fastest). Restartable.
template <class Option>
class ChoiceTableEnumerator {
 public:
  ChoiceTableEnumerator(std::vector<Option> pool, std::vector<std::vector<std::size_t>> domain,
                        std::size_t budget = kEnumerationBudget);

  std::size_t count() const { return count_; }
  /// Writes the next table into `out`; false once the stream is exhausted.
  bool next(ChoiceTable<Option>& out);
  void restart();

 private:
  std::vector<Option> pool_;
  std::vector<std::vector<std::size_t>> domain_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> digits_;
  std::size_t count_ = 1;
  bool done_ = false;
};

/// Probes a + s*b for every generator a, indifference basis vector b and
/// s in {1, -1, 2, -2, 1/2, -1/2}. A necessary condition for exchangeability.
bool brute_exchangeable(const GeneratorSet& a);

// ---------------------------------------------------------------------------

template <class Option>
ChoiceTableEnumerator<Option>::ChoiceTableEnumerator(std::vector<Option> pool,
                                                     std::vector<std::vector<std::size_t>> domain,
                                                     std::size_t budget)
    : pool_(std::move(pool)), domain_(std::move(domain)) {
  for (auto& o : domain_) {
    std::sort(o.begin(), o.end());
    if (o.empty() || o.size() >= 63) throw PreconditionFailed("enumerate_choice_tables: bad option set size");
    for (std::size_t i : o) {
      if (i >= pool_.size()) throw PreconditionFailed("enumerate_choice_tables: index out of range");
    }
    const std::size_t r = (std::size_t{1} << o.size()) - 1;
    if (count_ > budget / r) {
      throw BudgetExceeded("enumerate_choice_tables: more than " + std::to_string(budget) + " tables");
    }
    count_ *= r;
    radix_.push_back(r);
  }
  restart();
}

template <class Option>
void ChoiceTableEnumerator<Option>::restart() {
  digits_.assign(domain_.size(), 0);
  done_ = false;
}

template <class Option>
bool ChoiceTableEnumerator<Option>::next(ChoiceTable<Option>& out) {
  if (done_) return false;
  out.pool = pool_;
  out.entries.clear();
  for (std::size_t e = 0; e < domain_.size(); ++e) {
    ChoiceEntry entry{domain_[e], {}};
    const std::size_t mask = digits_[e] + 1;
    for (std::size_t k = 0; k < domain_[e].size(); ++k) {
      if (mask >> k & 1) entry.chosen.push_back(domain_[e][k]);
    }
    out.entries.push_back(std::move(entry));
  }
  std::size_t e = domain_.size();
  while (e > 0) {
    --e;
    if (++digits_[e] < radix_[e]) return true;
    digits_[e] = 0;
  }
  done_ = true;
  return true;
}

}  // namespace exchg
