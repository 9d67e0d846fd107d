#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exchg/choice.hpp"

namespace exchg {

/// A gamble on infinite sequences that depends on the first `degree`
/// coordinates only, stored as its table on X^degree. The degree is always
/// minimal; constants carry degree 1.
class FiniteStructureGamble {
 public:
  /// Canonicalizes: drops trailing coordinates the table does not depend on.
  explicit FiniteStructureGamble(const Gamble& table);

  const OutcomeSpace& base() const { return table_.space().base(); }
  std::size_t degree() const { return table_.space().length(); }
  const Gamble& table() const { return table_; }

  friend bool operator==(const FiniteStructureGamble& a, const FiniteStructureGamble& b) { return a.table_ == b.table_; }
  friend bool operator<(const FiniteStructureGamble& a, const FiniteStructureGamble& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.table_ < b.table_;
  }

 private:
  Gamble table_;
};

/// f*(x_1, ..., x_n) = f(x_1, ..., x_degree). Throws PreconditionFailed for n < degree.
Gamble cylindrical_extend(const FiniteStructureGamble& f, std::size_t n);
FiniteStructureGamble canonical_degree(const Gamble& g);

FiniteStructureGamble fs_add(const FiniteStructureGamble& f, const FiniteStructureGamble& g);
FiniteStructureGamble fs_scale(const Rational& lambda, const FiniteStructureGamble& f);
/// Pointwise order, compared on the larger of the two degrees.
bool fs_strictly_below(const FiniteStructureGamble& f, const FiniteStructureGamble& g);
OptionOps<FiniteStructureGamble> fs_ops();

using FsChoiceTable = ChoiceTable<FiniteStructureGamble>;

struct Horizon {
  std::size_t max_degree = 4;
};

inline constexpr const char* kHorizonLimitation =
    "countable statements are checked for degrees n <= M only";

/// X^n-marginal of a countable table, with the origin of every pool member
/// and entry in the source table.
struct Marginal {
  std::size_t degree = 0;
  GambleChoiceTable table;
  std::vector<std::size_t> pool_origin;
  std::vector<std::size_t> entry_origin;
};

Marginal marginalize_choice_tracked(const FsChoiceTable& t, std::size_t n);
/// Entries whose options all have degree <= n, re-expressed on X^n.
GambleChoiceTable marginalize_choice(const FsChoiceTable& t, std::size_t n);

/// A desirability assessment of finite structure.
struct CountableAssessment {
  OutcomeSpace base;
  std::vector<FiniteStructureGamble> desirable;
  std::vector<FiniteStructureGamble> indifferent;
  /// Adds I_{P_n} to the indifferent part of every marginal.
  bool declare_exchangeable = false;
};

/// A_n = {a in A : degree(a) <= n} on X^n (and likewise for the indifferent part).
GeneratorSet marginal_assessment(const CountableAssessment& a, std::size_t n);

struct DegreeVerdict {
  std::size_t degree = 0;
  bool passed = false;
  std::size_t size = 0;  // entries or generators in the marginal
  bool coherent = true;
  CompatibilityReport compatibility;
  std::optional<ExchangeabilityReport> exchangeability;
};

struct CountableReport {
  std::size_t horizon = 0;
  bool passed = true;
  std::optional<std::size_t> first_failure;
  std::vector<DegreeVerdict> degrees;
};

/// Exchangeability of every marginal n <= M. Throws PreconditionFailed when
/// an option has degree above the horizon.
CountableReport check_countable_exchangeable(const FsChoiceTable& t, const Horizon& horizon);
CountableReport check_countable_exchangeable(const CountableAssessment& a, const Horizon& horizon);

struct PerDegreeAxioms {
  std::size_t horizon = 0;
  bool passed = true;
  std::vector<std::pair<std::size_t, AxiomReport>> degrees;
};

/// For each n <= M, C1-C4 under <=_B^n on the entries whose options lie in V^n.
PerDegreeAxioms per_degree_coherence(const PolyChoiceTable& r, const Horizon& horizon,
                                     const std::vector<Rational>& scalars);

/// Pool members replaced by their minimal-degree form, duplicates merged.
PolyChoiceTable canonical_poly_table(const PolyChoiceTable& r);
/// Reduced, de-duplicated and sorted generators and indifferent polys;
/// zero indifferent polys are dropped.
PolySet canonical_poly_set(const PolySet& s);

/// rcf(O) = union over the degrees n <= M with O in V^n of rcf_n(O), where
/// rcf_n is the finite representation of the X^n-marginal. Polys are in
/// minimal-degree form. Throws RepresentationConflict (kind "cross_degree")
/// if two degrees disagree on a shared key, and PreconditionFailed if the
/// table is not exchangeable up to the horizon.
PolyChoiceTable countable_represent(const FsChoiceTable& t, const Horizon& horizon);

struct CountableRepresentation {
  std::size_t horizon = 0;
  /// Mn images of each marginal, at that marginal's degree.
  std::vector<std::pair<std::size_t, PolySet>> per_degree;
  /// Union over n <= M in canonical form.
  PolySet polys;
};

CountableRepresentation countable_represent(const CountableAssessment& a, const Horizon& horizon);

}  // namespace exchg
