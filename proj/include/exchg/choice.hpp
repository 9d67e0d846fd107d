#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "exchg/bernstein.hpp"
#include "exchg/counts.hpp"
#include "exchg/desirability.hpp"

namespace exchg {

/// One domain entry of a choice table: option indices into the pool and the
/// chosen subset. Both lists are sorted and duplicate-free.
struct ChoiceEntry {
  std::vector<std::size_t> options;
  std::vector<std::size_t> chosen;
};

/// A choice function restricted to a finite domain of option sets drawn from
/// a declared pool of options.
template <class Option>
struct ChoiceTable {
  std::vector<Option> pool;
  std::vector<ChoiceEntry> entries;
};

using GambleChoiceTable = ChoiceTable<Gamble>;
/// Count form of a representing choice function.
using CountChoiceTable = ChoiceTable<CountGamble>;
/// Polynomial form of a representing choice function.
using PolyChoiceTable = ChoiceTable<BernsteinPoly>;

/// Vector-space structure and order an axiom check needs for an option type.
/// `key` maps an option to a canonical form used for pool lookups.
template <class Option>
struct OptionOps {
  std::function<bool(const Option&, const Option&)> strictly_below;
  std::function<Option(const Rational&, const Option&)> scale;
  std::function<Option(const Option&, const Option&)> add;
  std::function<Option(const Option&)> key = [](const Option& o) { return o; };
};

OptionOps<Gamble> gamble_ops();
OptionOps<CountGamble> count_gamble_ops();
/// Polynomials ordered by the degree-n Bernstein cone.
OptionOps<BernsteinPoly> poly_ops(std::size_t degree);

struct AxiomViolation {
  std::string axiom;  // C1, C2, C3a, C3b, C4a, C4b
  std::vector<std::size_t> entries;
  std::string detail;

  friend auto operator<=>(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::map<std::string, std::size_t> instances;
  bool passed() const { return violations.empty(); }
};

/// Sorts and de-duplicates index lists; throws FormatError for an index out
/// of range, an empty option set or chosen indices outside the option set.
template <class Option>
void normalize_table(ChoiceTable<Option>& table);

/// Every instance of C1-C4 whose participating option sets all lie in the
/// domain. C3a uses the largest admissible O1 (O2 minus C(O2)) and C3b the
/// smallest admissible O1 (C(O2)); every other O1 yields a weaker instance.
template <class Option>
AxiomReport check_coherence_axioms(const ChoiceTable<Option>& table, const std::vector<Rational>& scalars,
                                   const OptionOps<Option>& ops);

AxiomReport check_coherence_axioms(const GambleChoiceTable& table, const std::vector<Rational>& scalars);

std::vector<Rational> default_scalars();

/// D = {u != 0 : C({0, u}) = {u}}. Requires 0 in the pool and {0, u} in the
/// domain for every other pool member.
GeneratorSet derive_desirability(const GambleChoiceTable& table);

struct CompatibilityViolation {
  std::string kind;  // indifference, saturation, well_definedness
  std::vector<std::size_t> entries;
  std::vector<std::size_t> options;
  std::string detail;
};

struct CompatibilityReport {
  std::vector<CompatibilityViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Compatibility with the exchangeability indifference space: within every
/// entry, class-equal options are chosen together (which includes the
/// "0 in C(O) iff u in C(O)" instances for indifferent u), and entries with
/// the same class image choose the same classes.
CompatibilityReport check_indifference_compatibility(const GambleChoiceTable& table);

/// Raised when a table cannot be transported to the representation space;
/// a constructive witness that the table is not exchangeable.
class RepresentationConflict : public Error {
 public:
  RepresentationConflict(std::string kind, std::vector<std::size_t> entries, const std::string& message)
      : Error(message), kind_(std::move(kind)), entries_(std::move(entries)) {}
  const std::string& kind() const { return kind_; }
  const std::vector<std::size_t>& entries() const { return entries_; }

 private:
  std::string kind_;
  std::vector<std::size_t> entries_;
};

CountChoiceTable represent_choice(const GambleChoiceTable& table);
PolyChoiceTable represent_choice_poly(const GambleChoiceTable& table);

/// {f in O : Hy(f) in R[Hy(O)]}. Throws PreconditionFailed for an unknown key.
std::vector<Gamble> reconstruct_choice(const CountChoiceTable& r, const std::vector<Gamble>& options);
std::vector<Gamble> reconstruct_choice_poly(const PolyChoiceTable& r, const std::vector<Gamble>& options);

/// The maximality choice function of a model, C(O) = {u in O : no v in O
/// with v - u in D}, tabulated over the given domain.
GambleChoiceTable choice_from_desirability(const GeneratorSet& model, std::vector<Gamble> pool,
                                           const std::vector<std::vector<std::size_t>>& domain);

/// All non-empty subsets of {0, ..., n-1}, by size then lexicographically.
std::vector<std::vector<std::size_t>> all_nonempty_subsets(std::size_t n);

/// Tables over the same pool with identical entries (after normalisation).
template <class Option>
bool same_entries(const ChoiceTable<Option>& a, const ChoiceTable<Option>& b);

// ---------------------------------------------------------------------------

namespace detail {

inline bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

}  // namespace detail

template <class Option>
void normalize_table(ChoiceTable<Option>& table) {
  auto clean = [&](std::vector<std::size_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (std::size_t i : v) {
      if (i >= table.pool.size()) throw FormatError("choice table index " + std::to_string(i) + " out of range");
    }
  };
  for (auto& e : table.entries) {
    clean(e.options);
    clean(e.chosen);
    if (e.options.empty()) throw FormatError("choice table entry with an empty option set");
    if (!detail::is_subset(e.chosen, e.options)) throw FormatError("chosen options must be a subset of the options");
  }
}

template <class Option>
AxiomReport check_coherence_axioms(const ChoiceTable<Option>& table, const std::vector<Rational>& scalars,
                                   const OptionOps<Option>& ops) {
  using detail::is_subset;
  using detail::join_indices;
  AxiomReport report;
  const auto& entries = table.entries;

  std::map<std::vector<std::size_t>, std::size_t> by_options;
  for (std::size_t e = 0; e < entries.size(); ++e) by_options.emplace(entries[e].options, e);

  std::map<Option, std::size_t> pool_index;
  for (std::size_t i = 0; i < table.pool.size(); ++i) pool_index.emplace(ops.key(table.pool[i]), i);

  auto violate = [&](std::string axiom, std::vector<std::size_t> es, std::string detail) {
    report.violations.push_back(AxiomViolation{std::move(axiom), std::move(es), std::move(detail)});
  };

  // Maps an option set through f; nullopt-like empty result when some image
  // is not a pool member.
  auto image_of = [&](const std::vector<std::size_t>& set, const auto& f, std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t i : set) {
      const auto it = pool_index.find(ops.key(f(table.pool[i])));
      if (it == pool_index.end()) return false;
      out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return true;
  };

  for (std::size_t e = 0; e < entries.size(); ++e) {
    const auto& entry = entries[e];
    ++report.instances["C1"];
    if (entry.chosen.empty()) violate("C1", {e}, "C(O) is empty for O = " + join_indices(entry.options));

    if (entry.options.size() == 2) {
      const std::size_t u = entry.options[0];
      const std::size_t v = entry.options[1];
      for (auto [lo, hi] : {std::pair{u, v}, std::pair{v, u}}) {
        if (!ops.strictly_below(table.pool[lo], table.pool[hi])) continue;
        ++report.instances["C2"];
        if (entry.chosen != std::vector<std::size_t>{hi}) {
          violate("C2", {e},
                  "option " + std::to_string(lo) + " is dominated by " + std::to_string(hi) + " but C(O) = " +
                      join_indices(entry.chosen));
        }
      }
    }
  }

  for (std::size_t e2 = 0; e2 < entries.size(); ++e2) {
    const auto& o2 = entries[e2];
    std::vector<std::size_t> rejected;
    std::set_difference(o2.options.begin(), o2.options.end(), o2.chosen.begin(), o2.chosen.end(),
                        std::back_inserter(rejected));
    for (std::size_t e = 0; e < entries.size(); ++e) {
      if (e == e2) continue;
      const auto& o = entries[e];
      // C3a: O2 strictly inside O; options rejected from O2 stay rejected in O.
      if (!rejected.empty() && o.options.size() > o2.options.size() && is_subset(o2.options, o.options)) {
        ++report.instances["C3a"];
        std::vector<std::size_t> revived;
        std::set_intersection(o.chosen.begin(), o.chosen.end(), rejected.begin(), rejected.end(),
                              std::back_inserter(revived));
        if (!revived.empty()) {
          violate("C3a", {e2, e},
                  "options " + join_indices(revived) + " rejected from " + join_indices(o2.options) +
                      " are chosen from " + join_indices(o.options));
        }
      }
      // C3b: O' = O2 \ O strictly inside O2 with C(O2) <= O' implies C(O') <= C(O2).
      if (o.options.size() < o2.options.size() && is_subset(o.options, o2.options) && is_subset(o2.chosen, o.options)) {
        ++report.instances["C3b"];
        if (!is_subset(o.chosen, o2.chosen)) {
          violate("C3b", {e2, e},
                  "C(" + join_indices(o2.options) + ") = " + join_indices(o2.chosen) + " but C(" +
                      join_indices(o.options) + ") = " + join_indices(o.chosen));
        }
      }
    }
  }

  std::vector<std::size_t> image;
  std::vector<std::size_t> chosen_image;
  for (std::size_t e2 = 0; e2 < entries.size(); ++e2) {
    const auto& o2 = entries[e2];
    if (o2.chosen.empty()) continue;
    for (const auto& lambda : scalars) {
      auto f = [&](const Option& u) { return ops.scale(lambda, u); };
      if (!image_of(o2.options, f, image)) continue;
      const auto it = by_options.find(image);
      if (it == by_options.end()) continue;
      ++report.instances["C4a"];
      image_of(o2.chosen, f, chosen_image);
      if (!is_subset(chosen_image, entries[it->second].chosen)) {
        violate("C4a", {e2, it->second},
                "scaling by " + lambda.str() + ": " + join_indices(chosen_image) + " not within C(" +
                    join_indices(image) + ") = " + join_indices(entries[it->second].chosen));
      }
    }
    for (std::size_t u = 0; u < table.pool.size(); ++u) {
      auto f = [&](const Option& v) { return ops.add(v, table.pool[u]); };
      if (!image_of(o2.options, f, image)) continue;
      const auto it = by_options.find(image);
      if (it == by_options.end()) continue;
      ++report.instances["C4b"];
      image_of(o2.chosen, f, chosen_image);
      if (!is_subset(chosen_image, entries[it->second].chosen)) {
        violate("C4b", {e2, it->second},
                "translation by option " + std::to_string(u) + ": " + join_indices(chosen_image) + " not within C(" +
                    join_indices(image) + ") = " + join_indices(entries[it->second].chosen));
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

template <class Option>
bool same_entries(const ChoiceTable<Option>& a, const ChoiceTable<Option>& b) {
  auto resolve = [](const ChoiceTable<Option>& t) {
    std::vector<std::pair<std::vector<Option>, std::vector<Option>>> out;
    for (const auto& e : t.entries) {
      std::vector<Option> options;
      std::vector<Option> chosen;
      for (std::size_t i : e.options) options.push_back(t.pool[i]);
      for (std::size_t i : e.chosen) chosen.push_back(t.pool[i]);
      std::sort(options.begin(), options.end());
      std::sort(chosen.begin(), chosen.end());
      out.emplace_back(std::move(options), std::move(chosen));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return resolve(a) == resolve(b);
}

}  // namespace exchg
