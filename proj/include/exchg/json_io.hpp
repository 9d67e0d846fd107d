#pragma once

#include <json.hpp>

#include "exchg/choice.hpp"
#include "exchg/countable.hpp"
#include "exchg/desirability.hpp"

namespace exchg {

using json = nlohmann::json;

// Readers throw FormatError naming the offending field; rationals are
// strings "p" or "p/q".

Rational rational_from_json(const json& j, const std::string& where);
json to_json(const Rational& r);
json to_json(const Vector& v);

OutcomeSpace outcomes_from_json(const json& j, const std::string& where);
SequenceSpace sequence_space_from_json(const json& j, const std::string& where);
json to_json(const SequenceSpace& s);

/// {"space": {...}, "values": {key: "p/q"}}; missing keys are zero.
Gamble gamble_from_json(const json& j);
/// The "values" object alone, on a known space.
Gamble gamble_values_from_json(const SequenceSpace& space, const json& values, const std::string& where);
json to_json(const Gamble& g);

CountGamble count_gamble_from_json(const json& j);
json to_json(const CountGamble& g);

BernsteinPoly poly_from_json(const json& j);
json to_json(const BernsteinPoly& p);

/// Gamble JSON with a "degree" in place of (or agreeing with) space.length.
FiniteStructureGamble fs_gamble_from_json(const json& j, const std::optional<OutcomeSpace>& base = std::nullopt);
json to_json(const FiniteStructureGamble& f);

/// {"space", "desirable": [...], "indifferent": [...], "declare_exchangeable"}.
/// Generators are either full gambles or bare "values" objects.
GeneratorSet assessment_from_json(const json& j);
json to_json(const GeneratorSet& a);

/// {"outcomes", "desirable": [fs gamble...], "indifferent": [...], "declare_exchangeable"}.
CountableAssessment countable_assessment_from_json(const json& j);

GambleChoiceTable choice_table_from_json(const json& j);
FsChoiceTable fs_choice_table_from_json(const json& j);

template <class Option>
json to_json(const ChoiceTable<Option>& t) {
  json pool = json::array();
  for (const auto& o : t.pool) pool.push_back(to_json(o));
  json entries = json::array();
  for (const auto& e : t.entries) entries.push_back({{"options", e.options}, {"chosen", e.chosen}});
  return {{"pool", pool}, {"entries", entries}};
}

json to_json(const PolySet& s);
json to_json(const CountGeneratorSet& s);
json to_json(const ConeMembership& m);
json to_json(const CoherenceReport& c);
json to_json(const ExchangeabilityReport& e);
json to_json(const AxiomReport& r);
json to_json(const CompatibilityReport& r);
json to_json(const CountableReport& r);
json to_json(const PerDegreeAxioms& r);

std::vector<Rational> parse_scalars(const std::string& list);

}  // namespace exchg
