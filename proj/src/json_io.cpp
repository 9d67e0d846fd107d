#include "exchg/json_io.hpp"

#include <set>
#include <sstream>

namespace exchg {

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  const auto it = j.find(name);
  if (it == j.end()) throw FormatError(where + ": missing field \"" + name + "\"");
  return *it;
}

const json& array_field(const json& j, const char* name, const std::string& where) {
  const json& a = field(j, name, where);
  if (!a.is_array()) throw FormatError(where + "." + name + ": expected an array");
  return a;
}

std::size_t index_field(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw FormatError(where + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& j, const char* name, const std::string& where) {
  std::vector<std::size_t> out;
  const json& a = array_field(j, name, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(index_field(a[i], where + "." + name + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Re-raises library errors from parsing helpers as format errors at `where`.
template <class F>
auto guarded(const std::string& where, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(where + ": " + e.what());
  }
}

std::vector<ChoiceEntry> entries_from_json(const json& j, std::size_t pool_size) {
  std::vector<ChoiceEntry> entries;
  const json& list = array_field(j, "entries", "table");
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string where = "table.entries[" + std::to_string(e) + "]";
    entries.push_back(ChoiceEntry{index_list(list[e], "options", where), index_list(list[e], "chosen", where)});
    for (std::size_t i : entries.back().options) {
      if (i >= pool_size) throw FormatError(where + ": option index " + std::to_string(i) + " out of range");
    }
  }
  return entries;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw FormatError(where + ": expected a rational string \"p\" or \"p/q\"");
  return guarded(where, [&] { return Rational::parse(j.get<std::string>()); });
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

OutcomeSpace outcomes_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array of outcome labels");
  std::vector<std::string> labels;
  for (const auto& l : j) {
    if (!l.is_string()) throw FormatError(where + ": outcome labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return guarded(where, [&] { return OutcomeSpace(labels); });
}

SequenceSpace sequence_space_from_json(const json& j, const std::string& where) {
  OutcomeSpace base = outcomes_from_json(field(j, "outcomes", where), where + ".outcomes");
  const std::size_t length = index_field(field(j, "length", where), where + ".length");
  return guarded(where, [&] { return SequenceSpace(base, length); });
}

json to_json(const SequenceSpace& s) { return {{"outcomes", s.base().labels()}, {"length", s.length()}}; }

Gamble gamble_values_from_json(const SequenceSpace& space, const json& values, const std::string& where) {
  if (!values.is_object()) throw FormatError(where + ": expected an object of sequence keys");
  Vector v(space.size());
  for (const auto& [key, value] : values.items()) {
    const Sequence x = guarded(where + "." + key, [&] { return space.parse_key(key); });
    v[space.index_of(x)] = rational_from_json(value, where + "." + key);
  }
  return Gamble(space, std::move(v));
}

Gamble gamble_from_json(const json& j) {
  const SequenceSpace space = sequence_space_from_json(field(j, "space", "gamble"), "gamble.space");
  return gamble_values_from_json(space, field(j, "values", "gamble"), "gamble.values");
}

json to_json(const Gamble& g) {
  json values = json::object();
  for (std::size_t i = 0; i < g.size(); ++i) values[g.space().key(g.space().sequence_at(i))] = g[i].str();
  return {{"space", to_json(g.space())}, {"values", values}};
}

CountGamble count_gamble_from_json(const json& j) {
  const SequenceSpace s = sequence_space_from_json(field(j, "count_space", "count_gamble"), "count_gamble.count_space");
  const CountSpace space(s.base(), s.length());
  Vector v(space.size());
  const json& values = array_field(j, "values", "count_gamble");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string where = "count_gamble.values[" + std::to_string(i) + "]";
    if (!values[i].is_array() || values[i].size() != 2 || !values[i][0].is_string()) {
      throw FormatError(where + ": expected [\"counts\", \"value\"]");
    }
    const auto index = guarded(where, [&] {
      const CountVector m = CountVector::parse_key(values[i][0].get<std::string>());
      if (m.counts.size() != space.base().size() || m.total() != space.degree()) {
        throw FormatError("count vector does not belong to the count space");
      }
      return space.index_of(m);
    });
    v[index] = rational_from_json(values[i][1], where);
  }
  return CountGamble(space, std::move(v));
}

namespace {

json count_pairs(const CountSpace& space, const Vector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back({space.at(i).key(), v[i].str()});
  return out;
}

}  // namespace

json to_json(const CountGamble& g) {
  return {{"count_space", {{"outcomes", g.space().base().labels()}, {"length", g.space().degree()}}},
          {"values", count_pairs(g.space(), g.values())}};
}

BernsteinPoly poly_from_json(const json& j) {
  OutcomeSpace base = outcomes_from_json(field(j, "outcomes", "poly"), "poly.outcomes");
  const std::size_t degree = index_field(field(j, "degree", "poly"), "poly.degree");
  const CountSpace space(base, degree);
  Vector v(space.size());
  const json& values = array_field(j, "coefficients", "poly");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string where = "poly.coefficients[" + std::to_string(i) + "]";
    if (!values[i].is_array() || values[i].size() != 2 || !values[i][0].is_string()) {
      throw FormatError(where + ": expected [\"counts\", \"value\"]");
    }
    const auto index = guarded(where, [&] {
      const CountVector m = CountVector::parse_key(values[i][0].get<std::string>());
      if (m.counts.size() != base.size() || m.total() != degree) {
        throw FormatError("count vector does not match the degree");
      }
      return space.index_of(m);
    });
    v[index] = rational_from_json(values[i][1], where);
  }
  return BernsteinPoly(space, std::move(v));
}

json to_json(const BernsteinPoly& p) {
  return {{"outcomes", p.base().labels()},
          {"degree", p.degree()},
          {"coefficients", count_pairs(p.space(), p.coefficients())}};
}

FiniteStructureGamble fs_gamble_from_json(const json& j, const std::optional<OutcomeSpace>& base) {
  const std::string where = "fs_gamble";
  const std::size_t degree = index_field(field(j, "degree", where), where + ".degree");
  if (degree == 0) throw FormatError(where + ".degree: must be positive");
  std::optional<OutcomeSpace> outcomes = base;
  if (j.contains("space")) {
    const json& s = j["space"];
    outcomes = outcomes_from_json(field(s, "outcomes", where + ".space"), where + ".space.outcomes");
    if (s.contains("length") && index_field(s["length"], where + ".space.length") != degree) {
      throw FormatError(where + ": space.length disagrees with degree");
    }
  }
  if (!outcomes) throw FormatError(where + ": missing outcome space");
  const SequenceSpace space(*outcomes, degree);
  return FiniteStructureGamble(gamble_values_from_json(space, field(j, "values", where), where + ".values"));
}

json to_json(const FiniteStructureGamble& f) {
  json out = to_json(f.table());
  out["degree"] = f.degree();
  return out;
}

GeneratorSet assessment_from_json(const json& j) {
  const SequenceSpace space = sequence_space_from_json(field(j, "space", "assessment"), "assessment.space");
  auto list = [&](const char* name) {
    std::vector<Gamble> out;
    if (!j.contains(name)) return out;
    const json& a = array_field(j, name, "assessment");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string where = std::string("assessment.") + name + "[" + std::to_string(i) + "]";
      if (a[i].is_object() && a[i].contains("values")) {
        Gamble g = guarded(where, [&] { return gamble_from_json(a[i]); });
        if (!(g.space() == space)) throw FormatError(where + ": space differs from the assessment space");
        out.push_back(std::move(g));
      } else {
        out.push_back(gamble_values_from_json(space, a[i], where));
      }
    }
    return out;
  };
  auto desirable = list("desirable");
  auto indifferent = list("indifferent");
  bool exchangeable = false;
  if (j.contains("declare_exchangeable")) {
    if (!j["declare_exchangeable"].is_boolean()) throw FormatError("assessment.declare_exchangeable: expected a boolean");
    exchangeable = j["declare_exchangeable"].get<bool>();
  }
  GeneratorSet model = guarded("assessment", [&] { return GeneratorSet(space, desirable, indifferent); });
  return exchangeable ? model.with_exchangeability() : model;
}

json to_json(const GeneratorSet& a) {
  json desirable = json::array();
  for (const auto& g : a.generators()) desirable.push_back(to_json(g)["values"]);
  json indifferent = json::array();
  for (const auto& g : a.indifferent()) indifferent.push_back(to_json(g)["values"]);
  return {{"space", to_json(a.space())}, {"desirable", desirable}, {"indifferent", indifferent}};
}

CountableAssessment countable_assessment_from_json(const json& j) {
  CountableAssessment a{outcomes_from_json(field(j, "outcomes", "assessment"), "assessment.outcomes"), {}, {}, false};
  for (const char* name : {"desirable", "indifferent"}) {
    if (!j.contains(name)) continue;
    const json& list = array_field(j, name, "assessment");
    auto& target = std::string(name) == "desirable" ? a.desirable : a.indifferent;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = std::string("assessment.") + name + "[" + std::to_string(i) + "]";
      target.push_back(guarded(where, [&] { return fs_gamble_from_json(list[i], a.base); }));
    }
  }
  if (j.contains("declare_exchangeable")) {
    if (!j["declare_exchangeable"].is_boolean()) throw FormatError("assessment.declare_exchangeable: expected a boolean");
    a.declare_exchangeable = j["declare_exchangeable"].get<bool>();
  }
  return a;
}

GambleChoiceTable choice_table_from_json(const json& j) {
  GambleChoiceTable t;
  const json& pool = array_field(j, "pool", "table");
  for (std::size_t i = 0; i < pool.size(); ++i) {
    t.pool.push_back(guarded("table.pool[" + std::to_string(i) + "]", [&] { return gamble_from_json(pool[i]); }));
    if (!(t.pool.back().space() == t.pool.front().space())) {
      throw FormatError("table.pool[" + std::to_string(i) + "]: space differs from pool[0]");
    }
  }
  std::set<Gamble> distinct(t.pool.begin(), t.pool.end());
  if (distinct.size() != t.pool.size()) throw FormatError("table.pool: options must be distinct");
  t.entries = entries_from_json(j, t.pool.size());
  guarded("table", [&] { normalize_table(t); });
  return t;
}

FsChoiceTable fs_choice_table_from_json(const json& j) {
  FsChoiceTable t;
  std::optional<OutcomeSpace> base;
  if (j.contains("outcomes")) base = outcomes_from_json(j["outcomes"], "table.outcomes");
  const json& pool = array_field(j, "pool", "table");
  for (std::size_t i = 0; i < pool.size(); ++i) {
    t.pool.push_back(guarded("table.pool[" + std::to_string(i) + "]", [&] { return fs_gamble_from_json(pool[i], base); }));
    if (!(t.pool.back().base() == t.pool.front().base())) {
      throw FormatError("table.pool[" + std::to_string(i) + "]: outcomes differ from pool[0]");
    }
  }
  std::set<FiniteStructureGamble> distinct(t.pool.begin(), t.pool.end());
  if (distinct.size() != t.pool.size()) throw FormatError("table.pool: options must be distinct after canonicalization");
  t.entries = entries_from_json(j, t.pool.size());
  guarded("table", [&] { normalize_table(t); });
  return t;
}

json to_json(const PolySet& s) {
  json generators = json::array();
  for (const auto& p : s.generators) generators.push_back(to_json(p));
  json indifferent = json::array();
  for (const auto& p : s.indifferent) indifferent.push_back(to_json(p));
  return {{"generators", generators}, {"indifferent", indifferent}};
}

json to_json(const CountGeneratorSet& s) {
  json generators = json::array();
  for (const auto& g : s.generators()) generators.push_back(to_json(g));
  json indifferent = json::array();
  for (const auto& g : s.indifferent()) indifferent.push_back(to_json(g));
  return {{"generators", generators}, {"indifferent", indifferent}};
}

json to_json(const ConeMembership& m) {
  json out = {{"member", m.member}};
  if (m.member) {
    out["witness"] = {{"desirable", to_json(m.desirable)}, {"slack", to_json(m.slack)}, {"span", to_json(m.span)}};
  } else {
    out["separating"] = {{"functional", to_json(m.separating)}, {"offset", to_json(m.offset)}};
  }
  return out;
}

json to_json(const CoherenceReport& c) {
  json out = {{"coherent", c.coherent}};
  if (c.coherent) {
    out["prevision"] = to_json(c.prevision);
  } else {
    out["lambda"] = {{"desirable", to_json(c.desirable)}, {"slack", to_json(c.slack)}, {"span", to_json(c.span)}};
  }
  return out;
}

json to_json(const ExchangeabilityReport& e) {
  json out = {{"exchangeable", e.exchangeable}};
  if (e.missing_direction) out["missing_direction"] = to_json(*e.missing_direction)["values"];
  if (e.probe) {
    out["probe"] = {{"gamble", to_json(*e.probe)["values"]},
                    {"base", e.probe_base},
                    {"scale", to_json(*e.probe_scale)},
                    {"membership", to_json(*e.probe_membership)}};
  }
  return out;
}

json to_json(const AxiomReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"axiom", v.axiom}, {"entries", v.entries}, {"detail", v.detail}});
  }
  return {{"passed", r.passed()}, {"instances", r.instances}, {"violations", violations}};
}

json to_json(const CompatibilityReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"kind", v.kind}, {"entries", v.entries}, {"options", v.options}, {"detail", v.detail}});
  }
  return {{"passed", r.passed()}, {"violations", violations}};
}

json to_json(const CountableReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    json v = {{"degree", d.degree}, {"passed", d.passed}, {"size", d.size}, {"coherent", d.coherent}};
    if (!d.compatibility.violations.empty()) v["compatibility"] = to_json(d.compatibility);
    if (d.exchangeability) v["exchangeability"] = to_json(*d.exchangeability);
    degrees.push_back(std::move(v));
  }
  json out = {{"horizon", r.horizon}, {"passed", r.passed}, {"degrees", degrees}, {"limitation", kHorizonLimitation}};
  if (r.first_failure) out["first_failure"] = *r.first_failure;
  return out;
}

json to_json(const PerDegreeAxioms& r) {
  json degrees = json::array();
  for (const auto& [n, report] : r.degrees) {
    json v = to_json(report);
    v["degree"] = n;
    degrees.push_back(std::move(v));
  }
  return {{"horizon", r.horizon}, {"passed", r.passed}, {"degrees", degrees}, {"limitation", kHorizonLimitation}};
}

std::vector<Rational> parse_scalars(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    Rational r = guarded("--scalars", [&] { return Rational::parse(item); });
    if (r.sign() <= 0) throw FormatError("--scalars: scalars must be positive");
    out.push_back(std::move(r));
  }
  if (out.empty()) throw FormatError("--scalars: empty list");
  return out;
}

}  // namespace exchg
