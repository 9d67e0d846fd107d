#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "exchg/json_io.hpp"
#include "exchg/oracles.hpp"
#include "exchg/permutations.hpp"
#include "exchg/suites.hpp"

using namespace exchg;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Inputs {
  std::string bytes;  // concatenation of every file read, for the digest

  json read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    bytes += text;
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw FormatError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
  }

  std::string digest() const {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out = "sha256:";
    for (unsigned int i = 0; i < len; ++i) {
      out += hex[md[i] >> 4];
      out += hex[md[i] & 15];
    }
    return out;
  }
};

struct Options {
  bool verify = false;
  bool timing = false;
  std::size_t max_n = kDefaultMaxLength;
  std::string gamble;
  std::string count_gamble;
  std::string poly;
  std::string assessment;
  std::string table;
  std::string form = "count";
  std::string scalars;
  std::size_t horizon = 4;
  std::string suite;
};

std::vector<Rational> scalars_of(const Options& o) {
  return o.scalars.empty() ? default_scalars() : parse_scalars(o.scalars);
}

std::vector<Gamble> resolve(const GambleChoiceTable& t, const std::vector<std::size_t>& set) {
  std::vector<Gamble> out;
  for (std::size_t i : set) out.push_back(t.pool[i]);
  return out;
}

int cmd_project(const Options& o, Inputs& in, json& report) {
  const Gamble f = gamble_from_json(in.read(o.gamble));
  const Gamble e = symmetrize(f, o.max_n);
  report["result"] = to_json(e);
  if (o.verify) {
    const bool ok = ex_via_atoms(f) == e;
    report["verified"] = ok;
    if (!ok) return kViolation;
  }
  return kPass;
}

int cmd_represent(const Options& o, Inputs& in, json& report) {
  const Gamble f = gamble_from_json(in.read(o.gamble));
  report["form"] = o.form;
  if (o.form == "poly") {
    report["result"] = to_json(mn_map(f));
  } else {
    const CountGamble g = hy_map(f);
    report["result"] = to_json(g);
    if (o.verify) {
      const bool ok = class_equal(lift_count_gamble(g), f);
      report["verified"] = ok;
      if (!ok) return kViolation;
    }
  }
  return kPass;
}

int cmd_lift(const Options& o, Inputs& in, json& report) {
  if (o.count_gamble.empty() == o.poly.empty()) throw FormatError("lift: give exactly one of --count-gamble, --poly");
  const CountGamble g =
      o.poly.empty() ? count_gamble_from_json(in.read(o.count_gamble)) : comn_inverse(poly_from_json(in.read(o.poly)));
  const Gamble f = lift_count_gamble(g);
  report["result"] = to_json(f);
  if (o.verify) {
    const bool ok = hy_map(f) == g;
    report["verified"] = ok;
    if (!ok) return kViolation;
  }
  return kPass;
}

int cmd_desirability_check(const Options& o, Inputs& in, json& report) {
  const GeneratorSet a = assessment_from_json(in.read(o.assessment));
  const CoherenceReport coherence = is_coherent(a);
  report["coherence"] = to_json(coherence);
  const NaturalExtension ext = exchangeable_natural_extension(a);
  report["exchangeable_natural_extension"] = {{"coherent", ext.coherence.coherent},
                                              {"generators", to_json(ext.extension)}};
  int code = kPass;
  if (!coherence.coherent) {
    report["exchangeability"] = nullptr;
    code = kViolation;
  } else {
    const ExchangeabilityReport ex = is_exchangeable(a);
    report["exchangeability"] = to_json(ex);
    if (!ex.exchangeable) code = kViolation;
  }
  if (o.verify) {
    json v = json::object();
    try {
      v["fm_coherent"] = fm_coherent(a.cone());
      v["coherence_agrees"] = v["fm_coherent"].get<bool>() == coherence.coherent;
    } catch (const BudgetExceeded& e) {
      v["fm_coherent"] = std::string("skipped: ") + e.what();
    }
    if (coherence.coherent) {
      v["brute_exchangeable"] = brute_exchangeable(a);
      // the probe grid is necessary only: it may accept what the exact test rejects
      if (v["brute_exchangeable"].get<bool>() == false && code == kPass) v["soundness_violation"] = true;
    }
    report["verify"] = v;
    if ((v.contains("coherence_agrees") && !v["coherence_agrees"].get<bool>()) || v.contains("soundness_violation")) {
      code = kViolation;
    }
  }
  return code;
}

int cmd_desirability_represent(const Options& o, Inputs& in, json& report) {
  const GeneratorSet a = assessment_from_json(in.read(o.assessment));
  report["form"] = o.form;
  try {
    if (o.form == "poly") {
      report["result"] = to_json(represent_desirability_poly(a));
    } else {
      const CountGeneratorSet r = represent_desirability(a);
      report["result"] = to_json(r);
      if (o.verify) {
        const bool ok = a.generators().empty() || mutually_contained(represent_desirability(lift_count_assessment(r)), r);
        report["verified"] = ok;
        if (!ok) return kViolation;
      }
    }
  } catch (const PreconditionFailed& e) {
    report["error"] = e.what();
    return kViolation;
  }
  return kPass;
}

int cmd_choice_check(const Options& o, Inputs& in, json& report) {
  const GambleChoiceTable t = choice_table_from_json(in.read(o.table));
  const auto scalars = scalars_of(o);
  const AxiomReport axioms = check_coherence_axioms(t, scalars);
  const CompatibilityReport compat = check_indifference_compatibility(t);
  report["axioms"] = to_json(axioms);
  report["compatibility"] = to_json(compat);
  json sc = json::array();
  for (const auto& s : scalars) sc.push_back(s.str());
  report["scalars"] = sc;
  report["limitations"] = {"C4a is checked only for the listed scalars"};
  int code = axioms.passed() && compat.passed() ? kPass : kViolation;
  if (o.verify) {
    bool representable = true;
    try {
      const CountChoiceTable r = represent_choice(t);
      for (const auto& e : t.entries) {
        representable = representable && reconstruct_choice(r, resolve(t, e.options)) == resolve(t, e.chosen);
      }
    } catch (const RepresentationConflict&) {
      representable = false;
    }
    report["verify"] = {{"round_trip", representable}, {"agrees", representable == compat.passed()}};
    if (representable != compat.passed()) code = kViolation;
  }
  return code;
}

int cmd_choice_represent(const Options& o, Inputs& in, json& report) {
  const GambleChoiceTable t = choice_table_from_json(in.read(o.table));
  report["form"] = o.form;
  try {
    if (o.form == "poly") {
      report["result"] = to_json(represent_choice_poly(t));
    } else {
      report["result"] = to_json(represent_choice(t));
    }
  } catch (const RepresentationConflict& e) {
    report["conflict"] = {{"kind", e.kind()}, {"entries", e.entries()}, {"detail", e.what()}};
    return kViolation;
  }
  return kPass;
}

bool is_choice_table(const json& j) { return j.is_object() && j.contains("pool"); }

int cmd_countable_check(const Options& o, Inputs& in, json& report) {
  const json j = in.read(o.assessment);
  const Horizon horizon{o.horizon};
  if (is_choice_table(j)) {
    const FsChoiceTable t = fs_choice_table_from_json(j);
    const CountableReport ex = check_countable_exchangeable(t, horizon);
    const AxiomReport axioms = check_coherence_axioms(t, scalars_of(o), fs_ops());
    report["kind"] = "choice";
    report["exchangeability"] = to_json(ex);
    report["axioms"] = to_json(axioms);
    json marginals = json::array();
    bool marginals_pass = true;
    for (std::size_t n = 1; n <= horizon.max_degree; ++n) {
      const AxiomReport m = check_coherence_axioms(marginalize_choice(t, n), scalars_of(o));
      marginals_pass = marginals_pass && m.passed();
      json v = to_json(m);
      v["degree"] = n;
      marginals.push_back(std::move(v));
    }
    report["marginal_axioms"] = marginals;
    if (o.verify) report["verify"] = {{"marginals_agree", marginals_pass == axioms.passed()}};
    return ex.passed && axioms.passed() && marginals_pass ? kPass : kViolation;
  }
  const CountableAssessment a = countable_assessment_from_json(j);
  const CountableReport ex = check_countable_exchangeable(a, horizon);
  report["kind"] = "desirability";
  report["exchangeability"] = to_json(ex);
  return ex.passed ? kPass : kViolation;
}

int cmd_countable_represent(const Options& o, Inputs& in, json& report) {
  const json j = in.read(o.assessment);
  const Horizon horizon{o.horizon};
  report["limitations"] = {kHorizonLimitation};
  try {
    if (is_choice_table(j)) {
      report["kind"] = "choice";
      report["result"] = to_json(countable_represent(fs_choice_table_from_json(j), horizon));
    } else {
      const CountableRepresentation r = countable_represent(countable_assessment_from_json(j), horizon);
      json per_degree = json::array();
      for (const auto& [n, set] : r.per_degree) per_degree.push_back({{"degree", n}, {"polys", to_json(set)}});
      report["kind"] = "desirability";
      report["result"] = to_json(r.polys);
      report["per_degree"] = per_degree;
    }
  } catch (const RepresentationConflict& e) {
    report["conflict"] = {{"kind", e.kind()}, {"entries", e.entries()}, {"detail", e.what()}};
    return kViolation;
  } catch (const PreconditionFailed& e) {
    report["error"] = e.what();
    return kViolation;
  }
  return kPass;
}

int cmd_suite(const Options& o, Inputs&, json& report) {
  const SuiteResult r = run_suite(o.suite);
  json checks = json::array();
  for (const auto& c : r.checks) {
    json v = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}};
    if (c.failures > 0) v["first_failure"] = c.first_failure;
    checks.push_back(std::move(v));
  }
  report["suite"] = r.name;
  report["checks"] = checks;
  return r.passed() ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exchangeability toolkit for choice functions and desirable gambles"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("EXCHG_MAX_N")) {
    try {
      o.max_n = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "exchg: EXCHG_MAX_N must be a non-negative integer\n";
      return kUsage;
    }
  }

  using Handler = int (*)(const Options&, Inputs&, json&);
  std::vector<std::pair<CLI::App*, std::pair<std::string, Handler>>> handlers;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--verify", o.verify, "Cross-check the verdict with an independent oracle");
    sub->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
    sub->add_option("--max-n", o.max_n, "Largest sequence length for permutation enumeration");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, const std::string& command,
                  Handler h) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    common(sub);
    handlers.push_back({sub, {command, h}});
    return sub;
  };

  auto* project = leaf(&app, "project", "Symmetrize a gamble (the projection ex)", "project", cmd_project);
  project->add_option("--gamble", o.gamble, "Gamble JSON")->required();

  auto* represent = leaf(&app, "represent", "Hy or Mn image of a gamble", "represent", cmd_represent);
  represent->add_option("--gamble", o.gamble, "Gamble JSON")->required();
  represent->add_option("--form", o.form, "count or poly")->check(CLI::IsMember({"count", "poly"}));

  auto* lift = leaf(&app, "lift", "Lift a count gamble or polynomial to sequences", "lift", cmd_lift);
  lift->add_option("--count-gamble", o.count_gamble, "CountGamble JSON");
  lift->add_option("--poly", o.poly, "BernsteinPoly JSON");

  auto* desirability = app.add_subcommand("desirability", "Sets of desirable gambles");
  desirability->require_subcommand(1);
  leaf(desirability, "check", "Coherence and exchangeability", "desirability check", cmd_desirability_check)
      ->add_option("--assessment", o.assessment, "Assessment JSON")
      ->required();
  auto* drep = leaf(desirability, "represent", "Count or polynomial representation", "desirability represent",
                    cmd_desirability_represent);
  drep->add_option("--assessment", o.assessment, "Assessment JSON")->required();
  drep->add_option("--form", o.form, "count or poly")->check(CLI::IsMember({"count", "poly"}));

  auto* choice = app.add_subcommand("choice", "Choice tables");
  choice->require_subcommand(1);
  auto* ccheck = leaf(choice, "check", "Axioms C1-C4 and indifference compatibility", "choice check", cmd_choice_check);
  ccheck->add_option("--table", o.table, "ChoiceTable JSON")->required();
  ccheck->add_option("--scalars", o.scalars, "Comma-separated positive rationals for C4a");
  auto* crep = leaf(choice, "represent", "Representing table", "choice represent", cmd_choice_represent);
  crep->add_option("--table", o.table, "ChoiceTable JSON")->required();
  crep->add_option("--form", o.form, "count or poly")->check(CLI::IsMember({"count", "poly"}));

  auto* countable = app.add_subcommand("countable", "Gambles of finite structure");
  countable->require_subcommand(1);
  auto* kcheck = leaf(countable, "check", "Exchangeability of every marginal up to the horizon", "countable check",
                      cmd_countable_check);
  kcheck->add_option("--assessment", o.assessment, "Countable assessment or choice table JSON")->required();
  kcheck->add_option("--horizon", o.horizon, "Largest degree M")->check(CLI::PositiveNumber);
  kcheck->add_option("--scalars", o.scalars, "Comma-separated positive rationals for C4a");
  auto* krep = leaf(countable, "represent", "Representation assembled over the horizon", "countable represent",
                    cmd_countable_represent);
  krep->add_option("--assessment", o.assessment, "Countable assessment or choice table JSON")->required();
  krep->add_option("--horizon", o.horizon, "Largest degree M")->check(CLI::PositiveNumber);

  auto* suite = app.add_subcommand("suite", "Property suites");
  suite->require_subcommand(1);
  leaf(suite, "run", "Run a named suite", "suite run", cmd_suite)
      ->add_option("--name", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  for (const auto& [sub, entry] : handlers) {
    if (!sub->parsed()) continue;
    Inputs inputs;
    json report;
    report["command"] = entry.first;
    const auto start = std::chrono::steady_clock::now();
    int code = kPass;
    try {
      code = entry.second(o, inputs, report);
    } catch (const std::exception& e) {
      // malformed input, mismatched spaces, budgets
      std::cerr << "exchg: " << e.what() << "\n";
      return kUsage;
    }
    report["inputs_digest"] = inputs.digest();
    report["verdict"] = code == kPass ? "pass" : "fail";
    if (o.timing) {
      report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    std::cout << report.dump(2) << "\n";
    return code;
  }
  return kUsage;
}
