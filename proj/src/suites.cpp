#include "exchg/suites.hpp"

#include <functional>

#include "exchg/choice.hpp"
#include "exchg/countable.hpp"
#include "exchg/linalg.hpp"
#include "exchg/oracles.hpp"
#include "exchg/permutations.hpp"
#include "exchg/sampling.hpp"

namespace exchg {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.failures == 0; });
}

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& result) : result_(result) {}

  void operator()(const std::string& name, bool ok, const std::string& detail = "") {
    SuiteCheck& c = find(name);
    ++c.cases;
    if (ok) return;
    if (c.failures++ == 0) c.first_failure = detail.empty() ? "case " + std::to_string(c.cases) : detail;
  }

 private:
  SuiteCheck& find(const std::string& name) {
    for (auto& c : result_.checks) {
      if (c.name == name) return c;
    }
    result_.checks.push_back(SuiteCheck{name, 0, 0, {}});
    return result_.checks.back();
  }

  SuiteResult& result_;
};

SequenceSpace random_space(Rng& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> outcomes(2, 3);
  std::uniform_int_distribution<std::size_t> length(2, max_length);
  const std::size_t k = outcomes(rng);
  return SequenceSpace(letters(k), k == 3 ? std::min<std::size_t>(length(rng), 3) : length(rng));
}

void prop_ex(Rng& rng, Recorder& check) {
  for (int i = 0; i < 100; ++i) {
    const SequenceSpace space = random_space(rng, 3);
    const Gamble f = random_gamble(rng, space);
    const Gamble e = symmetrize(f);
    check("idempotent", symmetrize(e) == e);
    bool commutes = true;
    for (const auto& pi : Permutation::all(space.length())) {
      commutes = commutes && symmetrize(lift_gamble(pi, f)) == e && lift_gamble(pi, e) == e;
    }
    check("permutation invariance", commutes);
    const auto basis = indifference_basis(space);
    std::vector<Vector> columns;
    for (const auto& b : basis.vectors) columns.push_back(b.values());
    check("kernel spanned by basis", solve_linear(columns, gamble_sub(f, e).values()).has_value());
    check("range is fixed", is_permutation_invariant(e));
  }
}

void eq2(Rng& rng, Recorder& check) {
  for (int i = 0; i < 100; ++i) {
    const Gamble f = random_gamble(rng, random_space(rng, 4));
    check("symmetrize equals atom average", symmetrize(f) == ex_via_atoms(f));
  }
}

void inverse(Rng& rng, Recorder& check) {
  for (int i = 0; i < 100; ++i) {
    const SequenceSpace space = random_space(rng, 3);
    const CountGamble g = random_count_gamble(rng, CountSpace(space));
    check("hy after lift is identity", hy_map(lift_count_gamble(g)) == g);
    const Gamble f = random_gamble(rng, space);
    check("lift after hy is class-equal", class_equal(lift_count_gamble(hy_map(f)), f));
  }
}

void order_iso(Rng& rng, Recorder& check) {
  for (int i = 0; i < 100; ++i) {
    const SequenceSpace space = random_space(rng, 3);
    const Gamble f = random_gamble(rng, space);
    // Half of the pairs are built to be ordered so both verdicts occur.
    Gamble g = random_gamble(rng, space);
    if (i % 2 == 0) g = gamble_add(f, lift_count_gamble(CountGamble(CountSpace(space), Vector(CountSpace(space).size(), 1))));
    const bool by_class = class_leq(f, g);
    const bool by_counts = vec_leq(hy_map(f).values(), hy_map(g).values());
    const bool by_bernstein = vec_leq(comn_map(hy_map(f)).coefficients(), comn_map(hy_map(g)).coefficients());
    check("class order matches count order", by_class == by_counts);
    check("count order matches Bernstein order", by_counts == by_bernstein);
  }
}

void bernstein(Rng& rng, Recorder& check) {
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<std::size_t> k(2, 3);
    std::uniform_int_distribution<std::size_t> n(1, 5);
    const OutcomeSpace base = letters(k(rng));
    const CountSpace space(base, n(rng));
    const SimplexPoint theta = random_simplex_point(rng, base);
    Rational total;
    for (const auto& m : space.vectors()) total += bernstein_eval(m, theta);
    check("partition of unity", total == Rational(1));
    const BernsteinPoly p(space, random_vector(rng, space.size()));
    const BernsteinPoly q = degree_elevate(p, space.degree() + 2);
    check("elevation preserves values", poly_eval(p, theta) == poly_eval(q, theta));
    const Gamble f = random_gamble(rng, space.sequence_space());
    check("Mn is the multinomial expectation", poly_eval(mn_map(f), theta) == mn_expectation(f, theta));
  }
}

void lp_oracle(Rng& rng, Recorder& check) {
  std::uniform_int_distribution<std::size_t> count(1, 4);
  for (int i = 0; i < 100; ++i) {
    std::vector<Vector> generators;
    const std::size_t k = count(rng);
    for (std::size_t j = 0; j < k; ++j) generators.push_back(random_vector(rng, 3, 2, 2));
    const Vector target = random_vector(rng, 3, 2, 2);
    check("simplex agrees with elimination",
          solve_nonneg_combination(generators, target).feasible == fm_feasible(generators, target));
    const ConeModel model(3, generators, {});
    check("coherence agrees with elimination", model.coherence().coherent == fm_coherent(model));
  }
}

void representation(Rng& rng, Recorder& check) {
  int built = 0;
  for (int attempt = 0; built < 10 && attempt < 1000; ++attempt) {
    const SequenceSpace space(letters(2), 2 + attempt % 2);
    const CountSpace counts(space);
    std::vector<CountGamble> generators;
    for (int j = 0; j < 2; ++j) generators.push_back(random_count_gamble(rng, counts));
    if (std::any_of(generators.begin(), generators.end(), [](const CountGamble& g) { return g.is_zero(); })) continue;
    const CountGeneratorSet e(counts, generators);
    if (!is_coherent(e).coherent) continue;
    ++built;
    const GeneratorSet lifted = lift_count_assessment(e);
    check("lifted model is exchangeable", is_exchangeable(lifted).exchangeable);
    check("representation round trip", mutually_contained(represent_desirability(lifted), e));
  }
  check("enough coherent samples", built == 10);

  const SequenceSpace space(letters(2), 2);
  const Gamble b = gamble_sub(Gamble::indicator(space, {0, 1}), Gamble::indicator(space, {1, 0}));
  ChoiceTableEnumerator<Gamble> tables({Gamble::zero(space), b, gamble_scale(-1, b)}, all_nonempty_subsets(3));
  GambleChoiceTable t;
  while (tables.next(t)) {
    const bool compatible = check_indifference_compatibility(t).passed();
    bool round_trip = false;
    try {
      const CountChoiceTable r = represent_choice(t);
      round_trip = std::all_of(t.entries.begin(), t.entries.end(), [&](const ChoiceEntry& e) {
        std::vector<Gamble> options;
        std::vector<Gamble> chosen;
        for (std::size_t i : e.options) options.push_back(t.pool[i]);
        for (std::size_t i : e.chosen) chosen.push_back(t.pool[i]);
        return reconstruct_choice(r, options) == chosen;
      });
    } catch (const RepresentationConflict&) {
    }
    check("compatible iff representable", compatible == round_trip);
  }
}

void countable(Rng& rng, Recorder& check) {
  const OutcomeSpace base = letters(2);
  const SequenceSpace s2(base, 2);
  const SequenceSpace s3(base, 3);
  const auto basis2 = indifference_basis(s2).vectors;
  const auto basis3 = indifference_basis(s3).vectors;
  for (int i = 0; i < 50; ++i) {
    Gamble b1 = Gamble::zero(s2);
    for (const auto& v : basis2) b1 = gamble_add(b1, gamble_scale(random_rational(rng), v));
    Gamble b2 = Gamble::zero(s3);
    for (const auto& v : basis3) b2 = gamble_add(b2, gamble_scale(random_rational(rng), v));
    const Gamble sum = gamble_add(cylindrical_extend(FiniteStructureGamble(b1), 3), b2);
    check("cross-degree kernel sums stay in the kernel", symmetrize(sum).is_zero());
  }
  const Gamble a = gamble_add(gamble_add(Gamble::indicator(s2, {0, 1}), Gamble::indicator(s2, {1, 0})),
                              Gamble::constant(s2, Rational(-1, 2)));
  CountableAssessment assessment{base, {FiniteStructureGamble(a)}, {}, true};
  const CountableRepresentation r = countable_represent(assessment, Horizon{3});
  const PolySet finite =
      canonical_poly_set(represent_desirability_poly(GeneratorSet(s2, {a}).with_exchangeability()));
  check("countable and finite representations agree",
        r.polys.generators == finite.generators && r.polys.indifferent == finite.indifferent);
}

void bernstein_search(Rng& rng, Recorder& check) {
  const OutcomeSpace base = letters(2);
  const BernsteinPoly zero = BernsteinPoly::constant(base, 2, 0);
  const BernsteinPoly positive(base, 2, {1, Rational(-1, 2), 1});
  const auto verdict = bernstein_leq_global(zero, positive, kDefaultElevationBudget);
  check("positive fixture certified", verdict.certified());
  if (verdict.certified()) {
    for (int i = 0; i < 50; ++i) {
      check("certificate re-validated", poly_eval(positive, random_simplex_point(rng, base)).sign() >= 0);
    }
  }
  const BernsteinPoly negative(base, 2, {1, Rational(-3, 2), 1});
  check("negative fixture never certified", !bernstein_leq_global(zero, negative, kDefaultElevationBudget).certified());
}

const std::vector<std::pair<std::string, std::function<void(Rng&, Recorder&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(Rng&, Recorder&)>>> suites{
      {"prop-ex", prop_ex},
      {"eq2", eq2},
      {"inverse", inverse},
      {"order-iso", order_iso},
      {"bernstein", bernstein},
      {"lp-oracle", lp_oracle},
      {"representation", representation},
      {"countable", countable},
      {"bernstein-search", bernstein_search},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, run] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, unsigned long long seed) {
  for (const auto& [suite, run] : registry()) {
    if (suite != name) continue;
    SuiteResult result{name, {}};
    Recorder recorder(result);
    Rng rng(seed);
    run(rng, recorder);
    return result;
  }
  throw PreconditionFailed("unknown suite '" + name + "'");
}

}  // namespace exchg
