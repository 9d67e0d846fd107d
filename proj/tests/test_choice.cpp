#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exchg/choice.hpp"
#include "exchg/oracles.hpp"
#include "exchg/permutations.hpp"
#include "exchg/sampling.hpp"

using namespace exchg;

namespace {

const SequenceSpace ab2(letters(2), 2);

Gamble ind(const char* key) { return Gamble::indicator(ab2, ab2.parse_key(key)); }

Gamble kernel_direction() { return gamble_sub(ind("ab"), ind("ba")); }

GambleChoiceTable table(std::vector<Gamble> pool, std::vector<ChoiceEntry> entries) {
  GambleChoiceTable t{std::move(pool), std::move(entries)};
  normalize_table(t);
  return t;
}

bool has_axiom(const AxiomReport& r, const std::string& axiom) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

bool has_kind(const CompatibilityReport& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const CompatibilityViolation& v) { return v.kind == kind; });
}

std::vector<Gamble> resolve(const GambleChoiceTable& t, const std::vector<std::size_t>& idx) {
  std::vector<Gamble> out;
  for (std::size_t i : idx) out.push_back(t.pool[i]);
  return out;
}

}  // namespace

TEST_CASE("table normalization") {
  GambleChoiceTable t{{Gamble::zero(ab2), ind("aa")}, {{{1, 0, 1}, {1}}}};
  normalize_table(t);
  CHECK(t.entries[0].options == std::vector<std::size_t>{0, 1});
  GambleChoiceTable bad{{Gamble::zero(ab2)}, {{{0}, {1}}}};
  CHECK_THROWS_AS(normalize_table(bad), FormatError);
  GambleChoiceTable empty_options{{Gamble::zero(ab2)}, {{{}, {}}}};
  CHECK_THROWS_AS(normalize_table(empty_options), FormatError);
}

TEST_CASE("subset enumeration") {
  const auto s = all_nonempty_subsets(3);
  REQUIRE(s.size() == 7);
  CHECK(s[0] == std::vector<std::size_t>{0});
  CHECK(s[3] == std::vector<std::size_t>{0, 1});
  CHECK(s[6] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("coherence axioms on small tables") {
  // 1_ab - 1_ba, 1_aa - 1_bb, 1_ab - 1_aa are pairwise incomparable
  const std::vector<Gamble> pool{kernel_direction(), gamble_sub(ind("aa"), ind("bb")), gamble_sub(ind("ab"), ind("aa"))};
  std::vector<ChoiceEntry> all;
  for (const auto& o : all_nonempty_subsets(3)) all.push_back({o, o});
  const auto identity = check_coherence_axioms(table(pool, all), default_scalars());
  CHECK(identity.passed());
  CHECK(identity.instances.at("C1") == 7);
  CHECK(identity.instances.count("C2") == 0);

  const auto c2 = check_coherence_axioms(table({Gamble::zero(ab2), ind("aa")}, {{{0, 1}, {0}}}), default_scalars());
  CHECK(has_axiom(c2, "C2"));
  CHECK(c2.violations.size() == 1);

  const auto c1 = check_coherence_axioms(table({Gamble::zero(ab2), ind("aa")}, {{{0, 1}, {}}}), default_scalars());
  CHECK(has_axiom(c1, "C1"));

  // rejecting 0 from {0,u} but choosing it from {0,u,v}
  const Gamble u = kernel_direction();
  const Gamble v = gamble_scale(-1, u);
  const auto c3a = check_coherence_axioms(
      table({Gamble::zero(ab2), u, v}, {{{0, 1}, {1}}, {{0, 1, 2}, {0}}}), {});
  CHECK(has_axiom(c3a, "C3a"));

  // C({0,u,v}) = {u} but C({0,u}) = {0,u}
  const auto c3b = check_coherence_axioms(
      table({Gamble::zero(ab2), u, v}, {{{0, 1, 2}, {1}}, {{0, 1}, {0, 1}}}), {});
  CHECK(has_axiom(c3b, "C3b"));

  // C({0,u}) = {u} while C({0,2u}) = {0}
  const auto c4a = check_coherence_axioms(
      table({Gamble::zero(ab2), u, gamble_scale(2, u)}, {{{0, 1}, {1}}, {{0, 2}, {0}}}), default_scalars());
  CHECK(has_axiom(c4a, "C4a"));

  // C({0,u}) = {u} while C({u,2u}) = {u}: translation by u maps {0,u} onto {u,2u}
  const auto c4b = check_coherence_axioms(
      table({Gamble::zero(ab2), u, gamble_scale(2, u)}, {{{0, 1}, {1}}, {{1, 2}, {1}}}), {});
  CHECK(has_axiom(c4b, "C4b"));
}

TEST_CASE("derived desirability") {
  const Gamble u = kernel_direction();
  const Gamble w = ind("aa");
  const Gamble z = gamble_scale(-1, ind("bb"));
  const auto t = table({Gamble::zero(ab2), u, w, z}, {{{0, 1}, {0, 1}}, {{0, 2}, {2}}, {{0, 3}, {0}}});
  const GeneratorSet d = derive_desirability(t);
  REQUIRE(d.generators().size() == 1);
  CHECK(d.generators()[0] == w);
  CHECK_THROWS_AS(derive_desirability(table({u, w}, {{{0, 1}, {1}}})), PreconditionFailed);
}

TEST_CASE("indifference compatibility") {
  const Gamble u = kernel_direction();
  CHECK(check_indifference_compatibility(table({Gamble::zero(ab2), u}, {{{0, 1}, {0, 1}}})).passed());
  const auto bad = check_indifference_compatibility(table({Gamble::zero(ab2), u}, {{{0, 1}, {1}}}));
  CHECK(has_kind(bad, "indifference"));
  CHECK(check_indifference_compatibility(table({ind("aa"), ind("bb")}, {{{0, 1}, {0}}})).passed());

  // 1_ab and 1_ba are class-equal: choosing only one of them is unsaturated
  const auto sat = check_indifference_compatibility(table({ind("ab"), ind("ba")}, {{{0, 1}, {0}}}));
  CHECK(has_kind(sat, "saturation"));

  const auto wd = check_indifference_compatibility(
      table({Gamble::zero(ab2), ind("ab"), ind("ba")}, {{{0, 1}, {1}}, {{0, 2}, {0}}}));
  CHECK(has_kind(wd, "well_definedness"));
}

TEST_CASE("representation of choice tables") {
  const auto t = table({ind("ab"), ind("ba")}, {{{0, 1}, {0, 1}}});
  const CountChoiceTable r = represent_choice(t);
  REQUIRE(r.pool.size() == 1);
  CHECK(r.pool[0] == CountGamble(CountSpace(ab2), {0, Rational(1, 2), 0}));
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].chosen == std::vector<std::size_t>{0});

  try {
    represent_choice(table({Gamble::zero(ab2), ind("ab"), ind("ba")}, {{{0, 1}, {1}}, {{0, 2}, {0}}}));
    FAIL("expected a conflict");
  } catch (const RepresentationConflict& e) {
    CHECK(e.kind() == "well_definedness");
    CHECK(e.entries() == std::vector<std::size_t>{0, 1});
  }
  CHECK_THROWS_AS(represent_choice(table({ind("ab"), ind("ba")}, {{{0, 1}, {0}}})), RepresentationConflict);

  const CountChoiceTable empty = represent_choice(GambleChoiceTable{});
  CHECK(empty.entries.empty());

  CHECK(reconstruct_choice(r, {ind("ab"), ind("ba")}) == std::vector<Gamble>{ind("ab"), ind("ba")});
  const auto single = represent_choice(table({ind("aa")}, {{{0}, {0}}}));
  CHECK(reconstruct_choice(single, {ind("aa")}) == std::vector<Gamble>{ind("aa")});
  CHECK_THROWS_AS(reconstruct_choice(single, {ind("bb")}), PreconditionFailed);

  const PolyChoiceTable p = represent_choice_poly(t);
  REQUIRE(p.pool.size() == 1);
  CHECK(poly_equal(p.pool[0], BernsteinPoly(letters(2), 2, {0, Rational(1, 2), 0})));
  CHECK(reconstruct_choice_poly(p, {ind("ab"), ind("ba")}).size() == 2);
}

TEST_CASE("maximality tables of coherent models") {
  const Gamble sym = gamble_add(gamble_add(ind("ab"), ind("ba")), Gamble::constant(ab2, Rational(-1, 2)));
  const GeneratorSet model = GeneratorSet(ab2, {sym}).with_exchangeability();
  const std::vector<Gamble> pool{Gamble::zero(ab2), sym, ind("ab"), ind("ba"), gamble_scale(-1, ind("aa"))};
  const GambleChoiceTable t = choice_from_desirability(model, pool, all_nonempty_subsets(pool.size()));
  CHECK(t.entries.size() == 31);
  CHECK(check_coherence_axioms(t, default_scalars()).passed());
  CHECK(check_indifference_compatibility(t).passed());
  // sym, 1_ab and 1_ba are preferred to 0
  CHECK(derive_desirability(t).generators().size() == 3);

  const CountChoiceTable r = represent_choice(t);
  CHECK(check_coherence_axioms(r, default_scalars(), count_gamble_ops()).passed());
  for (const auto& e : t.entries) CHECK(reconstruct_choice(r, resolve(t, e.options)) == resolve(t, e.chosen));
  const PolyChoiceTable rp = represent_choice_poly(t);
  CHECK(check_coherence_axioms(rp, default_scalars(), poly_ops(2)).passed());
}

TEST_CASE("exhaustive tables over a kernel pool") {
  const Gamble b = kernel_direction();
  const std::vector<Gamble> pool{Gamble::zero(ab2), b, gamble_scale(-1, b)};
  ChoiceTableEnumerator<Gamble> tables(pool, all_nonempty_subsets(3));
  REQUIRE(tables.count() == 189);
  GambleChoiceTable t;
  std::size_t passing = 0;
  std::size_t fully_coherent = 0;
  while (tables.next(t)) {
    const bool compatible = check_indifference_compatibility(t).passed();
    const AxiomReport axioms = check_coherence_axioms(t, default_scalars());
    const bool c1 = std::none_of(axioms.violations.begin(), axioms.violations.end(),
                                 [](const AxiomViolation& v) { return v.axiom == "C1"; });
    if (compatible && c1) {
      ++passing;
      for (const auto& e : t.entries) CHECK(e.chosen == e.options);
    }
    bool representable = true;
    try {
      const CountChoiceTable r = represent_choice(t);
      for (const auto& e : t.entries) representable = representable && reconstruct_choice(r, resolve(t, e.options)) == resolve(t, e.chosen);
      if (compatible && axioms.passed()) {
        ++fully_coherent;
        CHECK(check_coherence_axioms(r, default_scalars(), count_gamble_ops()).passed());
      }
    } catch (const RepresentationConflict&) {
      representable = false;
    }
    CHECK(representable == compatible);
  }
  CHECK(passing == 1);
  CHECK(fully_coherent == 1);
}
