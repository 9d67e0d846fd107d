#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exchg/oracles.hpp"
#include "exchg/permutations.hpp"
#include "exchg/sampling.hpp"

using namespace exchg;

namespace {

const SequenceSpace ab2(letters(2), 2);

Gamble ind(const char* key) { return Gamble::indicator(ab2, ab2.parse_key(key)); }

}  // namespace

TEST_CASE("elimination agrees with the simplex on the fixed examples") {
  const std::vector<Vector> g{{1, 0, 2}, {0, 1, -1}};
  for (const Vector& t : {Vector{1, 0, 2}, Vector{2, 3, 1}, Vector{1, 1, 2}}) {
    CHECK(fm_feasible(g, t) == solve_nonneg_combination(g, t).feasible);
  }
  CHECK_FALSE(fm_feasible({{0, 1, -1, 0}}, {0, -1, 1, 0}));
  CHECK(fm_feasible({{1, -2}, {-1, 2}}, {0, 0}));
  CHECK(fm_feasible({}, {0, 0}));
  CHECK_FALSE(fm_feasible({}, {1, 0}));
  CHECK_THROWS_AS(fm_feasible(std::vector<Vector>(7, Vector{1}), {1}), BudgetExceeded);
}

TEST_CASE("elimination agrees with the simplex on random cones") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    std::vector<Vector> g;
    for (int k = 0; k < 1 + i % 4; ++k) g.push_back(random_vector(rng, 3, 2, 2));
    const Vector t = random_vector(rng, 3, 2, 2);
    CHECK(fm_feasible(g, t) == solve_nonneg_combination(g, t).feasible);
  }
}

TEST_CASE("cone membership and coherence by elimination") {
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    std::vector<Vector> a;
    for (int k = 0; k < 1 + i % 3; ++k) a.push_back(random_vector(rng, 4, 2, 2));
    std::vector<Vector> b;
    if (i % 2 == 0) b.push_back(random_vector(rng, 4, 2, 2));
    const ConeModel model(4, a, b);
    const Vector t = random_vector(rng, 4, 2, 2);
    CHECK(fm_cone_member(model, t) == model.member(t).member);
    CHECK(fm_coherent(model) == model.coherence().coherent);
  }
  const ConeModel kernel(4, {gamble_sub(ind("ab"), ind("ba")).values()}, {});
  CHECK_FALSE(fm_cone_member(kernel, gamble_sub(ind("ba"), ind("ab")).values()));
  CHECK(fm_cone_member(ConeModel(4, {}, {}), ind("aa").values()));
  CHECK_FALSE(fm_coherent(ConeModel(4, {gamble_scale(-1, ind("aa")).values()}, {})));
}

TEST_CASE("choice table enumeration") {
  const std::vector<Gamble> pool{Gamble::zero(ab2), ind("aa"), ind("bb")};
  ChoiceTableEnumerator<Gamble> full(pool, all_nonempty_subsets(3));
  CHECK(full.count() == 189);
  GambleChoiceTable t;
  std::size_t seen = 0;
  while (full.next(t)) ++seen;
  CHECK(seen == 189);
  full.restart();
  REQUIRE(full.next(t));
  CHECK(t.entries.back().chosen == std::vector<std::size_t>{0});

  ChoiceTableEnumerator<Gamble> pair(pool, {{1, 2}});
  std::vector<std::vector<std::size_t>> chosen;
  while (pair.next(t)) chosen.push_back(t.entries[0].chosen);
  CHECK(chosen == std::vector<std::vector<std::size_t>>{{1}, {2}, {1, 2}});

  ChoiceTableEnumerator<Gamble> none(pool, {});
  CHECK(none.count() == 1);
  REQUIRE(none.next(t));
  CHECK(t.entries.empty());
  CHECK_FALSE(none.next(t));

  std::vector<Gamble> big;
  for (int i = 0; i < 5; ++i) big.push_back(Gamble::constant(ab2, i));
  CHECK_THROWS_AS(ChoiceTableEnumerator<Gamble>(big, all_nonempty_subsets(5)), BudgetExceeded);
}

TEST_CASE("brute exchangeability probes") {
  CHECK(brute_exchangeable(GeneratorSet(ab2, {})));
  CHECK_FALSE(brute_exchangeable(GeneratorSet(ab2, {gamble_sub(ind("ab"), ind("ba"))})));
  const CountSpace c(ab2);
  const GeneratorSet lifted = lift_count_assessment(CountGeneratorSet(c, {CountGamble(c, {Rational(-1, 2), 1, 1})}));
  CHECK(brute_exchangeable(lifted));
  CHECK(is_exchangeable(lifted).exchangeable);
}
