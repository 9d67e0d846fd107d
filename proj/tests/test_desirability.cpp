#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exchg/desirability.hpp"
#include "exchg/permutations.hpp"
#include "exchg/sampling.hpp"

using namespace exchg;

namespace {

const SequenceSpace ab2(letters(2), 2);

Gamble ind(const char* key) { return Gamble::indicator(ab2, ab2.parse_key(key)); }

// 1_ab + 1_ba - 1/2
Gamble symmetric_generator() {
  return gamble_add(gamble_add(ind("ab"), ind("ba")), Gamble::constant(ab2, Rational(-1, 2)));
}

Gamble kernel_direction() { return gamble_sub(ind("ab"), ind("ba")); }

}  // namespace

TEST_CASE("nonnegative combinations") {
  const std::vector<Vector> g{{1, 0, 2}, {0, 1, -1}};
  const auto unit = solve_nonneg_combination(g, {1, 0, 2});
  REQUIRE(unit.feasible);
  CHECK(unit.coefficients == Vector{1, 0});
  const auto mix = solve_nonneg_combination(g, {2, 3, 1});
  REQUIRE(mix.feasible);
  CHECK(mix.coefficients == Vector{2, 3});
  CHECK(verify_nonneg_solution(g, {2, 3, 1}, mix));

  const std::vector<Vector> one{{0, 1, -1, 0}};
  const auto no = solve_nonneg_combination(one, {0, -1, 1, 0});
  REQUIRE_FALSE(no.feasible);
  CHECK(dot(no.separating, one[0]) >= 0);
  CHECK(dot(no.separating, Vector{0, -1, 1, 0}) < 0);
  CHECK(verify_nonneg_solution(one, {0, -1, 1, 0}, no));
  // the separating functional 1_ab is one valid certificate
  NonnegSolution manual;
  manual.separating = {0, 1, 0, 0};
  CHECK(verify_nonneg_solution(one, {0, -1, 1, 0}, manual));

  const auto zero = solve_nonneg_combination({{1, -2}, {-1, 2}}, {0, 0});
  CHECK(zero.feasible);
}

TEST_CASE("cone membership") {
  const GeneratorSet vacuous(ab2, {});
  CHECK(cone_member(vacuous, ind("bb")).member);
  CHECK(cone_member(vacuous, Gamble(ab2, {1, 2, 0, Rational(1, 3)})).member);
  CHECK_FALSE(cone_member(vacuous, Gamble::zero(ab2)).member);

  const Gamble a = gamble_sub(ind("aa"), Gamble::constant(ab2, Rational(1, 2)));
  const auto m = cone_member(GeneratorSet(ab2, {a}), gamble_scale(2, a));
  REQUIRE(m.member);
  CHECK(m.desirable == Vector{2});

  const auto no = cone_member(GeneratorSet(ab2, {kernel_direction()}), gamble_scale(-1, kernel_direction()));
  CHECK_FALSE(no.member);
  CHECK(dot(no.separating, kernel_direction().values()) + no.offset >= 0);
  CHECK(dot(no.separating, gamble_scale(-1, kernel_direction()).values()) + no.offset < 0);

  // zero is in D when it can be reached through B with some positive part
  const GeneratorSet with_b(ab2, {}, {kernel_direction()});
  CHECK(cone_member(with_b, ind("ab")).member);
  // indifferent gambles are not desirable, but desirable ones stay so when shifted by them
  CHECK_FALSE(cone_member(with_b, kernel_direction()).member);
  CHECK(cone_member(with_b, gamble_add(kernel_direction(), ind("aa"))).member);
  CHECK_FALSE(cone_member(with_b, Gamble::zero(ab2)).member);
}

TEST_CASE("coherence") {
  const auto ok = is_coherent(GeneratorSet(ab2, {gamble_sub(ind("aa"), Gamble::constant(ab2, Rational(1, 2)))}));
  REQUIRE(ok.coherent);
  Rational total;
  for (const auto& p : ok.prevision) {
    CHECK(p > 0);
    total += p;
  }
  CHECK(total == 1);
  CHECK(ok.prevision[0] > Rational(1, 2));

  const auto neg = is_coherent(GeneratorSet(ab2, {gamble_scale(-1, ind("aa"))}));
  CHECK_FALSE(neg.coherent);
  CHECK(neg.desirable == Vector{1});

  const Gamble f(ab2, {1, -2, 0, 3});
  const auto pair = is_coherent(GeneratorSet(ab2, {f, gamble_scale(-1, f)}));
  CHECK_FALSE(pair.coherent);
  CHECK(pair.desirable == Vector{1, 1});

  CHECK(is_coherent(GeneratorSet(ab2, {})).coherent);
  CHECK(is_coherent(GeneratorSet(ab2, {}, {kernel_direction()})).coherent);
  CHECK_FALSE(is_coherent(GeneratorSet(ab2, {}, {ind("aa")})).coherent);
}

TEST_CASE("exchangeability") {
  const GeneratorSet sym(ab2, {symmetric_generator()});
  CHECK_FALSE(is_exchangeable(sym).exchangeable);
  CHECK(is_exchangeable(sym.with_exchangeability()).exchangeable);

  const auto r = is_exchangeable(GeneratorSet(ab2, {kernel_direction()}).with_generator(ind("aa")));
  CHECK_FALSE(r.exchangeable);
  REQUIRE(r.missing_direction.has_value());
  CHECK(symmetrize(*r.missing_direction).is_zero());
  if (r.probe) {
    REQUIRE(r.probe_membership.has_value());
    CHECK_FALSE(r.probe_membership->member);
  }

  CHECK_FALSE(is_exchangeable(GeneratorSet(ab2, {})).exchangeable);
  CHECK(is_exchangeable(GeneratorSet(ab2, {}).with_exchangeability()).exchangeable);
  CHECK_THROWS_AS(is_exchangeable(GeneratorSet(ab2, {gamble_scale(-1, ind("aa"))})), PreconditionFailed);
  CHECK(is_exchangeable(GeneratorSet(SequenceSpace(letters(2), 1), {Gamble(SequenceSpace(letters(2), 1), {1, -2})}))
            .exchangeable);
}

TEST_CASE("exchangeable natural extension") {
  const CountSpace c(ab2);
  const auto ext = exchangeable_natural_extension(GeneratorSet(ab2, {symmetric_generator()}));
  REQUIRE(ext.extension.generators().size() == 1);
  CHECK(ext.extension.generators()[0] == CountGamble(c, {Rational(-1, 2), Rational(1, 2), Rational(-1, 2)}));
  CHECK(ext.coherence.coherent);

  const auto kernel = exchangeable_natural_extension(GeneratorSet(ab2, {kernel_direction()}));
  CHECK(kernel.extension.generators()[0].is_zero());
  CHECK_FALSE(kernel.coherence.coherent);

  const auto vacuous = exchangeable_natural_extension(GeneratorSet(ab2, {}));
  CHECK(vacuous.extension.generators().empty());
  CHECK(vacuous.coherence.coherent);
}

TEST_CASE("representation") {
  const GeneratorSet model = GeneratorSet(ab2, {symmetric_generator()}).with_exchangeability();
  const CountGeneratorSet counts = represent_desirability(model);
  REQUIRE(counts.generators().size() == 1);
  CHECK(counts.generators()[0] == CountGamble(CountSpace(ab2), {Rational(-1, 2), Rational(1, 2), Rational(-1, 2)}));
  const PolySet polys = represent_desirability_poly(model);
  REQUIRE(polys.generators.size() == 1);
  CHECK(polys.generators[0] == BernsteinPoly(letters(2), 2, {Rational(-1, 2), Rational(1, 2), Rational(-1, 2)}));
  CHECK(polys.indifferent.empty());

  const PolySet empty = represent_desirability_poly(GeneratorSet(ab2, {}));
  CHECK(empty.generators.empty());
  CHECK(empty.indifferent.empty());

  CHECK_THROWS_AS(represent_desirability(GeneratorSet(ab2, {kernel_direction()})), PreconditionFailed);
  CHECK_THROWS_AS(represent_desirability(GeneratorSet(ab2, {symmetric_generator()})), PreconditionFailed);

  const GeneratorSet lifted = lift_count_assessment(counts);
  CHECK(is_exchangeable(lifted).exchangeable);
  CHECK(mutually_contained(lifted, model));
  CHECK(mutually_contained(represent_desirability(lifted), counts));
  CHECK_THROWS_AS(lift_count_assessment(CountGeneratorSet(CountSpace(ab2), {CountGamble::zero(CountSpace(ab2))})),
                  PreconditionFailed);
}

TEST_CASE("round trip on random coherent count assessments") {
  Rng rng(23);
  int coherent = 0;
  for (int i = 0; i < 60 && coherent < 10; ++i) {
    const CountSpace c(letters(2 + i % 2), 2);
    const CountGeneratorSet e(c, {random_count_gamble(rng, c), random_count_gamble(rng, c)});
    if (!is_coherent(e).coherent) continue;
    if (std::any_of(e.generators().begin(), e.generators().end(), [](const CountGamble& g) { return g.is_zero(); })) {
      continue;
    }
    ++coherent;
    const GeneratorSet lifted = lift_count_assessment(e);
    CHECK(is_coherent(lifted).coherent);
    CHECK(is_exchangeable(lifted).exchangeable);
    CHECK(mutually_contained(represent_desirability(lifted), e));
  }
  CHECK(coherent == 10);
}

TEST_CASE("cone containment") {
  const GeneratorSet big(ab2, {gamble_sub(ind("aa"), Gamble::constant(ab2, Rational(1, 4)))});
  const GeneratorSet small(ab2, {gamble_sub(ind("aa"), Gamble::constant(ab2, Rational(1, 8)))});
  CHECK(cone_contains(big, small));
  CHECK_FALSE(cone_contains(small, big));
  CHECK(point_indicators(ab2).size() == 4);
}
