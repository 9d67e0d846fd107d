#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exchg/linalg.hpp"
#include "exchg/permutations.hpp"
#include "exchg/sampling.hpp"

using namespace exchg;

TEST_CASE("permutation validity") {
  CHECK_THROWS(Permutation({0, 0}));
  CHECK_THROWS(Permutation({1, 2}));
  CHECK(Permutation::all(3).size() == 6);
  CHECK(Permutation::all(1).size() == 1);
}

TEST_CASE("apply_permutation") {
  CHECK(apply_permutation(Permutation::identity(3), {0, 1, 2}) == Sequence{0, 1, 2});
  CHECK(apply_permutation(Permutation({1, 0}), {0, 1}) == Sequence{1, 0});
  // cycle 1->2->3->1: (x_{pi(1)}, x_{pi(2)}, x_{pi(3)}) = (x_2, x_3, x_1) = (b, c, a)
  CHECK(apply_permutation(Permutation({1, 2, 0}), {0, 1, 2}) == Sequence{1, 2, 0});
}

TEST_CASE("lift_gamble") {
  const SequenceSpace s(letters(2), 2);
  const Gamble ab = Gamble::indicator(s, {0, 1});
  CHECK(lift_gamble(Permutation({1, 0}), ab) == Gamble::indicator(s, {1, 0}));
  CHECK(lift_gamble(Permutation::identity(2), ab) == ab);

  Rng rng(3);
  const SequenceSpace s3(letters(2), 3);
  for (int i = 0; i < 20; ++i) {
    const Gamble f = random_gamble(rng, s3), g = random_gamble(rng, s3);
    for (const auto& pi : Permutation::all(3)) {
      CHECK(lift_gamble(pi, gamble_add(f, g)) == gamble_add(lift_gamble(pi, f), lift_gamble(pi, g)));
    }
  }
}

TEST_CASE("symmetrize") {
  const SequenceSpace s(letters(2), 2);
  const Gamble ab = Gamble::indicator(s, {0, 1});
  CHECK(symmetrize(ab) == Gamble(s, {0, Rational(1, 2), Rational(1, 2), 0}));
  CHECK(symmetrize(Gamble::constant(s, 1)) == Gamble::constant(s, 1));
  CHECK(symmetrize(gamble_sub(ab, Gamble::indicator(s, {1, 0}))).is_zero());
  CHECK_THROWS_AS(symmetrize(Gamble::zero(SequenceSpace(letters(2), 3)), 2), BudgetExceeded);
}

TEST_CASE("permutation invariance test") {
  const SequenceSpace s(letters(2), 2);
  CHECK(is_permutation_invariant(Gamble::constant(s, 3)));
  CHECK_FALSE(is_permutation_invariant(Gamble::indicator(s, {0, 1})));
  CHECK(is_permutation_invariant(gamble_add(Gamble::indicator(s, {0, 1}), Gamble::indicator(s, {1, 0}))));
}

TEST_CASE("indifference basis") {
  const SequenceSpace s(letters(2), 2);
  const auto basis = indifference_basis(s);
  REQUIRE(basis.vectors.size() == 1);
  CHECK(basis.vectors[0] == gamble_sub(Gamble::indicator(s, {1, 0}), Gamble::indicator(s, {0, 1})));
  CHECK(indifference_basis(SequenceSpace(letters(2), 1)).vectors.empty());
  CHECK(indifference_basis(SequenceSpace(letters(2), 3)).vectors.size() == 4);
  // 27 sequences, 10 count vectors
  const auto b33 = indifference_basis(SequenceSpace(letters(3), 3));
  CHECK(b33.vectors.size() == 17);
  std::vector<Vector> rows;
  for (const auto& v : b33.vectors) {
    CHECK(symmetrize(v).is_zero());
    rows.push_back(v.values());
  }
  CHECK(rank_of(rows) == 17);
}

TEST_CASE("projection laws on random gambles") {
  Rng rng(5);
  for (std::size_t k : {2, 3}) {
    for (std::size_t n : {2, 3}) {
      const SequenceSpace s(letters(k), n);
      const auto basis = indifference_basis(s);
      std::vector<Vector> columns;
      for (const auto& b : basis.vectors) columns.push_back(b.values());
      for (int i = 0; i < 10; ++i) {
        const Gamble f = random_gamble(rng, s);
        const Gamble e = symmetrize(f);
        CHECK(symmetrize(e) == e);
        CHECK(is_permutation_invariant(e));
        for (const auto& pi : Permutation::all(n)) {
          CHECK(symmetrize(lift_gamble(pi, f)) == e);
          CHECK(lift_gamble(pi, e) == e);
        }
        CHECK(solve_linear(columns, gamble_sub(f, e).values()).has_value());
        CHECK_FALSE(solve_linear(columns, e.values()).has_value() != e.is_zero());
      }
    }
  }
}
