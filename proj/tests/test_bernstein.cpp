#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exchg/bernstein.hpp"
#include "exchg/sampling.hpp"

using namespace exchg;

namespace {

const OutcomeSpace ab = letters(2);

SimplexPoint point(Rational a) { return SimplexPoint(ab, {a, Rational(1) - a}); }

}  // namespace

TEST_CASE("simplex points") {
  CHECK_THROWS(SimplexPoint(ab, {Rational(1, 2), Rational(1, 3)}));
  CHECK_THROWS(SimplexPoint(ab, {Rational(3, 2), Rational(-1, 2)}));
}

TEST_CASE("Bernstein basis evaluation") {
  CHECK(bernstein_eval(CountVector{{1, 1}}, point(Rational(1, 2))) == Rational(1, 2));
  CHECK(bernstein_eval(CountVector{{3, 0}}, point(1)) == 1);
  CHECK(bernstein_eval(CountVector{{2, 1, 1}}, SimplexPoint(letters(3), {Rational(1, 2), Rational(1, 4), Rational(1, 4)})) ==
        Rational(3, 16));
}

TEST_CASE("polynomial evaluation") {
  CHECK(poly_eval(BernsteinPoly::constant(ab, 3, Rational(7, 5)), point(Rational(2, 7))) == Rational(7, 5));
  CHECK(poly_eval(BernsteinPoly(ab, 2, {1, 0, 0}), point(Rational(1, 3))) == Rational(1, 9));
  CHECK(poly_eval(BernsteinPoly(ab, 2, {0, 0, 0}), point(Rational(1, 3))) == 0);
}

TEST_CASE("CoMn and Mn") {
  const CountSpace c(ab, 2);
  CHECK(comn_map(CountGamble(c, {1, 0, 0})) == BernsteinPoly(ab, 2, {1, 0, 0}));
  CHECK(comn_inverse(BernsteinPoly(ab, 2, {1, 2, 3})) == CountGamble(c, {1, 2, 3}));
  const SequenceSpace s(ab, 2);
  const Gamble f = Gamble::indicator(s, {0, 1});
  const BernsteinPoly p = mn_map(f);
  CHECK(p == BernsteinPoly(ab, 2, {0, Rational(1, 2), 0}));
  CHECK(poly_eval(p, point(Rational(1, 3))) == Rational(2, 9));
  CHECK(mn_map(Gamble::constant(s, 4)) == BernsteinPoly::constant(ab, 2, 4));
}

TEST_CASE("degree elevation and reduction") {
  const BernsteinPoly b11 = BernsteinPoly::basis(ab, CountVector{{1, 1}});
  CHECK(degree_elevate(b11, 3) == BernsteinPoly(ab, 3, {0, Rational(2, 3), Rational(2, 3), 0}));
  CHECK(degree_elevate(b11, 2) == b11);
  CHECK_THROWS(degree_elevate(b11, 1));
  const BernsteinPoly p(ab, 2, {1, Rational(-1, 2), 1});
  CHECK(degree_elevate(p, 3) == BernsteinPoly(ab, 3, {1, 0, 0, 1}));
  CHECK(reduce_degree(degree_elevate(p, 5)) == p);
  CHECK(reduce_degree(BernsteinPoly::constant(ab, 4, 3)).degree() == 0);
  CHECK(poly_equal(b11, degree_elevate(b11, 4)));
  CHECK_FALSE(poly_equal(b11, BernsteinPoly(ab, 2, {0, 1, 1})));

  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    const SimplexPoint theta = random_simplex_point(rng, ab);
    CHECK(poly_eval(b11, theta) == poly_eval(degree_elevate(b11, 3), theta));
  }
}

TEST_CASE("partition of unity and Mn expectation") {
  Rng rng(19);
  for (std::size_t k : {2, 3}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const CountSpace c(letters(k), n);
      const SimplexPoint theta = random_simplex_point(rng, c.base());
      Rational total;
      for (const auto& m : c.vectors()) total += bernstein_eval(m, theta);
      CHECK(total == 1);
      if (n <= 3) {
        const Gamble f = random_gamble(rng, c.sequence_space());
        CHECK(poly_eval(mn_map(f), theta) == mn_expectation(f, theta));
      }
    }
  }
}

TEST_CASE("polynomial arithmetic across degrees") {
  const BernsteinPoly p(ab, 1, {1, 0});
  const BernsteinPoly q(ab, 2, {0, 1, 0});
  const BernsteinPoly s = poly_add(p, q);
  CHECK(s.degree() == 2);
  CHECK(poly_eval(s, point(Rational(1, 4))) == Rational(1, 4) + Rational(3, 8));
  CHECK(poly_equal(poly_sub(s, q), p));
  CHECK(poly_scale(2, p) == BernsteinPoly(ab, 1, {2, 0}));
}

TEST_CASE("Bernstein order at a fixed degree") {
  const BernsteinPoly zero = BernsteinPoly::constant(ab, 2, 0);
  CHECK(bernstein_leq_at_degree(zero, BernsteinPoly::basis(ab, CountVector{{1, 1}}), 2));
  CHECK_FALSE(bernstein_leq_at_degree(zero, BernsteinPoly(ab, 2, {1, -1, 1}), 2));
  const BernsteinPoly p(ab, 2, {1, Rational(-1, 2), 1});
  CHECK(bernstein_leq_at_degree(p, p, 2));
  CHECK_FALSE(bernstein_leq_at_degree(zero, p, 2));
  CHECK(bernstein_leq_at_degree(zero, p, 3));
  CHECK_THROWS_AS(bernstein_leq_at_degree(zero, p, 1), PreconditionFailed);
}

TEST_CASE("bounded global order search") {
  const BernsteinPoly zero = BernsteinPoly::constant(ab, 2, 0);
  const auto own = bernstein_leq_global(zero, BernsteinPoly::basis(ab, CountVector{{1, 1}}), 5);
  REQUIRE(own.certified());
  CHECK(*own.certified_degree == 2);
  const auto lifted = bernstein_leq_global(zero, BernsteinPoly(ab, 2, {1, Rational(-1, 2), 1}), 5);
  REQUIRE(lifted.certified());
  CHECK(*lifted.certified_degree == 3);
  // theta_a^2 - 3 theta_a theta_b + theta_b^2 is -1/4 at (1/2, 1/2)
  const BernsteinPoly negative(ab, 2, {1, Rational(-3, 2), 1});
  CHECK(poly_eval(negative, point(Rational(1, 2))) == Rational(-1, 4));
  CHECK_FALSE(bernstein_leq_global(zero, negative, 30).certified());
  // theta_a theta_b - theta_a^2 theta_b^2 is positive on the interior but zero at vertices: needs no elevation
  const BernsteinPoly q = poly_sub(BernsteinPoly(ab, 2, {0, Rational(1, 2), 0}), BernsteinPoly(ab, 4, {0, 0, Rational(1, 6), 0, 0}));
  CHECK(poly_eval(q, point(Rational(1, 2))) == Rational(1, 4) - Rational(1, 16));
  CHECK(bernstein_leq_global(BernsteinPoly::constant(ab, 4, 0), q, 10).certified());
}
