#pragma once

#include <optional>

#include "exchg/counts.hpp"

namespace exchg {

/// A point of the probability simplex over an outcome space.
class SimplexPoint {
 public:
  SimplexPoint(OutcomeSpace base, Vector coordinates);

  const OutcomeSpace& base() const { return base_; }
  const Vector& coordinates() const { return coordinates_; }
  const Rational& operator[](std::size_t x) const { return coordinates_[x]; }

 private:
  OutcomeSpace base_;
  Vector coordinates_;
};

/// Polynomial on the simplex in degree-n Bernstein coordinates. Structural
/// equality compares degree and coefficients; use poly_equal to compare the
/// represented functions across degrees.
class BernsteinPoly {
 public:
  BernsteinPoly(CountSpace space, Vector coefficients);
  BernsteinPoly(OutcomeSpace base, std::size_t degree, Vector coefficients)
      : BernsteinPoly(CountSpace(std::move(base), degree), std::move(coefficients)) {}

  static BernsteinPoly constant(const OutcomeSpace& base, std::size_t degree, const Rational& c);
  /// The single basis polynomial B_m.
  static BernsteinPoly basis(const OutcomeSpace& base, const CountVector& m);

  const OutcomeSpace& base() const { return space_.base(); }
  const CountSpace& space() const { return space_; }
  std::size_t degree() const { return space_.degree(); }
  const Vector& coefficients() const { return coefficients_; }
  const Rational& coefficient(const CountVector& m) const { return coefficients_[space_.index_of(m)]; }

  friend bool operator==(const BernsteinPoly& a, const BernsteinPoly& b) {
    return a.space_ == b.space_ && a.coefficients_ == b.coefficients_;
  }
  /// Orders by degree, then coefficients. Meant for canonical polys.
  friend bool operator<(const BernsteinPoly& a, const BernsteinPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coefficients_ < b.coefficients_;
  }

 private:
  CountSpace space_;
  Vector coefficients_;
};

/// B_m(theta) = multinomial(m) * prod_x theta_x^{m_x}.
Rational bernstein_eval(const CountVector& m, const SimplexPoint& theta);
Rational poly_eval(const BernsteinPoly& p, const SimplexPoint& theta);

/// CoMn: the coefficient identity from count gambles to Bernstein polys.
BernsteinPoly comn_map(const CountGamble& g);
CountGamble comn_inverse(const BernsteinPoly& p);

/// Mn = CoMn o Hy.
BernsteinPoly mn_map(const Gamble& f);
/// Expectation of f under the multinomial distribution with parameters N, theta.
Rational mn_expectation(const Gamble& f, const SimplexPoint& theta);

/// Re-expresses p at a higher degree; the represented function is unchanged.
BernsteinPoly degree_elevate(const BernsteinPoly& p, std::size_t target);

/// The same function at the smallest degree that can represent it.
BernsteinPoly reduce_degree(const BernsteinPoly& p);

/// Function equality, comparing at the larger of the two degrees.
bool poly_equal(const BernsteinPoly& p, const BernsteinPoly& q);
BernsteinPoly poly_add(const BernsteinPoly& p, const BernsteinPoly& q);
BernsteinPoly poly_sub(const BernsteinPoly& p, const BernsteinPoly& q);
BernsteinPoly poly_scale(const Rational& lambda, const BernsteinPoly& p);

/// p <=_B^n q: every degree-n Bernstein coefficient of q - p is >= 0.
/// Throws PreconditionFailed when n is below either degree.
bool bernstein_leq_at_degree(const BernsteinPoly& p, const BernsteinPoly& q, std::size_t n);

/// Result of the bounded certificate search for the global Bernstein order.
/// `certified_degree` is the smallest degree with coefficientwise dominance;
/// nullopt means no certificate up to the cap (which is not a disproof).
struct GlobalOrderVerdict {
  std::optional<std::size_t> certified_degree;
  std::size_t cap = 0;
  bool certified() const { return certified_degree.has_value(); }
};

GlobalOrderVerdict bernstein_leq_global(const BernsteinPoly& p, const BernsteinPoly& q, std::size_t cap);

/// Default search cap: the larger degree plus this many elevations.
inline constexpr std::size_t kDefaultElevationBudget = 20;

}  // namespace exchg
