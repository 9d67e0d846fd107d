#include "exchg/bernstein.hpp"

#include <algorithm>

#include "exchg/linalg.hpp"

namespace exchg {

SimplexPoint::SimplexPoint(OutcomeSpace base, Vector coordinates)
    : base_(std::move(base)), coordinates_(std::move(coordinates)) {
  if (coordinates_.size() != base_.size()) throw FormatError("simplex point has wrong dimension");
  Rational total;
  for (const auto& c : coordinates_) {
    if (c.sign() < 0) throw PreconditionFailed("simplex coordinates must be non-negative");
    total += c;
  }
  if (total != Rational(1)) throw PreconditionFailed("simplex coordinates must sum to 1");
}

BernsteinPoly::BernsteinPoly(CountSpace space, Vector coefficients)
    : space_(std::move(space)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != space_.size()) throw FormatError("Bernstein coefficient count does not match degree");
}

BernsteinPoly BernsteinPoly::constant(const OutcomeSpace& base, std::size_t degree, const Rational& c) {
  CountSpace space(base, degree);
  Vector coefficients(space.size(), c);
  return BernsteinPoly(std::move(space), std::move(coefficients));
}

BernsteinPoly BernsteinPoly::basis(const OutcomeSpace& base, const CountVector& m) {
  CountSpace space(base, m.total());
  Vector coefficients(space.size());
  coefficients[space.index_of(m)] = 1;
  return BernsteinPoly(std::move(space), std::move(coefficients));
}

Rational bernstein_eval(const CountVector& m, const SimplexPoint& theta) {
  if (m.counts.size() != theta.base().size()) throw SpaceMismatch("count vector and simplex point dimensions differ");
  mpq_class value(multinomial(m));
  for (std::size_t x = 0; x < m.counts.size(); ++x) {
    if (m.counts[x] == 0) continue;
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), theta[x].raw().get_num_mpz_t(), m.counts[x]);
    mpz_pow_ui(den.get_mpz_t(), theta[x].raw().get_den_mpz_t(), m.counts[x]);
    value *= mpq_class(num, den);
  }
  return Rational(std::move(value));
}

Rational poly_eval(const BernsteinPoly& p, const SimplexPoint& theta) {
  if (!(p.base() == theta.base())) throw SpaceMismatch("polynomial and simplex point outcome spaces differ");
  Rational sum;
  for (std::size_t i = 0; i < p.space().size(); ++i) {
    if (!p.coefficients()[i].is_zero()) sum += p.coefficients()[i] * bernstein_eval(p.space().at(i), theta);
  }
  return sum;
}

BernsteinPoly comn_map(const CountGamble& g) { return BernsteinPoly(g.space(), g.values()); }

CountGamble comn_inverse(const BernsteinPoly& p) { return CountGamble(p.space(), p.coefficients()); }

BernsteinPoly mn_map(const Gamble& f) { return comn_map(hy_map(f)); }

Rational mn_expectation(const Gamble& f, const SimplexPoint& theta) { return poly_eval(mn_map(f), theta); }

namespace {

// One elevation step: c'_{m'} = sum_x (m'_x / (n+1)) c_{m' - e_x}.
BernsteinPoly elevate_once(const BernsteinPoly& p) {
  const std::size_t n = p.degree();
  CountSpace next(p.base(), n + 1);
  Vector coefficients(next.size());
  const Rational inv(1, static_cast<std::int64_t>(n + 1));
  for (std::size_t i = 0; i < next.size(); ++i) {
    CountVector lower = next.at(i);
    Rational acc;
    for (std::size_t x = 0; x < lower.counts.size(); ++x) {
      const std::size_t mx = lower.counts[x];
      if (mx == 0) continue;
      --lower.counts[x];
      const Rational& c = p.coefficient(lower);
      if (!c.is_zero()) acc += Rational(static_cast<std::int64_t>(mx)) * c;
      ++lower.counts[x];
    }
    coefficients[i] = acc * inv;
  }
  return BernsteinPoly(std::move(next), std::move(coefficients));
}

void require_same_base(const BernsteinPoly& p, const BernsteinPoly& q) {
  if (!(p.base() == q.base())) throw SpaceMismatch("polynomials live on different outcome spaces");
}

}  // namespace

BernsteinPoly degree_elevate(const BernsteinPoly& p, std::size_t target) {
  if (target < p.degree()) {
    throw PreconditionFailed("degree_elevate: target degree " + std::to_string(target) + " is below degree " +
                             std::to_string(p.degree()));
  }
  BernsteinPoly result = p;
  while (result.degree() < target) result = elevate_once(result);
  return result;
}

BernsteinPoly reduce_degree(const BernsteinPoly& p) {
  BernsteinPoly current = p;
  while (current.degree() > 0) {
    CountSpace lower(current.base(), current.degree() - 1);
    std::vector<Vector> columns;
    columns.reserve(lower.size());
    for (const auto& m : lower.vectors()) {
      columns.push_back(elevate_once(BernsteinPoly::basis(current.base(), m)).coefficients());
    }
    auto solution = solve_linear(columns, current.coefficients());
    if (!solution) break;
    current = BernsteinPoly(std::move(lower), std::move(*solution));
  }
  return current;
}

bool poly_equal(const BernsteinPoly& p, const BernsteinPoly& q) {
  require_same_base(p, q);
  const std::size_t n = std::max(p.degree(), q.degree());
  return degree_elevate(p, n).coefficients() == degree_elevate(q, n).coefficients();
}

BernsteinPoly poly_add(const BernsteinPoly& p, const BernsteinPoly& q) {
  require_same_base(p, q);
  const std::size_t n = std::max(p.degree(), q.degree());
  const auto a = degree_elevate(p, n);
  return BernsteinPoly(a.space(), vec_add(a.coefficients(), degree_elevate(q, n).coefficients()));
}

BernsteinPoly poly_sub(const BernsteinPoly& p, const BernsteinPoly& q) { return poly_add(p, poly_scale(-1, q)); }

BernsteinPoly poly_scale(const Rational& lambda, const BernsteinPoly& p) {
  return BernsteinPoly(p.space(), vec_scale(lambda, p.coefficients()));
}

bool bernstein_leq_at_degree(const BernsteinPoly& p, const BernsteinPoly& q, std::size_t n) {
  require_same_base(p, q);
  if (n < p.degree() || n < q.degree()) {
    throw PreconditionFailed("bernstein_leq_at_degree: degree " + std::to_string(n) + " below operand degree");
  }
  const auto diff = degree_elevate(poly_sub(q, p), n);
  return std::all_of(diff.coefficients().begin(), diff.coefficients().end(),
                     [](const Rational& c) { return c.sign() >= 0; });
}

GlobalOrderVerdict bernstein_leq_global(const BernsteinPoly& p, const BernsteinPoly& q, std::size_t cap) {
  require_same_base(p, q);
  GlobalOrderVerdict verdict;
  verdict.cap = cap;
  BernsteinPoly diff = poly_sub(q, p);
  for (std::size_t n = diff.degree(); n <= cap; ++n) {
    if (n > diff.degree()) diff = elevate_once(diff);
    if (std::all_of(diff.coefficients().begin(), diff.coefficients().end(),
                    [](const Rational& c) { return c.sign() >= 0; })) {
      verdict.certified_degree = n;
      break;
    }
  }
  return verdict;
}

}  // namespace exchg
