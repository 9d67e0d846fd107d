#include "exchg/desirability.hpp"

#include <algorithm>
#include <memory>

#include "exchg/linalg.hpp"
#include "exchg/permutations.hpp"

namespace exchg {

namespace {

// Scales a nontrivial certificate to the primitive integer vector on the
// same ray.
void make_primitive(std::vector<Vector*> parts) {
  mpz_class lcm = 1;
  for (const Vector* part : parts) {
    for (const auto& v : *part) {
      if (!v.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
    }
  }
  mpz_class gcd = 0;
  for (const Vector* part : parts) {
    for (const auto& v : *part) {
      if (v.is_zero()) continue;
      mpz_class scaled = v.numerator() * (lcm / v.denominator());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  if (gcd == 0) return;
  const Rational factor(mpq_class(lcm, gcd));
  for (Vector* part : parts) {
    for (auto& v : *part) {
      if (!v.is_zero()) v *= factor;
    }
  }
}

std::vector<Vector> values_of(const std::vector<Gamble>& gs) {
  std::vector<Vector> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(g.values());
  return out;
}

std::vector<Vector> values_of(const std::vector<CountGamble>& gs) {
  std::vector<Vector> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(g.values());
  return out;
}

}  // namespace

ConeModel::ConeModel(std::size_t dimension, std::vector<Vector> desirable, std::vector<Vector> indifferent)
    : dimension_(dimension), desirable_(std::move(desirable)), indifferent_(std::move(indifferent)) {
  for (const auto& v : desirable_) {
    if (v.size() != dimension_) throw SpaceMismatch("cone generator has wrong dimension");
  }
  for (const auto& v : indifferent_) {
    if (v.size() != dimension_) throw SpaceMismatch("indifferent generator has wrong dimension");
  }
}

bool ConeModel::in_indifferent_span(const Vector& v) const {
  if (vec_is_zero(v)) return true;
  if (indifferent_.empty()) return false;
  return SpanBasis(dimension_, indifferent_).contains(v);
}

ConeMembership ConeModel::solve(const Vector& target, bool nontrivial) const {
  const std::size_t k = desirable_.size();
  const std::size_t d = dimension_;
  const std::size_t l = indifferent_.size();
  std::vector<Vector> columns;
  columns.reserve(k + d + 2 * l);
  auto push = [&](const Vector& v, const Rational& weight) {
    Vector c(v);
    if (nontrivial) c.push_back(weight);
    columns.push_back(std::move(c));
  };
  for (const auto& a : desirable_) push(a, 1);
  for (std::size_t x = 0; x < d; ++x) {
    Vector e(d);
    e[x] = 1;
    push(e, 1);
  }
  for (const auto& b : indifferent_) push(b, 0);
  for (const auto& b : indifferent_) push(vec_scale(-1, b), 0);
  Vector rhs(target);
  if (nontrivial) rhs.push_back(1);

  const NonnegSolution lp = solve_nonneg_combination(columns, rhs);
  ConeMembership out;
  out.member = lp.feasible;
  if (lp.feasible) {
    out.desirable.assign(lp.coefficients.begin(), lp.coefficients.begin() + static_cast<std::ptrdiff_t>(k));
    out.slack.assign(lp.coefficients.begin() + static_cast<std::ptrdiff_t>(k),
                     lp.coefficients.begin() + static_cast<std::ptrdiff_t>(k + d));
    out.span.resize(l);
    for (std::size_t j = 0; j < l; ++j) out.span[j] = lp.coefficients[k + d + j] - lp.coefficients[k + d + l + j];
  } else {
    out.separating.assign(lp.separating.begin(), lp.separating.begin() + static_cast<std::ptrdiff_t>(d));
    if (nontrivial) out.offset = lp.separating[d];
  }
  return out;
}

ConeMembership ConeModel::member(const Vector& target) const {
  if (target.size() != dimension_) throw SpaceMismatch("cone_member: target has wrong dimension");
  return solve(target, in_indifferent_span(target));
}

CoherenceReport ConeModel::coherence() const {
  const ConeMembership zero = solve(Vector(dimension_), true);
  CoherenceReport report;
  report.coherent = !zero.member;
  if (zero.member) {
    report.desirable = zero.desirable;
    report.slack = zero.slack;
    report.span = zero.span;
    make_primitive({&report.desirable, &report.slack, &report.span});
  } else {
    // c_x >= -offset > 0, so c normalises to a strictly positive mass function.
    Rational total;
    for (const auto& c : zero.separating) total += c;
    report.prevision = vec_scale(Rational(1) / total, zero.separating);
  }
  return report;
}

GeneratorSet::GeneratorSet(SequenceSpace space, std::vector<Gamble> generators, std::vector<Gamble> indifferent)
    : space_(std::move(space)), generators_(std::move(generators)), indifferent_(std::move(indifferent)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    require_same_space(space_, generators_[i].space(), "generator set");
    if (generators_[i].is_zero()) throw PreconditionFailed("generator set contains the zero gamble");
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[j] == generators_[i]) throw PreconditionFailed("generator set contains duplicate gambles");
    }
  }
  for (const auto& b : indifferent_) require_same_space(space_, b.space(), "generator set");
}

ConeModel GeneratorSet::cone() const {
  return ConeModel(space_.size(), values_of(generators_), values_of(indifferent_));
}

GeneratorSet GeneratorSet::with_exchangeability() const {
  auto indifferent = indifferent_;
  SpanBasis span(space_.size(), values_of(indifferent));
  for (auto& b : indifference_basis(space_).vectors) {
    if (span.add(b.values())) indifferent.push_back(std::move(b));
  }
  return GeneratorSet(space_, generators_, std::move(indifferent));
}

GeneratorSet GeneratorSet::with_generator(const Gamble& g) const {
  auto generators = generators_;
  if (std::find(generators.begin(), generators.end(), g) == generators.end()) generators.push_back(g);
  return GeneratorSet(space_, std::move(generators), indifferent_);
}

CountGeneratorSet::CountGeneratorSet(CountSpace space, std::vector<CountGamble> generators,
                                     std::vector<CountGamble> indifferent)
    : space_(std::move(space)), generators_(std::move(generators)), indifferent_(std::move(indifferent)) {
  for (const auto& g : generators_) {
    if (!(g.space() == space_)) throw SpaceMismatch("count generator set: mixed count spaces");
  }
  for (const auto& g : indifferent_) {
    if (!(g.space() == space_)) throw SpaceMismatch("count generator set: mixed count spaces");
  }
}

ConeModel CountGeneratorSet::cone() const {
  return ConeModel(space_.size(), values_of(generators_), values_of(indifferent_));
}

ConeMembership cone_member(const GeneratorSet& a, const Gamble& h) {
  require_same_space(a.space(), h.space(), "cone_member");
  return a.cone().member(h.values());
}

ConeMembership cone_member(const CountGeneratorSet& a, const CountGamble& h) {
  if (!(a.space() == h.space())) throw SpaceMismatch("cone_member: count spaces differ");
  return a.cone().member(h.values());
}

CoherenceReport is_coherent(const GeneratorSet& a) { return a.cone().coherence(); }
CoherenceReport is_coherent(const CountGeneratorSet& a) { return a.cone().coherence(); }

std::vector<Gamble> point_indicators(const SequenceSpace& space) {
  std::vector<Gamble> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(Gamble::indicator(space, space.sequence_at(i)));
  return out;
}

ExchangeabilityReport is_exchangeable(const GeneratorSet& a) {
  const ConeModel cone = a.cone();
  if (!cone.coherence().coherent) throw PreconditionFailed("is_exchangeable: assessment is incoherent");
  ExchangeabilityReport report;
  report.exchangeable = true;
  const SpanBasis span(a.space().size(), values_of(a.indifferent()));
  for (const auto& b : indifference_basis(a.space()).vectors) {
    if (span.contains(b.values())) continue;
    report.exchangeable = false;
    report.missing_direction = b;
    break;
  }
  if (report.exchangeable) return report;

  // D + I <= D would force g + t*b into D for every generator g and every
  // real t; look for a concrete violation.
  const Gamble& b = *report.missing_direction;
  std::vector<std::pair<std::string, Gamble>> bases;
  for (std::size_t k = 0; k < a.generators().size(); ++k) {
    bases.emplace_back("generator " + std::to_string(k), a.generators()[k]);
  }
  for (std::size_t i = 0; i < a.space().size(); ++i) {
    const Sequence x = a.space().sequence_at(i);
    bases.emplace_back("indicator " + a.space().key(x), Gamble::indicator(a.space(), x));
  }
  for (const auto& [name, g] : bases) {
    Rational t = 1;
    for (int k = 0; k <= 32; ++k, t *= 2) {
      for (const Rational& scale : {t, -t}) {
        Gamble candidate = gamble_add(g, gamble_scale(scale, b));
        ConeMembership m = cone.member(candidate.values());
        if (!m.member) {
          report.probe = std::move(candidate);
          report.probe_scale = scale;
          report.probe_base = name;
          report.probe_membership = std::move(m);
          return report;
        }
      }
    }
  }
  return report;
}

NaturalExtension exchangeable_natural_extension(const GeneratorSet& a) {
  const CountSpace counts(a.space());
  std::vector<CountGamble> generators;
  for (const auto& g : a.generators()) generators.push_back(hy_map(g));
  std::vector<CountGamble> indifferent;
  for (const auto& b : a.indifferent()) {
    auto image = hy_map(b);
    if (!image.is_zero()) indifferent.push_back(std::move(image));
  }
  CountGeneratorSet extension(counts, std::move(generators), std::move(indifferent));
  CoherenceReport coherence = is_coherent(extension);
  return NaturalExtension{std::move(extension), std::move(coherence)};
}

namespace {

void require_exchangeable(const GeneratorSet& a) {
  if (!is_coherent(a).coherent) throw PreconditionFailed("representation requires a coherent assessment");
  // The empty assessment stands for the vacuous exchangeable model.
  if (a.generators().empty() && a.indifferent().empty()) return;
  if (!is_exchangeable(a).exchangeable) throw PreconditionFailed("representation requires an exchangeable assessment");
}

}  // namespace

CountGeneratorSet represent_desirability(const GeneratorSet& a) {
  require_exchangeable(a);
  NaturalExtension ext = exchangeable_natural_extension(a);
  return std::move(ext.extension);
}

PolySet represent_desirability_poly(const GeneratorSet& a) {
  const CountGeneratorSet counts = represent_desirability(a);
  PolySet out;
  for (const auto& g : counts.generators()) out.generators.push_back(comn_map(g));
  for (const auto& g : counts.indifferent()) out.indifferent.push_back(comn_map(g));
  return out;
}

GeneratorSet lift_count_assessment(const CountGeneratorSet& a) {
  const SequenceSpace space = a.space().sequence_space();
  std::vector<Gamble> generators;
  for (const auto& g : a.generators()) {
    if (g.is_zero()) throw PreconditionFailed("cannot lift a zero count generator");
    auto lifted = lift_count_gamble(g);
    if (std::find(generators.begin(), generators.end(), lifted) == generators.end()) generators.push_back(lifted);
  }
  std::vector<Gamble> indifferent;
  for (const auto& h : a.indifferent()) {
    if (!h.is_zero()) indifferent.push_back(lift_count_gamble(h));
  }
  return GeneratorSet(space, std::move(generators), std::move(indifferent)).with_exchangeability();
}

namespace {

bool contains_impl(const ConeModel& outer, const ConeModel& inner) {
  for (const auto& a : inner.desirable()) {
    if (!outer.member(a).member) return false;
  }
  for (const auto& b : inner.indifferent()) {
    if (!outer.in_indifferent_span(b)) return false;
  }
  return true;
}

}  // namespace

bool cone_contains(const GeneratorSet& outer, const GeneratorSet& inner) {
  require_same_space(outer.space(), inner.space(), "cone_contains");
  return contains_impl(outer.cone(), inner.cone());
}

bool cone_contains(const CountGeneratorSet& outer, const CountGeneratorSet& inner) {
  if (!(outer.space() == inner.space())) throw SpaceMismatch("cone_contains: count spaces differ");
  return contains_impl(outer.cone(), inner.cone());
}

bool mutually_contained(const GeneratorSet& a, const GeneratorSet& b) {
  return cone_contains(a, b) && cone_contains(b, a);
}

bool mutually_contained(const CountGeneratorSet& a, const CountGeneratorSet& b) {
  return cone_contains(a, b) && cone_contains(b, a);
}

}  // namespace exchg
