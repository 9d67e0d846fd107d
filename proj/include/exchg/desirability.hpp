#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exchg/bernstein.hpp"
#include "exchg/counts.hpp"
#include "exchg/lp.hpp"

namespace exchg {

// Models in this module are natural extensions of finite assessments:
//
//   D = Posi(A u {1_x : x}) + span(B)
//
// A holds the desirable generators, the unit indicators generate the
// positive gambles, and B (possibly empty) spans a declared linear space of
// indifferent gambles. With B empty this is the plain cone Posi(A u L_{>0}).

/// Membership verdict for one target vector.
struct ConeMembership {
  bool member = false;
  /// Witness (member): target = sum desirable*A + sum slack*1_x + sum span*B.
  Vector desirable;
  Vector slack;
  Vector span;
  /// Certificate (non-member): functional c with <c, a> + offset >= 0 for
  /// every a in A, c_x + offset >= 0, <c, b> = 0 for b in B, and
  /// <c, target> + offset < 0. offset is zero unless the target lies in
  /// span(B), in which case a strictly positive combination is required.
  Vector separating;
  Rational offset;
};

/// Coherence verdict. On incoherence `desirable`/`slack`/`span` hold a
/// primitive-integer nontrivial combination summing to zero. On coherence
/// `prevision` is a strictly positive mass function under which every
/// desirable generator has positive expectation and B has zero expectation.
struct CoherenceReport {
  bool coherent = false;
  Vector desirable;
  Vector slack;
  Vector span;
  Vector prevision;
};

/// A finitely generated cone over Q^d; the shared engine behind the
/// sequence-space and count-space models.
class ConeModel {
 public:
  ConeModel(std::size_t dimension, std::vector<Vector> desirable, std::vector<Vector> indifferent);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Vector>& desirable() const { return desirable_; }
  const std::vector<Vector>& indifferent() const { return indifferent_; }

  ConeMembership member(const Vector& target) const;
  CoherenceReport coherence() const;
  bool in_indifferent_span(const Vector& v) const;

 private:
  ConeMembership solve(const Vector& target, bool nontrivial) const;

  std::size_t dimension_;
  std::vector<Vector> desirable_;
  std::vector<Vector> indifferent_;
};

/// A finite assessment on X^N: desirable generators A and declared
/// indifferent gambles B.
class GeneratorSet {
 public:
  GeneratorSet(SequenceSpace space, std::vector<Gamble> generators, std::vector<Gamble> indifferent = {});

  const SequenceSpace& space() const { return space_; }
  const std::vector<Gamble>& generators() const { return generators_; }
  const std::vector<Gamble>& indifferent() const { return indifferent_; }
  ConeModel cone() const;

  /// The same assessment with the exchangeability indifference basis added
  /// to B, i.e. the smallest exchangeable model containing it.
  GeneratorSet with_exchangeability() const;
  GeneratorSet with_generator(const Gamble& g) const;

 private:
  SequenceSpace space_;
  std::vector<Gamble> generators_;
  std::vector<Gamble> indifferent_;
};

/// The count-space counterpart. Zero generators are allowed here since Hy
/// images of indifferent gambles vanish.
class CountGeneratorSet {
 public:
  CountGeneratorSet(CountSpace space, std::vector<CountGamble> generators, std::vector<CountGamble> indifferent = {});

  const CountSpace& space() const { return space_; }
  const std::vector<CountGamble>& generators() const { return generators_; }
  const std::vector<CountGamble>& indifferent() const { return indifferent_; }
  ConeModel cone() const;

 private:
  CountSpace space_;
  std::vector<CountGamble> generators_;
  std::vector<CountGamble> indifferent_;
};

/// Polynomial-form model (the representation space of the countable case).
struct PolySet {
  std::vector<BernsteinPoly> generators;
  std::vector<BernsteinPoly> indifferent;
};

ConeMembership cone_member(const GeneratorSet& a, const Gamble& h);
ConeMembership cone_member(const CountGeneratorSet& a, const CountGamble& h);

CoherenceReport is_coherent(const GeneratorSet& a);
CoherenceReport is_coherent(const CountGeneratorSet& a);

/// Exchangeability verdict. On failure `missing_direction` is an
/// indifference basis vector b outside the model's indifferent span, and
/// when found `probe` = g + scale*b is a gamble that exchangeability would
/// force into the model but which is not a member (see `probe_membership`).
struct ExchangeabilityReport {
  bool exchangeable = false;
  std::optional<Gamble> missing_direction;
  std::optional<Gamble> probe;
  std::optional<Rational> probe_scale;
  std::string probe_base;  // "generator k" or "indicator <key>"
  std::optional<ConeMembership> probe_membership;
};

/// Decides D + I_{P_N} <= D for a coherent model. Throws PreconditionFailed
/// on incoherent input.
ExchangeabilityReport is_exchangeable(const GeneratorSet& a);

struct NaturalExtension {
  CountGeneratorSet extension;
  CoherenceReport coherence;
};

/// Hy-image of the assessment; its coherence is the coherence of the
/// exchangeable natural extension.
NaturalExtension exchangeable_natural_extension(const GeneratorSet& a);

/// Count form of an exchangeable model. Throws PreconditionFailed when the
/// model is incoherent or not exchangeable.
CountGeneratorSet represent_desirability(const GeneratorSet& a);
PolySet represent_desirability_poly(const GeneratorSet& a);

/// The sequence-space model Hy^{-1} of a count-space model: lifted
/// generators, with the exchangeability indifference basis added to B.
/// Throws PreconditionFailed for a zero desirable generator.
GeneratorSet lift_count_assessment(const CountGeneratorSet& a);

/// outer contains inner as cones. Assumes outer is coherent.
bool cone_contains(const GeneratorSet& outer, const GeneratorSet& inner);
bool cone_contains(const CountGeneratorSet& outer, const CountGeneratorSet& inner);
bool mutually_contained(const GeneratorSet& a, const GeneratorSet& b);
bool mutually_contained(const CountGeneratorSet& a, const CountGeneratorSet& b);

/// Every indicator 1_x of the sequence space.
std::vector<Gamble> point_indicators(const SequenceSpace& space);

}  // namespace exchg
