#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "exchg/core.hpp"

namespace exchg {

/// Composition of an urn: the number of occurrences of each outcome.
struct CountVector {
  std::vector<std::size_t> counts;

  std::size_t total() const;
  /// Comma-joined counts in outcome order, e.g. "2,0".
  std::string key() const;
  static CountVector parse_key(std::string_view key);

  friend auto operator<=>(const CountVector&, const CountVector&) = default;
};

/// All count vectors of total n over an outcome space. Vectors are ordered
/// like the lexicographically smallest sequence of their atoms, i.e. (n,0,..)
/// first and (..,0,n) last. Degree n = 0 is allowed (the single empty urn).
class CountSpace {
 public:
  CountSpace(OutcomeSpace base, std::size_t n);
  explicit CountSpace(const SequenceSpace& space) : CountSpace(space.base(), space.length()) {}

  const OutcomeSpace& base() const { return data_->base; }
  std::size_t degree() const { return data_->degree; }
  std::size_t size() const { return data_->vectors.size(); }
  const std::vector<CountVector>& vectors() const { return data_->vectors; }
  const CountVector& at(std::size_t index) const { return data_->vectors[index]; }
  std::size_t index_of(const CountVector& m) const;

  /// The sequence space X^n this count space summarises (n >= 1).
  SequenceSpace sequence_space() const { return SequenceSpace(base(), degree()); }

  friend bool operator==(const CountSpace& a, const CountSpace& b) {
    return a.data_ == b.data_ || (a.degree() == b.degree() && a.base() == b.base());
  }

 private:
  struct Data {
    OutcomeSpace base;
    std::size_t degree;
    std::vector<CountVector> vectors;
    std::map<CountVector, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Rational-valued map on the count vectors of one CountSpace.
class CountGamble {
 public:
  CountGamble(CountSpace space, Vector values);

  static CountGamble zero(const CountSpace& space) { return CountGamble(space, Vector(space.size())); }

  const CountSpace& space() const { return space_; }
  const Vector& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& at(const CountVector& m) const { return values_[space_.index_of(m)]; }
  bool is_zero() const { return vec_is_zero(values_); }

  friend bool operator==(const CountGamble& a, const CountGamble& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }
  friend bool operator<(const CountGamble& a, const CountGamble& b) { return a.values_ < b.values_; }

 private:
  CountSpace space_;
  Vector values_;
};

CountGamble count_gamble_add(const CountGamble& f, const CountGamble& g);
CountGamble count_gamble_scale(const Rational& lambda, const CountGamble& f);
bool count_gamble_leq(const CountGamble& f, const CountGamble& g);
bool count_gamble_strictly_below(const CountGamble& f, const CountGamble& g);

/// The counting map T.
CountVector count_of(const Sequence& x, std::size_t outcome_count);

/// Multinomial coefficient n! / prod_x m_x!.
mpz_class multinomial(const CountVector& m);

/// All sequences with count vector m, lexicographically sorted.
std::vector<Sequence> atom_members(const CountVector& m);
std::size_t atom_size(const CountVector& m);

/// Hy^N(f | m): the uniform average of f over the atom of m.
Rational hy_expectation(const Gamble& f, const CountVector& m);

/// Hy map: f -> (m -> Hy^N(f | m)).
CountGamble hy_map(const Gamble& f);

/// Inverse of hy_map on the quotient: the permutation-invariant gamble that
/// equals g(m) on the atom of m.
Gamble lift_count_gamble(const CountGamble& g);

/// Class representative of f modulo the exchangeability indifference space.
Gamble canonical_representative(const Gamble& f);

bool class_equal(const Gamble& f, const Gamble& g);
bool class_leq(const Gamble& f, const Gamble& g);

/// sum_m Hy(f|m) 1_{atom(m)}, computed from atom averages only.
Gamble ex_via_atoms(const Gamble& f);

}  // namespace exchg
