#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "exchg/errors.hpp"
#include "exchg/rational.hpp"

namespace exchg {

using Vector = std::vector<Rational>;

/// Finite, ordered set of outcome labels. The position of a label is its
/// canonical index. Cheap to copy (labels are shared).
class OutcomeSpace {
 public:
  explicit OutcomeSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t index) const { return labels_->at(index); }
  const std::vector<std::string>& labels() const { return *labels_; }
  /// Throws FormatError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  /// Labels longer than one character force comma-separated sequence keys.
  bool needs_separator() const;

  friend bool operator==(const OutcomeSpace& a, const OutcomeSpace& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A sequence of outcome indices (x_1, ..., x_N).
using Sequence = std::vector<std::size_t>;

/// The space X^N, enumerated in lexicographic order of outcome indices.
class SequenceSpace {
 public:
  SequenceSpace(OutcomeSpace base, std::size_t length);

  const OutcomeSpace& base() const { return base_; }
  std::size_t length() const { return length_; }
  /// |X|^N.
  std::size_t size() const { return size_; }

  Sequence sequence_at(std::size_t index) const;
  std::size_t index_of(const Sequence& x) const;

  /// JSON key of a sequence: concatenated labels, comma-separated when any
  /// label has more than one character.
  std::string key(const Sequence& x) const;
  Sequence parse_key(std::string_view key) const;

  friend bool operator==(const SequenceSpace& a, const SequenceSpace& b) {
    return a.length_ == b.length_ && a.base_ == b.base_;
  }

 private:
  OutcomeSpace base_;
  std::size_t length_;
  std::size_t size_;
};

/// Rational-valued map on X^N, stored densely in lexicographic order.
class Gamble {
 public:
  Gamble(SequenceSpace space, Vector values);

  static Gamble zero(const SequenceSpace& space);
  static Gamble constant(const SequenceSpace& space, const Rational& c);
  static Gamble indicator(const SequenceSpace& space, const Sequence& x);

  const SequenceSpace& space() const { return space_; }
  const Vector& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t index) const { return values_[index]; }
  const Rational& at(const Sequence& x) const { return values_[space_.index_of(x)]; }
  bool is_zero() const;

  friend bool operator==(const Gamble& a, const Gamble& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }
  /// Lexicographic order on values; only meaningful for a shared space.
  friend bool operator<(const Gamble& a, const Gamble& b) { return a.values_ < b.values_; }

 private:
  SequenceSpace space_;
  Vector values_;
};

Gamble gamble_add(const Gamble& f, const Gamble& g);
Gamble gamble_sub(const Gamble& f, const Gamble& g);
Gamble gamble_scale(const Rational& lambda, const Gamble& f);

bool gamble_leq(const Gamble& f, const Gamble& g);
/// f <= g and f != g (dominance with at least one strict coordinate).
bool gamble_strictly_below(const Gamble& f, const Gamble& g);

enum class SignClass { positive, negative, zero, mixed };

SignClass positive_part_check(const Gamble& f);
std::string_view to_string(SignClass s);

/// Non-empty finite set of distinct gambles on one space, kept sorted.
class OptionSet {
 public:
  explicit OptionSet(std::vector<Gamble> members);

  const std::vector<Gamble>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const SequenceSpace& space() const { return members_.front().space(); }
  bool contains(const Gamble& g) const;

 private:
  std::vector<Gamble> members_;
};

void require_same_space(const SequenceSpace& a, const SequenceSpace& b, std::string_view what);

// Dense rational vector helpers shared by every module.
Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(const Rational& lambda, const Vector& a);
Rational dot(const Vector& a, const Vector& b);
bool vec_is_zero(const Vector& a);
bool vec_leq(const Vector& a, const Vector& b);

}  // namespace exchg
