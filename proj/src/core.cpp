#include "exchg/core.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace exchg {

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) {
  if (labels.empty()) throw FormatError("outcome space must be non-empty");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw FormatError("outcome labels must be non-empty");
    if (l.find(',') != std::string::npos) throw FormatError("outcome label '" + l + "' contains ','");
    if (!seen.insert(l).second) throw FormatError("duplicate outcome label '" + l + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::size_t OutcomeSpace::index_of(std::string_view label) const {
  const auto& ls = *labels_;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return i;
  }
  throw FormatError("unknown outcome label '" + std::string(label) + "'");
}

bool OutcomeSpace::needs_separator() const {
  return std::any_of(labels_->begin(), labels_->end(), [](const auto& l) { return l.size() > 1; });
}

SequenceSpace::SequenceSpace(OutcomeSpace base, std::size_t length) : base_(std::move(base)), length_(length) {
  if (length_ == 0) throw FormatError("sequence length must be positive");
  std::size_t n = 1;
  for (std::size_t k = 0; k < length_; ++k) {
    if (n > std::numeric_limits<std::size_t>::max() / base_.size() / 2) {
      throw BudgetExceeded("sequence space too large");
    }
    n *= base_.size();
  }
  size_ = n;
}

Sequence SequenceSpace::sequence_at(std::size_t index) const {
  Sequence x(length_);
  const std::size_t r = base_.size();
  for (std::size_t k = length_; k-- > 0;) {
    x[k] = index % r;
    index /= r;
  }
  return x;
}

std::size_t SequenceSpace::index_of(const Sequence& x) const {
  if (x.size() != length_) throw SpaceMismatch("sequence length does not match space");
  std::size_t index = 0;
  for (std::size_t v : x) {
    if (v >= base_.size()) throw SpaceMismatch("outcome index out of range");
    index = index * base_.size() + v;
  }
  return index;
}

std::string SequenceSpace::key(const Sequence& x) const {
  const bool sep = base_.needs_separator();
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (sep && k > 0) out += ',';
    out += base_.label(x[k]);
  }
  return out;
}

Sequence SequenceSpace::parse_key(std::string_view key) const {
  Sequence x;
  if (base_.needs_separator()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = key.find(',', start);
      x.push_back(base_.index_of(key.substr(start, comma == std::string_view::npos ? key.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : key) x.push_back(base_.index_of(std::string_view(&c, 1)));
  }
  if (x.size() != length_) throw FormatError("sequence key '" + std::string(key) + "' has wrong length");
  return x;
}

void require_same_space(const SequenceSpace& a, const SequenceSpace& b, std::string_view what) {
  if (!(a == b)) throw SpaceMismatch(std::string(what) + ": gambles live on different spaces");
}

Gamble::Gamble(SequenceSpace space, Vector values) : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) throw FormatError("gamble value count does not match |X|^N");
}

Gamble Gamble::zero(const SequenceSpace& space) { return Gamble(space, Vector(space.size())); }

Gamble Gamble::constant(const SequenceSpace& space, const Rational& c) {
  return Gamble(space, Vector(space.size(), c));
}

Gamble Gamble::indicator(const SequenceSpace& space, const Sequence& x) {
  Vector v(space.size());
  v[space.index_of(x)] = 1;
  return Gamble(space, std::move(v));
}

bool Gamble::is_zero() const { return vec_is_zero(values_); }

Gamble gamble_add(const Gamble& f, const Gamble& g) {
  require_same_space(f.space(), g.space(), "gamble_add");
  return Gamble(f.space(), vec_add(f.values(), g.values()));
}

Gamble gamble_sub(const Gamble& f, const Gamble& g) {
  require_same_space(f.space(), g.space(), "gamble_sub");
  return Gamble(f.space(), vec_sub(f.values(), g.values()));
}

Gamble gamble_scale(const Rational& lambda, const Gamble& f) { return Gamble(f.space(), vec_scale(lambda, f.values())); }

bool gamble_leq(const Gamble& f, const Gamble& g) {
  require_same_space(f.space(), g.space(), "gamble_leq");
  return vec_leq(f.values(), g.values());
}

bool gamble_strictly_below(const Gamble& f, const Gamble& g) { return gamble_leq(f, g) && f.values() != g.values(); }

SignClass positive_part_check(const Gamble& f) {
  bool pos = false;
  bool neg = false;
  for (const auto& v : f.values()) {
    pos = pos || v.sign() > 0;
    neg = neg || v.sign() < 0;
  }
  if (pos && neg) return SignClass::mixed;
  if (pos) return SignClass::positive;
  if (neg) return SignClass::negative;
  return SignClass::zero;
}

std::string_view to_string(SignClass s) {
  switch (s) {
    case SignClass::positive: return "positive";
    case SignClass::negative: return "negative";
    case SignClass::zero: return "zero";
    case SignClass::mixed: return "mixed";
  }
  return "?";
}

OptionSet::OptionSet(std::vector<Gamble> members) : members_(std::move(members)) {
  if (members_.empty()) throw PreconditionFailed("option set must be non-empty");
  for (const auto& g : members_) require_same_space(members_.front().space(), g.space(), "option set");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw PreconditionFailed("option set contains duplicate gambles");
  }
}

bool OptionSet::contains(const Gamble& g) const { return std::binary_search(members_.begin(), members_.end(), g); }

Vector vec_add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw SpaceMismatch("vector dimension mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector vec_sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw SpaceMismatch("vector dimension mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector vec_scale(const Rational& lambda, const Vector& a) {
  Vector out(a.size());
  if (lambda.is_zero()) return out;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = lambda * a[i];
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw SpaceMismatch("vector dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
  }
  return s;
}

bool vec_is_zero(const Vector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r.is_zero(); });
}

bool vec_leq(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw SpaceMismatch("vector dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace exchg
