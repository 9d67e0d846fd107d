#include "exchg/counts.hpp"

#include <algorithm>
#include <numeric>

#include "exchg/permutations.hpp"

namespace exchg {

namespace {

// Descending lexicographic enumeration of compositions of n into r parts.
void enumerate_compositions(std::size_t remaining, std::size_t position, CountVector& current,
                            std::vector<CountVector>& out) {
  const std::size_t r = current.counts.size();
  if (position + 1 == r) {
    current.counts[position] = remaining;
    out.push_back(current);
    return;
  }
  for (std::size_t c = remaining + 1; c-- > 0;) {
    current.counts[position] = c;
    enumerate_compositions(remaining - c, position + 1, current, out);
  }
}

}  // namespace

std::size_t CountVector::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::string CountVector::key() const {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

CountVector CountVector::parse_key(std::string_view key) {
  CountVector m;
  std::size_t start = 0;
  while (true) {
    const auto comma = key.find(',', start);
    const auto part = key.substr(start, comma == std::string_view::npos ? key.npos : comma - start);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw FormatError("malformed count key '" + std::string(key) + "'");
    }
    m.counts.push_back(std::stoull(std::string(part)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return m;
}

CountSpace::CountSpace(OutcomeSpace base, std::size_t n) {
  auto data = std::make_shared<Data>(Data{std::move(base), n, {}, {}});
  CountVector current{std::vector<std::size_t>(data->base.size())};
  enumerate_compositions(n, 0, current, data->vectors);
  for (std::size_t i = 0; i < data->vectors.size(); ++i) data->index.emplace(data->vectors[i], i);
  data_ = std::move(data);
}

std::size_t CountSpace::index_of(const CountVector& m) const {
  const auto it = data_->index.find(m);
  if (it == data_->index.end()) throw SpaceMismatch("count vector '" + m.key() + "' not in count space");
  return it->second;
}

CountGamble::CountGamble(CountSpace space, Vector values) : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) throw FormatError("count gamble value count does not match count space");
}

namespace {
void require_same_count_space(const CountSpace& a, const CountSpace& b) {
  if (!(a == b)) throw SpaceMismatch("count gambles live on different count spaces");
}
}  // namespace

CountGamble count_gamble_add(const CountGamble& f, const CountGamble& g) {
  require_same_count_space(f.space(), g.space());
  return CountGamble(f.space(), vec_add(f.values(), g.values()));
}

CountGamble count_gamble_scale(const Rational& lambda, const CountGamble& f) {
  return CountGamble(f.space(), vec_scale(lambda, f.values()));
}

bool count_gamble_leq(const CountGamble& f, const CountGamble& g) {
  require_same_count_space(f.space(), g.space());
  return vec_leq(f.values(), g.values());
}

bool count_gamble_strictly_below(const CountGamble& f, const CountGamble& g) {
  return count_gamble_leq(f, g) && f.values() != g.values();
}

CountVector count_of(const Sequence& x, std::size_t outcome_count) {
  CountVector m{std::vector<std::size_t>(outcome_count)};
  for (std::size_t v : x) {
    if (v >= outcome_count) throw SpaceMismatch("outcome index out of range");
    ++m.counts[v];
  }
  return m;
}

mpz_class multinomial(const CountVector& m) {
  mpz_class result = 1;
  std::size_t running = 0;
  for (std::size_t c : m.counts) {
    for (std::size_t k = 1; k <= c; ++k) {
      ++running;
      result *= static_cast<unsigned long>(running);
      result /= static_cast<unsigned long>(k);
    }
  }
  return result;
}

std::vector<Sequence> atom_members(const CountVector& m) {
  Sequence y;
  for (std::size_t x = 0; x < m.counts.size(); ++x) y.insert(y.end(), m.counts[x], x);
  std::vector<Sequence> out;
  do {
    out.push_back(y);
  } while (std::next_permutation(y.begin(), y.end()));
  return out;
}

std::size_t atom_size(const CountVector& m) { return multinomial(m).get_ui(); }

Rational hy_expectation(const Gamble& f, const CountVector& m) {
  const auto& space = f.space();
  if (m.counts.size() != space.base().size() || m.total() != space.length()) {
    throw SpaceMismatch("count vector does not belong to the gamble's space");
  }
  Rational sum;
  const auto members = atom_members(m);
  for (const auto& y : members) sum += f.at(y);
  return sum / Rational(static_cast<std::int64_t>(members.size()));
}

CountGamble hy_map(const Gamble& f) {
  const CountSpace counts(f.space());
  Vector sums(counts.size());
  const std::size_t r = f.space().base().size();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    sums[counts.index_of(count_of(f.space().sequence_at(i), r))] += f[i];
  }
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (!sums[j].is_zero()) sums[j] /= Rational(mpq_class(multinomial(counts.at(j))));
  }
  return CountGamble(counts, std::move(sums));
}

Gamble lift_count_gamble(const CountGamble& g) {
  const SequenceSpace space = g.space().sequence_space();
  const std::size_t r = space.base().size();
  Vector values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    values[i] = g.at(count_of(space.sequence_at(i), r));
  }
  return Gamble(space, std::move(values));
}

Gamble canonical_representative(const Gamble& f) { return symmetrize(f); }

bool class_equal(const Gamble& f, const Gamble& g) {
  require_same_space(f.space(), g.space(), "class_equal");
  return canonical_representative(f) == canonical_representative(g);
}

bool class_leq(const Gamble& f, const Gamble& g) {
  require_same_space(f.space(), g.space(), "class_leq");
  return gamble_leq(canonical_representative(f), canonical_representative(g));
}

Gamble ex_via_atoms(const Gamble& f) {
  const CountSpace counts(f.space());
  Vector values(f.size());
  for (const auto& m : counts.vectors()) {
    const Rational average = hy_expectation(f, m);
    for (const auto& y : atom_members(m)) values[f.space().index_of(y)] = average;
  }
  return Gamble(f.space(), std::move(values));
}

}  // namespace exchg
