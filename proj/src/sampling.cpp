#include "exchg/sampling.hpp"

namespace exchg {

Rational random_rational(Rng& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  const int p = num(rng);
  return Rational(p, den(rng));
}

Vector random_vector(Rng& rng, std::size_t size, int max_num, int max_den) {
  Vector v;
  v.reserve(size);
  for (std::size_t i = 0; i < size; ++i) v.push_back(random_rational(rng, max_num, max_den));
  return v;
}

Gamble random_gamble(Rng& rng, const SequenceSpace& space) { return Gamble(space, random_vector(rng, space.size())); }

CountGamble random_count_gamble(Rng& rng, const CountSpace& space) {
  return CountGamble(space, random_vector(rng, space.size()));
}

SimplexPoint random_simplex_point(Rng& rng, const OutcomeSpace& base) {
  std::uniform_int_distribution<int> weight(1, 9);
  Vector w;
  Rational total;
  for (std::size_t i = 0; i < base.size(); ++i) {
    w.emplace_back(weight(rng));
    total += w.back();
  }
  for (auto& v : w) v /= total;
  return SimplexPoint(base, std::move(w));
}

OutcomeSpace letters(std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < count; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return OutcomeSpace(labels);
}

}  // namespace exchg
