#pragma once

#include <random>

#include "exchg/bernstein.hpp"
#include "exchg/counts.hpp"

namespace exchg {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_num and 1 <= q <= max_den.
Rational random_rational(Rng& rng, int max_num = 4, int max_den = 3);
Vector random_vector(Rng& rng, std::size_t size, int max_num = 4, int max_den = 3);
Gamble random_gamble(Rng& rng, const SequenceSpace& space);
CountGamble random_count_gamble(Rng& rng, const CountSpace& space);
/// Strictly positive rational point of the simplex.
SimplexPoint random_simplex_point(Rng& rng, const OutcomeSpace& base);
/// Outcome space {a, b, c, ...} of the given size.
OutcomeSpace letters(std::size_t count);

}  // namespace exchg
