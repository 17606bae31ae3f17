#pragma once

#include <cstdint>
#include <random>

#include "trefoil/braid.hpp"
#include "trefoil/fraction.hpp"
#include "trefoil/word.hpp"

namespace trefoil {

using Rng = std::mt19937_64;

/// Uniform canonical fraction with |p|, |q| <= bound (rejection sampling on
/// representatives, so 1/0 and 0/1 can occur).
PFrac random_frac(Rng& rng, std::int64_t bound = 1'000'000);

/// Base generator uniform, tail length uniform in [0, max_tail], letters uniform.
QWord random_word(Rng& rng, std::size_t max_tail);

/// A braid word with exponent sum zero and length 2h, h uniform in [0, max_length / 2].
BraidWord random_balanced_braid_word(Rng& rng, std::size_t max_length);

}  // namespace trefoil
