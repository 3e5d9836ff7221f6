#pragma once

#include "linperiod/group.hpp"
#include "linperiod/rational.hpp"
#include "linperiod/weights.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace linperiod {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t default_seed = 20140521;

// Uniform draw from {±1, ±2, ±3, ±1/2, ±1/3}.
Rational sample_small_rational(Rng& rng);

// z and u drawn independently with sample_small_rational.
SatakeData sample_satake(std::size_t n, Rng& rng);

// n pairwise distinct nonzero rationals a/b with |a| <= 9, 1 <= b <= 5.
std::vector<Rational> sample_distinct_rationals(std::size_t n, Rng& rng);

TorusExponents sample_exponents(std::size_t n, std::int64_t range, Rng& rng);

} // namespace linperiod
