#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hcpair/weight.hpp"

namespace hcpair {

/// All weights with every coordinate in [0, bound], first coordinate fastest.
std::vector<Weight> dominant_box(std::size_t rank, int bound);

/// Uniform integer in [lo, hi]. Written out by hand (rejection sampling on
/// mt19937_64 output) so seeded runs agree across standard libraries.
int draw(std::mt19937_64& rng, int lo, int hi);

Weight random_weight(std::mt19937_64& rng, std::size_t rank, int lo, int hi);

}  // namespace hcpair
