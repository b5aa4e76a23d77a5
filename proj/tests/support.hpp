#pragma once

// Helpers shared by the unit and acceptance tests.

#include <ostream>

#include "hcpair/char_ring.hpp"
#include "hcpair/sampling.hpp"

namespace hcpair {

// Readable gtest failure output.
inline void PrintTo(const CharElement& c, std::ostream* os) { *os << c.to_string(); }
inline void PrintTo(const Weight& w, std::ostream* os) { *os << w.to_string(); }

namespace support {

using hcpair::dominant_box;
using hcpair::draw;
using hcpair::random_weight;

}  // namespace support
}  // namespace hcpair
