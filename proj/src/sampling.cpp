#include "hcpair/sampling.hpp"

#include <limits>
#include <stdexcept>

namespace hcpair {

std::vector<Weight> dominant_box(std::size_t rank, int bound) {
    if (bound < 0) throw std::invalid_argument("dominant_box: negative bound");
    std::vector<Weight> out;
    Weight w(rank);
    for (;;) {
        out.push_back(w);
        std::size_t i = 0;
        while (i < rank && w[i] == bound) w[i++] = 0;
        if (i == rank) break;
        ++w[i];
    }
    return out;
}

int draw(std::mt19937_64& rng, int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("draw: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return static_cast<int>(lo + static_cast<std::int64_t>(x % span));
}

Weight random_weight(std::mt19937_64& rng, std::size_t rank, int lo, int hi) {
    Weight w(rank);
    for (std::size_t i = 0; i < rank; ++i) w[i] = draw(rng, lo, hi);
    return w;
}

}  // namespace hcpair
