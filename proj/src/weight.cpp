#include "hcpair/weight.hpp"

#include <stdexcept>

namespace hcpair {

namespace {

void check_rank(std::size_t rank) {
    if (rank > kMaxRank) {
        throw std::invalid_argument("weight rank " + std::to_string(rank) + " exceeds maximum " +
                                    std::to_string(kMaxRank));
    }
}

void check_same_rank(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) {
        throw std::invalid_argument("rank mismatch: " + a.to_string() + " vs " + b.to_string());
    }
}

}  // namespace

Weight::Weight(std::size_t rank) {
    check_rank(rank);
    rank_ = static_cast<std::uint8_t>(rank);
}

Weight::Weight(std::initializer_list<int> coords) : Weight(std::span<const int>(coords.begin(), coords.size())) {}

Weight::Weight(std::span<const int> coords) : Weight(coords.size()) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i];
}

bool Weight::is_zero() const {
    for (std::size_t i = 0; i < rank_; ++i) {
        if (coords_[i] != 0) return false;
    }
    return true;
}

bool Weight::is_dominant() const {
    for (std::size_t i = 0; i < rank_; ++i) {
        if (coords_[i] < 0) return false;
    }
    return true;
}

Weight& Weight::operator+=(const Weight& other) {
    check_same_rank(*this, other);
    for (std::size_t i = 0; i < rank_; ++i) coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    check_same_rank(*this, other);
    for (std::size_t i = 0; i < rank_; ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Weight Weight::operator-() const {
    Weight out = *this;
    for (std::size_t i = 0; i < rank_; ++i) out.coords_[i] = -out.coords_[i];
    return out;
}

Weight operator*(int k, Weight a) {
    for (std::size_t i = 0; i < a.rank_; ++i) a.coords_[i] *= k;
    return a;
}

std::string Weight::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < rank_; ++i) {
        if (i) out += ",";
        out += std::to_string(coords_[i]);
    }
    return out + ")";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = w.rank();
    for (int c : w.coords()) h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(c));
    return h;
}

}  // namespace hcpair
