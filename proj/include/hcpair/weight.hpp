#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace hcpair {

/// Hard ceiling on rank; the configurable rank cap may not exceed it.
inline constexpr std::size_t kMaxRank = 8;

/// Integral weight in the fundamental-weight basis.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank);
    Weight(std::initializer_list<int> coords);
    explicit Weight(std::span<const int> coords);

    std::size_t rank() const { return rank_; }
    int operator[](std::size_t i) const { return coords_[i]; }
    int& operator[](std::size_t i) { return coords_[i]; }
    std::span<const int> coords() const { return {coords_.data(), rank_}; }

    bool is_zero() const;
    /// All coordinates nonnegative.
    bool is_dominant() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    Weight operator-() const;
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a);

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

    std::string to_string() const;  // "(1,-1)"

private:
    std::uint8_t rank_ = 0;
    std::array<std::int32_t, kMaxRank> coords_{};
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace hcpair
