#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcpair/weight.hpp"

namespace hcpair {

struct RootSystemLimits {
    std::size_t max_rank = kMaxRank;
};

/// Crystallographic root system of a simple Lie algebra, with all weights in
/// the fundamental-weight basis (so rho = (1,...,1)).
///
/// Cartan convention: cartan(i, j) = <alpha_i^vee, alpha_j>, hence the simple
/// root alpha_j is the j-th column of the Cartan matrix. Bourbaki numbering.
class RootSystem {
public:
    char series() const { return series_; }
    std::size_t rank() const { return rank_; }
    std::string name() const { return std::string(1, series_) + std::to_string(rank_); }

    int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank_ + j]; }
    /// d_i = (alpha_i, alpha_i) / 2, normalised so that short roots have d = 1.
    int symmetrizer(std::size_t i) const { return symmetrizer_[i]; }

    const Weight& simple_root(std::size_t i) const { return positive_[i]; }
    /// Sorted by height; the first rank() entries are the simple roots.
    std::span<const Weight> positive_roots() const { return positive_; }
    /// Positive roots followed by their negatives, in the same order.
    std::span<const Weight> full_roots() const { return full_; }
    std::size_t num_positive() const { return positive_.size(); }

    /// Simple-root coordinates of the idx-th positive root.
    std::span<const int> simple_coords(std::size_t idx) const { return simple_coords_[idx]; }
    int height(std::size_t idx) const;
    const Weight& highest_root() const { return positive_.back(); }

    const Weight& rho() const { return rho_; }
    Weight zero() const { return Weight(rank_); }

    std::optional<std::size_t> root_index(const Weight& w) const;  // into full_roots()
    bool is_root(const Weight& w) const { return root_index(w).has_value(); }
    bool is_positive_root(const Weight& w) const;

    /// s_i(w) = w - w_i alpha_i.
    Weight reflect(std::size_t i, const Weight& w) const;

    /// Invariant form (lambda, alpha) for alpha the idx-th positive root.
    std::int64_t pair_with_positive_root(const Weight& lambda, std::size_t idx) const;
    /// (lambda, sum_j c_j alpha_j) for integer simple-root coordinates c.
    std::int64_t pair_with_root_combination(const Weight& lambda, std::span<const int> c) const;

    /// Classical order formula; independent of any enumeration.
    std::uint64_t weyl_order() const;

    friend RootSystem build_root_system(char series, std::size_t rank, const RootSystemLimits& limits);

private:
    RootSystem() = default;

    char series_ = 'A';
    std::size_t rank_ = 0;
    std::vector<int> cartan_;
    std::vector<int> symmetrizer_;
    std::vector<Weight> positive_;
    std::vector<Weight> full_;
    std::vector<std::vector<int>> simple_coords_;
    std::unordered_map<Weight, std::size_t, WeightHash> index_;
    Weight rho_;
};

/// Valid combinations: A_n (n >= 1), B_n (n >= 2), C_n (n >= 2), D_n (n >= 4),
/// E_6, E_7, E_8, F_4, G_2, all subject to `limits.max_rank`.
/// Throws std::invalid_argument naming the valid ranks otherwise.
RootSystem build_root_system(char series, std::size_t rank, const RootSystemLimits& limits = {});

/// Parses "A2" style names, or a bare series letter combined with `rank`.
RootSystem build_root_system(const std::string& type, std::optional<std::size_t> rank = std::nullopt,
                             const RootSystemLimits& limits = {});

}  // namespace hcpair
