#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hcpair/root_system.hpp"
#include "hcpair/weight.hpp"

namespace hcpair {

inline constexpr std::uint64_t kDefaultWeylCap = 1'000'000;

/// Thrown when a group enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class WeylSubgroup;

/// Element of the Weyl group, stored as its integer matrix on
/// fundamental-weight coordinates (new = matrix * old).
class WeylElement {
public:
    static WeylElement identity(const RootSystem& rs);
    static WeylElement simple_reflection(const RootSystem& rs, std::size_t i);
    /// Validates that the matrix permutes the roots.
    static WeylElement from_matrix(const RootSystem& rs, std::vector<int> matrix);
    /// Product s_{w[0]} s_{w[1]} ... of 0-based simple reflection indices.
    static WeylElement from_word(const RootSystem& rs, std::span<const std::size_t> word);

    std::size_t rank() const { return rank_; }
    int entry(std::size_t r, std::size_t c) const { return matrix_[r * rank_ + c]; }
    const std::vector<int>& matrix() const { return matrix_; }
    /// Number of positive roots sent negative.
    std::size_t length() const { return length_; }
    int sign() const { return length_ % 2 == 0 ? 1 : -1; }
    /// A reduced word (0-based indices), read left to right as a product.
    const std::vector<std::size_t>& reduced_word() const { return word_; }

    Weight act(const Weight& mu) const;
    long long determinant() const;
    bool is_identity() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

private:
    friend WeylSubgroup enumerate_weyl_group(const RootSystem& rs, std::uint64_t cap);
    WeylElement() = default;

    std::size_t rank_ = 0;
    std::vector<int> matrix_;
    std::size_t length_ = 0;
    std::vector<std::size_t> word_;
};

Weight act(const WeylElement& w, const Weight& mu);

/// a * b (apply b first).
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// rho - w(rho), computed as the sum of the positive roots that w^{-1} makes negative.
Weight rho_shift(const WeylElement& w, const RootSystem& rs);

struct MatrixHash {
    std::size_t operator()(const std::vector<int>& m) const noexcept;
};

/// A finite subgroup of W, closed under composition, identity first.
class WeylSubgroup {
public:
    /// Closure of `generators` under composition.
    static WeylSubgroup generated_by(const RootSystem& rs, const std::vector<WeylElement>& generators,
                                     std::uint64_t cap = kDefaultWeylCap);
    static WeylSubgroup trivial(const RootSystem& rs);

    std::span<const WeylElement> elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<WeylElement>& generators() const { return generators_; }
    bool contains(const WeylElement& w) const { return index_.contains(w.matrix()); }
    std::size_t index_of(const WeylElement& w) const;
    /// Element of maximal length (unique for the full group).
    const WeylElement& longest() const;

private:
    friend WeylSubgroup enumerate_weyl_group(const RootSystem& rs, std::uint64_t cap);
    void add(WeylElement w);

    std::vector<WeylElement> elements_;
    std::vector<WeylElement> generators_;
    std::unordered_map<std::vector<int>, std::size_t, MatrixHash> index_;
};

/// Breadth-first closure over simple reflections. Throws CapExceeded when the
/// classical order exceeds `cap` (checked before any work is done).
WeylSubgroup enumerate_weyl_group(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);

}  // namespace hcpair
