#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "hcpair/exact.hpp"
#include "hcpair/root_system.hpp"
#include "hcpair/weight.hpp"
#include "hcpair/weyl_group.hpp"

namespace hcpair {

/// Element of the character ring of the torus: a finitely supported integer
/// combination of characters e^mu. No zero coefficient is ever stored.
class CharElement {
public:
    using Terms = std::map<Weight, BigInt>;

    explicit CharElement(std::size_t rank) : rank_(rank) {}
    /// c * e^mu.
    static CharElement monomial(const Weight& mu, BigInt c = 1);

    std::size_t rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Weight& mu) const;
    /// Sum of all coefficients (the dimension, for a genuine character).
    BigInt augmentation() const;

    /// Adds c * e^mu.
    void add_term(const Weight& mu, const BigInt& c);

    CharElement& operator+=(const CharElement& other);
    CharElement& operator-=(const CharElement& other);
    CharElement operator-() const;
    friend CharElement operator+(CharElement a, const CharElement& b) { return a += b; }
    friend CharElement operator-(CharElement a, const CharElement& b) { return a -= b; }
    friend CharElement operator*(const CharElement& a, const CharElement& b);
    friend CharElement operator*(const BigInt& k, CharElement a);
    friend bool operator==(const CharElement&, const CharElement&) = default;

    /// Multiplication by e^mu.
    CharElement shifted(const Weight& mu) const;

    std::string to_string() const;

private:
    void check_rank(const CharElement& other) const;

    std::size_t rank_;
    Terms terms_;
};

CharElement ch_add(const CharElement& a, const CharElement& b);
CharElement ch_scale(const BigInt& k, const CharElement& a);
CharElement ch_mul(const CharElement& a, const CharElement& b);

/// e^mu -> e^{-mu}.
CharElement ch_conjugate(const CharElement& a);

/// e^mu -> e^{w mu}.
CharElement weyl_act(const WeylElement& w, const CharElement& a);

/// Coefficient of e^0 (integration against normalised Haar measure).
BigInt torus_integral(const CharElement& a);

/// torus_integral(a * conj(b)), computed as the coefficient dot product.
BigInt torus_pairing(const CharElement& a, const CharElement& b);

/// prod over all roots of (1 - e^alpha).
CharElement weyl_denominator_full(const RootSystem& rs);

/// prod over positive roots of (1 - e^alpha), for the standard positive system.
CharElement half_denominator(const RootSystem& rs);
/// Same product over an arbitrary list of roots.
CharElement half_denominator(const RootSystem& rs, std::span<const Weight> positive_system);

/// Exact quotient a / (1 - e^beta), or nullopt when the division leaves a
/// remainder. beta must be nonzero.
std::optional<CharElement> divide_by_one_minus(const CharElement& a, const Weight& beta);

}  // namespace hcpair
