#include "hcpair/char_ring.hpp"

#include <stdexcept>

namespace hcpair {

CharElement CharElement::monomial(const Weight& mu, BigInt c) {
    CharElement out(mu.rank());
    out.add_term(mu, c);
    return out;
}

void CharElement::check_rank(const CharElement& other) const {
    if (other.rank_ != rank_) {
        throw std::invalid_argument("character rank mismatch: " + std::to_string(rank_) + " vs " +
                                    std::to_string(other.rank_));
    }
}

BigInt CharElement::coefficient(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt CharElement::augmentation() const {
    BigInt out = 0;
    for (const auto& [mu, c] : terms_) out += c;
    return out;
}

void CharElement::add_term(const Weight& mu, const BigInt& c) {
    if (mu.rank() != rank_) throw std::invalid_argument("term rank mismatch: " + mu.to_string());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CharElement& CharElement::operator+=(const CharElement& other) {
    check_rank(other);
    for (const auto& [mu, c] : other.terms_) add_term(mu, c);
    return *this;
}

CharElement& CharElement::operator-=(const CharElement& other) {
    check_rank(other);
    for (const auto& [mu, c] : other.terms_) add_term(mu, -c);
    return *this;
}

CharElement CharElement::operator-() const {
    CharElement out = *this;
    for (auto& [mu, c] : out.terms_) c = -c;
    return out;
}

CharElement operator*(const CharElement& a, const CharElement& b) {
    a.check_rank(b);
    CharElement out(a.rank_);
    for (const auto& [mu, c] : a.terms_) {
        for (const auto& [nu, d] : b.terms_) out.add_term(mu + nu, c * d);
    }
    return out;
}

CharElement operator*(const BigInt& k, CharElement a) {
    if (k == 0) return CharElement(a.rank_);
    for (auto& [mu, c] : a.terms_) c *= k;
    return a;
}

CharElement CharElement::shifted(const Weight& mu) const {
    CharElement out(rank_);
    for (const auto& [nu, c] : terms_) out.terms_.emplace(nu + mu, c);
    return out;
}

std::string CharElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (mag != 1) out += mag.str() + "*";
        out += "e^" + mu.to_string();
    }
    return out;
}

CharElement ch_add(const CharElement& a, const CharElement& b) { return a + b; }
CharElement ch_scale(const BigInt& k, const CharElement& a) { return k * a; }
CharElement ch_mul(const CharElement& a, const CharElement& b) { return a * b; }

CharElement ch_conjugate(const CharElement& a) {
    CharElement out(a.rank());
    for (const auto& [mu, c] : a.terms()) out.add_term(-mu, c);
    return out;
}

CharElement weyl_act(const WeylElement& w, const CharElement& a) {
    if (w.rank() != a.rank()) throw std::invalid_argument("weyl_act: rank mismatch");
    CharElement out(a.rank());
    for (const auto& [mu, c] : a.terms()) out.add_term(w.act(mu), c);
    return out;
}

BigInt torus_integral(const CharElement& a) { return a.coefficient(Weight(a.rank())); }

BigInt torus_pairing(const CharElement& a, const CharElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("torus_pairing: rank mismatch");
    BigInt out = 0;
    auto i = a.terms().begin();
    auto j = b.terms().begin();
    while (i != a.terms().end() && j != b.terms().end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            out += i->second * j->second;
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

CharElement product_of_one_minus(std::size_t rank, std::span<const Weight> roots) {
    CharElement out = CharElement::monomial(Weight(rank));
    for (const Weight& alpha : roots) {
        CharElement factor = CharElement::monomial(Weight(rank));
        factor.add_term(alpha, -1);
        out = out * factor;
    }
    return out;
}

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

CharElement weyl_denominator_full(const RootSystem& rs) { return product_of_one_minus(rs.rank(), rs.full_roots()); }

CharElement half_denominator(const RootSystem& rs) { return product_of_one_minus(rs.rank(), rs.positive_roots()); }

CharElement half_denominator(const RootSystem& rs, std::span<const Weight> positive_system) {
    for (const Weight& alpha : positive_system) {
        if (!rs.is_root(alpha)) throw std::invalid_argument("half_denominator: " + alpha.to_string() + " is not a root");
    }
    return product_of_one_minus(rs.rank(), positive_system);
}

std::optional<CharElement> divide_by_one_minus(const CharElement& a, const Weight& beta) {
    if (beta.rank() != a.rank()) throw std::invalid_argument("divide_by_one_minus: rank mismatch");
    if (beta.is_zero()) throw std::invalid_argument("divide_by_one_minus: beta must be nonzero");
    std::size_t pivot = 0;
    while (beta[pivot] == 0) ++pivot;

    // Group the support into beta-strings: base + k*beta, base[pivot] in [0, |beta[pivot]|).
    std::map<Weight, std::map<int, BigInt>> strings;
    for (const auto& [mu, c] : a.terms()) {
        const int k = floor_div(mu[pivot], beta[pivot]);
        strings[mu - k * beta][k] = c;
    }
    // q(base + k beta) = sum_{j <= k} a(base + j beta); the full string sum must vanish.
    CharElement out(a.rank());
    for (const auto& [base, entries] : strings) {
        BigInt running = 0;
        auto it = entries.begin();
        const int first = it->first;
        const int last = entries.rbegin()->first;
        for (int k = first; k <= last; ++k) {
            if (it != entries.end() && it->first == k) {
                running += it->second;
                ++it;
            }
            if (k < last) out.add_term(base + k * beta, running);
        }
        if (running != 0) return std::nullopt;
    }
    return out;
}

}  // namespace hcpair
