#include "hcpair/pairing.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace hcpair {

PairContext::PairContext(RootSystem rs, std::vector<Weight> positive_system, WeylSubgroup w0, bool equal_rank,
                         std::size_t split_rank, int orbit_dim, std::string preset)
    : rs_(std::move(rs)),
      positive_system_(validate_positive_system(rs_, positive_system)),
      w0_(std::move(w0)),
      equal_rank_(equal_rank),
      split_rank_(split_rank),
      orbit_dim_(orbit_dim),
      preset_(std::move(preset)),
      rho_(half_sum(positive_system_)) {
    for (const WeylElement& w : w0_.elements()) {
        if (w.rank() != rs_.rank()) throw std::invalid_argument("W0 element has the wrong rank");
    }
    if (orbit_dim_ < 0 || orbit_dim_ > static_cast<int>(rs_.num_positive())) {
        throw std::invalid_argument("orbit dimension s must lie in [0, " + std::to_string(rs_.num_positive()) + "]");
    }
    if (equal_rank_ && split_rank_ != 0) throw std::invalid_argument("equal-rank context with a split part");
    if (!equal_rank_ && split_rank_ == 0) throw std::invalid_argument("unequal-rank context needs split_rank >= 1");
}

bool PairContext::is_compact() const { return equal_rank_ && w0_.order() == rs_.weyl_order(); }

ContextPtr compact_context(const RootSystem& rs, std::uint64_t weyl_cap) {
    return compact_context(rs, rs.positive_roots(), weyl_cap);
}

ContextPtr compact_context(const RootSystem& rs, std::span<const Weight> positive_system, std::uint64_t weyl_cap) {
    return std::make_shared<const PairContext>(rs, std::vector<Weight>(positive_system.begin(), positive_system.end()),
                                               enumerate_weyl_group(rs, weyl_cap), true, 0,
                                               static_cast<int>(rs.num_positive()), "compact");
}

ContextPtr sl2_context() {
    const RootSystem a1 = build_root_system('A', 1);
    return std::make_shared<const PairContext>(
        a1, std::vector<Weight>(a1.positive_roots().begin(), a1.positive_roots().end()), WeylSubgroup::trivial(a1),
        true, 0, 0, "sl2");
}

ContextPtr custom_context(const RootSystem& rs, std::span<const Weight> positive_system,
                          const std::vector<WeylElement>& w0_generators, int orbit_dim, std::uint64_t weyl_cap) {
    return std::make_shared<const PairContext>(rs, std::vector<Weight>(positive_system.begin(), positive_system.end()),
                                               WeylSubgroup::generated_by(rs, w0_generators, weyl_cap), true, 0,
                                               orbit_dim, "custom");
}

ContextPtr unequal_rank_context(const RootSystem& rs, std::size_t split_rank) {
    return std::make_shared<const PairContext>(
        rs, std::vector<Weight>(rs.positive_roots().begin(), rs.positive_roots().end()), WeylSubgroup::trivial(rs),
        false, split_rank, 0, "unequal");
}

std::size_t relative_length(const WeylElement& w, std::span<const Weight> positive_system) {
    const std::set<Weight> p(positive_system.begin(), positive_system.end());
    std::size_t n = 0;
    for (const Weight& alpha : positive_system) n += p.contains(w.act(alpha)) ? 0 : 1;
    return n;
}

std::string to_string(PairingKind kind) {
    switch (kind) {
        case PairingKind::multiplicity: return "multiplicity";
        case PairingKind::elliptic: return "elliptic";
        case PairingKind::homological: return "homological";
    }
    return "?";
}

PairingKind parse_pairing_kind(const std::string& name) {
    if (name == "multiplicity") return PairingKind::multiplicity;
    if (name == "elliptic") return PairingKind::elliptic;
    if (name == "homological") return PairingKind::homological;
    throw std::invalid_argument("unknown pairing kind '" + name + "' (multiplicity, elliptic, homological)");
}

namespace {

constexpr const char* kUnequalNote = "unequal rank: zero pairing by convention";

void require_rank(const CharElement& a, const PairContext& ctx) {
    if (a.rank() != ctx.rank()) throw std::invalid_argument("class rank does not match the pairing context");
}

Rational normalised(const BigInt& raw, std::size_t order) { return Rational(raw, BigInt(order)); }

}  // namespace

PairingValue multiplicity_pairing(const CharElement& chi, const CharElement& chi2, const PairContext& ctx) {
    if (!ctx.is_compact()) throw std::invalid_argument("multiplicity pairing needs a compact context (W0 = W)");
    require_rank(chi, ctx);
    require_rank(chi2, ctx);
    const RootSystem& rs = ctx.root_system();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        const WeylElement s = WeylElement::simple_reflection(rs, i);
        if (weyl_act(s, chi) != chi || weyl_act(s, chi2) != chi2) {
            throw std::invalid_argument("multiplicity pairing: character is not W-invariant");
        }
    }
    // CT(D chi conj(chi')) is the coefficient dot product of D chi with chi'.
    return {normalised(torus_pairing(weyl_denominator_full(rs) * chi, chi2), rs.weyl_order()), ""};
}

PairingValue elliptic_pairing(const CharElement& xi, const CharElement& xi2, const PairContext& ctx) {
    require_rank(xi, ctx);
    require_rank(xi2, ctx);
    if (!ctx.equal_rank()) return pairing_unequal_rank(xi, xi2, ctx);
    return {normalised(torus_pairing(xi, xi2), ctx.w0_order()), ""};
}

PairingValue homological_pairing(const GradedHomology& h, const GradedHomology& h2, const PairContext& ctx) {
    if (h.rank() != ctx.rank() || h2.rank() != ctx.rank()) {
        throw std::invalid_argument("homology rank does not match the pairing context");
    }
    if (!same_positive_system(h, h2)) throw std::invalid_argument("homologies use different positive systems");
    if (h.positive_system() != ctx.positive_system()) {
        throw std::invalid_argument("homology positive system differs from the context's");
    }
    if (!ctx.equal_rank()) return {Rational(0), kUnequalNote};
    BigInt total = 0;
    for (std::size_t p = 0; p < h.classes().size(); ++p) {
        if (h.degree(p).is_zero()) continue;
        for (std::size_t q = 0; q < h2.classes().size(); ++q) {
            const BigInt hom = torus_pairing(h.degree(p), h2.degree(q));
            if ((p + q) % 2 == 0) total += hom;
            else total -= hom;
        }
    }
    return {normalised(total, ctx.w0_order()), ""};
}

PairingValue pairing_unequal_rank(const CharElement& xi, const CharElement& xi2, const PairContext& ctx,
                                  UnequalRankRoute route) {
    if (ctx.equal_rank()) throw std::invalid_argument("pairing_unequal_rank on an equal-rank context");
    require_rank(xi, ctx);
    require_rank(xi2, ctx);
    if (route == UnequalRankRoute::short_circuit) return {Rational(0), kUnequalNote};
    const std::size_t d = ctx.split_rank();
    const BigInt euler = alternating_sum(ext_abelian_graded(std::vector<Rational>(d, Rational(0)), d));
    return {normalised(euler * torus_pairing(xi, xi2), ctx.w0_order()),
            "unequal rank: Euler characteristic of Ext over the split part vanishes"};
}

std::vector<BigInt> ext_abelian_graded(const std::vector<Rational>& nu, std::size_t d) {
    if (nu.size() != d) throw std::invalid_argument("ext_abelian_graded: nu must have d coordinates");
    if (d > 20) throw std::invalid_argument("ext_abelian_graded: d above 20");
    // rank of delta_p : Lambda^p -> Lambda^{p+1}, basis indexed by bitmask.
    std::vector<std::size_t> ranks(d + 2, 0);
    for (std::size_t p = 0; p < d; ++p) {
        std::vector<SparseRationalVector> columns;
        for (std::uint32_t s = 0; s < (1u << d); ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) != p) continue;
            SparseRationalVector col;
            for (std::size_t i = 0; i < d; ++i) {
                if ((s >> i) & 1u || nu[i] == 0) continue;
                // e^i ^ e_S: move e^i past the members of S below i.
                const int below = std::popcount(s & ((1u << i) - 1u));
                col[s | (1u << i)] = below % 2 == 0 ? nu[i] : Rational(-nu[i]);
            }
            columns.push_back(std::move(col));
        }
        ranks[p + 1] = rank_of(columns);
    }
    std::vector<BigInt> out;
    BigInt binom = 1;
    for (std::size_t p = 0; p <= d; ++p) {
        out.push_back(binom - ranks[p + 1] - ranks[p]);
        binom = binom * (d - p) / (p + 1);
    }
    return out;
}

BigInt alternating_sum(const std::vector<BigInt>& dims) {
    BigInt s = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) s += p % 2 == 0 ? dims[p] : BigInt(-dims[p]);
    return s;
}

bool check_denominator_symmetry(const WeylElement& w, const RootSystem& rs) {
    if (w.rank() != rs.rank()) throw std::invalid_argument("check_denominator_symmetry: rank mismatch");
    const auto moved = transported_positive_system(rs, w);
    const CharElement lhs = half_denominator(rs, moved);
    const CharElement rhs = ch_scale(w.sign(), half_denominator(rs).shifted(w.act(rs.rho()) - rs.rho()));
    return lhs == rhs;
}

CharElement antisym_transport(const CharElement& xi, const WeylElement& w, const PairContext& ctx) {
    require_rank(xi, ctx);
    return ch_scale(w.sign(), xi.shifted(w.act(ctx.rho()) - ctx.rho()));
}

bool check_antisym_i(const CharElement& xi, const WeylElement& w, const PairContext& ctx) {
    return weyl_act(w, xi) == antisym_transport(xi, w, ctx);
}

CharElement dual_class(const CharElement& xi, const PairContext& ctx) {
    if (!ctx.equal_rank()) throw std::invalid_argument("dual_class needs an equal-rank context");
    require_rank(xi, ctx);
    const int sign = ctx.positive_system().size() % 2 == 0 ? 1 : -1;
    return ch_scale(sign, ch_conjugate(xi).shifted(2 * ctx.rho()));
}

GradedHomology dual_homology(const GradedHomology& h, const PairContext& ctx) {
    if (h.positive_system() != ctx.positive_system()) {
        throw std::invalid_argument("homology positive system differs from the context's");
    }
    const std::size_t n = h.max_degree();
    std::vector<CharElement> classes;
    for (std::size_t p = 0; p <= n; ++p) classes.push_back(ch_conjugate(h.degree(n - p)).shifted(2 * ctx.rho()));
    return GradedHomology(h.positive_system(), std::move(classes));
}

}  // namespace hcpair
