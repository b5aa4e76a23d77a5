#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hcpair/char_ring.hpp"
#include "hcpair/characters.hpp"
#include "hcpair/exact.hpp"
#include "hcpair/root_system.hpp"
#include "hcpair/weyl_group.hpp"

namespace hcpair {

/// Everything a pairing needs besides the classes themselves: the torus root
/// system, the positive system spanning n, the subgroup W0 of W that
/// normalises the elliptic pairing, and the equal/unequal rank flag.
///
/// W0 is supplied, not derived from a real form. `orbit_dim` is the integer s
/// used by closed-orbit standard classes; `split_rank` is dim a for
/// unequal-rank contexts (0 otherwise).
class PairContext {
public:
    PairContext(RootSystem rs, std::vector<Weight> positive_system, WeylSubgroup w0, bool equal_rank,
                std::size_t split_rank, int orbit_dim, std::string preset);

    const RootSystem& root_system() const { return rs_; }
    const std::vector<Weight>& positive_system() const { return positive_system_; }
    const WeylSubgroup& w0() const { return w0_; }
    std::size_t w0_order() const { return w0_.order(); }
    bool equal_rank() const { return equal_rank_; }
    std::size_t split_rank() const { return split_rank_; }
    int orbit_dim() const { return orbit_dim_; }
    const std::string& preset() const { return preset_; }
    /// Half sum of positive_system().
    const Weight& rho() const { return rho_; }
    std::size_t rank() const { return rs_.rank(); }
    /// Equal rank with W0 = W.
    bool is_compact() const;

private:
    RootSystem rs_;
    std::vector<Weight> positive_system_;
    WeylSubgroup w0_;
    bool equal_rank_;
    std::size_t split_rank_;
    int orbit_dim_;
    std::string preset_;
    Weight rho_;
};

using ContextPtr = std::shared_ptr<const PairContext>;

/// W0 = W, s = |R^+|. The positive system defaults to the standard one.
ContextPtr compact_context(const RootSystem& rs, std::uint64_t weyl_cap = kDefaultWeylCap);
ContextPtr compact_context(const RootSystem& rs, std::span<const Weight> positive_system,
                           std::uint64_t weyl_cap = kDefaultWeylCap);
/// R = {+-alpha}, W0 trivial, s = 0.
ContextPtr sl2_context();
/// W0 generated by `w0_generators` (validated, closure capped).
ContextPtr custom_context(const RootSystem& rs, std::span<const Weight> positive_system,
                          const std::vector<WeylElement>& w0_generators, int orbit_dim,
                          std::uint64_t weyl_cap = kDefaultWeylCap);
ContextPtr unequal_rank_context(const RootSystem& rs, std::size_t split_rank);

/// Number of roots of `positive_system` that w sends outside it.
std::size_t relative_length(const WeylElement& w, std::span<const Weight> positive_system);

struct PairingValue {
    Rational value;
    /// Which convention produced the value, empty for an ordinary evaluation.
    std::string note;
};

enum class PairingKind { multiplicity, elliptic, homological };

std::string to_string(PairingKind kind);
PairingKind parse_pairing_kind(const std::string& name);

/// (1/|W|) CT(D chi conj(chi')). Compact contexts only, and both characters
/// must be W-invariant.
PairingValue multiplicity_pairing(const CharElement& chi, const CharElement& chi2, const PairContext& ctx);

/// (1/[W0]) torus_pairing(Xi, Xi'); zero on unequal-rank contexts.
PairingValue elliptic_pairing(const CharElement& xi, const CharElement& xi2, const PairContext& ctx);

/// (1/[W0]) sum_{p,q} (-1)^{p+q} torus_pairing(H_p, H'_q); zero on unequal-rank
/// contexts. Both homologies must use the context's positive system.
PairingValue homological_pairing(const GradedHomology& h, const GradedHomology& h2, const PairContext& ctx);

/// Which route pairing_unequal_rank takes to its zero.
enum class UnequalRankRoute {
    short_circuit,  // the convention itself
    abelian,        // Euler characteristic of Ext over the split part a, times the torus pairing
};

/// The pairing of two classes on an unequal-rank context. Always 0.
PairingValue pairing_unequal_rank(const CharElement& xi, const CharElement& xi2, const PairContext& ctx,
                                  UnequalRankRoute route = UnequalRankRoute::short_circuit);

/// dim H^p(a, C_nu) for p = 0..d, a abelian of dimension d = nu.size(), from
/// the ranks of the Koszul differentials omega -> nu ^ omega.
std::vector<BigInt> ext_abelian_graded(const std::vector<Rational>& nu, std::size_t d);
BigInt alternating_sum(const std::vector<BigInt>& dims);

/// prod_{alpha in wR^+}(1 - e^alpha) == eps(w) e^{w rho - rho} prod_{alpha in R^+}(1 - e^alpha),
/// both sides expanded.
bool check_denominator_symmetry(const WeylElement& w, const RootSystem& rs);

/// w(Xi) == eps(w) Xi e^{w rho - rho}, rho of the context's positive system.
bool check_antisym_i(const CharElement& xi, const WeylElement& w, const PairContext& ctx);

/// Euler class for the positive system w P from the one for P:
/// eps(w) Xi e^{w rho - rho}.
CharElement antisym_transport(const CharElement& xi, const WeylElement& w, const PairContext& ctx);

/// Euler class of the dual module: (-1)^{|R^+|} e^{2 rho} conj(Xi).
CharElement dual_class(const CharElement& xi, const PairContext& ctx);
/// Degree p of the dual is e^{2 rho} conj(H_{N-p}).
GradedHomology dual_homology(const GradedHomology& h, const PairContext& ctx);

}  // namespace hcpair
