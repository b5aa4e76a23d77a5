#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcpair/characters.hpp"
#include "hcpair/pairing.hpp"

namespace hcpair {

/// Orbit data of a standard module: closed or not, the fibre module V as a
/// single lattice weight, and s. For closed orbits s must equal the context's
/// orbit_dim().
struct GeometricDatum {
    bool closed = true;
    Weight v;
    int s = 0;
    ContextPtr ctx;
};

enum class Provenance { compact_irreducible, standard_closed, standard_open, dual_of, external };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& name);

/// A labelled class in the Grothendieck group, carried by its Euler class and,
/// when known, its graded n-homology.
class VirtualModule {
public:
    /// Checks euler == euler_class(homology) when homology is given.
    VirtualModule(std::string label, ContextPtr ctx, std::optional<GradedHomology> homology, CharElement euler,
                  Provenance provenance, std::string note = {});

    const std::string& label() const { return label_; }
    const ContextPtr& context() const { return ctx_; }
    const std::optional<GradedHomology>& homology() const { return homology_; }
    const CharElement& euler() const { return euler_; }
    Provenance provenance() const { return provenance_; }
    const std::string& note() const { return note_; }

private:
    std::string label_;
    ContextPtr ctx_;
    std::optional<GradedHomology> homology_;
    CharElement euler_;
    Provenance provenance_;
    std::string note_;
};

/// V_lambda with homology from the Koszul complex over the context's positive
/// system. The context must be compact; lambda dominant.
VirtualModule compact_irreducible(const Weight& lambda, const ContextPtr& ctx, KoszulSolver* solver = nullptr);

/// Closed orbit: (-1)^{s+|R^+|} sum_{w in W0} eps(w) e^{wV + rho - w rho}.
/// Open orbit: the zero class.
///
/// Homology model for closed orbits: e^{wV + rho - w rho} sits in degree
/// |R^+| - s + l(w) (l relative to the context's positive system), which needs
/// l(w) <= s on W0; otherwise only the Euler class is recorded.
VirtualModule standard_module_class(const GeometricDatum& datum);

/// (-1)^s sum_{w in W0} eps(w) e^{-wV + rho + w rho}; zero (with a note) for
/// open orbits.
VirtualModule dual_standard_class(const GeometricDatum& datum);

/// Dual of any equal-rank class: dual_class on the Euler class, dual_homology
/// on the homology.
VirtualModule dual_module(const VirtualModule& m);

/// Discrete-series classes DS<mu> = -e^mu for mu in [lo, hi] and the zero
/// principal-series class PS, all on sl2_context().
std::vector<VirtualModule> sl2_presets(int lo = -3, int hi = 3);

/// Class on an unequal-rank context (A1 torus, one split dimension by default).
VirtualModule unequal_rank_stub(const std::string& label, const ContextPtr& ctx = nullptr);

/// sum_i k_i [m_i]; every summand must share one context. Homology is kept when
/// all summands have it.
VirtualModule linear_combination(const std::string& label, const std::vector<std::pair<BigInt, const VirtualModule*>>& terms);

bool same_context(const PairContext& a, const PairContext& b);

/// Dispatch on the kind; unequal-rank contexts give the zero convention for the
/// elliptic and homological kinds.
PairingValue pair(const VirtualModule& a, const VirtualModule& b, PairingKind kind);

struct Catalog {
    ContextPtr context;
    std::vector<VirtualModule> modules;
};

/// All V_lambda with 0 <= lambda_i <= bound.
Catalog compact_catalog(const RootSystem& rs, int bound, KoszulSolver* solver = nullptr);
Catalog sl2_catalog(int lo = -3, int hi = 3);
Catalog unequal_rank_catalog(std::size_t count = 3);

std::vector<std::vector<PairingValue>> pairing_matrix(const Catalog& catalog, PairingKind kind);

}  // namespace hcpair
