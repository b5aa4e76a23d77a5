#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "hcpair/char_ring.hpp"
#include "hcpair/exact.hpp"
#include "hcpair/hw_module.hpp"
#include "hcpair/root_system.hpp"
#include "hcpair/weyl_group.hpp"

namespace hcpair {

/// Checks that `roots` is a positive system of rs (equivalently w R^+ for some
/// w in W): |R^+| roots, P and -P partition R, closed under root addition.
/// Throws std::invalid_argument otherwise. Returns the roots sorted.
std::vector<Weight> validate_positive_system(const RootSystem& rs, std::span<const Weight> roots);

/// The positive system w R^+.
std::vector<Weight> transported_positive_system(const RootSystem& rs, const WeylElement& w);

/// Half sum of a positive system (integral in the fundamental-weight basis).
Weight half_sum(std::span<const Weight> positive_system);

/// Torus characters [H_p(n, U)] for p = 0..|R^+|, n spanned by a positive system.
class GradedHomology {
public:
    /// All-zero homology with max degree positive_system.size().
    GradedHomology(std::size_t rank, std::vector<Weight> positive_system);
    GradedHomology(std::vector<Weight> positive_system, std::vector<CharElement> classes);

    std::size_t rank() const { return rank_; }
    std::size_t max_degree() const { return classes_.size() - 1; }
    const std::vector<Weight>& positive_system() const { return positive_system_; }
    const std::vector<CharElement>& classes() const { return classes_; }
    const CharElement& degree(std::size_t p) const { return classes_.at(p); }
    bool is_zero() const;

    void add_to_degree(std::size_t p, const CharElement& c);
    /// this += k * other; positive systems must agree.
    void add_scaled(const BigInt& k, const GradedHomology& other);

    friend bool operator==(const GradedHomology&, const GradedHomology&) = default;

private:
    std::size_t rank_;
    std::vector<Weight> positive_system_;  // sorted
    std::vector<CharElement> classes_;
};

bool same_positive_system(const GradedHomology& a, const GradedHomology& b);

/// Formal character of V_lambda with multiplicities from Freudenthal's recursion.
CharElement freudenthal_character(const Weight& lambda, const RootSystem& rs);

/// Weyl character formula: the alternating sum sum_w eps(w) e^{w(lambda+rho)-rho}
/// divided exactly by prod_{alpha>0} (1 - e^{-alpha}).
CharElement weyl_character(const Weight& lambda, const RootSystem& rs, std::uint64_t weyl_cap = kDefaultWeylCap);

/// Chain complex Lambda^p n (x) V_lambda of n-homology, split by torus weight,
/// over Q or F_p.
template <class F>
class BasicKoszulComplex {
public:
    using Module = BasicHighestWeightModule<F>;
    using Structure = BasicStructureConstants<F>;

    BasicKoszulComplex(std::shared_ptr<const Module> module, std::shared_ptr<const Structure> structure,
                       std::span<const Weight> positive_system);
    BasicKoszulComplex(const RootSystem& rs, const Weight& lambda, std::span<const Weight> positive_system,
                       std::size_t dim_cap = kDefaultModuleDimCap);

    std::size_t max_degree() const { return n_roots_.size(); }
    const Module& module() const { return *module_; }
    const std::vector<Weight>& positive_system() const { return positive_system_; }
    /// Torus weights carrying chains, sorted.
    std::vector<Weight> weights() const;
    std::size_t chain_dimension(const Weight& nu, std::size_t p) const;
    /// Boundary d_p : C_{p,nu} -> C_{p-1,nu}, one sparse column per chain basis vector.
    std::vector<SparseVector<F>> boundary_columns(const Weight& nu, std::size_t p) const;
    /// rank of d_p for p = 0..max_degree()+1 (the ends are 0).
    std::vector<std::size_t> boundary_ranks(const Weight& nu) const;
    /// dim H_p at nu, p = 0..max_degree().
    std::vector<std::size_t> homology_dimensions(const Weight& nu) const;

    GradedHomology homology() const;

private:
    struct Segment {
        std::uint32_t subset;    // bitmask over n_roots_
        std::size_t space;       // weight space of V
        std::size_t offset;      // first index inside the (nu, p) block
    };
    struct Block {
        std::vector<Segment> segments;
        std::size_t dim = 0;
        std::map<std::pair<std::uint32_t, std::size_t>, std::size_t> lookup;  // (subset, space) -> offset
    };

    void build_blocks();
    const Block* block(const Weight& nu, std::size_t p) const;

    std::shared_ptr<const Module> module_;
    std::shared_ptr<const Structure> structure_;
    std::vector<std::size_t> n_roots_;  // indices into rs.full_roots(), sorted
    std::vector<Weight> positive_system_;
    std::map<Weight, std::vector<Block>> blocks_;  // per weight, per degree
};

using KoszulComplex = BasicKoszulComplex<Rational>;
using ModularKoszulComplex = BasicKoszulComplex<ModP>;

enum class KoszulMethod {
    exact,    // fraction-free elimination over Q throughout
    modular,  // ranks over F_p, each weight certified, exact fallback where the certificate fails
};

/// n-homology of finite-dimensional irreducibles of one root system, with the
/// modules (and structure constants) cached across highest weights and
/// positive systems.
///
/// Modular certificate: rank over F_p never exceeds rank over Q, so
/// dim H_p(F_p) >= dim H_p(Q) in each degree while both share the Euler
/// characteristic chi_nu of the chain groups. Hence sum_p dim H_p(F_p) = |chi_nu|
/// forces equality everywhere; other weights are retried with a second prime,
/// then over Q.
class KoszulSolver {
public:
    explicit KoszulSolver(RootSystem rs, std::size_t dim_cap = kDefaultModuleDimCap,
                          KoszulMethod method = KoszulMethod::modular);

    const RootSystem& root_system() const { return rs_; }
    GradedHomology homology(const Weight& lambda, std::span<const Weight> positive_system);

    /// Weights whose homology had to be recomputed over Q (modular method only).
    std::size_t exact_fallbacks() const { return exact_fallbacks_; }

private:
    template <class F>
    struct ModularCache {
        bool unavailable = false;
        std::shared_ptr<const BasicStructureConstants<F>> structure;
        std::map<Weight, std::shared_ptr<const BasicHighestWeightModule<F>>> modules;
    };

    std::shared_ptr<const HighestWeightModule> exact_module(const Weight& lambda);
    std::shared_ptr<const StructureConstants> exact_structure();
    /// nullptr when the reduction mod this prime is unusable.
    template <class F>
    std::shared_ptr<const BasicKoszulComplex<F>> modular_complex(const Weight& lambda,
                                                                 std::span<const Weight> positive_system);

    RootSystem rs_;
    std::size_t dim_cap_;
    KoszulMethod method_;
    std::size_t exact_fallbacks_ = 0;
    std::shared_ptr<const StructureConstants> exact_structure_;
    std::map<Weight, std::shared_ptr<const HighestWeightModule>> exact_modules_;
    std::tuple<ModularCache<ModP>, ModularCache<ModQ>> modular_;
};

GradedHomology koszul_n_homology(const Weight& lambda, std::span<const Weight> positive_system, const RootSystem& rs,
                                 std::size_t dim_cap = kDefaultModuleDimCap,
                                 KoszulMethod method = KoszulMethod::modular);

/// sum_p (-1)^p [H_p].
CharElement euler_class(const GradedHomology& gh);

/// Closed form of the Euler class of V_lambda for the standard positive system:
/// (-1)^{|R^+|} sum_w eps(w) e^{rho + w(lambda+rho)}.
CharElement euler_class_closed_form(const Weight& lambda, const RootSystem& rs,
                                    std::uint64_t weyl_cap = kDefaultWeylCap);

}  // namespace hcpair
