#pragma once

// Concrete realisation of the irreducible module V_lambda of the simple Lie
// algebra attached to a root system: a weight basis with exact matrices for
// the Chevalley generators e_i, f_i, and root vectors for every root obtained
// as iterated commutators of the generators. The scalar field is Q or F_p.
//
// Construction, weight space by weight space in order of depth below lambda:
// V_mu is the span of the formal vectors f_i v (v a basis vector of V_{mu+alpha_i}),
// modulo vectors killed by every e_j. A formal vector is identified with the
// tuple (e_j f_i v)_j = (f_i e_j v + delta_ij <mu + alpha_i, alpha_i^vee> v)_j,
// which only involves spaces already built. Irreducibility is what makes
// "killed by every e_j" equivalent to zero below the top.
//
// Over F_p the same recipe yields the simple module L_p(lambda). When its
// dimension equals the Weyl dimension it is the reduction of the Z-form of
// V_lambda, so ranks of maps built from it never exceed their rational ranks.
// A shortfall throws ModularReductionFailure.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hcpair/char_ring.hpp"
#include "hcpair/exact.hpp"
#include "hcpair/root_system.hpp"
#include "hcpair/weight.hpp"

namespace hcpair {

inline constexpr std::size_t kDefaultModuleDimCap = 2000;

class ModuleTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ModularReductionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WeightSpace {
    Weight weight;
    std::size_t dim = 0;
    std::size_t offset = 0;  // position of the first basis vector in the global basis
};

/// Weight-homogeneous linear map: each source weight space maps into the
/// space `shift` above it.
template <class F>
class BlockOperator {
public:
    struct Block {
        std::size_t target = 0;
        Matrix<F> map;  // dim(target) x dim(source)
    };

    BlockOperator(Weight shift, std::size_t num_spaces) : shift_(std::move(shift)), blocks_(num_spaces) {}

    const Weight& shift() const { return shift_; }
    const std::optional<Block>& block(std::size_t source) const { return blocks_[source]; }
    void set_block(std::size_t source, std::size_t target, Matrix<F> map);
    bool is_zero() const;

private:
    template <class>
    friend class BasicHighestWeightModule;
    Weight shift_;
    std::vector<std::optional<Block>> blocks_;
};

template <class F>
class BasicHighestWeightModule {
public:
    using Operator = BlockOperator<F>;

    /// lambda must be dominant. Throws ModuleTooLarge when the Weyl dimension
    /// formula predicts more than dim_cap basis vectors.
    BasicHighestWeightModule(const RootSystem& rs, const Weight& highest_weight,
                             std::size_t dim_cap = kDefaultModuleDimCap);

    const RootSystem& root_system() const { return rs_; }
    const Weight& highest_weight() const { return highest_; }
    std::size_t dimension() const { return dimension_; }
    const std::vector<WeightSpace>& spaces() const { return spaces_; }
    std::optional<std::size_t> space_index(const Weight& mu) const;

    const Operator& raising(std::size_t i) const { return raising_[i]; }
    const Operator& lowering(std::size_t i) const { return lowering_[i]; }

    /// Root vector for the idx-th entry of rs.full_roots(), defined by a fixed
    /// recipe of nested commutators of generators (same recipe for every module,
    /// so structure constants read off one faithful module apply to all).
    const Operator& root_vector(std::size_t idx) const { return root_vectors_[idx]; }

    /// Formal character read off the weight-space dimensions.
    CharElement character() const;

    Operator compose(const Operator& a, const Operator& b) const;  // a after b
    Operator commutator(const Operator& a, const Operator& b) const;

private:
    void build_spaces(std::size_t dim_cap);
    void build_root_vectors();

    RootSystem rs_;
    Weight highest_;
    std::size_t dimension_ = 0;
    std::vector<WeightSpace> spaces_;
    std::unordered_map<Weight, std::size_t, WeightHash> index_;
    std::vector<Operator> raising_;
    std::vector<Operator> lowering_;
    std::vector<Operator> root_vectors_;
};

using HighestWeightModule = BasicHighestWeightModule<Rational>;
using ModularHighestWeightModule = BasicHighestWeightModule<ModP>;

/// Brackets [x_a, x_b] = c * x_{a+b} of the root vectors above, read off the
/// adjoint module V_theta (theta the highest root), which is faithful.
template <class F>
class BasicStructureConstants {
public:
    explicit BasicStructureConstants(const RootSystem& rs);

    struct Entry {
        std::size_t target;  // index into full_roots()
        F coefficient;
    };
    /// nullopt when a + b is not a root (or is zero).
    const std::optional<Entry>& bracket(std::size_t a, std::size_t b) const {
        return table_[a * num_roots_ + b];
    }

private:
    std::size_t num_roots_ = 0;
    std::vector<std::optional<Entry>> table_;
};

using StructureConstants = BasicStructureConstants<Rational>;
using ModularStructureConstants = BasicStructureConstants<ModP>;

/// Weyl dimension formula prod (lambda+rho, alpha)/(rho, alpha).
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

}  // namespace hcpair
