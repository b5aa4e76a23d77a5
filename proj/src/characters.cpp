#include "hcpair/characters.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

namespace hcpair {

std::vector<Weight> validate_positive_system(const RootSystem& rs, std::span<const Weight> roots) {
    if (roots.size() != rs.num_positive()) {
        throw std::invalid_argument("positive system must contain exactly " + std::to_string(rs.num_positive()) +
                                    " roots, got " + std::to_string(roots.size()));
    }
    std::set<Weight> chosen;
    for (const Weight& alpha : roots) {
        if (alpha.rank() != rs.rank() || !rs.is_root(alpha)) {
            throw std::invalid_argument("positive system entry " + alpha.to_string() + " is not a root");
        }
        if (!chosen.insert(alpha).second) throw std::invalid_argument("positive system repeats " + alpha.to_string());
        if (chosen.contains(-alpha)) throw std::invalid_argument("positive system contains a root and its negative");
    }
    for (const Weight& a : chosen) {
        for (const Weight& b : chosen) {
            const Weight sum = a + b;
            if (rs.is_root(sum) && !chosen.contains(sum)) {
                throw std::invalid_argument("positive system is not closed: " + a.to_string() + " + " + b.to_string());
            }
        }
    }
    return {chosen.begin(), chosen.end()};
}

std::vector<Weight> transported_positive_system(const RootSystem& rs, const WeylElement& w) {
    std::vector<Weight> out;
    for (const Weight& alpha : rs.positive_roots()) out.push_back(w.act(alpha));
    std::sort(out.begin(), out.end());
    return out;
}

Weight half_sum(std::span<const Weight> positive_system) {
    if (positive_system.empty()) throw std::invalid_argument("half_sum of an empty positive system");
    Weight sum(positive_system.front().rank());
    for (const Weight& alpha : positive_system) sum += alpha;
    Weight out(sum.rank());
    for (std::size_t i = 0; i < sum.rank(); ++i) {
        if (sum[i] % 2 != 0) throw std::invalid_argument("positive roots do not sum to an even weight");
        out[i] = sum[i] / 2;
    }
    return out;
}

GradedHomology::GradedHomology(std::size_t rank, std::vector<Weight> positive_system)
    : rank_(rank), positive_system_(std::move(positive_system)) {
    std::sort(positive_system_.begin(), positive_system_.end());
    classes_.assign(positive_system_.size() + 1, CharElement(rank));
}

GradedHomology::GradedHomology(std::vector<Weight> positive_system, std::vector<CharElement> classes)
    : rank_(0), positive_system_(std::move(positive_system)), classes_(std::move(classes)) {
    std::sort(positive_system_.begin(), positive_system_.end());
    if (classes_.size() != positive_system_.size() + 1) {
        throw std::invalid_argument("graded homology needs one class per degree 0.." +
                                    std::to_string(positive_system_.size()));
    }
    rank_ = classes_.front().rank();
    for (const auto& c : classes_) {
        if (c.rank() != rank_) throw std::invalid_argument("graded homology classes disagree on rank");
    }
}

bool GradedHomology::is_zero() const {
    return std::all_of(classes_.begin(), classes_.end(), [](const CharElement& c) { return c.is_zero(); });
}

void GradedHomology::add_to_degree(std::size_t p, const CharElement& c) {
    if (p >= classes_.size()) throw std::invalid_argument("degree " + std::to_string(p) + " beyond |R+|");
    classes_[p] += c;
}

bool same_positive_system(const GradedHomology& a, const GradedHomology& b) {
    return a.positive_system() == b.positive_system();
}

void GradedHomology::add_scaled(const BigInt& k, const GradedHomology& other) {
    if (positive_system_ != other.positive_system_) {
        throw std::invalid_argument("graded homology positive systems differ");
    }
    for (std::size_t p = 0; p < classes_.size(); ++p) classes_[p] += k * other.classes_[p];
}

CharElement euler_class(const GradedHomology& gh) {
    CharElement out(gh.rank());
    for (std::size_t p = 0; p < gh.classes().size(); ++p) {
        if (p % 2 == 0) out += gh.classes()[p];
        else out -= gh.classes()[p];
    }
    return out;
}

namespace {

void require_dominant(const Weight& lambda, const RootSystem& rs) {
    if (lambda.rank() != rs.rank()) throw std::invalid_argument("weight rank does not match root system");
    if (!lambda.is_dominant()) throw std::invalid_argument("weight " + lambda.to_string() + " is not dominant");
}

Weight dominant_conjugate(const RootSystem& rs, Weight mu) {
    for (;;) {
        std::size_t i = 0;
        while (i < rs.rank() && mu[i] >= 0) ++i;
        if (i == rs.rank()) return mu;
        mu = rs.reflect(i, mu);
    }
}

std::vector<Weight> orbit(const RootSystem& rs, const Weight& mu) {
    std::set<Weight> seen{mu};
    std::deque<Weight> queue{mu};
    while (!queue.empty()) {
        Weight v = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            Weight r = rs.reflect(i, v);
            if (seen.insert(r).second) queue.push_back(r);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

CharElement freudenthal_character(const Weight& lambda, const RootSystem& rs) {
    require_dominant(lambda, rs);
    const std::size_t r = rs.rank();

    // Dominant weights below lambda, with simple-root coordinates of lambda - mu.
    std::map<Weight, std::vector<int>> depth;
    depth.emplace(lambda, std::vector<int>(r, 0));
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        const Weight mu = queue.front();
        queue.pop_front();
        const std::vector<int> c = depth.at(mu);
        for (std::size_t k = 0; k < rs.num_positive(); ++k) {
            const Weight nu = mu - rs.positive_roots()[k];
            if (!nu.is_dominant() || depth.contains(nu)) continue;
            std::vector<int> cn = c;
            for (std::size_t j = 0; j < r; ++j) cn[j] += rs.simple_coords(k)[j];
            depth.emplace(nu, std::move(cn));
            queue.push_back(nu);
        }
    }
    std::vector<Weight> order;
    for (const auto& [mu, c] : depth) order.push_back(mu);
    auto height = [&](const Weight& mu) {
        int h = 0;
        for (int x : depth.at(mu)) h += x;
        return h;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](const Weight& a, const Weight& b) { return height(a) < height(b); });

    std::map<Weight, BigInt> mult;
    auto lookup = [&](const Weight& nu) -> BigInt {
        auto it = mult.find(dominant_conjugate(rs, nu));
        return it == mult.end() ? BigInt(0) : it->second;
    };
    const Weight two_rho = 2 * rs.rho();
    for (const Weight& mu : order) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        BigInt numerator = 0;
        for (std::size_t k = 0; k < rs.num_positive(); ++k) {
            const Weight& alpha = rs.positive_roots()[k];
            Weight nu = mu + alpha;
            for (;;) {
                BigInt m = lookup(nu);
                if (m == 0) break;
                numerator += m * rs.pair_with_positive_root(nu, k);
                nu += alpha;
            }
        }
        numerator *= 2;
        const std::int64_t denominator = rs.pair_with_root_combination(lambda + mu + two_rho, depth.at(mu));
        if (denominator <= 0 || numerator % denominator != 0) {
            throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity at " + mu.to_string());
        }
        mult[mu] = numerator / denominator;
    }

    CharElement out(r);
    for (const auto& [mu, m] : mult) {
        if (m == 0) continue;
        for (const Weight& nu : orbit(rs, mu)) out.add_term(nu, m);
    }
    return out;
}

CharElement weyl_character(const Weight& lambda, const RootSystem& rs, std::uint64_t weyl_cap) {
    require_dominant(lambda, rs);
    const WeylSubgroup w = enumerate_weyl_group(rs, weyl_cap);
    const Weight shifted = lambda + rs.rho();
    CharElement numerator(rs.rank());
    for (const WeylElement& x : w.elements()) numerator.add_term(x.act(shifted) - rs.rho(), x.sign());
    for (const Weight& alpha : rs.positive_roots()) {
        auto q = divide_by_one_minus(numerator, -alpha);
        if (!q) {
            throw std::logic_error("Weyl character: inexact division by (1 - e^-" + alpha.to_string() + ")");
        }
        numerator = std::move(*q);
    }
    return numerator;
}

CharElement euler_class_closed_form(const Weight& lambda, const RootSystem& rs, std::uint64_t weyl_cap) {
    require_dominant(lambda, rs);
    const WeylSubgroup w = enumerate_weyl_group(rs, weyl_cap);
    const Weight shifted = lambda + rs.rho();
    const int global = rs.num_positive() % 2 == 0 ? 1 : -1;
    CharElement out(rs.rank());
    for (const WeylElement& x : w.elements()) out.add_term(rs.rho() + x.act(shifted), global * x.sign());
    return out;
}

template <class F>
BasicKoszulComplex<F>::BasicKoszulComplex(std::shared_ptr<const Module> module,
                                          std::shared_ptr<const Structure> structure,
                                          std::span<const Weight> positive_system)
    : module_(std::move(module)), structure_(std::move(structure)) {
    const RootSystem& rs = module_->root_system();
    positive_system_ = validate_positive_system(rs, positive_system);
    for (const Weight& alpha : positive_system_) n_roots_.push_back(*rs.root_index(alpha));
    std::sort(n_roots_.begin(), n_roots_.end());
    build_blocks();
}

template <class F>
BasicKoszulComplex<F>::BasicKoszulComplex(const RootSystem& rs, const Weight& lambda,
                                          std::span<const Weight> positive_system, std::size_t dim_cap)
    : BasicKoszulComplex(std::make_shared<const Module>(rs, lambda, dim_cap), std::make_shared<const Structure>(rs),
                         positive_system) {}

template <class F>
void BasicKoszulComplex<F>::build_blocks() {
    const RootSystem& rs = module_->root_system();
    const std::size_t n = n_roots_.size();
    if (n > 24) throw ModuleTooLarge("module too large: exterior algebra of n has 2^" + std::to_string(n) + " terms");

    const std::uint32_t subsets = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        Weight wt = rs.zero();
        for (std::size_t b = 0; b < n; ++b) {
            if (mask & (std::uint32_t{1} << b)) wt += rs.full_roots()[n_roots_[b]];
        }
        const std::size_t p = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t s = 0; s < module_->spaces().size(); ++s) {
            const WeightSpace& space = module_->spaces()[s];
            auto& per_degree = blocks_[wt + space.weight];
            if (per_degree.empty()) per_degree.resize(n + 1);
            Block& blk = per_degree[p];
            blk.lookup.emplace(std::make_pair(mask, s), blk.dim);
            blk.segments.push_back(Segment{mask, s, blk.dim});
            blk.dim += space.dim;
        }
    }
}

template <class F>
std::vector<Weight> BasicKoszulComplex<F>::weights() const {
    std::vector<Weight> out;
    for (const auto& [nu, unused] : blocks_) out.push_back(nu);
    return out;
}

template <class F>
const typename BasicKoszulComplex<F>::Block* BasicKoszulComplex<F>::block(const Weight& nu, std::size_t p) const {
    auto it = blocks_.find(nu);
    if (it == blocks_.end() || p >= it->second.size()) return nullptr;
    return &it->second[p];
}

template <class F>
std::size_t BasicKoszulComplex<F>::chain_dimension(const Weight& nu, std::size_t p) const {
    const Block* blk = block(nu, p);
    return blk ? blk->dim : 0;
}

template <class F>
std::vector<SparseVector<F>> BasicKoszulComplex<F>::boundary_columns(const Weight& nu, std::size_t p) const {
    std::vector<SparseVector<F>> columns;
    const Block* source = block(nu, p);
    if (!source || p == 0) return columns;
    const Block* target = block(nu, p - 1);
    const std::size_t n = n_roots_.size();
    std::vector<int> bit_of_root(module_->root_system().full_roots().size(), -1);
    for (std::size_t b = 0; b < n; ++b) bit_of_root[n_roots_[b]] = static_cast<int>(b);

    for (const Segment& seg : source->segments) {
        std::vector<std::size_t> members;
        for (std::size_t b = 0; b < n; ++b) {
            if (seg.subset & (std::uint32_t{1} << b)) members.push_back(b);
        }
        const std::size_t dim = module_->spaces()[seg.space].dim;
        for (std::size_t k = 0; k < dim; ++k) {
            SparseVector<F> col;
            // -sum_a (-1)^a  x_{S - s_a} (x) x_{s_a} v  (left action, so the sign flips)
            for (std::size_t a = 0; a < members.size(); ++a) {
                const auto& blk = module_->root_vector(n_roots_[members[a]]).block(seg.space);
                if (!blk) continue;
                const std::uint32_t rest = seg.subset & ~(std::uint32_t{1} << members[a]);
                const std::size_t row0 = target->lookup.at({rest, blk->target});
                const F sign = a % 2 == 0 ? -1 : 1;
                for (std::size_t row = 0; row < blk->map.rows(); ++row) {
                    if (blk->map(row, k) != F(0)) col[row0 + row] += sign * blk->map(row, k);
                }
            }
            // sum_{a<b} (-1)^{a+b} [x_{s_a}, x_{s_b}] ^ x_{S - s_a - s_b} (x) v
            for (std::size_t a = 0; a < members.size(); ++a) {
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    const auto& entry = structure_->bracket(n_roots_[members[a]], n_roots_[members[b]]);
                    if (!entry) continue;
                    const int t = bit_of_root[entry->target];
                    if (t < 0) throw std::logic_error("positive system not closed under brackets");
                    const std::uint32_t rest =
                        seg.subset & ~(std::uint32_t{1} << members[a]) & ~(std::uint32_t{1} << members[b]);
                    if (rest & (std::uint32_t{1} << t)) continue;
                    const int before = std::popcount(rest & ((std::uint32_t{1} << t) - 1));
                    const F sign = ((a + b + static_cast<std::size_t>(before)) % 2 == 0) ? 1 : -1;
                    const std::uint32_t merged = rest | (std::uint32_t{1} << t);
                    const std::size_t row0 = target->lookup.at({merged, seg.space});
                    col[row0 + k] += sign * entry->coefficient;
                }
            }
            for (auto it = col.begin(); it != col.end();) {
                it = it->second == F(0) ? col.erase(it) : std::next(it);
            }
            columns.push_back(std::move(col));
        }
    }
    return columns;
}

template <class F>
std::vector<std::size_t> BasicKoszulComplex<F>::boundary_ranks(const Weight& nu) const {
    const std::size_t n = n_roots_.size();
    std::vector<std::size_t> rank(n + 2, 0);
    for (std::size_t p = 1; p <= n; ++p) {
        if (chain_dimension(nu, p) == 0 || chain_dimension(nu, p - 1) == 0) continue;
        if constexpr (is_prime_field_v<F>) {
            rank[p] = rank_of(boundary_columns(nu, p), chain_dimension(nu, p - 1));
        } else {
            rank[p] = rank_of(boundary_columns(nu, p));
        }
    }
    return rank;
}

template <class F>
std::vector<std::size_t> BasicKoszulComplex<F>::homology_dimensions(const Weight& nu) const {
    const std::size_t n = n_roots_.size();
    const std::vector<std::size_t> rank = boundary_ranks(nu);
    std::vector<std::size_t> out(n + 1, 0);
    for (std::size_t p = 0; p <= n; ++p) {
        const std::size_t dim = chain_dimension(nu, p);
        if (rank[p] + rank[p + 1] > dim) throw std::logic_error("boundary ranks exceed chain dimension");
        out[p] = dim - rank[p] - rank[p + 1];
    }
    return out;
}

template <class F>
GradedHomology BasicKoszulComplex<F>::homology() const {
    GradedHomology out(module_->root_system().rank(), positive_system_);
    for (const auto& [nu, unused] : blocks_) {
        const std::vector<std::size_t> h = homology_dimensions(nu);
        for (std::size_t p = 0; p < h.size(); ++p) {
            if (h[p] > 0) out.add_to_degree(p, CharElement::monomial(nu, BigInt(h[p])));
        }
    }
    return out;
}

template class BasicKoszulComplex<Rational>;
template class BasicKoszulComplex<ModP>;
template class BasicKoszulComplex<ModQ>;

KoszulSolver::KoszulSolver(RootSystem rs, std::size_t dim_cap, KoszulMethod method)
    : rs_(std::move(rs)), dim_cap_(dim_cap), method_(method) {}

std::shared_ptr<const StructureConstants> KoszulSolver::exact_structure() {
    if (!exact_structure_) exact_structure_ = std::make_shared<const StructureConstants>(rs_);
    return exact_structure_;
}

std::shared_ptr<const HighestWeightModule> KoszulSolver::exact_module(const Weight& lambda) {
    auto& slot = exact_modules_[lambda];
    if (!slot) slot = std::make_shared<const HighestWeightModule>(rs_, lambda, dim_cap_);
    return slot;
}

namespace {

std::size_t euler_characteristic_magnitude(const std::vector<std::size_t>& chain_dims) {
    std::int64_t chi = 0;
    for (std::size_t p = 0; p < chain_dims.size(); ++p) {
        const auto c = static_cast<std::int64_t>(chain_dims[p]);
        chi += p % 2 == 0 ? c : -c;
    }
    return static_cast<std::size_t>(chi < 0 ? -chi : chi);
}

std::size_t total(const std::vector<std::size_t>& h) {
    std::size_t out = 0;
    for (std::size_t x : h) out += x;
    return out;
}

}  // namespace

template <class F>
std::shared_ptr<const BasicKoszulComplex<F>> KoszulSolver::modular_complex(const Weight& lambda,
                                                                           std::span<const Weight> positive_system) {
    auto& cache = std::get<ModularCache<F>>(modular_);
    if (cache.unavailable) return nullptr;
    try {
        if (!cache.structure) cache.structure = std::make_shared<const BasicStructureConstants<F>>(rs_);
        auto& slot = cache.modules[lambda];
        if (!slot) slot = std::make_shared<const BasicHighestWeightModule<F>>(rs_, lambda, dim_cap_);
        return std::make_shared<const BasicKoszulComplex<F>>(slot, cache.structure, positive_system);
    } catch (const ModularReductionFailure&) {
        cache.modules.erase(lambda);
        if (!cache.structure) cache.unavailable = true;
        return nullptr;
    }
}

GradedHomology KoszulSolver::homology(const Weight& lambda, std::span<const Weight> positive_system) {
    require_dominant(lambda, rs_);
    if (method_ == KoszulMethod::exact) {
        return KoszulComplex(exact_module(lambda), exact_structure(), positive_system).homology();
    }

    const auto first = modular_complex<ModP>(lambda, positive_system);
    std::shared_ptr<const BasicKoszulComplex<ModQ>> second;
    bool second_tried = false;
    std::optional<KoszulComplex> exact;
    GradedHomology out(rs_.rank(), validate_positive_system(rs_, positive_system));

    std::vector<Weight> weights;
    if (first) {
        weights = first->weights();
    } else {
        exact.emplace(exact_module(lambda), exact_structure(), positive_system);
        weights = exact->weights();
    }
    for (const Weight& nu : weights) {
        std::vector<std::size_t> dims;
        for (std::size_t p = 0; p <= rs_.num_positive(); ++p) {
            dims.push_back(first ? first->chain_dimension(nu, p) : exact->chain_dimension(nu, p));
        }
        const std::size_t target = euler_characteristic_magnitude(dims);
        std::optional<std::vector<std::size_t>> h;
        if (first) {
            h = first->homology_dimensions(nu);
            if (total(*h) != target) {
                h.reset();
                if (!second_tried) {
                    second = modular_complex<ModQ>(lambda, positive_system);
                    second_tried = true;
                }
                if (second) {
                    h = second->homology_dimensions(nu);
                    if (total(*h) != target) h.reset();
                }
            }
        }
        if (!h) {
            if (!exact) exact.emplace(exact_module(lambda), exact_structure(), positive_system);
            h = exact->homology_dimensions(nu);
            ++exact_fallbacks_;
        }
        for (std::size_t p = 0; p < h->size(); ++p) {
            if ((*h)[p] > 0) out.add_to_degree(p, CharElement::monomial(nu, BigInt((*h)[p])));
        }
    }
    return out;
}

GradedHomology koszul_n_homology(const Weight& lambda, std::span<const Weight> positive_system, const RootSystem& rs,
                                 std::size_t dim_cap, KoszulMethod method) {
    KoszulSolver solver(rs, dim_cap, method);
    return solver.homology(lambda, positive_system);
}

}  // namespace hcpair
