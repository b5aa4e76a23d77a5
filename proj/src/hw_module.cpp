#include "hcpair/hw_module.hpp"

#include <map>
#include <stdexcept>
#include <type_traits>

namespace hcpair {

template <class F>
void BlockOperator<F>::set_block(std::size_t source, std::size_t target, Matrix<F> map) {
    if (source >= blocks_.size()) blocks_.resize(source + 1);
    blocks_[source] = Block{target, std::move(map)};
}

template <class F>
bool BlockOperator<F>::is_zero() const {
    for (const auto& b : blocks_) {
        if (b && !b->map.is_zero()) return false;
    }
    return true;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != rs.rank()) throw std::invalid_argument("weyl_dimension: rank mismatch");
    const Weight shifted = lambda + rs.rho();
    Rational out = 1;
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
        out *= Rational(rs.pair_with_positive_root(shifted, k), rs.pair_with_positive_root(rs.rho(), k));
    }
    if (!is_integer(out)) throw std::logic_error("Weyl dimension formula produced a non-integer");
    return numerator(out);
}

template <class F>
BasicHighestWeightModule<F>::BasicHighestWeightModule(const RootSystem& rs, const Weight& highest_weight,
                                                      std::size_t dim_cap)
    : rs_(rs), highest_(highest_weight) {
    if (highest_.rank() != rs_.rank()) throw std::invalid_argument("highest weight has wrong rank");
    if (!highest_.is_dominant()) {
        throw std::invalid_argument("highest weight " + highest_.to_string() + " is not dominant");
    }
    const BigInt predicted = weyl_dimension(rs_, highest_);
    if (predicted > dim_cap) {
        throw ModuleTooLarge("module too large: dim V" + highest_.to_string() + " = " + predicted.str() +
                             " exceeds cap " + std::to_string(dim_cap));
    }
    build_spaces(dim_cap);
    if (BigInt(dimension_) != predicted) {
        if constexpr (is_prime_field_v<F>) {
            throw ModularReductionFailure("simple module mod p is smaller than V" + highest_.to_string());
        } else {
            throw std::logic_error("module construction disagrees with the Weyl dimension formula");
        }
    }
    build_root_vectors();
}

template <class F>
std::optional<std::size_t> BasicHighestWeightModule<F>::space_index(const Weight& mu) const {
    auto it = index_.find(mu);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

template <class F>
void BasicHighestWeightModule<F>::build_spaces(std::size_t dim_cap) {
    const std::size_t r = rs_.rank();
    for (std::size_t i = 0; i < r; ++i) {
        raising_.emplace_back(rs_.simple_root(i), 0);
        lowering_.emplace_back(-rs_.simple_root(i), 0);
    }
    auto add_space = [&](const Weight& mu, std::size_t dim) {
        const std::size_t idx = spaces_.size();
        spaces_.push_back(WeightSpace{mu, dim, dimension_});
        index_.emplace(mu, idx);
        dimension_ += dim;
        for (std::size_t i = 0; i < r; ++i) {
            raising_[i].blocks_.resize(spaces_.size());
            lowering_[i].blocks_.resize(spaces_.size());
        }
        return idx;
    };
    add_space(highest_, 1);

    std::vector<std::size_t> previous{0};
    while (!previous.empty()) {
        std::map<Weight, bool> candidates;
        for (std::size_t s : previous) {
            for (std::size_t i = 0; i < r; ++i) candidates.emplace(spaces_[s].weight - rs_.simple_root(i), true);
        }
        std::vector<std::size_t> current;
        for (const auto& [mu, unused] : candidates) {
            // Formal vectors f_i v, v running over a basis of V_{mu + alpha_i}.
            struct Formal {
                std::size_t i;
                std::size_t source;
                std::size_t b;
            };
            std::vector<Formal> formal;
            for (std::size_t i = 0; i < r; ++i) {
                if (auto src = space_index(mu + rs_.simple_root(i))) {
                    for (std::size_t b = 0; b < spaces_[*src].dim; ++b) formal.push_back({i, *src, b});
                }
            }
            if (formal.empty()) continue;

            // Row blocks: one per j with mu + alpha_j a weight.
            std::vector<std::optional<std::size_t>> row_target(r);
            std::vector<std::size_t> row_offset(r, 0);
            std::size_t rows = 0;
            for (std::size_t j = 0; j < r; ++j) {
                row_target[j] = space_index(mu + rs_.simple_root(j));
                row_offset[j] = rows;
                if (row_target[j]) rows += spaces_[*row_target[j]].dim;
            }

            Matrix<F> m(rows, formal.size());
            for (std::size_t col = 0; col < formal.size(); ++col) {
                const Formal& fv = formal[col];
                for (std::size_t j = 0; j < r; ++j) {
                    if (!row_target[j]) continue;
                    // f_i e_j v
                    const auto& up = raising_[j].blocks_[fv.source];
                    if (up) {
                        const auto& down = lowering_[fv.i].blocks_[up->target];
                        if (down) {
                            if (down->target != *row_target[j]) throw std::logic_error("inconsistent weight blocks");
                            for (std::size_t row = 0; row < down->map.rows(); ++row) {
                                F acc = 0;
                                for (std::size_t k = 0; k < down->map.cols(); ++k) {
                                    if (down->map(row, k) != F(0) && up->map(k, fv.b) != F(0)) {
                                        acc += down->map(row, k) * up->map(k, fv.b);
                                    }
                                }
                                m(row_offset[j] + row, col) += acc;
                            }
                        }
                    }
                    // + delta_ij h_i v
                    if (j == fv.i) m(row_offset[j] + fv.b, col) += spaces_[fv.source].weight[fv.i];
                }
            }

            RowEchelon<F> echelon = reduced_row_echelon(m);
            const std::size_t dim = echelon.pivots.size();
            if (dim == 0) continue;
            if (dimension_ + dim > dim_cap) {
                throw ModuleTooLarge("module too large: exceeds cap " + std::to_string(dim_cap));
            }
            const std::size_t target = add_space(mu, dim);
            current.push_back(target);

            // f_i : V_{mu+alpha_i} -> V_mu, columns are echelon coordinates.
            std::map<std::size_t, Matrix<F>> lower_maps;
            for (std::size_t col = 0; col < formal.size(); ++col) {
                const Formal& fv = formal[col];
                auto [it, inserted] = lower_maps.try_emplace(fv.i, dim, spaces_[fv.source].dim);
                for (std::size_t k = 0; k < dim; ++k) it->second(k, fv.b) = echelon.reduced(k, col);
            }
            for (auto& [i, map] : lower_maps) {
                lowering_[i].set_block(*space_index(mu + rs_.simple_root(i)), target, std::move(map));
            }
            // e_j : V_mu -> V_{mu+alpha_j}, read from the pivot columns of m.
            for (std::size_t j = 0; j < r; ++j) {
                if (!row_target[j]) continue;
                const std::size_t tdim = spaces_[*row_target[j]].dim;
                Matrix<F> up(tdim, dim);
                for (std::size_t k = 0; k < dim; ++k) {
                    for (std::size_t row = 0; row < tdim; ++row) up(row, k) = m(row_offset[j] + row, echelon.pivots[k]);
                }
                raising_[j].set_block(target, *row_target[j], std::move(up));
            }
        }
        previous = std::move(current);
    }
    for (std::size_t i = 0; i < r; ++i) {
        raising_[i].blocks_.resize(spaces_.size());
        lowering_[i].blocks_.resize(spaces_.size());
    }
}

template <class F>
BlockOperator<F> BasicHighestWeightModule<F>::compose(const Operator& a, const Operator& b) const {
    Operator out(a.shift() + b.shift(), spaces_.size());
    for (std::size_t s = 0; s < spaces_.size(); ++s) {
        const auto& first = b.block(s);
        if (!first) continue;
        const auto& second = a.block(first->target);
        if (!second) continue;
        Matrix<F> prod = second->map * first->map;
        if (!prod.is_zero()) out.set_block(s, second->target, std::move(prod));
    }
    return out;
}

template <class F>
BlockOperator<F> BasicHighestWeightModule<F>::commutator(const Operator& a, const Operator& b) const {
    Operator ab = compose(a, b);
    Operator ba = compose(b, a);
    Operator out(ab.shift(), spaces_.size());
    for (std::size_t s = 0; s < spaces_.size(); ++s) {
        const auto& x = ab.block(s);
        const auto& y = ba.block(s);
        if (x && y) {
            Matrix<F> diff = x->map - y->map;
            if (!diff.is_zero()) out.set_block(s, x->target, std::move(diff));
        } else if (x) {
            out.set_block(s, x->target, x->map);
        } else if (y) {
            out.set_block(s, y->target, -y->map);
        }
    }
    return out;
}

template <class F>
void BasicHighestWeightModule<F>::build_root_vectors() {
    const std::size_t n = rs_.num_positive();
    const std::size_t r = rs_.rank();
    root_vectors_.reserve(2 * n);
    // Positive roots first (sorted by height), then negatives in the same order.
    std::vector<std::size_t> split(n, 0);
    for (std::size_t k = r; k < n; ++k) {
        const auto c = rs_.simple_coords(k);
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (c[i] > 0 && rs_.is_positive_root(rs_.positive_roots()[k] - rs_.simple_root(i))) break;
        }
        if (i == r) throw std::logic_error("positive root has no simple-root predecessor");
        split[k] = i;
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (k < r) {
            root_vectors_.push_back(raising_[k]);
        } else {
            const std::size_t rest = *rs_.root_index(rs_.positive_roots()[k] - rs_.simple_root(split[k]));
            root_vectors_.push_back(commutator(raising_[split[k]], root_vectors_[rest]));
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (k < r) {
            root_vectors_.push_back(lowering_[k]);
        } else {
            const std::size_t rest = *rs_.root_index(rs_.positive_roots()[k] - rs_.simple_root(split[k]));
            root_vectors_.push_back(commutator(lowering_[split[k]], root_vectors_[n + rest]));
        }
    }
}

template <class F>
CharElement BasicHighestWeightModule<F>::character() const {
    CharElement out(rs_.rank());
    for (const auto& s : spaces_) out.add_term(s.weight, BigInt(s.dim));
    return out;
}

template <class F>
BasicStructureConstants<F>::BasicStructureConstants(const RootSystem& rs) : num_roots_(rs.full_roots().size()) {
    const BasicHighestWeightModule<F> adjoint(rs, rs.highest_root(), rs.full_roots().size() + rs.rank());
    table_.resize(num_roots_ * num_roots_);
    for (std::size_t a = 0; a < num_roots_; ++a) {
        for (std::size_t b = 0; b < num_roots_; ++b) {
            const Weight sum = rs.full_roots()[a] + rs.full_roots()[b];
            auto t = rs.root_index(sum);
            if (!t) continue;
            const BlockOperator<F> c = adjoint.commutator(adjoint.root_vector(a), adjoint.root_vector(b));
            const BlockOperator<F>& x = adjoint.root_vector(*t);
            std::optional<F> ratio;
            for (std::size_t s = 0; s < adjoint.spaces().size() && !ratio; ++s) {
                const auto& xb = x.block(s);
                if (!xb) continue;
                for (std::size_t i = 0; i < xb->map.rows() && !ratio; ++i) {
                    for (std::size_t j = 0; j < xb->map.cols() && !ratio; ++j) {
                        if (xb->map(i, j) == F(0)) continue;
                        const auto& cb = c.block(s);
                        ratio = cb ? cb->map(i, j) / xb->map(i, j) : F(0);
                    }
                }
            }
            if (!ratio || *ratio == F(0)) {
                if constexpr (is_prime_field_v<F>) {
                    throw ModularReductionFailure("structure constant vanishes mod p");
                } else {
                    throw std::logic_error("bracket of root vectors vanished unexpectedly");
                }
            }
            for (std::size_t s = 0; s < adjoint.spaces().size(); ++s) {
                const auto& xb = x.block(s);
                const auto& cb = c.block(s);
                if (!xb && !cb) continue;
                if (!xb || !cb || xb->target != cb->target) throw std::logic_error("root vector bracket not proportional");
                for (std::size_t i = 0; i < xb->map.rows(); ++i) {
                    for (std::size_t j = 0; j < xb->map.cols(); ++j) {
                        if (cb->map(i, j) != *ratio * xb->map(i, j)) {
                            throw std::logic_error("root vector bracket not proportional");
                        }
                    }
                }
            }
            table_[a * num_roots_ + b] = Entry{*t, *ratio};
        }
    }
}

template class BlockOperator<Rational>;
template class BlockOperator<ModP>;
template class BlockOperator<ModQ>;
template class BasicHighestWeightModule<Rational>;
template class BasicHighestWeightModule<ModP>;
template class BasicHighestWeightModule<ModQ>;
template class BasicStructureConstants<Rational>;
template class BasicStructureConstants<ModP>;
template class BasicStructureConstants<ModQ>;

}  // namespace hcpair
