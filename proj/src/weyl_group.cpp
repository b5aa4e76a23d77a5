#include "hcpair/weyl_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hcpair {

namespace {

std::vector<int> multiply(std::size_t n, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const int aik = a[i * n + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
        }
    }
    return out;
}

std::vector<int> identity_matrix(std::size_t n) {
    std::vector<int> out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) out[i * n + i] = 1;
    return out;
}

std::vector<int> reflection_matrix(const RootSystem& rs, std::size_t i) {
    const std::size_t n = rs.rank();
    std::vector<int> m = identity_matrix(n);
    const Weight& alpha = rs.simple_root(i);
    for (std::size_t k = 0; k < n; ++k) m[k * n + i] -= alpha[k];
    return m;
}

Weight apply(std::size_t n, const std::vector<int>& m, const Weight& mu) {
    Weight out(n);
    for (std::size_t k = 0; k < n; ++k) {
        int acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += m[k * n + j] * mu[j];
        out[k] = acc;
    }
    return out;
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
    WeylElement w;
    w.rank_ = rs.rank();
    w.matrix_ = identity_matrix(rs.rank());
    return w;
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, std::size_t i) {
    if (i >= rs.rank()) throw std::invalid_argument("simple reflection index out of range");
    WeylElement w;
    w.rank_ = rs.rank();
    w.matrix_ = reflection_matrix(rs, i);
    w.length_ = 1;
    w.word_ = {i};
    return w;
}

WeylElement WeylElement::from_matrix(const RootSystem& rs, std::vector<int> matrix) {
    const std::size_t n = rs.rank();
    if (matrix.size() != n * n) throw std::invalid_argument("Weyl element matrix has wrong size");
    WeylElement w;
    w.rank_ = n;
    w.matrix_ = std::move(matrix);

    std::vector<bool> hit(rs.full_roots().size(), false);
    for (const Weight& alpha : rs.full_roots()) {
        auto idx = rs.root_index(w.act(alpha));
        if (!idx || hit[*idx]) throw std::invalid_argument("matrix does not permute the roots");
        hit[*idx] = true;
    }
    for (const Weight& alpha : rs.positive_roots()) {
        if (!rs.is_positive_root(w.act(alpha))) ++w.length_;
    }
    // Descend w(rho) into the dominant chamber to read off a reduced word.
    Weight v = w.act(rs.rho());
    for (;;) {
        std::size_t i = 0;
        while (i < n && v[i] >= 0) ++i;
        if (i == n) break;
        v = rs.reflect(i, v);
        w.word_.push_back(i);
    }
    if (w.word_.size() != w.length_) throw std::invalid_argument("matrix is not a Weyl group element");
    // Root permutations outside W (diagram automorphisms, -1) still reach rho;
    // the word has to reproduce the matrix.
    if (v != rs.rho()) throw std::invalid_argument("matrix is not a Weyl group element");
    std::vector<int> rebuilt = identity_matrix(n);
    for (std::size_t i : w.word_) rebuilt = multiply(n, rebuilt, reflection_matrix(rs, i));
    if (rebuilt != w.matrix_) throw std::invalid_argument("matrix is not a Weyl group element");
    return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const std::size_t> word) {
    std::vector<int> m = identity_matrix(rs.rank());
    for (std::size_t i : word) {
        if (i >= rs.rank()) throw std::invalid_argument("simple reflection index out of range in word");
        m = multiply(rs.rank(), m, reflection_matrix(rs, i));
    }
    return from_matrix(rs, std::move(m));
}

Weight WeylElement::act(const Weight& mu) const {
    if (mu.rank() != rank_) throw std::invalid_argument("act: rank mismatch");
    return apply(rank_, matrix_, mu);
}

long long WeylElement::determinant() const {
    // Bareiss on a copy; entries stay integral.
    const std::size_t n = rank_;
    std::vector<long long> a(matrix_.begin(), matrix_.end());
    long long sign = 1;
    long long prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p * n + k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
        }
        prev = a[k * n + k];
    }
    return sign * a[n * n - 1];
}

bool WeylElement::is_identity() const { return matrix_ == identity_matrix(rank_); }

Weight act(const WeylElement& w, const Weight& mu) { return w.act(mu); }

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
    if (a.rank() != rs.rank() || b.rank() != rs.rank()) throw std::invalid_argument("compose: rank mismatch");
    return WeylElement::from_matrix(rs, multiply(rs.rank(), a.matrix(), b.matrix()));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
    std::vector<std::size_t> word(w.reduced_word().rbegin(), w.reduced_word().rend());
    return WeylElement::from_word(rs, word);
}

Weight rho_shift(const WeylElement& w, const RootSystem& rs) {
    if (w.rank() != rs.rank()) throw std::invalid_argument("rho_shift: rank mismatch");
    const WeylElement winv = inverse(rs, w);
    Weight out = rs.zero();
    for (const Weight& alpha : rs.positive_roots()) {
        if (!rs.is_positive_root(winv.act(alpha))) out += alpha;
    }
    return out;
}

std::size_t MatrixHash::operator()(const std::vector<int>& m) const noexcept {
    std::size_t h = m.size();
    for (int x : m) h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    return h;
}

void WeylSubgroup::add(WeylElement w) {
    index_.emplace(w.matrix(), elements_.size());
    elements_.push_back(std::move(w));
}

std::size_t WeylSubgroup::index_of(const WeylElement& w) const {
    auto it = index_.find(w.matrix());
    if (it == index_.end()) throw std::invalid_argument("element not in subgroup");
    return it->second;
}

const WeylElement& WeylSubgroup::longest() const {
    return *std::max_element(elements_.begin(), elements_.end(),
                             [](const WeylElement& a, const WeylElement& b) { return a.length() < b.length(); });
}

WeylSubgroup WeylSubgroup::trivial(const RootSystem& rs) {
    WeylSubgroup g;
    g.add(WeylElement::identity(rs));
    return g;
}

WeylSubgroup WeylSubgroup::generated_by(const RootSystem& rs, const std::vector<WeylElement>& generators,
                                        std::uint64_t cap) {
    WeylSubgroup g;
    g.add(WeylElement::identity(rs));
    for (const auto& gen : generators) {
        if (gen.rank() != rs.rank()) throw std::invalid_argument("subgroup generator has wrong rank");
        // Re-validate against this root system.
        g.generators_.push_back(WeylElement::from_matrix(rs, gen.matrix()));
    }
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        for (const auto& gen : g.generators_) {
            std::vector<int> m = multiply(rs.rank(), g.elements_[idx].matrix(), gen.matrix());
            if (g.index_.contains(m)) continue;
            if (g.elements_.size() >= cap) {
                throw CapExceeded("group too large: subgroup exceeds cap " + std::to_string(cap));
            }
            g.add(WeylElement::from_matrix(rs, std::move(m)));
            queue.push_back(g.elements_.size() - 1);
        }
    }
    return g;
}

WeylSubgroup enumerate_weyl_group(const RootSystem& rs, std::uint64_t cap) {
    const std::uint64_t predicted = rs.weyl_order();
    if (predicted > cap) {
        throw CapExceeded("group too large: |W(" + rs.name() + ")| = " + std::to_string(predicted) +
                          " exceeds cap " + std::to_string(cap));
    }
    const std::size_t n = rs.rank();
    std::vector<std::vector<int>> reflections;
    for (std::size_t i = 0; i < n; ++i) reflections.push_back(reflection_matrix(rs, i));

    WeylSubgroup g;
    g.add(WeylElement::identity(rs));
    for (std::size_t i = 0; i < n; ++i) g.generators_.push_back(WeylElement::simple_reflection(rs, i));
    // Left multiplication by s_i; the first discovery depth is the length.
    std::size_t frontier_begin = 0;
    while (frontier_begin < g.elements_.size()) {
        const std::size_t frontier_end = g.elements_.size();
        for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx) {
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<int> m = multiply(n, reflections[i], g.elements_[idx].matrix());
                if (g.index_.contains(m)) continue;
                WeylElement w;
                w.rank_ = n;
                w.matrix_ = std::move(m);
                w.length_ = g.elements_[idx].length() + 1;
                w.word_.reserve(w.length_);
                w.word_.push_back(i);
                const auto& parent = g.elements_[idx].reduced_word();
                w.word_.insert(w.word_.end(), parent.begin(), parent.end());
                g.add(std::move(w));
            }
        }
        frontier_begin = frontier_end;
    }
    if (g.elements_.size() != predicted) {
        throw std::logic_error("Weyl group enumeration disagrees with the order formula");
    }
    return g;
}

}  // namespace hcpair
