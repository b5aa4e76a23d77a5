#include "hcpair/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace hcpair {

namespace {

std::string valid_ranks(char series, std::size_t cap) {
    auto upto = [cap](std::size_t from) {
        return from > cap ? std::string("none under the rank cap")
                          : std::to_string(from) + ".." + std::to_string(cap);
    };
    switch (series) {
        case 'A': return upto(1);
        case 'B': return upto(2);
        case 'C': return upto(2);
        case 'D': return upto(4);
        case 'E': {
            std::string out;
            for (std::size_t r : {6u, 7u, 8u}) {
                if (r <= cap) out += (out.empty() ? "" : ", ") + std::to_string(r);
            }
            return out.empty() ? "none under the rank cap" : out;
        }
        case 'F': return cap >= 4 ? "4" : "none under the rank cap";
        case 'G': return cap >= 2 ? "2" : "none under the rank cap";
        default: return "";
    }
}

bool rank_is_valid(char series, std::size_t rank) {
    switch (series) {
        case 'A': return rank >= 1;
        case 'B':
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

[[noreturn]] void reject(char series, std::size_t rank, std::size_t cap) {
    const std::string type = std::string(1, series) + std::to_string(rank);
    if (std::string("ABCDEFG").find(series) == std::string::npos) {
        throw std::invalid_argument("unsupported type/rank " + type + ": series must be one of A,B,C,D,E,F,G");
    }
    throw std::invalid_argument("unsupported type/rank " + type + ": valid ranks for " + std::string(1, series) +
                                " are " + valid_ranks(series, cap));
}

struct CartanData {
    std::vector<int> cartan;
    std::vector<int> symmetrizer;
};

CartanData cartan_data(char series, std::size_t n) {
    CartanData out{std::vector<int>(n * n, 0), std::vector<int>(n, 1)};
    auto at = [&](std::size_t i, std::size_t j) -> int& { return out.cartan[i * n + j]; };
    auto link = [&](std::size_t i, std::size_t j) {  // 1-based simple edge
        at(i - 1, j - 1) = -1;
        at(j - 1, i - 1) = -1;
    };
    for (std::size_t i = 0; i < n; ++i) at(i, i) = 2;
    switch (series) {
        case 'A':
            for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
            at(n - 2, n - 1) = -1;
            at(n - 1, n - 2) = -2;
            for (std::size_t i = 0; i + 1 < n; ++i) out.symmetrizer[i] = 2;
            break;
        case 'C':
            for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
            at(n - 2, n - 1) = -2;
            at(n - 1, n - 2) = -1;
            out.symmetrizer[n - 1] = 2;
            break;
        case 'D':
            for (std::size_t i = 1; i + 2 < n; ++i) link(i, i + 1);
            link(n - 2, n - 1);
            link(n - 2, n);
            break;
        case 'E':
            link(1, 3);
            link(2, 4);
            for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
            break;
        case 'F':
            link(1, 2);
            at(1, 2) = -1;
            at(2, 1) = -2;
            link(3, 4);
            out.symmetrizer = {2, 2, 1, 1};
            break;
        case 'G':
            at(0, 1) = -3;
            at(1, 0) = -1;
            out.symmetrizer = {1, 3};
            break;
        default: break;
    }
    return out;
}

std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t out = 1;
    for (std::uint64_t k = 2; k <= n; ++k) out *= k;
    return out;
}

}  // namespace

int RootSystem::height(std::size_t idx) const {
    int h = 0;
    for (int c : simple_coords_[idx]) h += c;
    return h;
}

std::optional<std::size_t> RootSystem::root_index(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::is_positive_root(const Weight& w) const {
    auto idx = root_index(w);
    return idx && *idx < positive_.size();
}

Weight RootSystem::reflect(std::size_t i, const Weight& w) const {
    if (w.rank() != rank_) throw std::invalid_argument("reflect: rank mismatch");
    Weight out = w;
    const int k = w[i];
    if (k == 0) return out;
    const Weight& alpha = simple_root(i);
    for (std::size_t j = 0; j < rank_; ++j) out[j] -= k * alpha[j];
    return out;
}

std::int64_t RootSystem::pair_with_root_combination(const Weight& lambda, std::span<const int> c) const {
    std::int64_t out = 0;
    for (std::size_t j = 0; j < rank_; ++j) {
        out += static_cast<std::int64_t>(c[j]) * symmetrizer_[j] * lambda[j];
    }
    return out;
}

std::int64_t RootSystem::pair_with_positive_root(const Weight& lambda, std::size_t idx) const {
    return pair_with_root_combination(lambda, simple_coords_[idx]);
}

std::uint64_t RootSystem::weyl_order() const {
    const std::uint64_t n = rank_;
    switch (series_) {
        case 'A': return factorial(n + 1);
        case 'B':
        case 'C': return (std::uint64_t{1} << n) * factorial(n);
        case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
        case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        case 'F': return 1152;
        case 'G': return 12;
        default: return 0;
    }
}

RootSystem build_root_system(char series, std::size_t rank, const RootSystemLimits& limits) {
    series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
    const std::size_t cap = std::min(limits.max_rank, kMaxRank);
    if (!rank_is_valid(series, rank) || rank > cap) reject(series, rank, cap);

    RootSystem rs;
    rs.series_ = series;
    rs.rank_ = rank;
    auto data = cartan_data(series, rank);
    rs.cartan_ = std::move(data.cartan);
    rs.symmetrizer_ = std::move(data.symmetrizer);

    // Close the simple roots under simple reflections, in simple-root coordinates.
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (std::size_t i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<int> c = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < rank; ++i) {
            int pairing = 0;
            for (std::size_t j = 0; j < rank; ++j) pairing += rs.cartan(i, j) * c[j];
            std::vector<int> r = c;
            r[i] -= pairing;
            if (seen.insert(r).second) queue.push_back(std::move(r));
        }
    }
    std::vector<std::vector<int>> positive;
    for (const auto& c : seen) {
        if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) positive.push_back(c);
    }
    std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
        int ha = 0;
        int hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a > b;
    });

    for (const auto& c : positive) {
        Weight w(rank);
        for (std::size_t k = 0; k < rank; ++k) {
            for (std::size_t j = 0; j < rank; ++j) w[k] += rs.cartan(k, j) * c[j];
        }
        rs.positive_.push_back(w);
        rs.simple_coords_.push_back(c);
    }
    rs.full_ = rs.positive_;
    for (const auto& w : rs.positive_) rs.full_.push_back(-w);
    for (std::size_t i = 0; i < rs.full_.size(); ++i) {
        if (!rs.index_.emplace(rs.full_[i], i).second) {
            throw std::logic_error("root system construction produced a duplicate root");
        }
    }
    rs.rho_ = Weight(rank);
    for (std::size_t i = 0; i < rank; ++i) rs.rho_[i] = 1;
    return rs;
}

RootSystem build_root_system(const std::string& type, std::optional<std::size_t> rank,
                             const RootSystemLimits& limits) {
    if (type.empty()) throw std::invalid_argument("empty root system type");
    const char series = type[0];
    if (type.size() > 1) {
        std::size_t parsed = 0;
        try {
            std::size_t pos = 0;
            parsed = std::stoul(type.substr(1), &pos);
            if (pos + 1 != type.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed root system type '" + type + "'");
        }
        if (rank && *rank != parsed) {
            throw std::invalid_argument("type '" + type + "' conflicts with rank " + std::to_string(*rank));
        }
        return build_root_system(series, parsed, limits);
    }
    if (!rank) throw std::invalid_argument("root system type '" + type + "' needs a rank");
    return build_root_system(series, *rank, limits);
}

}  // namespace hcpair
