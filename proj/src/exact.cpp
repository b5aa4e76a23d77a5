#include "hcpair/exact.hpp"

#include <numeric>
#include <stdexcept>

namespace hcpair {

std::string to_fraction_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    if (start == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
    }
    BigInt out(std::string(text.substr(start)));
    return text[0] == '-' ? BigInt(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

SparseIntVector to_primitive_integer(const SparseRationalVector& v) {
    BigInt lcm = 1;
    for (const auto& [idx, x] : v) {
        if (x != 0) lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(x)));
    }
    SparseIntVector out;
    out.reserve(v.size());
    BigInt content = 0;
    for (const auto& [idx, x] : v) {
        if (x == 0) continue;
        BigInt scaled = numerator(x) * (lcm / denominator(x));
        content = boost::multiprecision::gcd(content, scaled);
        out.emplace_back(idx, std::move(scaled));
    }
    if (content > 1) {
        for (auto& [idx, x] : out) x /= content;
    }
    return out;
}

namespace {

void make_primitive(SparseIntVector& v) {
    BigInt content = 0;
    for (const auto& [idx, x] : v) {
        content = boost::multiprecision::gcd(content, x);
        if (content == 1) return;
    }
    if (content > 1) {
        for (auto& [idx, x] : v) x /= content;
    }
}

// a*v - b*p, dropping zeros; both inputs sorted by index.
SparseIntVector combine(const BigInt& a, const SparseIntVector& v, const BigInt& b, const SparseIntVector& p) {
    SparseIntVector out;
    out.reserve(v.size() + p.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
            out.emplace_back(v[i].first, a * v[i].second);
            ++i;
        } else if (i == v.size() || p[j].first < v[i].first) {
            out.emplace_back(p[j].first, -(b * p[j].second));
            ++j;
        } else {
            BigInt x = a * v[i].second - b * p[j].second;
            if (x != 0) out.emplace_back(v[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool SparseEchelon::insert(SparseIntVector v) {
    while (!v.empty()) {
        const std::size_t lead = v.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            make_primitive(v);
            pivots_.emplace(lead, std::move(v));
            return true;
        }
        const SparseIntVector& p = it->second;
        BigInt g = boost::multiprecision::gcd(p.front().second, v.front().second);
        BigInt a = p.front().second / g;
        BigInt b = v.front().second / g;
        v = combine(a, v, b, p);
        make_primitive(v);
    }
    return false;
}

template <std::uint32_t P>
std::size_t rank_of(const std::vector<SparseVector<Fp<P>>>& vectors, std::size_t length) {
    // Pivot rows are monic at their lead and zero to its left; stored dense.
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::ptrdiff_t> row_at(length, -1);  // lead column -> pivot row
    std::vector<std::uint64_t> acc(length);
    constexpr std::size_t kFlush = 4000;
    for (const auto& v : vectors) {
        if (v.empty()) continue;
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [idx, x] : v) {
            if (idx >= length) throw std::out_of_range("rank_of: index beyond length");
            acc[idx] = x.value();
        }
        std::size_t pending = 0;
        for (std::size_t c = v.begin()->first; c < length; ++c) {
            const std::uint64_t x = acc[c] % P;
            if (x == 0) continue;
            if (row_at[c] < 0) {
                // New pivot: normalise the tail to be monic at c.
                const std::uint64_t inv = Fp<P>::from_raw(x).inverse().value();
                std::vector<std::uint32_t> row(length, 0);
                for (std::size_t k = c; k < length; ++k) row[k] = static_cast<std::uint32_t>((acc[k] % P) * inv % P);
                row_at[c] = static_cast<std::ptrdiff_t>(rows.size());
                rows.push_back(std::move(row));
                break;
            }
            const std::uint64_t g = P - x;  // acc += g * row kills column c
            const std::uint32_t* row = rows[static_cast<std::size_t>(row_at[c])].data();
            std::uint64_t* a = acc.data();
            for (std::size_t k = c; k < length; ++k) a[k] += g * row[k];
            if (++pending == kFlush) {
                for (std::size_t k = c; k < length; ++k) a[k] %= P;
                pending = 0;
            }
        }
        if (rows.size() == length) break;
    }
    return rows.size();
}

template std::size_t rank_of<ModP::kPrime>(const std::vector<SparseVector<ModP>>&, std::size_t);
template std::size_t rank_of<ModQ::kPrime>(const std::vector<SparseVector<ModQ>>&, std::size_t);

std::size_t rank_of(const std::vector<SparseRationalVector>& vectors) {
    SparseEchelon echelon;
    for (const auto& v : vectors) echelon.insert(to_primitive_integer(v));
    return echelon.rank();
}

}  // namespace hcpair
