#pragma once

// Exact scalar types and the small amount of exact linear algebra the
// engine needs: dense row reduction (module construction) and sparse rank
// (boundary maps of chain complexes), over Q and over the prime field F_p.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcpair {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" text form (q >= 1, always present).
std::string to_fraction_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

/// Element of the prime field F_P. P < 2^26 keeps products below 2^52, so
/// 4096 of them can be summed in 64 bits before reducing.
template <std::uint32_t P>
class Fp {
    static_assert(P > 3 && P < (std::uint32_t{1} << 26));

public:
    static constexpr std::uint32_t kPrime = P;

    constexpr Fp() = default;
    constexpr Fp(std::int64_t x)  // NOLINT: integers embed implicitly, like they do in Rational
        : v_(static_cast<std::uint32_t>(x >= 0 ? static_cast<std::uint64_t>(x) % P
                                              : (P - static_cast<std::uint64_t>(-(x + 1)) % P - 1) % P)) {}

    static constexpr Fp from_raw(std::uint64_t v) {
        Fp out;
        out.v_ = static_cast<std::uint32_t>(v % P);
        return out;
    }
    constexpr std::uint32_t value() const { return v_; }

    friend constexpr Fp operator+(Fp a, Fp b) { return from_raw(std::uint64_t{a.v_} + b.v_); }
    friend constexpr Fp operator-(Fp a, Fp b) { return from_raw(std::uint64_t{a.v_} + P - b.v_); }
    constexpr Fp operator-() const { return from_raw(P - v_); }
    friend constexpr Fp operator*(Fp a, Fp b) { return from_raw(std::uint64_t{a.v_} * b.v_); }
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        Fp base = *this;
        Fp out = 1;
        for (std::uint32_t e = P - 2; e != 0; e >>= 1) {
            if (e & 1) out *= base;
            base *= base;
        }
        return out;
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

private:
    std::uint32_t v_ = 0;
};

// The two largest primes below 2^26.
using ModP = Fp<67108859>;
using ModQ = Fp<67108837>;

template <class T>
inline constexpr bool is_prime_field_v = false;
template <std::uint32_t P>
inline constexpr bool is_prime_field_v<Fp<P>> = true;

/// Reduction of a rational modulo P; nullopt when P divides the denominator.
template <std::uint32_t P>
std::optional<Fp<P>> reduce_mod(const Rational& x) {
    auto reduce = [](const BigInt& n) {
        BigInt r = n % P;
        if (r < 0) r += P;
        return Fp<P>::from_raw(static_cast<std::uint64_t>(r));
    };
    const Fp<P> den = reduce(denominator(x));
    if (den == Fp<P>(0)) return std::nullopt;
    return reduce(numerator(x)) / den;
}

/// Dense row-major matrix over a field F (Rational or ModP).
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (x != F(0)) return false;
        }
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik == F(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) != F(0)) out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
        return out;
    }
    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.data_) x = -x;
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

using QMatrix = Matrix<Rational>;
using ModMatrix = Matrix<ModP>;

/// Reduced row echelon form. `pivots[k]` is the column of the k-th pivot
/// row; rows past pivots.size() are zero.
template <class F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
};

template <class F>
RowEchelon<F> reduced_row_echelon(Matrix<F> m) {
    RowEchelon<F> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pick = row;
        while (pick < m.rows() && m(pick, col) == F(0)) ++pick;
        if (pick == m.rows()) continue;
        if (pick != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));
        }
        const F inv = F(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == F(0)) continue;
            const F factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (m(row, c) != F(0)) m(r, c) -= factor * m(row, c);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

/// Sparse vector keyed by index; zero entries are never stored.
template <class F>
using SparseVector = std::map<std::size_t, F>;
using SparseRationalVector = SparseVector<Rational>;

/// Sparse vector with strictly increasing indices and nonzero entries.
using SparseIntVector = std::vector<std::pair<std::size_t, BigInt>>;

/// Clears denominators; the result spans the same line.
SparseIntVector to_primitive_integer(const SparseRationalVector& v);

/// Incremental echelon basis over Z using fraction-free elimination.
/// Each inserted vector is reduced against the stored pivots; a nonzero
/// remainder becomes a new pivot. Stored vectors are kept primitive.
class SparseEchelon {
public:
    /// Returns true if `v` was independent of everything inserted so far.
    bool insert(SparseIntVector v);
    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<std::size_t, SparseIntVector> pivots_;  // keyed by leading index
};

std::size_t rank_of(const std::vector<SparseRationalVector>& vectors);

/// Rank over F_P of vectors with indices below `length`, by dense left-looking
/// elimination with delayed reduction.
template <std::uint32_t P>
std::size_t rank_of(const std::vector<SparseVector<Fp<P>>>& vectors, std::size_t length);

}  // namespace hcpair
