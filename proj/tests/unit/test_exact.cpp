#include <gtest/gtest.h>

#include <random>

#include "hcpair/exact.hpp"
#include "support.hpp"

using namespace hcpair;

TEST(Rational, FractionStringAlwaysCarriesDenominator) {
    EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
    EXPECT_EQ(to_fraction_string(Rational(-6, 4)), "-3/2");
    EXPECT_EQ(to_fraction_string(Rational(0)), "0/1");
}

TEST(Rational, ParseRoundTrip) {
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
    EXPECT_EQ(parse_rational(to_fraction_string(Rational(22, 7))), Rational(22, 7));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_THROW(parse_rational("3/"), std::invalid_argument);
}

TEST(PrimeField, AgreesWithIntegerArithmetic) {
    std::mt19937_64 rng(11);
    const BigInt p = ModP::kPrime;
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t a = support::draw(rng, -1'000'000'000, 1'000'000'000);
        const std::int64_t b = support::draw(rng, -1'000'000'000, 1'000'000'000);
        auto canon = [&](BigInt x) {
            x %= p;
            if (x < 0) x += p;
            return static_cast<std::uint64_t>(x);
        };
        EXPECT_EQ((ModP(a) * ModP(b)).value(), canon(BigInt(a) * b));
        EXPECT_EQ((ModP(a) + ModP(b)).value(), canon(BigInt(a) + b));
        EXPECT_EQ((ModP(a) - ModP(b)).value(), canon(BigInt(a) - b));
        if (ModP(b) != ModP(0)) EXPECT_EQ((ModP(a) / ModP(b)) * ModP(b), ModP(a));
    }
    EXPECT_EQ(ModP(std::numeric_limits<std::int64_t>::min()).value(),
              static_cast<std::uint64_t>(((BigInt(std::numeric_limits<std::int64_t>::min()) % p) + p) % p));
    EXPECT_THROW(ModP(0).inverse(), std::domain_error);
}

TEST(PrimeField, ReductionOfRationals) {
    auto r = reduce_mod<ModP::kPrime>(Rational(1, 3));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * ModP(3), ModP(1));
    EXPECT_FALSE(reduce_mod<ModP::kPrime>(Rational(1, ModP::kPrime)));
}

TEST(RowEchelon, ReducedFormAndPivots) {
    QMatrix m(3, 4);
    const int entries[3][4] = {{1, 2, 0, 3}, {2, 4, 1, 7}, {3, 6, 1, 10}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 4; ++j) m(i, j) = entries[i][j];
    }
    const auto e = reduced_row_echelon(m);
    ASSERT_EQ(e.pivots, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(e.reduced(0, 1), Rational(2));
    EXPECT_EQ(e.reduced(0, 3), Rational(3));
    EXPECT_EQ(e.reduced(1, 3), Rational(1));
    for (int j = 0; j < 4; ++j) EXPECT_EQ(e.reduced(2, j), Rational(0));
}

namespace {

// Rank by dense rational elimination: the oracle for both sparse routes.
std::size_t dense_rank(const std::vector<SparseRationalVector>& vs, std::size_t length) {
    QMatrix m(vs.size(), length);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (const auto& [j, x] : vs[i]) m(i, j) = x;
    }
    return reduced_row_echelon(m).pivots.size();
}

}  // namespace

TEST(SparseRank, IntegerAndModularRoutesMatchDenseOracle) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = support::draw(rng, 1, 9);
        const std::size_t length = support::draw(rng, 1, 9);
        // Low-rank products make dependencies common.
        const std::size_t inner = support::draw(rng, 1, 4);
        std::vector<std::vector<int>> a(rows, std::vector<int>(inner));
        std::vector<std::vector<int>> b(inner, std::vector<int>(length));
        for (auto& row : a) {
            for (int& x : row) x = support::draw(rng, -3, 3);
        }
        for (auto& row : b) {
            for (int& x : row) x = support::draw(rng, -3, 3);
        }
        std::vector<SparseRationalVector> vs(rows);
        std::vector<SparseVector<ModP>> ms(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < length; ++j) {
                int x = 0;
                for (std::size_t k = 0; k < inner; ++k) x += a[i][k] * b[k][j];
                if (x == 0) continue;
                vs[i][j] = Rational(x, support::draw(rng, 1, 3));
                ms[i][j] = *reduce_mod<ModP::kPrime>(vs[i][j]);
            }
        }
        const std::size_t expected = dense_rank(vs, length);
        EXPECT_EQ(rank_of(vs), expected);
        EXPECT_EQ(rank_of(ms, length), expected);
    }
}

TEST(SparseRank, ModularRankDropsOnlyWhenPrimeDivides) {
    std::vector<SparseVector<ModP>> vs(2);
    vs[0][0] = 1;
    vs[0][1] = 1;
    vs[1][0] = 1;
    vs[1][1] = ModP(1 + static_cast<std::int64_t>(ModP::kPrime));  // = 1 mod p
    EXPECT_EQ(rank_of(vs, 2), 1u);
    EXPECT_THROW(rank_of(vs, 1), std::out_of_range);
}
