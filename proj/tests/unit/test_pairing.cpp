#include <gtest/gtest.h>

#include <random>

#include "hcpair/pairing.hpp"
#include "support.hpp"

using namespace hcpair;

namespace {

CharElement e(std::initializer_list<int> mu, int c = 1) { return CharElement::monomial(Weight(mu), c); }

// (1/|W|) CT(D * chi * conj(chi')), expanded as two full products.
Rational weyl_integral_oracle(const CharElement& a, const CharElement& b, const RootSystem& rs) {
    const CharElement integrand = weyl_denominator_full(rs) * a * ch_conjugate(b);
    return Rational(integrand.coefficient(rs.zero()), BigInt(rs.weyl_order()));
}

CharElement random_class(std::mt19937_64& rng, std::size_t rank, int terms) {
    CharElement out(rank);
    for (int t = 0; t < terms; ++t) out.add_term(support::random_weight(rng, rank, -4, 4), support::draw(rng, -3, 3));
    return out;
}

}  // namespace

TEST(Multiplicity, SpecExamplesA1) {
    const RootSystem a1 = build_root_system('A', 1);
    const auto ctx = compact_context(a1);
    const CharElement chi0 = weyl_character(Weight({0}), a1);
    const CharElement chi1 = weyl_character(Weight({1}), a1);
    const CharElement chi2 = weyl_character(Weight({2}), a1);
    EXPECT_EQ(multiplicity_pairing(chi0, chi0, *ctx).value, Rational(1));
    EXPECT_EQ(multiplicity_pairing(chi1, chi1, *ctx).value, Rational(1));
    EXPECT_EQ(multiplicity_pairing(chi1, chi2, *ctx).value, Rational(0));
}

TEST(Multiplicity, MatchesExpandedIntegralAndSchur) {
    for (const char* type : {"A2", "B2", "G2"}) {
        SCOPED_TRACE(type);
        const RootSystem rs = build_root_system(std::string(type));
        const auto ctx = compact_context(rs);
        const auto weights = support::dominant_box(2, 2);
        for (const Weight& l : weights) {
            const CharElement a = freudenthal_character(l, rs);
            for (const Weight& m : weights) {
                const CharElement b = freudenthal_character(m, rs);
                const Rational v = multiplicity_pairing(a, b, *ctx).value;
                EXPECT_EQ(v, weyl_integral_oracle(a, b, rs));
                EXPECT_EQ(v, Rational(l == m ? 1 : 0));
            }
        }
        // Tensor square of the first fundamental contains the trivial module once.
        const CharElement f = freudenthal_character(Weight({1, 0}), rs);
        const CharElement triv = CharElement::monomial(rs.zero());
        EXPECT_EQ(multiplicity_pairing(f * ch_conjugate(f), triv, *ctx).value, Rational(1));
    }
}

TEST(Multiplicity, RejectsNonInvariantAndNonCompact) {
    const RootSystem a1 = build_root_system('A', 1);
    EXPECT_THROW(multiplicity_pairing(e({1}), e({1}), *compact_context(a1)), std::invalid_argument);
    EXPECT_THROW(multiplicity_pairing(e({0}), e({0}), *sl2_context()), std::invalid_argument);
}

TEST(Elliptic, SpecExamples) {
    const RootSystem a1 = build_root_system('A', 1);
    const auto compact = compact_context(a1);
    const CharElement xi = e({-1}) - e({3});
    EXPECT_EQ(elliptic_pairing(xi, xi, *compact).value, Rational(1));
    const auto sl2 = sl2_context();
    for (int mu = -3; mu <= 3; ++mu) {
        EXPECT_EQ(elliptic_pairing(e({mu}, -1), e({mu}, -1), *sl2).value, Rational(1));
        EXPECT_EQ(elliptic_pairing(e({mu}, -1), e({mu + 1}, -1), *sl2).value, Rational(0));
    }
    const auto unequal = unequal_rank_context(a1, 1);
    const PairingValue z = elliptic_pairing(xi, xi, *unequal);
    EXPECT_EQ(z.value, Rational(0));
    EXPECT_FALSE(z.note.empty());
    EXPECT_THROW(elliptic_pairing(e({1, 0}), xi, *compact), std::invalid_argument);
}

TEST(Elliptic, DenominatorDividesW0Order) {
    const RootSystem b2 = build_root_system('B', 2);
    const auto ctx = compact_context(b2);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational v = elliptic_pairing(random_class(rng, 2, 4), random_class(rng, 2, 4), *ctx).value;
        EXPECT_EQ(8 % static_cast<int>(denominator(v)), 0);
        EXPECT_TRUE(is_integer(v * 8));
    }
}

TEST(Homological, SpecExamplesA1) {
    const RootSystem a1 = build_root_system('A', 1);
    const auto ctx = compact_context(a1);
    const GradedHomology h1 = koszul_n_homology(Weight({1}), ctx->positive_system(), a1);
    const GradedHomology h2 = koszul_n_homology(Weight({2}), ctx->positive_system(), a1);
    EXPECT_EQ(homological_pairing(h1, h1, *ctx).value, Rational(1));
    EXPECT_EQ(homological_pairing(h1, h2, *ctx).value, Rational(0));
    const GradedHomology empty(1, ctx->positive_system());
    EXPECT_EQ(homological_pairing(empty, h1, *ctx).value, Rational(0));

    const auto opposite = transported_positive_system(a1, WeylElement::simple_reflection(a1, 0));
    const GradedHomology other = koszul_n_homology(Weight({1}), opposite, a1);
    EXPECT_THROW(homological_pairing(h1, other, *ctx), std::invalid_argument);
}

TEST(Homological, AgreesWithEllipticOnRandomVirtualClasses) {
    for (const char* type : {"A2", "B2"}) {
        SCOPED_TRACE(type);
        const RootSystem rs = build_root_system(std::string(type));
        const auto ctx = compact_context(rs);
        KoszulSolver solver(rs);
        std::vector<GradedHomology> basis;
        for (const Weight& l : support::dominant_box(2, 1)) basis.push_back(solver.homology(l, ctx->positive_system()));
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            GradedHomology a(2, ctx->positive_system());
            GradedHomology b(2, ctx->positive_system());
            for (const auto& h : basis) {
                a.add_scaled(support::draw(rng, -3, 3), h);
                b.add_scaled(support::draw(rng, -3, 3), h);
            }
            EXPECT_EQ(homological_pairing(a, b, *ctx).value,
                      elliptic_pairing(euler_class(a), euler_class(b), *ctx).value);
        }
    }
}

TEST(ExtAbelian, SpecExamples) {
    EXPECT_EQ(ext_abelian_graded({0, 0}, 2), (std::vector<BigInt>{1, 2, 1}));
    EXPECT_EQ(ext_abelian_graded({Rational(1, 2)}, 1), (std::vector<BigInt>{0, 0}));
    EXPECT_EQ(ext_abelian_graded({}, 0), (std::vector<BigInt>{1}));
    EXPECT_THROW(ext_abelian_graded({1}, 2), std::invalid_argument);
}

TEST(ExtAbelian, BinomialAndVanishing) {
    std::mt19937_64 rng(13);
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto zero = ext_abelian_graded(std::vector<Rational>(d, Rational(0)), d);
        BigInt binom = 1;
        for (std::size_t p = 0; p <= d; ++p) {
            EXPECT_EQ(zero[p], binom);
            binom = binom * (d - p) / (p + 1);
        }
        EXPECT_EQ(alternating_sum(zero), 0);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> nu(d);
            for (auto& x : nu) x = Rational(support::draw(rng, -2, 2), support::draw(rng, 1, 3));
            if (std::all_of(nu.begin(), nu.end(), [](const Rational& x) { return x == 0; })) nu[0] = 1;
            const auto dims = ext_abelian_graded(nu, d);
            EXPECT_EQ(dims, std::vector<BigInt>(d + 1, 0));
            EXPECT_EQ(alternating_sum(dims), 0);
        }
    }
}

TEST(DenominatorSymmetry, AllElementsRankAtMostThree) {
    for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"}) {
        SCOPED_TRACE(type);
        const RootSystem rs = build_root_system(std::string(type));
        const WeylSubgroup w = enumerate_weyl_group(rs);
        for (const WeylElement& x : w.elements()) EXPECT_TRUE(check_denominator_symmetry(x, rs));
    }
    // A1 by hand: 1 - e^{-alpha} = -e^{-alpha}(1 - e^{alpha}).
    const RootSystem a1 = build_root_system('A', 1);
    EXPECT_EQ(half_denominator(a1, std::vector<Weight>{Weight({-2})}), ch_scale(-1, (e({0}) - e({2})).shifted(Weight({-2}))));
}

TEST(Antisym, ExamplesAndTransportAgainstKoszul) {
    const RootSystem a1 = build_root_system('A', 1);
    const auto c1 = compact_context(a1);
    const WeylElement s = WeylElement::simple_reflection(a1, 0);
    EXPECT_TRUE(check_antisym_i(e({0}) - e({2}), s, *c1));
    EXPECT_TRUE(check_antisym_i(e({0}) - e({2}), WeylElement::identity(a1), *c1));
    EXPECT_FALSE(check_antisym_i(e({0}) + e({2}), s, *c1));
    EXPECT_EQ(antisym_transport(e({0}) - e({2}), s, *c1), e({0}) - e({-2}));

    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        SCOPED_TRACE(type);
        const RootSystem rs = build_root_system(std::string(type));
        const auto ctx = compact_context(rs);
        KoszulSolver solver(rs);
        const WeylSubgroup w = enumerate_weyl_group(rs);
        for (const Weight& l : support::dominant_box(rs.rank(), 1)) {
            const CharElement xi = euler_class(solver.homology(l, ctx->positive_system()));
            for (const WeylElement& x : w.elements()) {
                EXPECT_TRUE(check_antisym_i(xi, x, *ctx));
                const CharElement direct = euler_class(solver.homology(l, transported_positive_system(rs, x)));
                EXPECT_EQ(antisym_transport(xi, x, *ctx), direct);
            }
        }
    }
}

TEST(DualClass, ExamplesAndInvolution) {
    const RootSystem a1 = build_root_system('A', 1);
    const auto ctx = compact_context(a1);
    EXPECT_EQ(dual_class(e({0}) - e({2}), *ctx), e({0}) - e({2}));
    EXPECT_EQ(dual_class(e({-1}) - e({3}), *ctx), e({-1}) - e({3}));

    std::mt19937_64 rng(99);
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        const RootSystem rs = build_root_system(std::string(type));
        const auto c = compact_context(rs);
        for (int trial = 0; trial < 100; ++trial) {
            const CharElement a = random_class(rng, rs.rank(), 5);
            const CharElement b = random_class(rng, rs.rank(), 5);
            EXPECT_EQ(dual_class(dual_class(a, *c), *c), a);
            EXPECT_EQ(elliptic_pairing(dual_class(a, *c), dual_class(b, *c), *c).value,
                      elliptic_pairing(b, a, *c).value);
        }
    }
    EXPECT_THROW(dual_class(e({0}), *unequal_rank_context(a1, 1)), std::invalid_argument);
}

TEST(DualClass, DualModuleHomology) {
    // The dual of V_lambda is V_{-w0 lambda}; its homology is the dual homology.
    const RootSystem a2 = build_root_system('A', 2);
    const auto ctx = compact_context(a2);
    const GradedHomology h = koszul_n_homology(Weight({2, 1}), ctx->positive_system(), a2);
    const GradedHomology dual = koszul_n_homology(Weight({1, 2}), ctx->positive_system(), a2);
    EXPECT_EQ(dual_homology(h, *ctx), dual);
    EXPECT_EQ(dual_class(euler_class(h), *ctx), euler_class(dual));
}

TEST(UnequalRank, BothRoutesGiveZero) {
    const RootSystem a1 = build_root_system('A', 1);
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto ctx = unequal_rank_context(a1, d);
        for (auto route : {UnequalRankRoute::short_circuit, UnequalRankRoute::abelian}) {
            const PairingValue v = pairing_unequal_rank(e({1}), e({1}), *ctx, route);
            EXPECT_EQ(v.value, Rational(0));
            EXPECT_FALSE(v.note.empty());
        }
        EXPECT_EQ(pairing_unequal_rank(CharElement(1), CharElement(1), *ctx).value, Rational(0));
        const GradedHomology h = koszul_n_homology(Weight({1}), ctx->positive_system(), a1);
        EXPECT_EQ(homological_pairing(h, h, *ctx).value, Rational(0));
    }
    EXPECT_THROW(pairing_unequal_rank(e({1}), e({1}), *compact_context(a1)), std::invalid_argument);
    EXPECT_THROW(unequal_rank_context(a1, 0), std::invalid_argument);
}

TEST(PairContext, Validation) {
    const RootSystem b2 = build_root_system('B', 2);
    const std::vector<Weight> bad = {b2.simple_root(0), b2.simple_root(1), b2.positive_roots()[2],
                                     -b2.positive_roots()[3]};
    EXPECT_THROW(compact_context(b2, bad), std::invalid_argument);
    EXPECT_THROW(custom_context(b2, b2.positive_roots(), {}, 5), std::invalid_argument);
    const auto c = custom_context(b2, b2.positive_roots(), {WeylElement::simple_reflection(b2, 0)}, 1);
    EXPECT_EQ(c->w0_order(), 2u);
    EXPECT_FALSE(c->is_compact());
    EXPECT_EQ(c->rho(), b2.rho());
    EXPECT_EQ(relative_length(enumerate_weyl_group(b2).longest(), b2.positive_roots()), 4u);
}
