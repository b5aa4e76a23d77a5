#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hcpair/weyl_group.hpp"
#include "support.hpp"

using namespace hcpair;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Classical orders.
std::uint64_t table_order(char series, std::size_t n) {
    switch (series) {
        case 'A': return factorial(n + 1);
        case 'B':
        case 'C': return (std::uint64_t{1} << n) * factorial(n);
        case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
        case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        case 'F': return 1152;
        default: return 12;
    }
}

// Independent oracle: closure of the simple-reflection matrices under
// multiplication, using plain integer matrices.
std::set<std::vector<int>> brute_force_group(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    std::vector<std::vector<int>> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(WeylElement::simple_reflection(rs, i).matrix());
    auto mul = [n](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
            }
        }
        return c;
    };
    std::set<std::vector<int>> seen{WeylElement::identity(rs).matrix()};
    std::vector<std::vector<int>> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        auto m = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            auto p = mul(m, g);
            if (seen.insert(p).second) todo.push_back(p);
        }
    }
    return seen;
}

}  // namespace

TEST(WeylGroup, SpecExamples) {
    EXPECT_EQ(enumerate_weyl_group(build_root_system('A', 1)).order(), 2u);
    EXPECT_EQ(enumerate_weyl_group(build_root_system('A', 2)).order(), 6u);
    EXPECT_EQ(enumerate_weyl_group(build_root_system('B', 2)).order(), 8u);
}

TEST(WeylGroup, OrdersMatchClassicalFormulasAndBruteForce) {
    const std::vector<std::pair<char, std::size_t>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
                                                             {'C', 2}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}};
    for (auto [series, n] : types) {
        SCOPED_TRACE(std::string(1, series) + std::to_string(n));
        const RootSystem rs = build_root_system(series, n);
        const WeylSubgroup w = enumerate_weyl_group(rs);
        EXPECT_EQ(w.order(), table_order(series, n));
        EXPECT_EQ(rs.weyl_order(), table_order(series, n));
        if (w.order() <= 1152) {
            std::set<std::vector<int>> mine;
            for (const auto& x : w.elements()) mine.insert(x.matrix());
            EXPECT_EQ(mine, brute_force_group(rs));
        }
    }
    EXPECT_EQ(build_root_system('E', 8).weyl_order(), 696729600u);
}

TEST(WeylGroup, CapIsExplicit) {
    const RootSystem e8 = build_root_system('E', 8);
    try {
        enumerate_weyl_group(e8);
        FAIL() << "E8 enumeration should exceed the default cap";
    } catch (const CapExceeded& e) {
        EXPECT_NE(std::string(e.what()).find("group too large"), std::string::npos);
    }
    EXPECT_THROW(enumerate_weyl_group(build_root_system('B', 3), 47), CapExceeded);
    EXPECT_EQ(enumerate_weyl_group(build_root_system('B', 3), 48).order(), 48u);
}

TEST(WeylGroup, ElementInvariants) {
    for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
        SCOPED_TRACE(type);
        const RootSystem rs = build_root_system(std::string(type));
        const WeylSubgroup w = enumerate_weyl_group(rs);
        EXPECT_TRUE(w.elements()[0].is_identity());
        EXPECT_EQ(w.elements()[0].length(), 0u);
        EXPECT_EQ(w.elements()[0].sign(), 1);
        std::size_t longest = 0;
        for (const WeylElement& x : w.elements()) {
            // sign = det = (-1)^length; length = reduced word length.
            EXPECT_EQ(x.sign(), x.determinant());
            EXPECT_EQ(x.reduced_word().size(), x.length());
            EXPECT_EQ(WeylElement::from_word(rs, x.reduced_word()), x);
            // Length counts inversions.
            std::size_t inversions = 0;
            for (const Weight& alpha : rs.positive_roots()) {
                if (!rs.is_positive_root(x.act(alpha))) ++inversions;
            }
            EXPECT_EQ(inversions, x.length());
            // Matrix permutes the roots.
            std::set<Weight> image;
            for (const Weight& alpha : rs.full_roots()) image.insert(x.act(alpha));
            EXPECT_EQ(image, std::set<Weight>(rs.full_roots().begin(), rs.full_roots().end()));
            // rho_shift two ways.
            EXPECT_EQ(rho_shift(x, rs), rs.rho() - x.act(rs.rho()));
            // inverse
            EXPECT_TRUE(compose(rs, x, inverse(rs, x)).is_identity());
            EXPECT_EQ(inverse(rs, x).length(), x.length());
            longest = std::max(longest, x.length());
        }
        EXPECT_EQ(longest, rs.num_positive());
        EXPECT_EQ(w.longest().length(), rs.num_positive());
        EXPECT_EQ(w.longest().act(rs.rho()), -rs.rho());
    }
}

TEST(WeylGroup, ActionIsLinearAndCompatibleWithComposition) {
    const RootSystem rs = build_root_system('B', 3);
    const WeylSubgroup w = enumerate_weyl_group(rs);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const WeylElement& a = w.elements()[support::draw(rng, 0, 47)];
        const WeylElement& b = w.elements()[support::draw(rng, 0, 47)];
        const Weight mu = support::random_weight(rng, 3, -4, 4);
        const Weight nu = support::random_weight(rng, 3, -4, 4);
        EXPECT_EQ(act(a, mu + nu), act(a, mu) + act(a, nu));
        EXPECT_EQ(compose(rs, a, b).act(mu), a.act(b.act(mu)));
        EXPECT_EQ(WeylElement::identity(rs).act(mu), mu);
        EXPECT_TRUE(w.contains(compose(rs, a, b)));
    }
    EXPECT_THROW(w.elements()[1].act(Weight({1, 2})), std::invalid_argument);
}

TEST(WeylGroup, RhoShiftExamples) {
    const RootSystem a1 = build_root_system('A', 1);
    EXPECT_EQ(rho_shift(WeylElement::simple_reflection(a1, 0), a1), Weight({2}));
    const RootSystem a2 = build_root_system('A', 2);
    const WeylElement s1 = WeylElement::simple_reflection(a2, 0);
    EXPECT_EQ(rho_shift(s1, a2), a2.simple_root(0));
    EXPECT_EQ(rho_shift(WeylElement::identity(a2), a2), a2.zero());
    EXPECT_EQ(rho_shift(enumerate_weyl_group(a2).longest(), a2), 2 * a2.rho());
}

TEST(WeylGroup, FromMatrixValidates) {
    const RootSystem a2 = build_root_system('A', 2);
    EXPECT_THROW(WeylElement::from_matrix(a2, {1, 0, 0, 2}), std::invalid_argument);
    EXPECT_THROW(WeylElement::from_matrix(a2, {1, 0}), std::invalid_argument);
    // -1 permutes the roots of A2 but is not in W(A2).
    EXPECT_THROW(WeylElement::from_matrix(a2, {-1, 0, 0, -1}), std::invalid_argument);
    const WeylElement s = WeylElement::simple_reflection(a2, 1);
    EXPECT_EQ(WeylElement::from_matrix(a2, s.matrix()), s);
}

TEST(WeylSubgroup, GeneratedSubgroups) {
    const RootSystem b2 = build_root_system('B', 2);
    const WeylSubgroup trivial = WeylSubgroup::trivial(b2);
    EXPECT_EQ(trivial.order(), 1u);
    const WeylSubgroup one = WeylSubgroup::generated_by(b2, {WeylElement::simple_reflection(b2, 0)});
    EXPECT_EQ(one.order(), 2u);
    const WeylSubgroup all = WeylSubgroup::generated_by(
        b2, {WeylElement::simple_reflection(b2, 0), WeylElement::simple_reflection(b2, 1)});
    EXPECT_EQ(all.order(), 8u);
    for (const auto& x : all.elements()) {
        EXPECT_TRUE(all.contains(inverse(b2, x)));
        for (const auto& y : all.elements()) EXPECT_TRUE(all.contains(compose(b2, x, y)));
    }
    EXPECT_THROW(WeylSubgroup::generated_by(
                     b2, {WeylElement::simple_reflection(b2, 0), WeylElement::simple_reflection(b2, 1)}, 7),
                 CapExceeded);
}
