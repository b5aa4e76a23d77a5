#include <gtest/gtest.h>

#include <random>

#include "hcpair/serialize.hpp"
#include "hcpair/zoo.hpp"
#include "support.hpp"

using namespace hcpair;

namespace {

CharElement e(std::initializer_list<int> mu, int c = 1) { return CharElement::monomial(Weight(mu), c); }

// A random equal-rank context of rank <= 2 together with a closed datum: random
// positive system, W0 generated by up to two random elements, s between the
// longest relative length on W0 and |R^+|.
GeometricDatum random_closed_datum(std::mt19937_64& rng) {
    static const char* types[] = {"A1", "A2", "B2", "G2"};
    const RootSystem rs = build_root_system(std::string(types[support::draw(rng, 0, 3)]));
    const WeylSubgroup w = enumerate_weyl_group(rs);
    const auto pick = [&] { return w.elements()[support::draw(rng, 0, static_cast<int>(w.order()) - 1)]; };
    const auto ps = transported_positive_system(rs, pick());
    std::vector<WeylElement> gens;
    for (int k = support::draw(rng, 0, 2); k > 0; --k) gens.push_back(pick());
    const WeylSubgroup w0 = WeylSubgroup::generated_by(rs, gens);
    std::size_t longest = 0;
    for (const auto& x : w0.elements()) longest = std::max(longest, relative_length(x, ps));
    const int s = support::draw(rng, static_cast<int>(longest), static_cast<int>(rs.num_positive()));
    const auto ctx = custom_context(rs, ps, gens, s);
    return {true, support::random_weight(rng, rs.rank(), -3, 3), s, ctx};
}

}  // namespace

TEST(CompactIrreducible, SpecExamples) {
    const RootSystem a1 = build_root_system('A', 1);
    const auto c1 = compact_context(a1);
    EXPECT_EQ(compact_irreducible(Weight({0}), c1).euler(), e({0}) - e({2}));
    EXPECT_EQ(compact_irreducible(Weight({1}), c1).euler(), e({-1}) - e({3}));
    const RootSystem a2 = build_root_system('A', 2);
    const auto c2 = compact_context(a2);
    const VirtualModule v = compact_irreducible(Weight({1, 0}), c2);
    EXPECT_EQ(v.euler().size(), 6u);
    EXPECT_EQ(v.euler(), half_denominator(a2) * weyl_character(Weight({1, 0}), a2));
    EXPECT_EQ(v.provenance(), Provenance::compact_irreducible);
    EXPECT_THROW(compact_irreducible(Weight({-1, 0}), c2), std::invalid_argument);
    EXPECT_THROW(compact_irreducible(Weight({1}), sl2_context()), std::invalid_argument);
}

TEST(StandardClass, CompactPresetReproducesIrreducibles) {
    // W0 = W, s = |R^+|, V = w0 lambda: the closed-orbit formula and its degree
    // model reproduce the Koszul homology of V_lambda.
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        SCOPED_TRACE(type);
        const RootSystem rs = build_root_system(std::string(type));
        const auto ctx = compact_context(rs);
        const WeylElement& w0 = ctx->w0().longest();
        for (const Weight& l : support::dominant_box(rs.rank(), 1)) {
            const VirtualModule irr = compact_irreducible(l, ctx);
            const VirtualModule std_class = standard_module_class({true, w0.act(l), ctx->orbit_dim(), ctx});
            EXPECT_EQ(std_class.euler(), irr.euler());
            ASSERT_TRUE(std_class.homology());
            EXPECT_EQ(*std_class.homology(), *irr.homology());
        }
    }
}

TEST(StandardClass, Sl2Examples) {
    const auto ctx = sl2_context();
    const VirtualModule ds = standard_module_class({true, Weight({2}), 0, ctx});
    EXPECT_EQ(ds.euler(), e({2}, -1));
    ASSERT_TRUE(ds.homology());
    EXPECT_EQ(ds.homology()->degree(1), e({2}));
    const VirtualModule open = standard_module_class({false, Weight({2}), 0, ctx});
    EXPECT_TRUE(open.euler().is_zero());
    EXPECT_EQ(open.provenance(), Provenance::standard_open);
    EXPECT_THROW(standard_module_class({true, Weight({2}), 1, ctx}), std::invalid_argument);

    // Both dual routes give +e^{2 rho - mu}.
    const VirtualModule dual = dual_standard_class({true, Weight({2}), 0, ctx});
    EXPECT_EQ(dual.euler(), e({0}));
    EXPECT_EQ(dual_class(ds.euler(), *ctx), dual.euler());
    EXPECT_TRUE(dual_standard_class({false, Weight({2}), 0, ctx}).euler().is_zero());
}

TEST(StandardClass, DualRoutesAgreeOnRandomClosedData) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const GeometricDatum d = random_closed_datum(rng);
        const VirtualModule m = standard_module_class(d);
        const VirtualModule dual = dual_standard_class(d);
        EXPECT_EQ(dual.euler(), dual_class(m.euler(), *d.ctx));
        EXPECT_EQ(dual_class(dual.euler(), *d.ctx), m.euler());
        ASSERT_TRUE(m.homology());
        EXPECT_EQ(pair(m, m, PairingKind::homological).value, pair(m, m, PairingKind::elliptic).value);
        EXPECT_EQ(pair(dual, m, PairingKind::homological).value, pair(dual, m, PairingKind::elliptic).value);
        for (const WeylElement& w : d.ctx->w0().elements()) EXPECT_TRUE(check_antisym_i(m.euler(), w, *d.ctx));
        // Genuine classes pair to an integer.
        EXPECT_TRUE(is_integer(pair(m, dual, PairingKind::elliptic).value));
    }
}

TEST(StandardClass, ModelAbsentWhenLengthExceedsS) {
    const RootSystem a2 = build_root_system('A', 2);
    const auto ctx = custom_context(a2, a2.positive_roots(), {enumerate_weyl_group(a2).longest()}, 0);
    const VirtualModule m = standard_module_class({true, Weight({1, 0}), 0, ctx});
    EXPECT_FALSE(m.homology());
    EXPECT_FALSE(m.note().empty());
    EXPECT_EQ(m.euler().size(), 2u);
}

TEST(Sl2Presets, DiscreteSeriesOrthogonality) {
    const Catalog cat = sl2_catalog(-3, 3);
    ASSERT_EQ(cat.modules.size(), 8u);
    EXPECT_EQ(cat.modules.front().label(), "DS-3");
    EXPECT_EQ(cat.modules[3].label(), "DS+0");
    EXPECT_EQ(cat.modules.back().label(), "PS");
    for (PairingKind kind : {PairingKind::elliptic, PairingKind::homological}) {
        const auto m = pairing_matrix(cat, kind);
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t b = 0; b < m.size(); ++b) {
                const bool closed = a < 7 && b < 7;
                EXPECT_EQ(m[a][b].value, Rational(closed && a == b ? 1 : 0));
            }
        }
    }
    EXPECT_THROW(pairing_matrix(cat, PairingKind::multiplicity), std::invalid_argument);
}

TEST(Catalog, CompactA1AllKindsAreIdentity) {
    const Catalog cat = compact_catalog(build_root_system('A', 1), 3);
    for (PairingKind kind : {PairingKind::multiplicity, PairingKind::elliptic, PairingKind::homological}) {
        const auto m = pairing_matrix(cat, kind);
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t b = 0; b < m.size(); ++b) EXPECT_EQ(m[a][b].value, Rational(a == b ? 1 : 0));
        }
    }
}

TEST(UnequalStub, PairsToZeroAndSurvivesRoundTrip) {
    const Catalog cat = unequal_rank_catalog(3);
    for (PairingKind kind : {PairingKind::elliptic, PairingKind::homological}) {
        for (const auto& row : pairing_matrix(cat, kind)) {
            for (const auto& v : row) EXPECT_EQ(v.value, Rational(0));
        }
    }
    const Catalog back = catalog_from_json(Json::parse(to_json(cat).dump()));
    EXPECT_FALSE(back.context->equal_rank());
    EXPECT_EQ(pair(back.modules[0], back.modules[1], PairingKind::elliptic).value, Rational(0));
    EXPECT_EQ(to_json(back), to_json(cat));
}

TEST(LinearCombination, KeepsHomologyAndRejectsMixedContexts) {
    const RootSystem a1 = build_root_system('A', 1);
    const auto ctx = compact_context(a1);
    const VirtualModule v0 = compact_irreducible(Weight({0}), ctx);
    const VirtualModule v1 = compact_irreducible(Weight({1}), ctx);
    const VirtualModule c = linear_combination("c", {{2, &v0}, {-3, &v1}});
    EXPECT_EQ(c.euler(), 2 * v0.euler() - 3 * v1.euler());
    ASSERT_TRUE(c.homology());
    EXPECT_EQ(pair(c, c, PairingKind::homological).value, Rational(13));
    EXPECT_EQ(pair(c, c, PairingKind::elliptic).value, Rational(13));
    const VirtualModule ds = sl2_presets(0, 0).front();
    EXPECT_THROW(linear_combination("bad", {{1, &v0}, {1, &ds}}), std::invalid_argument);
    EXPECT_THROW(pair(v0, ds, PairingKind::elliptic), std::invalid_argument);
}

TEST(Serialize, FormatsAndRoundTrips) {
    const RootSystem a2 = build_root_system('A', 2);
    const Json rs = to_json(a2);
    EXPECT_EQ(rs["series"], "A");
    EXPECT_EQ(rs["weyl_order"], 6);
    EXPECT_EQ(rs["rho"], Json::parse("[1,1]"));
    EXPECT_EQ(rs["positive_roots"].size(), 3u);

    const CharElement c = e({1, 0}) + e({-1, 1}, -2);
    const Json cj = to_json(c);
    EXPECT_EQ(cj.dump(), R"({"rank":2,"terms":[{"w":[-1,1],"c":"-2"},{"w":[1,0],"c":"1"}]})");
    EXPECT_EQ(char_from_json(cj), c);

    const Catalog cat = compact_catalog(a2, 1);
    const Catalog back = catalog_from_json(Json::parse(to_json(cat).dump()));
    ASSERT_EQ(back.modules.size(), cat.modules.size());
    for (std::size_t i = 0; i < cat.modules.size(); ++i) {
        EXPECT_EQ(back.modules[i].euler(), cat.modules[i].euler());
        EXPECT_EQ(*back.modules[i].homology(), *cat.modules[i].homology());
    }
    EXPECT_EQ(back.context->w0_order(), 6u);

    const Json report = pairing_report(PairingKind::elliptic, cat.modules[0], cat.modules[0],
                                       pair(cat.modules[0], cat.modules[0], PairingKind::elliptic));
    EXPECT_EQ(report["value"], "1/1");
    EXPECT_EQ(report["kind"], "elliptic");

    Json tampered = to_json(cat);
    tampered["context"]["w0_order"] = 3;
    EXPECT_THROW(catalog_from_json(tampered), std::invalid_argument);
    Json broken = to_json(cat);
    broken["modules"][1]["euler"]["terms"][0]["c"] = "7";
    EXPECT_THROW(catalog_from_json(broken), std::invalid_argument);
}
