#include <gtest/gtest.h>

#include "oddtrails/fixtures.hpp"
#include "oddtrails/oracle.hpp"

using namespace oddtrails;
using oracle::Budget;

namespace {

const Budget kWide{40};

TEST(OddTrailExists, SingleEdgeCases) {
    Multigraph g(2, {{0, 1}});
    EXPECT_TRUE(oracle::odd_trail_exists(g, 0, 1));
    // Closed at s: the one edge cannot be reused to come back.
    EXPECT_FALSE(oracle::odd_trail_exists(g, 0, 0));
}

TEST(OddTrailExists, Fig2MinusMinimumCoverHasNone) {
    auto [g, u, v] = fixtures::fig2(1);
    EXPECT_TRUE(oracle::odd_trail_exists(g, u, v));
    auto [tau, cover] = oracle::tau_exact(g, u, v);
    EXPECT_EQ(tau, 3);
    Multigraph rest = g.without_edges(cover);
    EXPECT_FALSE(oracle::odd_trail_exists(rest, u, v));
}

TEST(OddTrailExists, SignedParityRules) {
    // Triangle with one signed edge: the closed trail at 0 is odd.
    EdgeSet sigma(3);
    sigma.insert(0);
    Multigraph g(3, {{0, 1}, {1, 2}, {2, 0}}, sigma);
    EXPECT_TRUE(oracle::odd_trail_exists(g, 0, 0));
    // No signed edges at all: nothing is odd.
    Multigraph g0(3, {{0, 1}, {1, 2}, {2, 0}}, EdgeSet(3));
    EXPECT_FALSE(oracle::odd_trail_exists(g0, 0, 0));
    EXPECT_FALSE(oracle::odd_trail_exists(g0, 0, 1));
}

TEST(NuExact, TightFamilyValues) {
    auto [g1, u1, v1] = fixtures::fig2(1);
    EXPECT_EQ(oracle::nu_exact(g1, u1, v1), 1);
    auto f6 = fixtures::fig6(2);
    EXPECT_EQ(oracle::nu_exact(f6.graph, f6.u, f6.v), 2);
    Multigraph disc(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(oracle::nu_exact(disc, 0, 2), 0);
}

TEST(NuExact, HkAndFig8) {
    auto f = fixtures::hk(1, 2);
    EXPECT_EQ(oracle::nu_exact(f.graph, f.u, f.v, kWide), 1);
    auto f8 = fixtures::fig8(1, 2);
    EXPECT_EQ(oracle::nu_exact(f8.graph, f8.s, f8.s, kWide), 1);
}

TEST(TauExact, TightFamilyValues) {
    auto f = fixtures::hk(1, 2);
    auto [tau, cover] = oracle::tau_exact(f.graph, f.u, f.v, kWide);
    EXPECT_EQ(tau, 2);
    EXPECT_FALSE(oracle::odd_trail_exists(f.graph.without_edges(cover), f.u, f.v, kWide));
    // tau(s,s) >= 2k on the identified graph; here it is exactly 2.
    auto f8 = fixtures::fig8(1, 2);
    auto [tau8, cover8] = oracle::tau_exact(f8.graph, f8.s, f8.s, kWide);
    EXPECT_EQ(tau8, 2);
}

TEST(TauExact, NoOddTrailMeansEmptyCover) {
    Multigraph g(3, {{0, 1}, {1, 2}}, EdgeSet(2));
    auto [tau, cover] = oracle::tau_exact(g, 0, 2);
    EXPECT_EQ(tau, 0);
    EXPECT_TRUE(cover.empty());
}

TEST(Oracle, BudgetEnforced) {
    auto [g, u, v] = fixtures::fig2(2);  // 32 edges
    EXPECT_THROW(oracle::odd_trail_exists(g, u, v, Budget{20}), Error);
    try {
        oracle::nu_exact(g, u, v, Budget{20});
        FAIL() << "expected BudgetExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Err::BudgetExceeded);
    }
}

TEST(Oracle, DualityBoundsOnRandomGraphs) {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Multigraph g = fixtures::random_multigraph(seed, 7, 12, 0.3, 0.8);
        int nu = oracle::nu_exact(g, 0, 1);
        auto [tau, cover] = oracle::tau_exact(g, 0, 1);
        EXPECT_LE(nu, tau) << "seed " << seed;
        EXPECT_LE(tau, 2 * nu + 1) << "seed " << seed;
        EXPECT_FALSE(oracle::odd_trail_exists(g.without_edges(cover), 0, 1)) << "seed " << seed;
        if (nu >= 1) {
            EXPECT_TRUE(oracle::odd_trail_exists(g, 0, 1));
        }
    }
}

TEST(Oracle, SigmaEmptyKillsEverything) {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Multigraph g = fixtures::random_multigraph(seed, 6, 10, 0.3, 0.0);
        EXPECT_EQ(oracle::nu_exact(g, 0, 1), 0);
        auto [tau, cover] = oracle::tau_exact(g, 0, 1);
        EXPECT_EQ(tau, 0);
    }
}

TEST(FindOddTrail, ReturnsShortestWitness) {
    auto [g, u, v] = fixtures::fig2(1);
    auto t = oracle::find_odd_trail(g, {u}, {v});
    ASSERT_TRUE(t.has_value());
    EXPECT_FALSE(verify_trail(g, *t, {u, v}, true));
    // u-w-v plus the g1-h1-v triangle is the shortest odd route.
    EXPECT_EQ(t->length(), 5);
}

TEST(FindOddTrail, ClosedAtS) {
    auto f8 = fixtures::fig8(1, 2);
    auto t = oracle::find_odd_trail(f8.graph, {f8.s}, {f8.s}, kWide);
    ASSERT_TRUE(t.has_value());
    EXPECT_FALSE(verify_trail(f8.graph, *t, {f8.s, f8.s}, true));
}

}  // namespace
