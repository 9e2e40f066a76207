#include <gtest/gtest.h>

#include "oddtrails/fixtures.hpp"
#include "oddtrails/flow.hpp"

using namespace oddtrails;

namespace {

bool disconnects(const Multigraph& g, const EdgeSet& cut, VertexId u, VertexId v) {
    return !g.without_edges(cut).connected_between(u, v);
}

TEST(Lambda, SingleEdge) {
    Multigraph g(2, {{0, 1}});
    EXPECT_EQ(lambda(g, 0, 1), 1);
    EXPECT_THROW(lambda(g, 0, 0), Error);
}

TEST(Lambda, Fig2IsTwoKPlusOne) {
    for (int k : {1, 2}) {
        auto [g, u, v] = fixtures::fig2(k);
        EXPECT_EQ(lambda(g, u, v), 2 * k + 1);
    }
}

TEST(Lambda, Fig6IsTwoKPlusOne) {
    auto f = fixtures::fig6(2);
    EXPECT_EQ(lambda(f.graph, f.u, f.v), 5);
}

TEST(MinCut, SingleEdgeAndDisconnected) {
    Multigraph g(4, {{0, 1}, {2, 3}});
    EdgeSet cut = min_cut(g, 0, 1);
    EXPECT_EQ(cut.to_vector(), (std::vector<EdgeId>{0}));
    EXPECT_TRUE(min_cut(g, 0, 2).empty());
}

TEST(MinCut, Fig2CutDisconnects) {
    auto [g, u, v] = fixtures::fig2(1);
    EdgeSet cut = min_cut(g, u, v);
    EXPECT_EQ(cut.count(), 3);
    EXPECT_TRUE(disconnects(g, cut, u, v));
}

TEST(DisjointPaths, ParallelEdges) {
    Multigraph g(2, {{0, 1}, {0, 1}, {0, 1}});
    auto paths = disjoint_paths(g, 0, 1, 3);
    ASSERT_EQ(paths.size(), 3u);
    for (const auto& p : paths) EXPECT_EQ(p.length(), 1);
    EXPECT_TRUE(pairwise_edge_disjoint(paths));
    EXPECT_TRUE(disjoint_paths(g, 0, 1, 0).empty());
    EXPECT_THROW(disjoint_paths(g, 0, 1, 4), Error);
}

TEST(DisjointPaths, Fig6FourPaths) {
    auto f = fixtures::fig6(2);
    auto paths = disjoint_paths(f.graph, f.u, f.v, 4);
    ASSERT_EQ(paths.size(), 4u);
    EXPECT_TRUE(pairwise_edge_disjoint(paths));
    for (const auto& p : paths) {
        EXPECT_TRUE(is_simple_path(p));
        EXPECT_EQ(p.front(), f.u);
        EXPECT_EQ(p.back(), f.v);
        EXPECT_FALSE(verify_trail(f.graph, p, {f.u, f.v}, p.parity(f.graph) == 1));
    }
}

TEST(DisjointPaths, Deterministic) {
    auto [g, u, v] = fixtures::fig2(2);
    auto a = disjoint_paths(g, u, v, 4);
    auto b = disjoint_paths(g, u, v, 4);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Menger, InvariantOnRandomGraphs) {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Multigraph g = fixtures::random_multigraph(seed, 7, 13, 0.3);
        int lam = lambda(g, 0, 1);
        EdgeSet cut = min_cut(g, 0, 1);
        EXPECT_EQ(cut.count(), lam);
        EXPECT_TRUE(disconnects(g, cut, 0, 1));
        auto paths = disjoint_paths(g, 0, 1, lam);
        EXPECT_EQ(int(paths.size()), lam);
        EXPECT_TRUE(pairwise_edge_disjoint(paths));
        for (const auto& p : paths) {
            EXPECT_TRUE(is_simple_path(p));
            EXPECT_EQ(p.front(), 0);
            EXPECT_EQ(p.back(), 1);
        }
        EXPECT_THROW(disjoint_paths(g, 0, 1, lam + 1), Error);
    }
}

}  // namespace
