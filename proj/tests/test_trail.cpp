#include <gtest/gtest.h>

#include "oddtrails/contacts.hpp"
#include "oddtrails/fixtures.hpp"
#include "oddtrails/flow.hpp"
#include "oddtrails/trail.hpp"
#include "test_util.hpp"

using namespace oddtrails;

namespace {

TEST(VerifyTrail, SingleEdgeOdd) {
    Multigraph g(2, {{0, 1}});
    Trail t({0, 1}, {0});
    EXPECT_FALSE(verify_trail(g, t, {0, 1}, true));
}

TEST(VerifyTrail, RepeatedEdgeRejected) {
    Multigraph g(2, {{0, 1}});
    Trail t({0, 1, 0}, {0, 0});
    auto bad = verify_trail(g, t, {0, 0}, false);
    ASSERT_TRUE(bad);
    EXPECT_EQ(*bad, TrailViolation::RepeatedEdge);
}

TEST(VerifyTrail, Fig2EvenPathFailsOddCheck) {
    auto [g, u, v] = fixtures::fig2(1);
    // u, a1, c1, d1, f1, g1, v: six edges, even.
    Trail t({0, 3, 5, 6, 8, 9, 1}, {0, 3, 5, 8, 10, 12});
    EXPECT_FALSE(verify_trail(g, t, {u, v}, false));
    auto bad = verify_trail(g, t, {u, v}, true);
    ASSERT_TRUE(bad);
    EXPECT_EQ(*bad, TrailViolation::WrongParity);
}

TEST(VerifyTrail, BrokenChainAndEndpoints) {
    Multigraph g(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(*verify_trail(g, Trail({0, 2}, {0}), {0, 2}, true), TrailViolation::BrokenChain);
    EXPECT_EQ(*verify_trail(g, Trail({0, 1}, {0}), {0, 2}, true),
              TrailViolation::WrongEndpoints);
}

TEST(VerifyTrail, TrivialTrailIsEvenAtItsVertex) {
    Multigraph g(2, {{0, 1}});
    EXPECT_FALSE(verify_trail(g, Trail(0), {0, 0}, false));
    EXPECT_EQ(*verify_trail(g, Trail(0), {0, 0}, true), TrailViolation::WrongParity);
    EXPECT_EQ(*verify_trail(g, Trail(0), {1, 1}, false), TrailViolation::WrongEndpoints);
}

TEST(SplitAt, FirstVertexGivesTrivialPrefix) {
    Multigraph g(3, {{0, 1}, {1, 2}});
    Trail t({0, 1, 2}, {0, 1});
    auto [s1, s2] = split_at(t, 0);
    EXPECT_TRUE(s1.trivial());
    EXPECT_EQ(s2, t);
    EXPECT_THROW(split_at(t, 3), Error);
}

TEST(SplitAt, OddTrailSplitsIntoOppositeParities) {
    Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}});
    Trail t({0, 1, 2, 3}, {0, 1, 2});
    for (int occ = 0; occ <= 3; ++occ) {
        auto [s1, s2] = split_at(t, occ);
        EXPECT_EQ((s1.parity(g) + s2.parity(g)) % 2, 1);
        EXPECT_EQ(concat(s1, s2), t);
    }
}

TEST(SplitAt, RepeatedVertexOccurrencesDiffer) {
    // Figure-eight at vertex 1: 0-1, 1-2, 2-1(parallel via 2), 1-0(parallel).
    Multigraph g(3, {{0, 1}, {1, 2}, {2, 1}, {1, 0}});
    Trail t({0, 1, 2, 1, 0}, {0, 1, 2, 3});
    auto [a1, a2] = split_at(t, 1);
    auto [b1, b2] = split_at(t, 3);
    EXPECT_EQ(a1.length(), 1);
    EXPECT_EQ(b1.length(), 3);
    EXPECT_EQ(concat(b1, b2), t);
}

TEST(Concat, IdentityAndErrors) {
    Multigraph g(3, {{0, 1}, {1, 2}});
    Trail t({0, 1, 2}, {0, 1});
    EXPECT_EQ(concat(t, Trail(2)), t);
    EXPECT_EQ(concat(Trail(0), t), t);
    EXPECT_THROW(concat(t, t), Error);                       // edge overlap
    EXPECT_THROW(concat(t, Trail({0, 1}, {0})), Error);      // endpoint mismatch
}

TEST(Reverse, InvolutionAndParity) {
    Multigraph g = fixtures::random_multigraph(5, 6, 9, 0.3, 0.6);
    auto trails = testutil::enumerate_trails(g, 0, {0, 1, 2, 3, 4, 5}, false, 5);
    auto odd = testutil::enumerate_trails(g, 0, {0, 1, 2, 3, 4, 5}, true, 5);
    trails.insert(trails.end(), odd.begin(), odd.end());
    for (const Trail& t : trails) {
        EXPECT_EQ(reverse(reverse(t)), t);
        EXPECT_EQ(reverse(t).parity(g), t.parity(g));
        EXPECT_TRUE(reverse(t).edge_set(g) == t.edge_set(g));
    }
}

TEST(Contacts, DisjointTrailsHaveNone) {
    Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
    Trail p({0, 1, 2}, {0, 1});
    Trail t({0, 2, 3}, {3, 2});
    EXPECT_EQ(contact_count(p, t), 0);
}

TEST(Contacts, IdenticalPathIsOneContact) {
    Multigraph g(3, {{0, 1}, {1, 2}});
    Trail p({0, 1, 2}, {0, 1});
    auto cs = contacts(p, p);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].p_lo, 0);
    EXPECT_EQ(cs[0].p_hi, 1);
    EXPECT_TRUE(cs[0].forward);
}

TEST(Contacts, SingleSharedEdgeMidPath) {
    // P = u-a-b-v; T shares only edge ab, embedded elsewhere.
    Multigraph g(6, {{0, 2}, {2, 3}, {3, 1}, {4, 2}, {3, 5}, {4, 5}});
    Trail p({0, 2, 3, 1}, {0, 1, 2});
    Trail t({4, 2, 3, 5}, {3, 1, 4});
    auto cs = contacts(p, t);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].p_lo, 1);
    EXPECT_EQ(cs[0].p_hi, 1);
    EXPECT_EQ(cs[0].t_lo, 1);
    EXPECT_TRUE(cs[0].forward);
    EXPECT_EQ(testutil::brute_contact_count(p, t), 1);
}

TEST(Contacts, ReversedRunIsOneContact) {
    // T traverses the shared segment backwards relative to P.
    Multigraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Trail p({0, 1, 2, 3}, {0, 1, 2});
    Trail t({4, 3, 2, 1}, {3, 2, 1});
    auto cs = contacts(p, t);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].p_lo, 1);
    EXPECT_EQ(cs[0].p_hi, 2);
    EXPECT_FALSE(cs[0].forward);
    EXPECT_EQ(testutil::brute_contact_count(p, t), 1);
}

TEST(Contacts, SharedParallelEdgeOrientationRecorded) {
    // Parallel pairs on both sides; T shares only edge 1, walked backwards.
    Multigraph g(3, {{0, 1}, {1, 2}, {2, 1}, {1, 0}});
    Trail p({0, 1, 2}, {0, 1});
    Trail t({2, 1, 0}, {1, 3});
    auto cs = contacts(p, t);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].p_lo, 1);
    EXPECT_FALSE(cs[0].forward);
    EXPECT_EQ(testutil::brute_contact_count(p, t), int(cs.size()));
}

TEST(Contacts, NonContiguousSharesSplitIntoContacts) {
    // P shares e1 and e2 with T, but T interleaves the parallel edge e4
    // between them, so they form two contacts rather than one.
    Multigraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 2}});
    Trail p({0, 1, 2, 3}, {0, 1, 2});
    Trail t({3, 2, 1, 2}, {2, 4, 1});
    auto cs = contacts(p, t);
    EXPECT_EQ(int(cs.size()), testutil::brute_contact_count(p, t));
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_TRUE(cs[0].forward);    // e1 aligned with T's traversal
    EXPECT_FALSE(cs[1].forward);   // e2 walked backwards
}

TEST(Contacts, MatchesBruteDefinitionOnRandomInstances) {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Multigraph g = fixtures::random_multigraph(seed, 6, 10, 0.35);
        auto paths = testutil::enumerate_trails(g, 0, {1}, false, 4);
        auto odd_paths = testutil::enumerate_trails(g, 0, {1}, true, 4);
        paths.insert(paths.end(), odd_paths.begin(), odd_paths.end());
        auto trails = testutil::enumerate_trails(g, 1, {0, 1}, true, 6);
        int checked = 0;
        for (const Trail& p : paths) {
            if (!is_simple_path(p)) continue;
            for (const Trail& t : trails) {
                auto cs = contacts(p, t);
                EXPECT_EQ(int(cs.size()), testutil::brute_contact_count(p, t));
                // Contacts are edge-disjoint and within bounds.
                EdgeSet seen(g.edge_universe());
                for (const Contact& c : cs) {
                    for (int i = c.p_lo; i <= c.p_hi; ++i) {
                        EXPECT_FALSE(seen.contains(p.edges[i]));
                        seen.insert(p.edges[i]);
                    }
                    EXPECT_EQ(c.p_hi - c.p_lo, c.t_hi - c.t_lo);
                }
                EXPECT_LE(int(cs.size()),
                          std::min<int>(p.length(), t.length()));
                if (++checked > 400) return;
            }
        }
    }
}

TEST(Contacts, TotalsMatrixAddsUp) {
    auto fig = fixtures::fig6(2);
    std::vector<Trail> paths = {
        Trail({0, 2, 1}, {0, 2}),     // u-x1-v
        Trail({0, 10, 1}, {15, 16}),  // u-w-v
    };
    auto totals = total_contacts(paths, fig.trails);
    int sum = 0;
    for (const auto& row : totals.matrix)
        for (int c : row) sum += c;
    EXPECT_EQ(sum, totals.total);
    EXPECT_EQ(totals.matrix.size(), paths.size());
}

TEST(Contacts, Fig6FamilyAgainstIndependentRecount) {
    // The fixture's trail family against a maximum path family, with the
    // totals recomputed by the definition-literal scanner.
    auto fig = fixtures::fig6(2);
    PathFamily paths = disjoint_paths(fig.graph, fig.u, fig.v, 5);
    auto totals = total_contacts(paths, fig.trails);
    int recount = 0;
    for (const Trail& p : paths)
        for (const Trail& t : fig.trails) recount += testutil::brute_contact_count(p, t);
    EXPECT_EQ(totals.total, recount);
    // Contacts across the two edge-disjoint families are edge-disjoint,
    // so the total is bounded by |E(G)|.
    EXPECT_GE(totals.total, 0);
    EXPECT_LE(totals.total, fig.graph.edge_count());
}

TEST(TrailCollection, PartitionCountersMatch) {
    auto fig = fixtures::fig6(2);
    auto col = TrailCollection::of(fig.graph, fig.trails, fig.u, fig.v);
    EXPECT_EQ(col.k_uv, 1);
    EXPECT_EQ(col.k_uu, 1);
    EXPECT_EQ(col.k_vv, 1);
    // A shared edge is rejected.
    auto dup = fig.trails;
    dup.push_back(fig.trails[0]);
    EXPECT_THROW(TrailCollection::of(fig.graph, dup, fig.u, fig.v), Error);
}

}  // namespace
