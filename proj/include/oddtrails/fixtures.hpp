#pragma once

#include <random>
#include <vector>

#include "oddtrails/graph.hpp"
#include "oddtrails/trail.hpp"

namespace oddtrails {
namespace fixtures {

struct Instance {
    Multigraph graph;
    VertexId u;
    VertexId v;
};

/// Tight family for the 2k+1 covering bound: nu(u,v)=k, tau(u,v)=2k+1,
/// lambda(u,v)=2k+1. Vertices: u=0, v=1, w=2, then per block i the eight
/// vertices a..h. Edges: fifteen per block in a fixed order, then uw, vw.
inline Instance fig2(int k) {
    require(k >= 1, Err::BadParameter, "fig2 needs k >= 1");
    VertexId u = 0, v = 1, w = 2;
    int n = 3 + 8 * k;
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (int i = 0; i < k; ++i) {
        VertexId a = 3 + 8 * i, b = a + 1, c = a + 2, d = a + 3, e = a + 4, f = a + 5, g = a + 6,
                 h = a + 7;
        ends.insert(ends.end(), {{u, a},
                                 {u, b},
                                 {a, b},
                                 {a, c},
                                 {b, c},
                                 {c, d},
                                 {c, e},
                                 {d, e},
                                 {d, f},
                                 {e, f},
                                 {f, g},
                                 {f, h},
                                 {g, v},
                                 {h, v},
                                 {g, h}});
    }
    ends.emplace_back(u, w);
    ends.emplace_back(v, w);
    return {Multigraph(n, std::move(ends)), u, v};
}

struct Fig6 {
    Multigraph graph;
    VertexId u;
    VertexId v;
    /// The k+1 edge-disjoint odd ({u,v},{u,v})-trails witnessing tightness:
    /// u-x_i-y_i-v for i < k, then u-z1-z2-u and v-z5-z6-v.
    std::vector<Trail> trails;
};

/// Tight family for untangling: lambda(u,v)=2k+1 = 2(k+1)-1,
/// yet only k edge-disjoint odd (u,v)-trails exist.
inline Fig6 fig6(int k) {
    require(k >= 1, Err::BadParameter, "fig6 needs k >= 1");
    VertexId u = 0, v = 1;
    std::vector<std::pair<VertexId, VertexId>> ends;
    std::vector<Trail> trails;
    for (int i = 0; i + 1 < k; ++i) {
        VertexId x = 2 + 2 * i, y = x + 1;
        int base = int(ends.size());
        ends.insert(ends.end(), {{u, x}, {u, y}, {v, x}, {v, y}, {x, y}});
        trails.push_back(Trail({u, x, y, v}, {base, base + 4, base + 3}));
    }
    VertexId z1 = 2 + 2 * (k - 1);
    VertexId z2 = z1 + 1, z3 = z1 + 2, z4 = z1 + 3, z5 = z1 + 4, z6 = z1 + 5, w = z1 + 6;
    int b = int(ends.size());
    ends.insert(ends.end(), {{u, z1},
                             {u, z2},
                             {z1, z2},
                             {z1, z3},
                             {z2, z4},
                             {z3, z5},
                             {z4, z6},
                             {z5, z6},
                             {v, z5},
                             {v, z6}});
    ends.emplace_back(u, w);
    ends.emplace_back(v, w);
    trails.push_back(Trail({u, z1, z2, u}, {b, b + 2, b + 1}));
    trails.push_back(Trail({v, z5, z6, v}, {b + 8, b + 7, b + 9}));
    return {Multigraph(w + 1, std::move(ends)), u, v, std::move(trails)};
}

/// The H_k family: nu(u,v)=k, tau(u,v)=2k, and every cover of the
/// restricted delta(X) + (E(X)-F) shape has size >= 3k. m sets the
/// number of u-w-v paths; any m >= 1 keeps the counted structure, larger
/// m raises lambda.
inline Instance hk(int k, int m) {
    require(k >= 1 && m >= 1, Err::BadParameter, "hk needs k >= 1, m >= 1");
    VertexId u = 0, v = 1;
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (int i = 0; i < k; ++i) {
        VertexId x = 2 + 9 * i, y = x + 1, z = x + 2, a = x + 3, bb = x + 4, c = x + 5, d = x + 6,
                 e = x + 7, f = x + 8;
        ends.insert(ends.end(), {{u, x},
                                 {u, x},
                                 {x, y},
                                 {x, y},
                                 {y, z},
                                 {y, z},
                                 {z, v},
                                 {x, a},
                                 {x, bb},
                                 {a, bb},
                                 {y, c},
                                 {y, d},
                                 {c, d},
                                 {z, e},
                                 {z, f},
                                 {e, f}});
    }
    for (int j = 0; j < m; ++j) {
        VertexId wj = 2 + 9 * k + j;
        ends.emplace_back(u, wj);
        ends.emplace_back(v, wj);
    }
    return {Multigraph(2 + 9 * k + m, std::move(ends)), u, v};
}

struct Fig8 {
    Multigraph graph;
    VertexId s;
};

/// hk with u and v identified into s (the (s,s)-trail tight example).
inline Fig8 fig8(int k, int m) {
    Instance base = hk(k, m);
    auto merged = identify_vertices(base.graph, base.u, base.v);
    return {std::move(merged.graph), merged.merged};
}

/// Seeded loop-free random multigraph. Each of the m edges duplicates a
/// previously drawn pair with probability parallel_prob, otherwise picks a
/// fresh uniform pair; every edge lands in sigma with sigma_prob.
inline Multigraph random_multigraph(uint64_t seed, int n, int m, double parallel_prob = 0.2,
                                    double sigma_prob = 1.0) {
    require(n >= 2, Err::BadParameter, "random_multigraph needs n >= 2");
    require(m >= 0, Err::BadParameter, "negative edge count");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    std::vector<std::pair<VertexId, VertexId>> ends;
    EdgeSet sigma(m);
    for (int i = 0; i < m; ++i) {
        if (!ends.empty() && coin(rng) < parallel_prob) {
            std::uniform_int_distribution<size_t> pick_edge(0, ends.size() - 1);
            ends.push_back(ends[pick_edge(rng)]);
        } else {
            VertexId a = pick_vertex(rng), b = pick_vertex(rng);
            while (b == a) b = pick_vertex(rng);
            ends.emplace_back(a, b);
        }
        if (coin(rng) < sigma_prob) sigma.insert(i);
    }
    return Multigraph(n, std::move(ends), sigma);
}

}  // namespace fixtures
}  // namespace oddtrails
