#pragma once

#include <vector>

#include "oddtrails/graph.hpp"
#include "oddtrails/trail.hpp"

namespace oddtrails {
namespace minmax {

struct Budget {
    int max_vertices = 16;
};

/// Bipartite subgraph (S, F) with s in S attaining the min-max value
/// |E(S)-F| + sum over components C of G-S of floor(|E(S,C)|/2). For fixed
/// sides the best F is the full cross set E(S0,S1), so the certificate
/// stores the sides and derives F.
struct BipartiteCertificate {
    std::vector<VertexId> s0, s1;  // bipartition of S; s lives in s0
    EdgeSet f;                     // E(S0,S1)
    int value = 0;

    std::vector<VertexId> s_union() const {
        std::vector<VertexId> s = s0;
        s.insert(s.end(), s1.begin(), s1.end());
        std::sort(s.begin(), s.end());
        return s;
    }
};

namespace detail {

struct Eval {
    int value;
    EdgeSet f;
};

inline Eval evaluate_assignment(const Multigraph& g, const std::vector<int>& side) {
    // side[x]: 0 = outside S, 1 = S0, 2 = S1.
    std::vector<VertexId> s;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (side[x]) s.push_back(x);
    auto b = g.boundary_and_induced(s);
    EdgeSet f(g.edge_universe());
    int mono = 0;
    for (EdgeId e : b.inside.to_vector()) {
        auto [x, y] = g.ends(e);
        if (side[x] != side[y])
            f.insert(e);
        else
            ++mono;
    }
    int value = mono;
    for (const auto& cross : b.crossing) value += cross.count() / 2;
    return {value, f};
}

}  // namespace detail

/// Evaluate the min-max RHS exactly by enumerating every vertex assignment
/// (outside / S0 / S1, with s pinned to S0) and return an optimal
/// certificate. Ties broken by smaller |S|, then by the lexicographically
/// first assignment in scan order. Requires the default sigma: the formula
/// counts parity by edge count, so signed graphs are out of scope here.
inline BipartiteCertificate minmax_rhs(const Multigraph& g, VertexId s,
                                       const Budget& budget = {}) {
    require(s >= 0 && s < g.vertex_count(), Err::BadParameter, "s out of range");
    require(g.sigma_is_all(), Err::BadParameter, "minmax_rhs needs sigma = all edges");
    require(g.vertex_count() <= budget.max_vertices, Err::BudgetExceeded,
            "instance has " + std::to_string(g.vertex_count()) + " vertices, budget is " +
                std::to_string(budget.max_vertices));

    std::vector<int> side(g.vertex_count(), 0), best_side;
    side[s] = 1;
    int best = -1, best_size = -1;
    std::vector<VertexId> free;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (x != s) free.push_back(x);

    // Odometer over base-3 digits of the free vertices.
    std::vector<int> digit(free.size(), 0);
    while (true) {
        for (size_t i = 0; i < free.size(); ++i) side[free[i]] = digit[i];
        auto ev = detail::evaluate_assignment(g, side);
        int size_s = 0;
        for (VertexId x = 0; x < g.vertex_count(); ++x) size_s += side[x] != 0;
        if (best < 0 || ev.value < best || (ev.value == best && size_s < best_size)) {
            best = ev.value;
            best_size = size_s;
            best_side = side;
        }
        size_t i = 0;
        for (; i < digit.size(); ++i) {
            if (++digit[i] < 3) break;
            digit[i] = 0;
        }
        if (i == digit.size()) break;
    }

    BipartiteCertificate cert;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (best_side[x] == 1) cert.s0.push_back(x);
        if (best_side[x] == 2) cert.s1.push_back(x);
    }
    auto ev = detail::evaluate_assignment(g, best_side);
    cert.f = ev.f;
    cert.value = ev.value;
    return cert;
}

/// Recompute a certificate's value from its sides; throws on malformed
/// certificates (s missing, sides overlapping, F not the cross set).
inline int certificate_value(const Multigraph& g, VertexId s, const BipartiteCertificate& cert) {
    std::vector<int> side(g.vertex_count(), 0);
    for (VertexId x : cert.s0) {
        require(x >= 0 && x < g.vertex_count() && side[x] == 0, Err::BadParameter, "bad S0");
        side[x] = 1;
    }
    for (VertexId x : cert.s1) {
        require(x >= 0 && x < g.vertex_count() && side[x] == 0, Err::BadParameter, "bad S1");
        side[x] = 2;
    }
    require(side[s] == 1, Err::BadParameter, "s must lie in S0");
    auto ev = detail::evaluate_assignment(g, side);
    require(ev.f == cert.f, Err::BadParameter, "F is not E(S0,S1)");
    return ev.value;
}

/// Factor-2 cover extraction: all monochromatic S-edges, plus all but the
/// lowest-id edge of E(S,C) for every component C. Size <= 2 * value.
inline EdgeSet cover_from_certificate(const Multigraph& g, VertexId s,
                                      const BipartiteCertificate& cert) {
    certificate_value(g, s, cert);
    auto b = g.boundary_and_induced(cert.s_union());
    EdgeSet cover = b.inside - cert.f;
    for (const auto& cross : b.crossing) {
        bool skipped = false;
        for (EdgeId e : cross.to_vector()) {
            if (!skipped) {
                skipped = true;  // leave one edge per component uncovered
                continue;
            }
            cover.insert(e);
        }
    }
    return cover;
}

/// Weak duality cross-check: any valid packing of odd (s,s)-trails is no
/// larger than any valid certificate's value.
inline bool verify_certificate_upper_bound(const Multigraph& g, VertexId s,
                                           const BipartiteCertificate& cert,
                                           const std::vector<Trail>& trails) {
    int value = certificate_value(g, s, cert);
    for (const Trail& t : trails)
        if (verify_trail(g, t, {s, s}, true)) return false;
    if (!pairwise_edge_disjoint(trails)) return false;
    return int(trails.size()) <= value;
}

}  // namespace minmax
}  // namespace oddtrails
