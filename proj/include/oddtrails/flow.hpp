#pragma once

#include <queue>
#include <vector>

#include "oddtrails/trail.hpp"

namespace oddtrails {

/// Pairwise edge-disjoint simple (u,v)-paths.
using PathFamily = std::vector<Trail>;

namespace detail {

/// Unit-capacity undirected flow state. flow[e] is +1 when e carries flow
/// from ends(e).first to ends(e).second, -1 the other way, 0 when unused.
struct UnitFlow {
    const Multigraph& g;
    std::vector<int> flow;

    explicit UnitFlow(const Multigraph& g) : g(g), flow(g.edge_universe(), 0) {}

    bool residual(EdgeId e, VertexId from) const {
        auto [a, b] = g.ends(e);
        int f = flow[e];
        return from == a ? f <= 0 : f >= 0;
    }

    void push(EdgeId e, VertexId from) {
        auto [a, b] = g.ends(e);
        flow[e] += from == a ? 1 : -1;
    }

    /// One BFS augmentation; neighbors scanned in ascending edge id.
    bool augment(VertexId u, VertexId v) {
        std::vector<EdgeId> via(g.vertex_count(), -1);
        std::vector<char> seen(g.vertex_count(), 0);
        std::queue<VertexId> q;
        q.push(u);
        seen[u] = 1;
        while (!q.empty() && !seen[v]) {
            VertexId x = q.front();
            q.pop();
            for (EdgeId e : g.incident(x)) {
                VertexId y = g.other_end(e, x);
                if (seen[y] || !residual(e, x)) continue;
                seen[y] = 1;
                via[y] = e;
                q.push(y);
                if (y == v) break;
            }
        }
        if (!seen[v]) return false;
        for (VertexId x = v; x != u;) {
            EdgeId e = via[x];
            VertexId p = g.other_end(e, x);
            push(e, p);
            x = p;
        }
        return true;
    }

    std::vector<char> residual_reachable(VertexId u) const {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<VertexId> stack{u};
        seen[u] = 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(x)) {
                VertexId y = g.other_end(e, x);
                if (!seen[y] && residual(e, x)) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return seen;
    }
};

}  // namespace detail

/// Max number of edge-disjoint (u,v)-paths (= min cut size, by Menger).
inline int lambda(const Multigraph& g, VertexId u, VertexId v) {
    require(u != v, Err::SameVertex, "lambda(u,u)");
    detail::UnitFlow f(g);
    int value = 0;
    while (f.augment(u, v)) ++value;
    return value;
}

/// An edge set of size lambda(u,v) whose removal disconnects u from v.
inline EdgeSet min_cut(const Multigraph& g, VertexId u, VertexId v) {
    require(u != v, Err::SameVertex, "min_cut(u,u)");
    detail::UnitFlow f(g);
    while (f.augment(u, v)) {}
    std::vector<char> reach = f.residual_reachable(u);
    EdgeSet cut(g.edge_universe());
    for (EdgeId e = 0; e < g.edge_universe(); ++e) {
        if (!g.edge_active(e)) continue;
        auto [a, b] = g.ends(e);
        if (reach[a] != reach[b]) cut.insert(e);
    }
    return cut;
}

/// Exactly `count` pairwise edge-disjoint simple (u,v)-paths via flow
/// decomposition; cycles in the flow are cancelled during extraction, so
/// each returned path has no repeated vertex. Deterministic: augmenting
/// BFS and walk extraction both scan edges in ascending id order.
inline PathFamily disjoint_paths(const Multigraph& g, VertexId u, VertexId v, int count) {
    require(u != v, Err::SameVertex, "disjoint_paths(u,u)");
    require(count >= 0, Err::BadParameter, "negative path count");
    if (count == 0) return {};
    detail::UnitFlow f(g);
    int value = 0;
    while (value < count && f.augment(u, v)) ++value;
    require(value >= count, Err::InsufficientConnectivity,
            "requested " + std::to_string(count) + " paths, lambda is " + std::to_string(value));

    std::vector<char> used(g.edge_universe(), 0);
    auto flow_step = [&](VertexId x) -> EdgeId {
        for (EdgeId e : g.incident(x)) {
            if (used[e] || f.flow[e] == 0) continue;
            auto [a, b] = g.ends(e);
            if ((f.flow[e] > 0 && x == a) || (f.flow[e] < 0 && x == b)) return e;
        }
        return -1;
    };

    PathFamily out;
    for (int i = 0; i < count; ++i) {
        Trail path(u);
        std::vector<int> pos_of(g.vertex_count(), -1);
        pos_of[u] = 0;
        VertexId x = u;
        while (x != v) {
            EdgeId e = flow_step(x);
            require(e >= 0, Err::InsufficientConnectivity, "flow decomposition stuck");
            VertexId y = g.other_end(e, x);
            used[e] = 1;
            if (pos_of[y] >= 0) {
                // Walked into a flow cycle: drop it and resume from y.
                for (size_t j = pos_of[y]; j + 1 < path.vertices.size(); ++j)
                    pos_of[path.vertices[j + 1]] = -1;
                path.vertices.resize(pos_of[y] + 1);
                path.edges.resize(pos_of[y]);
            } else {
                path.vertices.push_back(y);
                path.edges.push_back(e);
                pos_of[y] = int(path.vertices.size()) - 1;
            }
            x = y;
        }
        out.push_back(std::move(path));
    }
    return out;
}

}  // namespace oddtrails
