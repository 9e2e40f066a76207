#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oddtrails/edge_set.hpp"
#include "oddtrails/errors.hpp"

namespace oddtrails {

/// Loop-free undirected multigraph with stable edge ids and a signed-edge
/// set sigma. Edge ids are never renumbered: deleting edges only clears
/// them from the active mask, so trails and covers remain meaningful
/// across derived graphs. Immutable after construction; every "mutation"
/// builds a new graph.
class Multigraph {
public:
    Multigraph() = default;

    /// Edges given as endpoint pairs; edge i gets id i. sigma defaults to
    /// all edges (the unsigned theory is the signed theory with Σ = E).
    /// The no-loop invariant applies to active edges.
    Multigraph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> ends,
               std::optional<EdgeSet> sigma = std::nullopt,
               std::optional<EdgeSet> active = std::nullopt)
        : n_(vertex_count), ends_(std::move(ends)) {
        require(n_ >= 0, Err::BadParameter, "negative vertex count");
        active_ = active ? *active : EdgeSet::full(edge_universe());
        require(active_.universe() == edge_universe(), Err::BadParameter,
                "active universe mismatch");
        for (size_t i = 0; i < ends_.size(); ++i) {
            if (!active_.contains(int(i))) continue;
            auto [a, b] = ends_[i];
            require(a != b, Err::LoopWouldForm, "edge " + std::to_string(i) + " is a loop");
            require(a >= 0 && a < n_ && b >= 0 && b < n_, Err::BadParameter,
                    "edge " + std::to_string(i) + " endpoint out of range");
        }
        if (sigma) {
            require(sigma->universe() == edge_universe(), Err::BadParameter,
                    "sigma universe mismatch");
            sigma_ = *sigma;
        } else {
            sigma_ = EdgeSet::full(edge_universe());
        }
        build_adjacency();
    }

    int vertex_count() const { return n_; }
    /// Size of the edge id space (includes masked-out edges).
    int edge_universe() const { return int(ends_.size()); }
    int edge_count() const { return active_.count(); }

    bool edge_active(EdgeId e) const { return active_.contains(e); }
    const EdgeSet& active_edges() const { return active_; }
    const EdgeSet& sigma() const { return sigma_; }
    bool is_signed_edge(EdgeId e) const { return sigma_.contains(e); }
    bool sigma_is_all() const { return (sigma_ & active_) == active_; }

    std::pair<VertexId, VertexId> ends(EdgeId e) const { return ends_[e]; }
    VertexId other_end(EdgeId e, VertexId x) const {
        auto [a, b] = ends_[e];
        return x == a ? b : a;
    }

    /// Active edges incident to x, ascending by edge id.
    const std::vector<EdgeId>& incident(VertexId x) const { return adj_[x]; }
    int degree(VertexId x) const { return int(adj_[x].size()); }

    /// |F ∩ Σ| mod 2 of an edge set.
    int parity(const EdgeSet& f) const { return (f & sigma_).count() & 1; }
    int edge_parity(EdgeId e) const { return sigma_.contains(e) ? 1 : 0; }

    /// New graph with the given edges removed from the active mask.
    Multigraph without_edges(const EdgeSet& del) const {
        Multigraph g(*this);
        g.active_ -= del;
        g.build_adjacency();
        return g;
    }

    /// Connected components of G - removed_vertices over active edges.
    /// Each component is sorted; components ordered by smallest member.
    std::vector<std::vector<VertexId>> components(const std::vector<VertexId>& removed = {}) const {
        std::vector<char> gone(n_, 0), seen(n_, 0);
        for (VertexId x : removed) {
            require(x >= 0 && x < n_, Err::BadParameter, "removed vertex out of range");
            gone[x] = 1;
        }
        std::vector<std::vector<VertexId>> comps;
        for (VertexId start = 0; start < n_; ++start) {
            if (gone[start] || seen[start]) continue;
            std::vector<VertexId> comp, stack{start};
            seen[start] = 1;
            while (!stack.empty()) {
                VertexId x = stack.back();
                stack.pop_back();
                comp.push_back(x);
                for (EdgeId e : adj_[x]) {
                    VertexId y = other_end(e, x);
                    if (!gone[y] && !seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    /// E(S) together with E(S,C) for each component C of G - S.
    /// Components are returned in the same order as components(S).
    struct Boundary {
        EdgeSet inside;                            // E(S)
        std::vector<std::vector<VertexId>> comps;  // comp(G-S)
        std::vector<EdgeSet> crossing;             // E(S,C) per component
    };

    Boundary boundary_and_induced(const std::vector<VertexId>& s) const {
        std::vector<char> in_s(n_, 0);
        for (VertexId x : s) {
            require(x >= 0 && x < n_, Err::BadParameter, "S vertex out of range");
            in_s[x] = 1;
        }
        Boundary b{EdgeSet(edge_universe()), components(s), {}};
        std::vector<int> comp_of(n_, -1);
        for (size_t i = 0; i < b.comps.size(); ++i)
            for (VertexId x : b.comps[i]) comp_of[x] = int(i);
        b.crossing.assign(b.comps.size(), EdgeSet(edge_universe()));
        for (EdgeId e = 0; e < edge_universe(); ++e) {
            if (!active_.contains(e)) continue;
            auto [a, c] = ends_[e];
            if (in_s[a] && in_s[c]) {
                b.inside.insert(e);
            } else if (in_s[a] != in_s[c]) {
                VertexId outside = in_s[a] ? c : a;
                b.crossing[comp_of[outside]].insert(e);
            }
        }
        return b;
    }

    bool connected_between(VertexId a, VertexId b) const {
        if (a == b) return true;
        std::vector<char> seen(n_, 0);
        std::vector<VertexId> stack{a};
        seen[a] = 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId e : adj_[x]) {
                VertexId y = other_end(e, x);
                if (!seen[y]) {
                    if (y == b) return true;
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return false;
    }

    std::string to_dot() const {
        std::ostringstream out;
        out << "graph G {\n";
        for (EdgeId e = 0; e < edge_universe(); ++e) {
            if (!active_.contains(e)) continue;
            auto [a, b] = ends_[e];
            out << "  " << a << " -- " << b << " [label=\"e" << e << "\""
                << (sigma_.contains(e) ? "" : ", style=dashed") << "];\n";
        }
        out << "}\n";
        return out.str();
    }

private:
    void build_adjacency() {
        adj_.assign(n_, {});
        for (EdgeId e = 0; e < edge_universe(); ++e) {
            if (!active_.contains(e)) continue;
            adj_[ends_[e].first].push_back(e);
            adj_[ends_[e].second].push_back(e);
        }
    }

    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> ends_;
    EdgeSet active_;
    EdgeSet sigma_;
    std::vector<std::vector<EdgeId>> adj_;
};

/// Result of merging vertices: edge ids survive unchanged (identity map);
/// vertex_map sends old ids to new ones.
struct IdentifyResult {
    Multigraph graph;
    std::vector<VertexId> vertex_map;
    VertexId merged;  // the new vertex s
};

/// Identify u and v into a single vertex s. The caller must have deleted
/// all u-v edges first (the (u,v) solver removes E_uv before identifying),
/// otherwise the merge would create a loop.
inline IdentifyResult identify_vertices(const Multigraph& g, VertexId u, VertexId v) {
    require(u != v, Err::SameVertex, "identify_vertices(u,u)");
    require(u >= 0 && u < g.vertex_count() && v >= 0 && v < g.vertex_count(), Err::BadParameter,
            "terminal out of range");
    for (EdgeId e = 0; e < g.edge_universe(); ++e) {
        if (!g.edge_active(e)) continue;
        auto [a, b] = g.ends(e);
        require(!((a == u && b == v) || (a == v && b == u)), Err::LoopWouldForm,
                "u-v edge " + std::to_string(e) + " still present");
    }
    VertexId drop = std::max(u, v);
    std::vector<VertexId> map(g.vertex_count());
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (x == drop)
            map[x] = std::min(u, v);
        else
            map[x] = x > drop ? x - 1 : x;
    }
    std::vector<std::pair<VertexId, VertexId>> ends;
    ends.reserve(g.edge_universe());
    for (EdgeId e = 0; e < g.edge_universe(); ++e) {
        auto [a, b] = g.ends(e);
        ends.emplace_back(map[a], map[b]);
    }
    Multigraph merged(g.vertex_count() - 1, std::move(ends), g.sigma(), g.active_edges());
    VertexId s = map[u];
    return {std::move(merged), std::move(map), s};
}

/// Contract two disjoint vertex sets C and D into supernodes. Edges inside
/// C or inside D are dropped from the active mask beforehand so the result
/// stays loop-free; all other edge ids survive unchanged.
struct ContractResult {
    Multigraph graph;
    std::vector<VertexId> vertex_map;
    VertexId super_c;
    VertexId super_d;
    EdgeSet dropped;  // intra-C and intra-D edges
};

inline ContractResult contract_terminal_sets(const Multigraph& g, const std::vector<VertexId>& cs,
                                             const std::vector<VertexId>& ds) {
    require(!cs.empty() && !ds.empty(), Err::BadParameter, "empty terminal set");
    std::vector<int> side(g.vertex_count(), 0);
    for (VertexId x : cs) {
        require(x >= 0 && x < g.vertex_count(), Err::BadParameter, "C vertex out of range");
        side[x] = 1;
    }
    for (VertexId x : ds) {
        require(x >= 0 && x < g.vertex_count(), Err::BadParameter, "D vertex out of range");
        require(side[x] != 1, Err::OverlappingTerminalSets, "vertex in both C and D");
        side[x] = 2;
    }
    // New numbering: supernode u=0, supernode v=1, remaining vertices in order.
    std::vector<VertexId> map(g.vertex_count());
    VertexId next = 2;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        map[x] = side[x] == 1 ? 0 : side[x] == 2 ? 1 : next++;
    EdgeSet dropped(g.edge_universe());
    std::vector<std::pair<VertexId, VertexId>> ends;
    ends.reserve(g.edge_universe());
    for (EdgeId e = 0; e < g.edge_universe(); ++e) {
        auto [a, b] = g.ends(e);
        if (g.edge_active(e) && map[a] == map[b]) dropped.insert(e);
        ends.emplace_back(map[a], map[b]);
    }
    EdgeSet active = g.active_edges() - dropped;
    Multigraph merged(next, std::move(ends), g.sigma(), active);
    return {std::move(merged), std::move(map), 0, 1, dropped};
}

}  // namespace oddtrails
