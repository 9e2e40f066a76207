#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "oddtrails/trail.hpp"

namespace oddtrails {

/// Path in the gadget graph, stored as its node sequence.
using HPath = std::vector<VertexId>;

/// The group-labeled graph H over Z2: each G-vertex x becomes a clique
/// [x] with one node per incident edge; each G-edge e = xy becomes a link
/// edge between the two nodes of e. Clique edges carry label 0; the link
/// edge of e carries label sigma(e) (all 1 in the unsigned case, where the
/// 1-labeled edges are in bijection with E(G)). Labels live in h.sigma().
struct GadgetGraph {
    Multigraph h;
    std::vector<VertexId> a_set;  // [s], ascending

    // Node <-> (G-vertex, G-edge) correspondence.
    std::vector<VertexId> g_vertex_of_node;
    std::vector<EdgeId> g_edge_of_node;
    std::vector<VertexId> partner;            // other node of the same G-edge
    std::vector<EdgeId> link_edge_of_node;    // H-edge id of the node's link edge
    std::vector<EdgeId> link_edge_of_g_edge;  // per G-edge id (-1 if inactive)
    std::vector<EdgeId> g_edge_of_h_edge;     // -1 for clique edges
    std::vector<std::vector<VertexId>> clique_nodes;  // per G-vertex, ascending

    VertexId node_of(EdgeId g_edge, VertexId g_end) const {
        auto [a, b] = ends_of_g_edge[g_edge];
        return g_end == ends_src[g_edge] ? a : b;
    }

    // Node pair per G-edge: (node at ends(e).first, node at ends(e).second).
    std::vector<std::pair<VertexId, VertexId>> ends_of_g_edge;
    std::vector<VertexId> ends_src;  // ends(e).first in G, for node_of lookups

    int label(EdgeId h_edge) const { return h.edge_parity(h_edge); }
    bool is_link_edge(EdgeId h_edge) const { return g_edge_of_h_edge[h_edge] >= 0; }

    std::string to_dot() const {
        std::ostringstream out;
        out << "graph H {\n";
        for (VertexId n = 0; n < h.vertex_count(); ++n)
            out << "  " << n << " [label=\"v" << g_vertex_of_node[n] << "/e" << g_edge_of_node[n]
                << "\"];\n";
        for (EdgeId e = 0; e < h.edge_universe(); ++e) {
            auto [a, b] = h.ends(e);
            out << "  " << a << " -- " << b << " [style=" << (label(e) ? "solid" : "dashed")
                << "];\n";
        }
        out << "}\n";
        return out.str();
    }
};

/// Build the gadget for (g, s). Deterministic numbering: nodes
/// ordered by (G-vertex, incident edge id); link edges first (one per
/// active G-edge, in id order), then clique edges.
inline GadgetGraph build_gadget(const Multigraph& g, VertexId s) {
    require(s >= 0 && s < g.vertex_count(), Err::BadParameter, "s out of range");
    GadgetGraph gg;
    gg.clique_nodes.resize(g.vertex_count());
    std::map<std::pair<EdgeId, VertexId>, VertexId> node_at;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        for (EdgeId e : g.incident(x)) {
            VertexId n = VertexId(gg.g_vertex_of_node.size());
            gg.g_vertex_of_node.push_back(x);
            gg.g_edge_of_node.push_back(e);
            gg.clique_nodes[x].push_back(n);
            node_at[{e, x}] = n;
        }
    }
    int node_count = int(gg.g_vertex_of_node.size());
    gg.a_set = gg.clique_nodes[s];

    std::vector<std::pair<VertexId, VertexId>> h_ends;
    std::vector<EdgeId> h_sigma_edges;
    gg.link_edge_of_g_edge.assign(g.edge_universe(), -1);
    gg.ends_of_g_edge.assign(g.edge_universe(), {-1, -1});
    gg.ends_src.assign(g.edge_universe(), -1);
    gg.partner.assign(node_count, -1);
    gg.link_edge_of_node.assign(node_count, -1);
    for (EdgeId e = 0; e < g.edge_universe(); ++e) {
        if (!g.edge_active(e)) continue;
        auto [x, y] = g.ends(e);
        VertexId nx = node_at[{e, x}], ny = node_at[{e, y}];
        EdgeId he = EdgeId(h_ends.size());
        h_ends.emplace_back(nx, ny);
        gg.g_edge_of_h_edge.push_back(e);
        gg.link_edge_of_g_edge[e] = he;
        gg.ends_of_g_edge[e] = {nx, ny};
        gg.ends_src[e] = x;
        gg.partner[nx] = ny;
        gg.partner[ny] = nx;
        gg.link_edge_of_node[nx] = he;
        gg.link_edge_of_node[ny] = he;
        if (g.is_signed_edge(e)) h_sigma_edges.push_back(he);
    }
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        const auto& cl = gg.clique_nodes[x];
        for (size_t i = 0; i < cl.size(); ++i)
            for (size_t j = i + 1; j < cl.size(); ++j) {
                h_ends.emplace_back(cl[i], cl[j]);
                gg.g_edge_of_h_edge.push_back(-1);
            }
    }
    EdgeSet sigma(int(h_ends.size()));
    for (EdgeId he : h_sigma_edges) sigma.insert(he);
    gg.h = Multigraph(node_count, std::move(h_ends), sigma);
    return gg;
}

namespace detail {

/// H-edge joining two adjacent nodes, lowest id (H is simple, so unique).
inline EdgeId h_edge_between(const GadgetGraph& gg, VertexId a, VertexId b) {
    for (EdgeId e : gg.h.incident(a))
        if (gg.h.other_end(e, a) == b) return e;
    return -1;
}

}  // namespace detail

/// pi: map an A-path in H to the (s,s)-trail it encodes. The trail's edges
/// are the G-images of the path's link edges, in order; a path staying
/// inside [s] maps to the trivial trail (s). gamma-length equals trail
/// parity by construction.
inline Trail path_to_trail(const GadgetGraph& gg, const HPath& p) {
    require(!p.empty(), Err::NotAPath, "empty node sequence");
    VertexId s = gg.g_vertex_of_node[gg.a_set.empty() ? 0 : gg.a_set[0]];
    std::vector<char> seen(gg.h.vertex_count(), 0);
    for (VertexId n : p) {
        require(n >= 0 && n < gg.h.vertex_count(), Err::NotAPath, "node out of range");
        require(!seen[n], Err::NotAPath, "repeated node");
        seen[n] = 1;
    }
    auto in_a = [&](VertexId n) {
        return std::find(gg.a_set.begin(), gg.a_set.end(), n) != gg.a_set.end();
    };
    require(in_a(p.front()) && in_a(p.back()), Err::EndpointsNotInA, "path endpoints outside A");
    Trail t(s);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        EdgeId he = detail::h_edge_between(gg, p[i], p[i + 1]);
        require(he >= 0, Err::NotAPath, "consecutive nodes not adjacent in H");
        EdgeId ge = gg.g_edge_of_h_edge[he];
        if (ge < 0) {
            // Clique hop: stays at the same G-vertex.
            require(t.back() == gg.g_vertex_of_node[p[i + 1]], Err::NotAPath,
                    "clique hop leaves current G-vertex");
            continue;
        }
        require(t.back() == gg.g_vertex_of_node[p[i]], Err::NotAPath, "link edge misaligned");
        t.vertices.push_back(gg.g_vertex_of_node[p[i + 1]]);
        t.edges.push_back(ge);
    }
    require(t.trivial() || (t.front() == s && t.back() == s), Err::EndpointsNotInA,
            "image is not an (s,s)-trail");
    return t;
}

/// sigma: map an (s,s)-trail with >= 1 edge to the A-path that traverses
/// the corresponding link edges, hopping through cliques in between. The
/// path visits node x exactly when the trail uses the matching G-edge.
inline HPath trail_to_path(const GadgetGraph& gg, const Trail& t) {
    require(!t.trivial(), Err::EmptyTrail, "trail has no edges");
    HPath p;
    for (size_t i = 0; i < t.edges.size(); ++i) {
        EdgeId e = t.edges[i];
        require(e >= 0 && e < int(gg.link_edge_of_g_edge.size()) &&
                    gg.link_edge_of_g_edge[e] >= 0,
                Err::BadParameter, "trail edge missing from gadget");
        p.push_back(gg.node_of(e, t.vertices[i]));
        p.push_back(gg.node_of(e, t.vertices[i + 1]));
    }
    return p;
}

/// gamma-length (Z2) of a node sequence: parity of its labeled edges.
inline int gamma_length(const GadgetGraph& gg, const HPath& p) {
    int par = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        EdgeId he = detail::h_edge_between(gg, p[i], p[i + 1]);
        require(he >= 0, Err::NotAPath, "non-adjacent nodes");
        par ^= gg.label(he);
    }
    return par;
}

/// Translate a vertex cover of nonzero A-paths into the edge cover of odd
/// (s,s)-trails it certifies: each H-node names its G-edge.
inline EdgeSet vertex_cover_to_edge_cover(const GadgetGraph& gg, const std::vector<VertexId>& c) {
    EdgeSet f(int(gg.link_edge_of_g_edge.size()));
    for (VertexId n : c) {
        require(n >= 0 && n < int(gg.g_edge_of_node.size()), Err::BadParameter,
                "cover node out of range");
        f.insert(gg.g_edge_of_node[n]);
    }
    return f;
}

}  // namespace oddtrails
