#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "oddtrails/graph.hpp"

namespace oddtrails {

/// Walk with no repeated edges. vertices has length r+1, edges length r;
/// edge i joins vertices i and i+1. The trivial trail (one vertex, no
/// edges) is allowed.
struct Trail {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    Trail() = default;
    explicit Trail(VertexId at) : vertices{at} {}
    Trail(std::vector<VertexId> vs, std::vector<EdgeId> es)
        : vertices(std::move(vs)), edges(std::move(es)) {}

    int length() const { return int(edges.size()); }
    bool trivial() const { return edges.empty(); }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }

    EdgeSet edge_set(const Multigraph& g) const {
        EdgeSet s(g.edge_universe());
        for (EdgeId e : edges) s.insert(e);
        return s;
    }

    int parity(const Multigraph& g) const {
        int p = 0;
        for (EdgeId e : edges) p ^= g.edge_parity(e);
        return p;
    }

    bool operator==(const Trail& o) const { return vertices == o.vertices && edges == o.edges; }
};

enum class TrailViolation { RepeatedEdge, BrokenChain, WrongEndpoints, WrongParity };

inline const char* violation_name(TrailViolation v) {
    switch (v) {
        case TrailViolation::RepeatedEdge: return "RepeatedEdge";
        case TrailViolation::BrokenChain: return "BrokenChain";
        case TrailViolation::WrongEndpoints: return "WrongEndpoints";
        case TrailViolation::WrongParity: return "WrongParity";
    }
    return "Unknown";
}

/// Check incidence chain, edge distinctness, endpoints and parity.
/// Returns nullopt when the trail is valid.
inline std::optional<TrailViolation> verify_trail(const Multigraph& g, const Trail& t,
                                                  std::pair<VertexId, VertexId> endpoints,
                                                  bool want_odd) {
    if (t.vertices.empty() || t.vertices.size() != t.edges.size() + 1)
        return TrailViolation::BrokenChain;
    std::vector<EdgeId> sorted = t.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return TrailViolation::RepeatedEdge;
    for (size_t i = 0; i < t.edges.size(); ++i) {
        EdgeId e = t.edges[i];
        if (e < 0 || e >= g.edge_universe() || !g.edge_active(e))
            return TrailViolation::BrokenChain;
        auto [a, b] = g.ends(e);
        VertexId x = t.vertices[i], y = t.vertices[i + 1];
        if (!((x == a && y == b) || (x == b && y == a))) return TrailViolation::BrokenChain;
    }
    bool ends_ok = (t.front() == endpoints.first && t.back() == endpoints.second) ||
                   (t.front() == endpoints.second && t.back() == endpoints.first);
    if (!ends_ok) return TrailViolation::WrongEndpoints;
    if (t.parity(g) != (want_odd ? 1 : 0)) return TrailViolation::WrongParity;
    return std::nullopt;
}

/// True when the vertex sequence never repeats (and hence the trail is a
/// simple path, or trivial).
inline bool is_simple_path(const Trail& t) {
    std::vector<VertexId> vs = t.vertices;
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

inline Trail reverse(const Trail& t) {
    Trail r;
    r.vertices.assign(t.vertices.rbegin(), t.vertices.rend());
    r.edges.assign(t.edges.rbegin(), t.edges.rend());
    return r;
}

inline Trail concat(const Trail& a, const Trail& b) {
    require(!a.vertices.empty() && !b.vertices.empty(), Err::EndpointMismatch,
            "concat of empty trail");
    require(a.back() == b.front(), Err::EndpointMismatch, "concat endpoints differ");
    for (EdgeId e : a.edges)
        for (EdgeId f : b.edges)
            require(e != f, Err::EdgeOverlap, "concat shares edge " + std::to_string(e));
    Trail r = a;
    r.vertices.insert(r.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
    return r;
}

/// Split at a vertex occurrence index (position in the vertex sequence,
/// 0..r). S1 is the prefix ending there, S2 the suffix starting there.
inline std::pair<Trail, Trail> split_at(const Trail& t, int occurrence) {
    require(occurrence >= 0 && occurrence < int(t.vertices.size()), Err::BadPosition,
            "occurrence " + std::to_string(occurrence) + " out of range");
    Trail s1, s2;
    s1.vertices.assign(t.vertices.begin(), t.vertices.begin() + occurrence + 1);
    s1.edges.assign(t.edges.begin(), t.edges.begin() + occurrence);
    s2.vertices.assign(t.vertices.begin() + occurrence, t.vertices.end());
    s2.edges.assign(t.edges.begin() + occurrence, t.edges.end());
    return {std::move(s1), std::move(s2)};
}

/// Contiguous piece between two vertex occurrences, from <= to.
inline Trail subtrail(const Trail& t, int from, int to) {
    require(0 <= from && from <= to && to < int(t.vertices.size()), Err::BadPosition,
            "subtrail range invalid");
    Trail s;
    s.vertices.assign(t.vertices.begin() + from, t.vertices.begin() + to + 1);
    s.edges.assign(t.edges.begin() + from, t.edges.begin() + to);
    return s;
}

inline bool edge_disjoint(const Trail& a, const Trail& b) {
    for (EdgeId e : a.edges)
        for (EdgeId f : b.edges)
            if (e == f) return false;
    return true;
}

inline bool pairwise_edge_disjoint(const std::vector<Trail>& ts) {
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            if (!edge_disjoint(ts[i], ts[j])) return false;
    return true;
}

/// Edge-disjoint odd ({u,v},{u,v})-trails, partitioned by endpoints.
struct TrailCollection {
    std::vector<Trail> trails;
    int k_uu = 0, k_vv = 0, k_uv = 0;

    static TrailCollection of(const Multigraph& g, std::vector<Trail> ts, VertexId u, VertexId v) {
        TrailCollection c;
        c.trails = std::move(ts);
        for (const Trail& t : c.trails) {
            auto bad = verify_trail(g, t, {t.front(), t.back()}, true);
            require(!bad, Err::WitnessInvalid,
                    std::string("collection trail invalid: ") + (bad ? violation_name(*bad) : ""));
            bool fu = t.front() == u || t.front() == v;
            bool bu = t.back() == u || t.back() == v;
            require(fu && bu, Err::WitnessInvalid, "trail endpoint outside {u,v}");
            if (t.front() == t.back())
                (t.front() == u ? c.k_uu : c.k_vv)++;
            else
                c.k_uv++;
        }
        require(pairwise_edge_disjoint(c.trails), Err::WitnessInvalid,
                "collection trails share an edge");
        return c;
    }

    int size() const { return int(trails.size()); }
};

}  // namespace oddtrails
