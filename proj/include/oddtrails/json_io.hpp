#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddtrails/driver.hpp"
#include "oddtrails/graph.hpp"
#include "oddtrails/minmax.hpp"
#include "oddtrails/trail.hpp"

namespace oddtrails {
namespace io {

using nlohmann::json;

/// A graph plus its terminal pair, as carried by the wire schema:
/// {"vertices": n, "edges": [{"id", "u", "v", "signed"}], "terminals": {"u","v"}}.
struct GraphDoc {
    Multigraph graph;
    std::optional<VertexId> u, v;
};

inline json graph_to_json(const Multigraph& g, std::optional<VertexId> u = {},
                          std::optional<VertexId> v = {}) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_universe(); ++e) {
        if (!g.edge_active(e)) continue;
        auto [a, b] = g.ends(e);
        json je{{"id", e}, {"u", a}, {"v", b}};
        if (!g.is_signed_edge(e)) je["signed"] = false;
        edges.push_back(std::move(je));
    }
    json doc{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
    if (u && v) doc["terminals"] = {{"u", *u}, {"v", *v}};
    return doc;
}

inline GraphDoc graph_from_json(const json& doc) {
    require(doc.is_object() && doc.contains("vertices") && doc.contains("edges"),
            Err::InvalidInput, "graph document needs vertices and edges");
    int n = doc.at("vertices").get<int>();
    const json& edges = doc.at("edges");
    require(edges.is_array(), Err::InvalidInput, "edges must be an array");
    int universe = 0;
    for (const json& je : edges) universe = std::max(universe, je.at("id").get<int>() + 1);
    std::vector<std::pair<VertexId, VertexId>> ends(universe, {0, 0});
    EdgeSet active(universe), sigma(universe);
    for (const json& je : edges) {
        EdgeId id = je.at("id").get<int>();
        require(id >= 0 && !active.contains(id), Err::InvalidInput,
                "duplicate or negative edge id " + std::to_string(id));
        ends[id] = {je.at("u").get<int>(), je.at("v").get<int>()};
        active.insert(id);
        if (je.value("signed", true)) sigma.insert(id);
    }
    GraphDoc out{Multigraph(n, std::move(ends), sigma, active), {}, {}};
    if (doc.contains("terminals")) {
        const json& t = doc.at("terminals");
        out.u = t.at("u").get<int>();
        out.v = t.at("v").get<int>();
        require(*out.u >= 0 && *out.u < n && *out.v >= 0 && *out.v < n, Err::InvalidInput,
                "terminal out of range");
    }
    return out;
}

inline json trail_to_json(const Trail& t) {
    return json{{"vertices", t.vertices}, {"edges", t.edges}};
}

inline Trail trail_from_json(const json& j) {
    require(j.is_object() && j.contains("vertices") && j.contains("edges"), Err::InvalidInput,
            "trail needs vertices and edges");
    Trail t;
    t.vertices = j.at("vertices").get<std::vector<VertexId>>();
    t.edges = j.at("edges").get<std::vector<EdgeId>>();
    require(!t.vertices.empty() && t.vertices.size() == t.edges.size() + 1, Err::InvalidInput,
            "trail sequence lengths mismatch");
    return t;
}

inline json outcome_to_json(const driver::SolveOutcome& o) {
    json doc{{"k", o.k},
             {"outcome", o.is_packing ? "packing" : "cover"},
             {"provenance", driver::provenance_name(o.provenance)}};
    if (o.is_packing) {
        json trails = json::array();
        for (const Trail& t : o.trails) trails.push_back(trail_to_json(t));
        doc["trails"] = std::move(trails);
    } else {
        doc["cover"] = o.cover.to_vector();
    }
    return doc;
}

inline json certificate_to_json(const minmax::BipartiteCertificate& c) {
    return json{{"S0", c.s0}, {"S1", c.s1}, {"value", c.value}};
}

}  // namespace io
}  // namespace oddtrails
