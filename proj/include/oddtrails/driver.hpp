#pragma once

#include <string>
#include <vector>

#include "oddtrails/apath.hpp"
#include "oddtrails/flow.hpp"
#include "oddtrails/gadget.hpp"
#include "oddtrails/oracle.hpp"
#include "oddtrails/untangle.hpp"

namespace oddtrails {
namespace driver {

enum class Provenance {
    MinCut,
    SstrailsCover,
    SstrailsPacking,
    UntangledPacking,
    DirectParallelEdges,
};

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::MinCut: return "min-cut";
        case Provenance::SstrailsCover: return "sstrails-cover";
        case Provenance::SstrailsPacking: return "sstrails-packing";
        case Provenance::UntangledPacking: return "untangled-packing";
        case Provenance::DirectParallelEdges: return "direct-parallel-edges";
    }
    return "?";
}

/// Either k verified edge-disjoint odd trails, or a cover whose size meets
/// the factor-2 bound (2k-1 for (u,v), 2k-2 for (s,s)).
struct SolveOutcome {
    bool is_packing = false;
    std::vector<Trail> trails;
    EdgeSet cover;
    int k = 0;
    Provenance provenance = Provenance::SstrailsPacking;

    int cover_size() const { return cover.count(); }
};

struct Budgets {
    apath::Budget apath;
    oracle::Budget oracle;
    untangle::TraceFn trace;  // untangling iterations, when wanted
};

namespace detail {

/// Post-check a cover with the independent oracle when the instance fits
/// its budget; outside the budget the cover is returned on the strength of
/// its construction alone.
inline void oracle_check_cover(const Multigraph& g, const EdgeSet& cover,
                               const std::vector<VertexId>& from, const std::vector<VertexId>& to,
                               const Budgets& b) {
    Multigraph rest = g.without_edges(cover);
    if (rest.edge_count() > b.oracle.max_edges || rest.edge_universe() > 64) return;
    require(!oracle::odd_trail_exists(rest, from, to, b.oracle), Err::WitnessInvalid,
            "cover fails oracle verification");
}

/// Extract an odd trail with endpoints in (from, to) out of a specific
/// edge set (the preimage of one gadget trail). For (s,s)-preimages an odd
/// piece anchored at u or v always exists, because components of the set
/// merge only at the identified vertex and parities add up odd.
inline Trail lift_from_edges(const Multigraph& g, const std::vector<EdgeId>& edges,
                             const std::vector<VertexId>& from, const std::vector<VertexId>& to) {
    EdgeSet keep(g.edge_universe());
    for (EdgeId e : edges) keep.insert(e);
    Multigraph sub = g.without_edges(g.active_edges() - keep);
    auto t = oracle::first_odd_trail(sub, from, to, oracle::Budget{62});
    require(t.has_value(), Err::LiftFailed, "no odd trail with the required endpoints in lift");
    return *t;
}

}  // namespace detail

/// The (s,s) pipeline: k edge-disjoint odd (s,s)-trails or a cover of
/// size at most 2k-2, via the gadget and the A-path oracle.
inline SolveOutcome solve_ss(const Multigraph& g, VertexId s, int k, const Budgets& b = {}) {
    require(k >= 0, Err::BadParameter, "negative k");
    SolveOutcome out;
    out.k = k;
    out.cover = EdgeSet(g.edge_universe());
    if (k == 0) {
        out.is_packing = true;
        out.provenance = Provenance::SstrailsPacking;
        return out;
    }
    GadgetGraph gg = build_gadget(g, s);
    apath::APathOutcome r = apath::solve_apaths(gg, k, b.apath);
    if (r.is_packing) {
        for (const HPath& p : r.packing) {
            Trail t = path_to_trail(gg, p);
            require(!verify_trail(g, t, {s, s}, true), Err::WitnessInvalid,
                    "pi image failed verification");
            out.trails.push_back(std::move(t));
        }
        require(pairwise_edge_disjoint(out.trails), Err::WitnessInvalid,
                "pi images share an edge");
        out.is_packing = true;
        out.provenance = Provenance::SstrailsPacking;
        return out;
    }
    out.cover = vertex_cover_to_edge_cover(gg, r.cover);
    require(out.cover.count() <= 2 * k - 2, Err::WitnessInvalid, "cover exceeds 2k-2");
    detail::oracle_check_cover(g, out.cover, {s}, {s}, b);
    out.is_packing = false;
    out.provenance = Provenance::SstrailsCover;
    return out;
}

/// The (u,v) pipeline: k edge-disjoint odd (u,v)-trails or a cover of
/// size at most 2k-1. Branches: (0) u = v delegates to the (s,s) solver;
/// (1) lambda < 2k makes a min cut the cover; (2) enough signed parallel
/// u-v edges answer directly; (3) otherwise delete E_uv, identify u and v,
/// solve (s,s) with the remaining demand, and either return the lifted
/// cover plus the signed u-v edges, or untangle the lifted packing.
inline SolveOutcome solve_uv(const Multigraph& g, VertexId u, VertexId v, int k,
                             const Budgets& b = {}) {
    require(k >= 0, Err::BadParameter, "negative k");
    require(u >= 0 && u < g.vertex_count() && v >= 0 && v < g.vertex_count(), Err::BadParameter,
            "terminal out of range");
    if (u == v) return solve_ss(g, u, k, b);

    SolveOutcome out;
    out.k = k;
    out.cover = EdgeSet(g.edge_universe());
    if (k == 0) {
        out.is_packing = true;
        out.provenance = Provenance::UntangledPacking;
        return out;
    }

    if (lambda(g, u, v) < 2 * k) {
        out.cover = min_cut(g, u, v);
        require(out.cover.count() <= 2 * k - 1, Err::WitnessInvalid, "min cut exceeds 2k-1");
        detail::oracle_check_cover(g, out.cover, {u}, {v}, b);
        out.is_packing = false;
        out.provenance = Provenance::MinCut;
        return out;
    }

    EdgeSet e_uv(g.edge_universe());
    std::vector<EdgeId> signed_uv;
    for (EdgeId e = 0; e < g.edge_universe(); ++e) {
        if (!g.edge_active(e)) continue;
        auto [a, c] = g.ends(e);
        if ((a == u && c == v) || (a == v && c == u)) {
            e_uv.insert(e);
            if (g.is_signed_edge(e)) signed_uv.push_back(e);
        }
    }

    if (int(signed_uv.size()) >= k) {
        for (int i = 0; i < k; ++i) {
            EdgeId e = signed_uv[i];
            auto [a, c] = g.ends(e);
            out.trails.push_back(Trail({a, c}, {e}));
        }
        out.is_packing = true;
        out.provenance = Provenance::DirectParallelEdges;
        return out;
    }

    Multigraph gd = g.without_edges(e_uv);
    IdentifyResult merged = identify_vertices(gd, u, v);
    int k_rest = k - int(signed_uv.size());
    SolveOutcome inner = solve_ss(merged.graph, merged.merged, k_rest, b);

    if (!inner.is_packing) {
        // Edge ids are stable through deletion and identification, so the
        // inner cover is directly a cover of G - E_uv trails; the signed
        // u-v edges close the remaining odd trails.
        out.cover = inner.cover;
        for (EdgeId e : signed_uv) out.cover.insert(e);
        require(out.cover.count() <= 2 * k - 2, Err::WitnessInvalid, "lifted cover exceeds 2k-2");
        detail::oracle_check_cover(g, out.cover, {u}, {v}, b);
        out.is_packing = false;
        out.provenance = Provenance::SstrailsCover;
        return out;
    }

    std::vector<Trail> that;
    for (const Trail& t : inner.trails)
        that.push_back(detail::lift_from_edges(gd, t.edges, {u, v}, {u, v}));
    for (EdgeId e : signed_uv) {
        auto [a, c] = g.ends(e);
        that.push_back(Trail({a, c}, {e}));
    }
    TrailCollection col = TrailCollection::of(g, std::move(that), u, v);
    out.trails = untangle::run(g, u, v, col, b.trace);
    require(int(out.trails.size()) == k, Err::WitnessInvalid, "untangled packing has wrong size");
    out.is_packing = true;
    out.provenance = Provenance::UntangledPacking;
    return out;
}

/// Odd (C,D)-trail generalization via contraction. Intra-C and intra-D
/// edges are dropped before contracting (the contracted graph must stay
/// loop-free), so packing and cover speak about G minus those edges.
inline SolveOutcome solve_cd(const Multigraph& g, const std::vector<VertexId>& cs,
                             const std::vector<VertexId>& ds, int k, const Budgets& b = {}) {
    ContractResult ctr = contract_terminal_sets(g, cs, ds);
    SolveOutcome inner = solve_uv(ctr.graph, ctr.super_c, ctr.super_d, k, b);
    Multigraph reduced = g.without_edges(ctr.dropped);

    SolveOutcome out;
    out.k = k;
    out.cover = EdgeSet(g.edge_universe());
    out.provenance = inner.provenance;
    if (!inner.is_packing) {
        out.cover = inner.cover;
        if (reduced.edge_count() <= b.oracle.max_edges && reduced.edge_universe() <= 64) {
            Multigraph rest = reduced.without_edges(out.cover);
            require(!oracle::odd_trail_exists(rest, cs, ds, b.oracle), Err::WitnessInvalid,
                    "(C,D) cover fails oracle verification");
        }
        out.is_packing = false;
        return out;
    }
    for (const Trail& t : inner.trails) {
        Trail lifted = detail::lift_from_edges(reduced, t.edges, cs, ds);
        require(!verify_trail(reduced, lifted, {lifted.front(), lifted.back()}, true),
                Err::WitnessInvalid, "lifted (C,D) trail failed verification");
        out.trails.push_back(std::move(lifted));
    }
    require(pairwise_edge_disjoint(out.trails), Err::WitnessInvalid,
            "lifted (C,D) trails share an edge");
    out.is_packing = true;
    return out;
}

}  // namespace driver
}  // namespace oddtrails
