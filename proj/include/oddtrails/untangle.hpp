#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "oddtrails/contacts.hpp"
#include "oddtrails/flow.hpp"

namespace oddtrails {
namespace untangle {

enum class CaseKind { A, B, C, D, E };

inline const char* case_name(CaseKind k) {
    switch (k) {
        case CaseKind::A: return "A";
        case CaseKind::B: return "B";
        case CaseKind::C: return "C";
        case CaseKind::D: return "D";
        case CaseKind::E: return "E";
    }
    return "?";
}

/// Witnessed classification of (paths, trails) into five cases:
///   A: enough contact-free paths to absorb every (u,u)/(v,v)-trail;
///   B: some path's first contact lies on a (v,v)-trail;
///   C: some path's last contact lies on a (u,u)-trail;
///   D: three paths make their first contact with one (u,{u,v})-trail;
///   E: three paths make their last contact with one ({u,v},v)-trail.
struct CaseTag {
    CaseKind kind;
    std::vector<int> path_idx;      // A: the paths consumed; B/C: one; D/E: three
    int trail_idx = -1;             // B/C/D/E
    std::vector<Contact> contacts;  // matching contacts, in stored-orientation coords
};

namespace detail {

enum class TrailClass { UU, VV, UV };

inline TrailClass classify_trail(const Trail& t, VertexId u, VertexId v) {
    if (t.front() == t.back()) return t.front() == u ? TrailClass::UU : TrailClass::VV;
    (void)v;
    return TrailClass::UV;
}

struct PathContacts {
    // All contacts of one path against every trail, plus the first/last
    // contact (by position along the path).
    std::vector<std::pair<int, Contact>> all;  // (trail index, contact)
    int first = -1, last = -1;                 // indices into all; -1 if contact-free
};

inline PathContacts scan_path(const Trail& p, const std::vector<Trail>& trails) {
    PathContacts pc;
    for (size_t ti = 0; ti < trails.size(); ++ti)
        for (const Contact& c : contacts(p, trails[ti])) pc.all.emplace_back(int(ti), c);
    for (size_t i = 0; i < pc.all.size(); ++i) {
        if (pc.first < 0 || pc.all[i].second.p_lo < pc.all[pc.first].second.p_lo)
            pc.first = int(i);
        if (pc.last < 0 || pc.all[i].second.p_hi > pc.all[pc.last].second.p_hi) pc.last = int(i);
    }
    return pc;
}

}  // namespace detail

/// First applicable case in priority order A..E with lowest-index
/// witnesses. The classification is exhaustive whenever |paths| >=
/// 2|trails|; reaching the end signals an implementation bug.
inline CaseTag classify(const PathFamily& paths, const TrailCollection& col, VertexId u,
                        VertexId v) {
    require(int(paths.size()) >= 2 * col.size(), Err::WitnessInvalid,
            "need |P| >= 2|T| for the classification");
    std::vector<detail::PathContacts> per_path;
    per_path.reserve(paths.size());
    for (const Trail& p : paths) per_path.push_back(detail::scan_path(p, col.trails));

    // Case A.
    std::vector<int> zero_contact;
    for (size_t i = 0; i < paths.size(); ++i)
        if (per_path[i].all.empty()) zero_contact.push_back(int(i));
    int want = col.k_uu + col.k_vv;
    if (int(zero_contact.size()) >= want) {
        zero_contact.resize(want);
        return {CaseKind::A, std::move(zero_contact), -1, {}};
    }

    auto trail_class = [&](int ti) { return detail::classify_trail(col.trails[ti], u, v); };

    // Case B.
    for (size_t i = 0; i < paths.size(); ++i) {
        const auto& pc = per_path[i];
        if (pc.first < 0) continue;
        auto [ti, c] = pc.all[pc.first];
        if (trail_class(ti) == detail::TrailClass::VV)
            return {CaseKind::B, {int(i)}, ti, {c}};
    }
    // Case C.
    for (size_t i = 0; i < paths.size(); ++i) {
        const auto& pc = per_path[i];
        if (pc.last < 0) continue;
        auto [ti, c] = pc.all[pc.last];
        if (trail_class(ti) == detail::TrailClass::UU)
            return {CaseKind::C, {int(i)}, ti, {c}};
    }
    // Case D: three first contacts on one (u,u)- or (u,v)-trail.
    for (int ti = 0; ti < col.size(); ++ti) {
        if (trail_class(ti) == detail::TrailClass::VV) continue;
        std::vector<int> hits;
        std::vector<Contact> cs;
        for (size_t i = 0; i < paths.size() && int(hits.size()) < 3; ++i) {
            const auto& pc = per_path[i];
            if (pc.first < 0 || pc.all[pc.first].first != ti) continue;
            hits.push_back(int(i));
            cs.push_back(pc.all[pc.first].second);
        }
        if (hits.size() == 3) return {CaseKind::D, std::move(hits), ti, std::move(cs)};
    }
    // Case E: three last contacts on one (u,v)- or (v,v)-trail.
    for (int ti = 0; ti < col.size(); ++ti) {
        if (trail_class(ti) == detail::TrailClass::UU) continue;
        std::vector<int> hits;
        std::vector<Contact> cs;
        for (size_t i = 0; i < paths.size() && int(hits.size()) < 3; ++i) {
            const auto& pc = per_path[i];
            if (pc.last < 0 || pc.all[pc.last].first != ti) continue;
            hits.push_back(int(i));
            cs.push_back(pc.all[pc.last].second);
        }
        if (hits.size() == 3) return {CaseKind::E, std::move(hits), ti, std::move(cs)};
    }
    fail(Err::ClassificationFailure, "no classification case applies");
}

namespace detail {

/// Contact coordinates after reversing the path or trail it refers to.
inline Contact flip_path(const Contact& c, int path_len) {
    return {path_len - 1 - c.p_hi, path_len - 1 - c.p_lo, c.t_lo, c.t_hi, !c.forward};
}
inline Contact flip_trail(const Contact& c, int trail_len) {
    return {c.p_lo, c.p_hi, trail_len - 1 - c.t_hi, trail_len - 1 - c.t_lo, !c.forward};
}

/// Occurrence index in T of the path-side start vertex of a contact: the
/// endpoint of the contact's t-range adjacent to the untraversed prefix of
/// the path. Never a bare vertex id, since trails repeat vertices.
inline int split_occurrence(const Contact& c) { return c.forward ? c.t_lo : c.t_hi + 1; }

/// Case B core, shared with case C through reversal: path makes its first
/// contact with trail T (both already oriented so the relevant terminal is
/// the path's start). Returns the path prefix glued to the parity-correct
/// half of T.
inline Trail first_contact_splice(const Multigraph& g, const Trail& path, const Trail& t,
                                  const Contact& c) {
    int occ = split_occurrence(c);
    auto [s1, s2] = split_at(t, occ);
    Trail prefix = subtrail(path, 0, c.p_lo);
    require(prefix.back() == t.vertices[occ], Err::WitnessInvalid,
            "contact vertex mismatch at splice point");
    // Choose the half that makes the whole trail odd.
    if ((prefix.parity(g) + s2.parity(g)) % 2 == 1) return concat(prefix, s2);
    return concat(prefix, reverse(s1));
}

/// Cases D/E core: three paths' first contacts on one trail oriented to
/// start at the shared terminal. Builds T1..T4 from the contact splits and
/// returns the lowest-index odd one.
inline Trail fan_splice(const Multigraph& g, const std::vector<Trail>& three_paths, const Trail& t,
                        std::vector<Contact> cs) {
    // Order the witnesses along T; contacts of distinct paths are edge-
    // disjoint in T, so starts are distinct.
    std::vector<int> order{0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cs[a].t_lo < cs[b].t_lo; });
    require(cs[order[0]].t_lo != cs[order[1]].t_lo && cs[order[1]].t_lo != cs[order[2]].t_lo,
            Err::WitnessInvalid, "contact starts tie along T");

    std::array<int, 3> occ;
    std::array<Trail, 3> q;
    for (int r = 0; r < 3; ++r) {
        const Contact& c = cs[order[r]];
        occ[r] = split_occurrence(c);
        q[r] = subtrail(three_paths[order[r]], 0, c.p_lo);
    }
    require(occ[0] <= occ[1] && occ[1] <= occ[2], Err::WitnessInvalid,
            "split occurrences out of order");

    Trail s0 = subtrail(t, 0, occ[0]);
    Trail s1 = subtrail(t, occ[0], occ[1]);
    Trail s2 = subtrail(t, occ[1], occ[2]);
    Trail s3 = subtrail(t, occ[2], t.length());

    std::array<Trail, 4> candidates = {
        concat(s0, reverse(q[0])),
        concat(concat(q[0], s1), reverse(q[1])),
        concat(concat(q[1], s2), reverse(q[2])),
        concat(q[2], s3),
    };
    for (const Trail& cand : candidates)
        if (cand.parity(g) == 1) return cand;
    fail(Err::WitnessInvalid, "no odd trail among the four splice candidates");
}

}  // namespace detail

/// Apply the transformation for a classified case, producing the next
/// collection (same size, all odd, endpoints in {u,v}, disjoint).
inline TrailCollection transform(const Multigraph& g, const CaseTag& tag, const PathFamily& paths,
                                 const TrailCollection& col, VertexId u, VertexId v) {
    std::vector<Trail> next = col.trails;
    switch (tag.kind) {
        case CaseKind::A: {
            // Pair each contact-free path with an odd (u,u)/(v,v)-trail:
            // odd paths replace the trail, even paths absorb it.
            std::vector<int> closed;
            for (int ti = 0; ti < col.size(); ++ti)
                if (detail::classify_trail(col.trails[ti], u, v) != detail::TrailClass::UV)
                    closed.push_back(ti);
            require(tag.path_idx.size() == closed.size(), Err::WitnessInvalid,
                    "case A needs one contact-free path per closed trail");
            for (size_t i = 0; i < closed.size(); ++i) {
                const Trail& p = paths[tag.path_idx[i]];
                Trail oriented = p.front() == u ? p : reverse(p);
                const Trail& t = col.trails[closed[i]];
                if (p.parity(g) == 1) {
                    next[closed[i]] = oriented;
                } else if (t.front() == u) {
                    next[closed[i]] = concat(t, oriented);  // u ->T u ->P v
                } else {
                    next[closed[i]] = concat(oriented, t);  // u ->P v ->T v
                }
            }
            break;
        }
        case CaseKind::B: {
            // Paths from the fixed family run u -> v, so the stored contact
            // coordinates are already in first-contact form.
            const Trail& p = paths[tag.path_idx[0]];
            require(p.front() == u, Err::WitnessInvalid, "path family must start at u");
            next[tag.trail_idx] =
                detail::first_contact_splice(g, p, col.trails[tag.trail_idx], tag.contacts[0]);
            break;
        }
        case CaseKind::C: {
            // Mirror of B: reversing the path turns its last contact into
            // the first contact of a (v,u)-path; the (u,u)-trail's halves
            // already end at u.
            const Trail& p = paths[tag.path_idx[0]];
            require(p.front() == u, Err::WitnessInvalid, "path family must start at u");
            Contact c = detail::flip_path(tag.contacts[0], p.length());
            next[tag.trail_idx] =
                detail::first_contact_splice(g, reverse(p), col.trails[tag.trail_idx], c);
            break;
        }
        case CaseKind::D:
        case CaseKind::E: {
            bool mirror = tag.kind == CaseKind::E;
            VertexId anchor = mirror ? v : u;
            const Trail& t = col.trails[tag.trail_idx];
            bool flip_t = t.front() != anchor;  // orient T to start at the anchor
            Trail t_or = flip_t ? reverse(t) : t;
            require(t_or.front() == anchor, Err::WitnessInvalid, "trail misses the anchor");
            std::vector<Trail> three;
            std::vector<Contact> cs;
            for (int r = 0; r < 3; ++r) {
                const Trail& p = paths[tag.path_idx[r]];
                require(p.front() == u, Err::WitnessInvalid, "path family must start at u");
                Contact c = tag.contacts[r];
                if (mirror) {
                    // Last contacts become first contacts of the reversed paths.
                    three.push_back(reverse(p));
                    c = detail::flip_path(c, p.length());
                } else {
                    three.push_back(p);
                }
                if (flip_t) c = detail::flip_trail(c, t.length());
                cs.push_back(c);
            }
            next[tag.trail_idx] = detail::fan_splice(g, three, t_or, cs);
            break;
        }
    }
    return TrailCollection::of(g, std::move(next), u, v);
}

/// Per-iteration trace record for debugging and the termination test.
struct IterationTrace {
    int iteration;
    CaseKind kind;
    int contacts;
    int k_uv;
    int phi;
};

using TraceFn = std::function<void(const IterationTrace&)>;

/// Convert |That| edge-disjoint odd ({u,v},{u,v})-trails into |That| odd
/// (u,v)-trails, provided lambda(u,v) >= 2|That|. The path family is fixed
/// once; each round classifies and transforms, and the potential
/// 2C(P,T) - k_uv drops every non-terminal round, bounding the loop by
/// 2|E| + |That| iterations.
inline std::vector<Trail> run(const Multigraph& g, VertexId u, VertexId v,
                              const TrailCollection& that, const TraceFn& trace = {}) {
    require(u != v, Err::SameVertex, "untangle needs distinct terminals");
    int k = that.size();
    if (k == 0) return {};
    int lam = lambda(g, u, v);
    require(lam >= 2 * k, Err::ConnectivityTooLow,
            "lambda = " + std::to_string(lam) + " < 2k = " + std::to_string(2 * k));
    PathFamily paths = disjoint_paths(g, u, v, 2 * k);

    TrailCollection col = that;
    int limit = 2 * g.edge_count() + k;
    int iter = 0;
    Potential phi = potential(paths, col);
    require(-k <= phi.value && phi.value <= 2 * g.edge_count(), Err::WitnessInvalid,
            "potential out of its proven range");
    while (col.k_uv < k) {
        require(++iter <= limit, Err::IterationBoundExceeded,
                "more than 2|E|+k = " + std::to_string(limit) + " iterations");
        CaseTag tag = classify(paths, col, u, v);
        TrailCollection after = transform(g, tag, paths, col, u, v);
        Potential phi_after = potential(paths, after);
        if (after.k_uv < k)
            require(phi_after.value <= phi.value - 1, Err::WitnessInvalid,
                    "potential failed to decrease");
        require(-k <= phi_after.value && phi_after.value <= 2 * g.edge_count(),
                Err::WitnessInvalid, "potential out of its proven range");
        if (trace)
            trace({iter, tag.kind, phi_after.contacts, phi_after.k_uv, phi_after.value});
        col = std::move(after);
        phi = phi_after;
    }
    for (const Trail& t : col.trails)
        require(!verify_trail(g, t, {u, v}, true), Err::WitnessInvalid,
                "untangled trail failed verification");
    return col.trails;
}

}  // namespace untangle
}  // namespace oddtrails
