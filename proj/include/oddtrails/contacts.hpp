#pragma once

#include <vector>

#include "oddtrails/trail.hpp"

namespace oddtrails {

/// Maximal shared segment between a path P and a trail T: the edges of P
/// at positions [p_lo..p_hi] appear contiguously in T at [t_lo..t_hi],
/// traversed forward (same direction) or in reverse. Extending the run by
/// one edge on either side of P breaks the property.
struct Contact {
    int p_lo, p_hi;  // inclusive edge positions in P
    int t_lo, t_hi;  // inclusive edge positions in T
    bool forward;    // P traverses the segment along increasing T positions

    int length() const { return p_hi - p_lo + 1; }
};

namespace detail {

/// Direction match: does P traverse edge at p-position i the same way T
/// traverses it at t-position t? Loop-free graphs make this unambiguous.
inline bool same_direction(const Trail& p, int i, const Trail& t, int ti) {
    return p.vertices[i] == t.vertices[ti] && p.vertices[i + 1] == t.vertices[ti + 1];
}

}  // namespace detail

/// All contacts between a simple path P and a trail T, ordered by p_lo.
/// Contacts are pairwise edge-disjoint by construction.
inline std::vector<Contact> contacts(const Trail& p, const Trail& t) {
    require(is_simple_path(p), Err::NotAPath, "contacts: P must be a simple path");
    // Edge ids are unique within a trail, so each shared edge has one T position.
    auto t_pos = [&](EdgeId e) -> int {
        for (size_t i = 0; i < t.edges.size(); ++i)
            if (t.edges[i] == e) return int(i);
        return -1;
    };
    std::vector<Contact> out;
    int r = p.length();
    int i = 0;
    while (i < r) {
        int ti = t_pos(p.edges[i]);
        if (ti < 0) {
            ++i;
            continue;
        }
        bool fwd = detail::same_direction(p, i, t, ti);
        int j = i;
        int tj = ti;
        while (j + 1 < r) {
            int tn = fwd ? tj + 1 : tj - 1;
            if (tn < 0 || tn >= t.length()) break;
            if (t.edges[tn] != p.edges[j + 1]) break;
            if (detail::same_direction(p, j + 1, t, tn) != fwd) break;
            ++j;
            tj = tn;
        }
        out.push_back({i, j, fwd ? ti : tj, fwd ? tj : ti, fwd});
        i = j + 1;
    }
    return out;
}

/// C(P,T): number of contacts.
inline int contact_count(const Trail& p, const Trail& t) { return int(contacts(p, t).size()); }

/// C(P,Ts) summed over a collection.
inline int contact_count(const Trail& p, const std::vector<Trail>& ts) {
    int c = 0;
    for (const Trail& t : ts) c += contact_count(p, t);
    return c;
}

/// C(Ps,Ts) with the per-pair matrix for diagnostics.
struct ContactTotals {
    int total = 0;
    std::vector<std::vector<int>> matrix;  // [path][trail]
};

inline ContactTotals total_contacts(const std::vector<Trail>& paths,
                                    const std::vector<Trail>& trails) {
    ContactTotals r;
    r.matrix.assign(paths.size(), std::vector<int>(trails.size(), 0));
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = 0; j < trails.size(); ++j) {
            int c = contact_count(paths[i], trails[j]);
            r.matrix[i][j] = c;
            r.total += c;
        }
    return r;
}

/// The potential 2*C(Ps,Ts) - k_uv driving the untangling loop; bounded by
/// -|Ts| <= value <= 2|E(G)| since contacts are edge-disjoint.
struct Potential {
    int contacts = 0;
    int k_uv = 0;
    int value = 0;
};

inline Potential potential(const std::vector<Trail>& paths, const TrailCollection& col) {
    Potential p;
    p.contacts = total_contacts(paths, col.trails).total;
    p.k_uv = col.k_uv;
    p.value = 2 * p.contacts - p.k_uv;
    return p;
}

}  // namespace oddtrails
