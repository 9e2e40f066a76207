#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "oddtrails/gadget.hpp"

namespace oddtrails {
namespace apath {

/// Cap on gadget size for the exact searches (|V(H)| = 2|E(G)|).
struct Budget {
    int max_h_vertices = 40;
};

/// Either a packing of exactly requested_k vertex-disjoint nonzero
/// A-paths, or a minimum vertex set meeting every nonzero A-path.
struct APathOutcome {
    bool is_packing = false;
    std::vector<HPath> packing;
    std::vector<VertexId> cover;
    int requested_k = 0;
};

/// Disjoint sets with [s] - Y contained in B0 and B0 u B1 avoiding Y; the
/// dual object of the group min-max formula.
struct ValidTriple {
    std::vector<VertexId> y, b0, b1;
};

namespace detail {

inline uint64_t nbit(VertexId n) { return uint64_t(1) << n; }

/// Search over *reduced* nonzero A-paths: paths alternating link edges
/// with single clique hops. Any A-path shortcuts inside cliques to a
/// reduced one with the same gamma-length and a subset of its vertices, so
/// reduced paths suffice for exact packing, covering and existence.
class Search {
public:
    Search(const GadgetGraph& gg, const Budget& budget) : gg_(gg) {
        require(gg.h.vertex_count() <= budget.max_h_vertices, Err::BudgetExceeded,
                "gadget has " + std::to_string(gg.h.vertex_count()) + " nodes, budget is " +
                    std::to_string(budget.max_h_vertices));
        require(gg.h.vertex_count() <= 62, Err::BudgetExceeded, "gadget beyond 62 nodes");
        in_a_.assign(gg.h.vertex_count(), 0);
        for (VertexId a : gg.a_set) in_a_[a] = 1;
        fail_.assign(size_t(gg.h.vertex_count()) * 2, {});
        compute_link_bounds();
    }

    uint64_t full_mask() const { return (nbit(gg_.h.vertex_count() - 1) << 1) - 1; }

    const GadgetGraph& gadget() const { return gg_; }

    /// Any reduced nonzero A-path inside avail?
    bool exists(uint64_t avail) {
        for (VertexId a : gg_.a_set) {
            if (!(avail & nbit(a))) continue;
            VertexId z = gg_.partner[a];
            if (!(avail & nbit(z))) continue;
            int par = gg_.label(gg_.link_edge_of_node[a]);
            if (arrived(z, par, avail & ~nbit(a) & ~nbit(z))) return true;
        }
        return false;
    }

    /// Shortest (fewest link edges) reduced nonzero A-path inside avail.
    std::optional<HPath> find_short(uint64_t avail) {
        for (int limit = 1; limit <= gg_.h.vertex_count(); ++limit) {
            for (VertexId a : gg_.a_set) {
                if (!(avail & nbit(a))) continue;
                VertexId z = gg_.partner[a];
                if (!(avail & nbit(z))) continue;
                HPath p{a, z};
                int par = gg_.label(gg_.link_edge_of_node[a]);
                if (bounded(z, par, avail & ~nbit(a) & ~nbit(z), limit - 1, p)) return p;
            }
        }
        return std::nullopt;
    }

    /// Enumerate reduced nonzero A-paths from `a` inside avail, deduped by
    /// node set; ends_allowed masks admissible final nodes. The visitor
    /// returns false to abort the enumeration.
    void enumerate_from(VertexId a, uint64_t avail, uint64_t ends_allowed,
                        const std::function<bool(const HPath&, uint64_t)>& visit) {
        if (!(avail & nbit(a))) return;
        VertexId z = gg_.partner[a];
        if (!(avail & nbit(z))) return;
        seen_candidate_.clear();
        stop_ = false;
        HPath p{a, z};
        int par = gg_.label(gg_.link_edge_of_node[a]);
        collect(z, par, avail & ~nbit(a) & ~nbit(z), nbit(a) | nbit(z), ends_allowed, p, visit);
    }

private:
    // reach_[x][p]: some walk from x can reach A picking up parity p
    // (static, full H); admissible pruning for any sub-mask.
    void compute_link_bounds() {
        const auto& h = gg_.h;
        reach_.assign(h.vertex_count(), {false, false});
        std::deque<std::pair<VertexId, int>> q;
        for (VertexId a : gg_.a_set) {
            reach_[a][0] = true;
            q.emplace_back(a, 0);
        }
        while (!q.empty()) {
            auto [x, p] = q.front();
            q.pop_front();
            for (EdgeId e : h.incident(x)) {
                VertexId y = h.other_end(e, x);
                int np = p ^ gg_.label(e);
                if (!reach_[y][np]) {
                    reach_[y][np] = true;
                    q.emplace_back(y, np);
                }
            }
        }
    }

    // State: just arrived at node y through its link edge, with parity par
    // accumulated; avail excludes everything on the path (and y).
    bool arrived(VertexId y, int par, uint64_t avail) {
        if (in_a_[y] && par == 1) return true;
        if (!reach_[y][1 ^ par]) return false;
        auto& seen = fail_[size_t(y) * 2 + par];
        if (seen.count(avail)) return false;
        for (VertexId q : gg_.clique_nodes[gg_.g_vertex_of_node[y]]) {
            if (!(avail & nbit(q))) continue;
            VertexId z = gg_.partner[q];
            if (!(avail & nbit(z))) continue;
            int np = par ^ gg_.label(gg_.link_edge_of_node[q]);
            if (arrived(z, np, avail & ~nbit(q) & ~nbit(z))) return true;
        }
        seen.insert(avail);
        return false;
    }

    bool bounded(VertexId y, int par, uint64_t avail, int links_left, HPath& p) {
        if (in_a_[y] && par == 1) return true;
        if (links_left == 0 || !reach_[y][1 ^ par]) return false;
        for (VertexId q : gg_.clique_nodes[gg_.g_vertex_of_node[y]]) {
            if (!(avail & nbit(q))) continue;
            VertexId z = gg_.partner[q];
            if (!(avail & nbit(z))) continue;
            int np = par ^ gg_.label(gg_.link_edge_of_node[q]);
            p.push_back(q);
            p.push_back(z);
            if (bounded(z, np, avail & ~nbit(q) & ~nbit(z), links_left - 1, p)) return true;
            p.pop_back();
            p.pop_back();
        }
        return false;
    }

    void collect(VertexId y, int par, uint64_t avail, uint64_t used, uint64_t ends_allowed,
                 HPath& p, const std::function<bool(const HPath&, uint64_t)>& visit) {
        if (stop_) return;
        if (in_a_[y] && par == 1 && (ends_allowed & nbit(y)) &&
            seen_candidate_.insert(used).second) {
            if (!visit(p, used)) {
                stop_ = true;
                return;
            }
        }
        if (!reach_[y][1 ^ par]) return;  // no further candidate reachable
        for (VertexId q : gg_.clique_nodes[gg_.g_vertex_of_node[y]]) {
            if (stop_) return;
            if (!(avail & nbit(q))) continue;
            VertexId z = gg_.partner[q];
            if (!(avail & nbit(z))) continue;
            int np = par ^ gg_.label(gg_.link_edge_of_node[q]);
            p.push_back(q);
            p.push_back(z);
            collect(z, np, avail & ~nbit(q) & ~nbit(z), used | nbit(q) | nbit(z), ends_allowed, p,
                    visit);
            p.pop_back();
            p.pop_back();
        }
    }

    const GadgetGraph& gg_;
    std::vector<char> in_a_;
    std::vector<std::array<bool, 2>> reach_;
    std::vector<std::unordered_set<uint64_t>> fail_;
    std::unordered_set<uint64_t> seen_candidate_;
    bool stop_ = false;
};

struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
        uint64_t h = p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0x7f4a7c15u);
        h ^= h >> 31;
        return size_t(h * 0xbf58476d1ce4e5b9ULL);
    }
};

/// Exact packing search. banned marks A-nodes decided not to serve as an
/// endpoint (they may still appear as interior vertices); used marks
/// vertices consumed by chosen paths.
class Packer {
public:
    Packer(Search& s) : s_(s), gg_(s.gadget()) {}

    bool try_pack(int need, std::vector<HPath>* out) {
        chosen_.clear();
        bool ok = rec(s_.full_mask(), 0, need);
        if (ok && out) *out = chosen_;
        return ok;
    }

private:
    bool rec(uint64_t avail, uint64_t banned, int need) {
        if (need <= 0) return true;
        uint64_t endpoints = 0;
        for (VertexId a : gg_.a_set)
            if ((avail & detail::nbit(a)) && !(banned & detail::nbit(a)))
                endpoints |= detail::nbit(a);
        if (__builtin_popcountll(endpoints) < 2 * need) return false;
        auto key = std::make_pair(avail, banned);
        if (auto it = failed_.find(key); it != failed_.end() && it->second <= need) return false;

        VertexId pivot = __builtin_ctzll(endpoints);
        bool found = false;
        s_.enumerate_from(pivot, avail, endpoints & ~detail::nbit(pivot),
                          [&](const HPath& p, uint64_t used) {
                              chosen_.push_back(p);
                              if (rec(avail & ~used, banned, need - 1)) {
                                  found = true;
                                  return false;  // abort the enumeration
                              }
                              chosen_.pop_back();
                              return true;
                          });
        if (found) return true;
        if (rec(avail, banned | detail::nbit(pivot), need)) return true;
        auto [it, fresh] = failed_.try_emplace(key, need);
        if (!fresh) it->second = std::min(it->second, need);
        return false;
    }

    Search& s_;
    const GadgetGraph& gg_;
    std::vector<HPath> chosen_;
    std::unordered_map<std::pair<uint64_t, uint64_t>, int, PairHash> failed_;
};

}  // namespace detail

/// Maximum number of vertex-disjoint nonzero A-paths (exact).
inline int nu_apaths(const GadgetGraph& gg, const Budget& budget = {}) {
    if (gg.h.vertex_count() == 0) return 0;
    detail::Search s(gg, budget);
    detail::Packer packer(s);
    int k = 0;
    while (2 * (k + 1) <= int(gg.a_set.size()) && packer.try_pack(k + 1, nullptr)) ++k;
    return k;
}

/// Minimum vertex set meeting every nonzero A-path, by iterative deepening
/// on the cover size; branching follows a shortest surviving path.
inline std::vector<VertexId> min_vertex_cover(const GadgetGraph& gg, const Budget& budget = {}) {
    if (gg.h.vertex_count() == 0) return {};
    detail::Search s(gg, budget);
    std::vector<VertexId> chosen;
    std::unordered_map<uint64_t, int> failed_with;
    std::function<bool(uint64_t, int)> rec = [&](uint64_t avail, int t) -> bool {
        if (!s.exists(avail)) return true;
        if (t == 0) return false;
        if (auto it = failed_with.find(avail); it != failed_with.end() && it->second >= t)
            return false;
        auto path = s.find_short(avail);
        require(path.has_value(), Err::ClassificationFailure, "exists/find mismatch");
        for (VertexId n : *path) {
            chosen.push_back(n);
            if (rec(avail & ~detail::nbit(n), t - 1)) return true;
            chosen.pop_back();
        }
        auto [it, fresh] = failed_with.try_emplace(avail, t);
        if (!fresh) it->second = std::max(it->second, t);
        return false;
    };
    uint64_t all = s.full_mask();
    for (int t = 0; t <= gg.h.vertex_count(); ++t) {
        chosen.clear();
        if (rec(all, t)) return chosen;
    }
    fail(Err::ClassificationFailure, "cover search exhausted");
}

/// Exact stand-in for the group-labeled packing/covering black box: a
/// k-packing when nu(H,A,gamma) >= k, otherwise a minimum vertex cover
/// (guaranteed <= 2k-2 by the min-max duality behind the interface).
inline APathOutcome solve_apaths(const GadgetGraph& gg, int k, const Budget& budget = {}) {
    APathOutcome out;
    out.requested_k = k;
    if (k <= 0) {
        out.is_packing = true;
        return out;
    }
    if (gg.h.vertex_count() > 0) {
        detail::Search s(gg, budget);
        detail::Packer packer(s);
        std::vector<HPath> packing;
        if (2 * k <= int(gg.a_set.size()) && packer.try_pack(k, &packing)) {
            out.is_packing = true;
            out.packing = std::move(packing);
            return out;
        }
    }
    out.is_packing = false;
    out.cover = min_vertex_cover(gg, budget);
    require(int(out.cover.size()) <= 2 * k - 2, Err::ClassificationFailure,
            "cover exceeds the 2k-2 guarantee");
    return out;
}

/// p(Y,B0,B1) = |Y| + sum over components K of H - Y - E0 of
/// floor(|(B0 u B1) ∩ K| / 2), where E0 is the set of 0-labeled edges
/// inside B0 u B1 after switching the labeling at every vertex of B1.
inline int eval_triple(const GadgetGraph& gg, const ValidTriple& t) {
    const Multigraph& h = gg.h;
    std::vector<int> role(h.vertex_count(), 0);  // 1=Y, 2=B0, 3=B1
    auto mark = [&](const std::vector<VertexId>& vs, int r) {
        for (VertexId x : vs) {
            require(x >= 0 && x < h.vertex_count(), Err::InvalidTriple, "vertex out of range");
            require(role[x] == 0, Err::InvalidTriple, "triple sets overlap");
            role[x] = r;
        }
    };
    mark(t.y, 1);
    mark(t.b0, 2);
    mark(t.b1, 3);
    for (VertexId a : gg.a_set)
        require(role[a] == 1 || role[a] == 2, Err::InvalidTriple, "[s] - Y not inside B0");

    EdgeSet removed(h.edge_universe());
    for (EdgeId e = 0; e < h.edge_universe(); ++e) {
        if (!h.edge_active(e)) continue;
        auto [x, y] = h.ends(e);
        if (role[x] >= 2 && role[y] >= 2) {
            int switched = gg.label(e) ^ (role[x] == 3) ^ (role[y] == 3);
            if (switched == 0) removed.insert(e);
        }
    }
    Multigraph pruned = h.without_edges(removed);
    int p = int(t.y.size());
    for (const auto& comp : pruned.components(t.y)) {
        int b = 0;
        for (VertexId x : comp) b += role[x] >= 2;
        p += b / 2;
    }
    return p;
}

/// Claim backing the triple-merging arithmetic: for q >= 2 nonnegative
/// integers, sum floor(r_i/2) >= floor((sum r_i - (q-1)) / 2).
inline bool floor_inequality_check(const std::vector<long long>& r) {
    require(r.size() >= 2, Err::BadParameter, "need q >= 2");
    long long lhs = 0, sum = 0;
    for (long long x : r) {
        require(x >= 0, Err::BadParameter, "negative entry");
        lhs += x / 2;
        sum += x;
    }
    long long q = (long long)r.size();
    long long num = sum - (q - 1);
    long long rhs = num >= 0 ? num / 2 : -((-num + 1) / 2);
    return lhs >= rhs;
}

}  // namespace apath
}  // namespace oddtrails
