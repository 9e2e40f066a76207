#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "oddtrails/flow.hpp"
#include "oddtrails/trail.hpp"

namespace oddtrails {
namespace oracle {

/// Desk-scale cap on instance size. Searches are exact; exceeding the cap
/// raises BudgetExceeded rather than approximating.
struct Budget {
    int max_edges = 20;
};

namespace detail {

inline uint64_t bit(EdgeId e) { return uint64_t(1) << e; }

/// Exhaustive trail search between two terminal sets, written
/// independently of the solver modules so it can serve as ground truth.
/// States are (vertex, parity, set of still-usable edges); failed states
/// are memoized on the exact remaining mask, so repeated queries on
/// sub-masks of one graph share work.
class TrailSearch {
public:
    TrailSearch(const Multigraph& g, std::vector<VertexId> from, std::vector<VertexId> to,
                const Budget& budget)
        : g_(g), from_(std::move(from)) {
        require(g.edge_count() <= budget.max_edges, Err::BudgetExceeded,
                "instance has " + std::to_string(g.edge_count()) + " edges, budget is " +
                    std::to_string(budget.max_edges));
        require(g.edge_universe() <= 64, Err::BudgetExceeded, "edge id space beyond 64");
        is_target_.assign(g.vertex_count(), 0);
        for (VertexId b : to) is_target_[b] = 1;
        fail_.assign(size_t(g.vertex_count()) * 2, {});
        wdist_ = walk_bounds(g, is_target_);
    }

    /// wdist[v][p]: fewest edges of any walk from v to a target vertex with
    /// sigma-parity p. Walks relax the no-repeated-edge rule, so these are
    /// admissible lower bounds for trails under any edge mask.
    static std::vector<std::array<int, 2>> walk_bounds(const Multigraph& g,
                                                       const std::vector<char>& target) {
        const int INF = 1 << 29;
        std::vector<std::array<int, 2>> dist(g.vertex_count(), {INF, INF});
        std::deque<std::pair<VertexId, int>> q;
        for (VertexId b = 0; b < g.vertex_count(); ++b)
            if (target[b]) {
                dist[b][0] = 0;
                q.emplace_back(b, 0);
            }
        while (!q.empty()) {
            auto [x, p] = q.front();
            q.pop_front();
            for (EdgeId e : g.incident(x)) {
                VertexId y = g.other_end(e, x);
                int np = p ^ g.edge_parity(e);
                if (dist[x][p] + 1 < dist[y][np]) {
                    dist[y][np] = dist[x][p] + 1;
                    q.emplace_back(y, np);
                }
            }
        }
        return dist;
    }

    uint64_t full_mask() const {
        uint64_t m = 0;
        for (EdgeId e = 0; e < g_.edge_universe(); ++e)
            if (g_.edge_active(e)) m |= bit(e);
        return m;
    }

    /// Does some odd trail between the terminal sets exist within avail?
    bool exists(uint64_t avail) {
        for (VertexId a : from_)
            if (search(a, 0, avail)) return true;
        return false;
    }

    /// First odd trail found within avail, sharing the failure memo with
    /// exists(); cheap but makes no length promise.
    std::optional<Trail> find_first(uint64_t avail) {
        for (VertexId a : from_) {
            Trail t(a);
            if (first(a, 0, avail, t)) return t;
        }
        return std::nullopt;
    }

    /// Shortest odd trail within avail by edge count (iterative deepening);
    /// results are cached per mask. Call only when exists(avail).
    const Trail& find_shortest(uint64_t avail) {
        auto it = shortest_.find(avail);
        if (it != shortest_.end()) return it->second;
        int cap = __builtin_popcountll(avail);
        for (int limit = 1; limit <= cap; ++limit) {
            for (VertexId a : from_) {
                Trail t(a);
                if (bounded(a, 0, avail, limit, t))
                    return shortest_.emplace(avail, std::move(t)).first->second;
            }
        }
        fail(Err::ClassificationFailure, "find_shortest called on empty instance");
    }

private:
    bool search(VertexId x, int p, uint64_t avail) {
        if (is_target_[x] && p == 1) return true;
        if (wdist_[x][1 ^ p] > __builtin_popcountll(avail)) return false;
        auto& seen = fail_[size_t(x) * 2 + p];
        if (seen.count(avail)) return false;
        for (EdgeId e : g_.incident(x)) {
            if (!(avail & bit(e))) continue;
            if (search(g_.other_end(e, x), p ^ g_.edge_parity(e), avail & ~bit(e))) return true;
        }
        seen.insert(avail);
        return false;
    }

    bool first(VertexId x, int p, uint64_t avail, Trail& t) {
        if (is_target_[x] && p == 1 && t.length() >= 1) return true;
        if (wdist_[x][1 ^ p] > __builtin_popcountll(avail)) return false;
        auto& seen = fail_[size_t(x) * 2 + p];
        if (seen.count(avail)) return false;
        for (EdgeId e : g_.incident(x)) {
            if (!(avail & bit(e))) continue;
            VertexId y = g_.other_end(e, x);
            t.vertices.push_back(y);
            t.edges.push_back(e);
            if (first(y, p ^ g_.edge_parity(e), avail & ~bit(e), t)) return true;
            t.vertices.pop_back();
            t.edges.pop_back();
        }
        seen.insert(avail);
        return false;
    }

    bool bounded(VertexId x, int p, uint64_t avail, int limit, Trail& t) {
        if (is_target_[x] && p == 1 && t.length() >= 1) return true;
        if (t.length() >= limit) return false;
        if (wdist_[x][1 ^ p] > limit - t.length()) return false;
        for (EdgeId e : g_.incident(x)) {
            if (!(avail & bit(e))) continue;
            VertexId y = g_.other_end(e, x);
            t.vertices.push_back(y);
            t.edges.push_back(e);
            if (bounded(y, p ^ g_.edge_parity(e), avail & ~bit(e), limit, t)) return true;
            t.vertices.pop_back();
            t.edges.pop_back();
        }
        return false;
    }

    const Multigraph& g_;
    std::vector<VertexId> from_;
    std::vector<char> is_target_;
    std::vector<std::array<int, 2>> wdist_;
    std::vector<std::unordered_set<uint64_t>> fail_;
    std::unordered_map<uint64_t, Trail> shortest_;
};

class NuSearch {
public:
    NuSearch(const Multigraph& g, VertexId u, VertexId v, const Budget& budget)
        : g_(g), u_(u), v_(v), trails_(g, {u}, {v}, budget) {}

    int run() { return value(trails_.full_mask()); }

private:
    // Max edge-disjoint odd (u,v)-trails inside avail. Branch on the lowest
    // available edge e0: either no packed trail uses it, or some trail does,
    // and that trail can be assumed inclusion-minimal (a smaller odd trail
    // only frees edges for the rest of the packing).
    int value(uint64_t avail) {
        if (auto it = memo_.find(avail); it != memo_.end()) return it->second;
        if (!trails_.exists(avail)) {
            memo_[avail] = 0;
            return 0;
        }
        int ub = upper_bound(avail);
        int e0 = __builtin_ctzll(avail);
        int best = value(avail & ~bit(e0));
        if (best < ub) {
            for (uint64_t f : trail_sets_through(avail, e0)) {
                if (best >= ub) break;
                best = std::max(best, 1 + value(avail & ~f));
            }
        }
        memo_[avail] = best;
        return best;
    }

    // Each odd (u,v)-trail built from avail contains a (u,v)-path when
    // u != v, so lambda on the masked graph bounds the packing; closed
    // trails at s each consume two edge slots at s.
    int upper_bound(uint64_t avail) {
        EdgeSet keep(g_.edge_universe());
        for (EdgeId e = 0; e < g_.edge_universe(); ++e)
            if (avail >> e & 1) keep.insert(e);
        Multigraph sub = g_.without_edges(g_.active_edges() - keep);
        if (u_ != v_) return lambda(sub, u_, v_);
        return sub.degree(u_) / 2;
    }

    /// Distinct inclusion-minimal edge sets of odd (u,v)-trails inside
    /// avail that use edge e0. A trail through e0 is a trail u -> p, then
    /// e0 = pq, then a trail q -> v over the remaining edges; anchoring the
    /// enumeration at e0 avoids exploring trails that never touch it.
    std::vector<uint64_t> trail_sets_through(uint64_t avail, EdgeId e0) {
        collected_.clear();
        seen_sets_.clear();
        auto [a, b] = g_.ends(e0);
        cross_bit_ = bit(e0);
        uint64_t rest = avail & ~bit(e0);
        for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
            std::vector<char> tgt(g_.vertex_count(), 0);
            tgt[p] = 1;
            to_anchor_ = TrailSearch::walk_bounds(g_, tgt);
            std::vector<char> tv(g_.vertex_count(), 0);
            tv[v_] = 1;
            to_v_ = TrailSearch::walk_bounds(g_, tv);
            head(u_, 0, rest, 0, p, q, g_.edge_parity(e0));
        }
        std::vector<uint64_t> out;
        for (uint64_t f : collected_) {
            bool minimal = true;
            for (uint64_t h : collected_)
                if (h != f && (h & f) == h) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(f);
        }
        return out;
    }

    void head(VertexId x, int par, uint64_t avail, uint64_t used, VertexId p, VertexId q,
              int e0_par) {
        if (x == p) tail(q, par ^ e0_par, avail, used | cross_bit_);
        if (std::min(to_anchor_[x][0], to_anchor_[x][1]) > __builtin_popcountll(avail)) return;
        for (EdgeId e : g_.incident(x)) {
            if (!(avail & bit(e))) continue;
            head(g_.other_end(e, x), par ^ g_.edge_parity(e), avail & ~bit(e), used | bit(e), p,
                 q, e0_par);
        }
    }

    void tail(VertexId x, int par, uint64_t avail, uint64_t used) {
        if (x == v_ && par == 1) {
            if (seen_sets_.insert(used).second) collected_.push_back(used);
        }
        if (to_v_[x][1 ^ par] > __builtin_popcountll(avail)) return;
        for (EdgeId e : g_.incident(x)) {
            if (!(avail & bit(e))) continue;
            tail(g_.other_end(e, x), par ^ g_.edge_parity(e), avail & ~bit(e), used | bit(e));
        }
    }

    const Multigraph& g_;
    VertexId u_, v_;
    TrailSearch trails_;
    uint64_t cross_bit_ = 0;
    std::unordered_map<uint64_t, int> memo_;
    std::vector<uint64_t> collected_;
    std::unordered_set<uint64_t> seen_sets_;
    std::vector<std::array<int, 2>> to_anchor_, to_v_;
};

}  // namespace detail

/// Decision version of nu >= 1 between terminal sets (u = v allowed via
/// identical singleton sets).
inline bool odd_trail_exists(const Multigraph& g, const std::vector<VertexId>& from,
                             const std::vector<VertexId>& to, const Budget& budget = {}) {
    detail::TrailSearch s(g, from, to, budget);
    return s.exists(s.full_mask());
}

inline bool odd_trail_exists(const Multigraph& g, VertexId u, VertexId v,
                             const Budget& budget = {}) {
    return odd_trail_exists(g, std::vector<VertexId>{u}, std::vector<VertexId>{v}, budget);
}

/// One shortest odd trail between the sets, if any.
inline std::optional<Trail> find_odd_trail(const Multigraph& g, const std::vector<VertexId>& from,
                                           const std::vector<VertexId>& to,
                                           const Budget& budget = {}) {
    detail::TrailSearch s(g, from, to, budget);
    uint64_t all = s.full_mask();
    if (!s.exists(all)) return std::nullopt;
    return s.find_shortest(all);
}

/// One odd trail between the sets with no length promise; much cheaper on
/// dense instances than the shortest-trail search.
inline std::optional<Trail> first_odd_trail(const Multigraph& g,
                                            const std::vector<VertexId>& from,
                                            const std::vector<VertexId>& to,
                                            const Budget& budget = {}) {
    detail::TrailSearch s(g, from, to, budget);
    return s.find_first(s.full_mask());
}

/// Exact packing number nu(u,v) (u = v allowed).
inline int nu_exact(const Multigraph& g, VertexId u, VertexId v, const Budget& budget = {}) {
    detail::NuSearch s(g, u, v, budget);
    return s.run();
}

/// Exact covering number tau(u,v) with a witness minimum cover, by
/// iterative deepening on the cover size: every cover must delete an edge
/// of each surviving odd trail, so branching follows a shortest one.
inline std::pair<int, EdgeSet> tau_exact(const Multigraph& g, VertexId u, VertexId v,
                                         const Budget& budget = {}) {
    detail::TrailSearch search(g, {u}, {v}, budget);
    uint64_t all = search.full_mask();
    std::unordered_map<uint64_t, int> failed_with;  // mask -> largest budget that failed

    std::vector<EdgeId> chosen;
    std::function<bool(uint64_t, int)> try_cover = [&](uint64_t avail, int t) -> bool {
        if (!search.exists(avail)) return true;
        if (t == 0) return false;
        if (auto it = failed_with.find(avail); it != failed_with.end() && it->second >= t)
            return false;
        std::vector<EdgeId> edges = search.find_shortest(avail).edges;
        std::sort(edges.begin(), edges.end());
        for (EdgeId e : edges) {
            chosen.push_back(e);
            if (try_cover(avail & ~detail::bit(e), t - 1)) return true;
            chosen.pop_back();
        }
        auto [it, inserted] = failed_with.try_emplace(avail, t);
        if (!inserted) it->second = std::max(it->second, t);
        return false;
    };

    for (int t = 0; t <= g.edge_count(); ++t) {
        chosen.clear();
        if (try_cover(all, t)) {
            EdgeSet cover(g.edge_universe());
            for (EdgeId e : chosen) cover.insert(e);
            return {int(chosen.size()), cover};
        }
    }
    fail(Err::ClassificationFailure, "tau search exhausted without cover");
}

}  // namespace oracle
}  // namespace oddtrails
