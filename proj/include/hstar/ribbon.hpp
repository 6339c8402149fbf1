#pragma once

// Ribbon structures (cyclic edge orders at vertices), Bernardi tours, tour
// orders, Jaeger trees, and the passivity statistics of spanning trees.

#include "hstar/errors.hpp"
#include "hstar/graphs.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace hstar {

struct RibbonStructure {
    // cyclic[v] = incident edge ids around v in counterclockwise order.  Every
    // directed edge appears exactly once at each of its two endpoints; the two
    // copies of a doubled edge occupy separate slots.
    std::vector<std::vector<int>> cyclic;  // index 1..n

    int succ(int v, int e) const {
        const auto& c = cyclic[v];
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] == e) return c[(i + 1) % c.size()];
        throw input_error("edge not incident to vertex in ribbon");
    }
};

namespace detail {

inline std::vector<std::vector<int>> incident_ids(const Digraph& g) {
    std::vector<std::vector<int>> inc(g.n + 1);
    for (const Edge& e : g.edges) {
        inc[e.tail].push_back(e.id);
        inc[e.head].push_back(e.id);
    }
    return inc;
}

}  // namespace detail

inline RibbonStructure ribbon_from_lists(const Digraph& g,
                                         const std::vector<std::vector<int>>& lists) {
    if ((int)lists.size() != g.n + 1)
        throw input_error("ribbon must list every vertex");
    auto inc = detail::incident_ids(g);
    for (int v = 1; v <= g.n; ++v) {
        auto want = inc[v], got = lists[v];
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got)
            throw input_error("ribbon at vertex " + std::to_string(v) +
                              " must be a cyclic order of its incident edges");
    }
    return RibbonStructure{lists};
}

// Cyclic orders taken from edge declaration order (ascending ids).
inline RibbonStructure ribbon_from_declaration(const Digraph& g) {
    RibbonStructure r;
    r.cyclic = detail::incident_ids(g);
    return r;
}

// Counterclockwise cyclic orders derived from drawing coordinates.  Each edge
// end sits at the angle of the chord toward the other endpoint; where a
// doubled edge contributes two ends on the same chord, the incoming copy is
// placed just before the outgoing one (the two arcs of a digon), and any
// remaining tie breaks by edge id.  Comparisons are exact (cross products of
// rational coordinates).
inline RibbonStructure ribbon_from_coords(const Digraph& g) {
    if (!g.has_coords()) throw input_error("graph has no coordinates");
    RibbonStructure r;
    r.cyclic.assign(g.n + 1, {});
    for (int v = 1; v <= g.n; ++v) {
        struct End {
            Rat dx, dy;
            int kind;  // 0 = incoming copy, 1 = outgoing
            int id;
        };
        std::vector<End> ends;
        for (const Edge& e : g.edges) {
            if (e.tail != v && e.head != v) continue;
            int w = e.tail == v ? e.head : e.tail;
            Rat dx = g.coords[w].first - g.coords[v].first;
            Rat dy = g.coords[w].second - g.coords[v].second;
            if (dx == 0 && dy == 0)
                throw input_error("coincident vertex coordinates");
            ends.push_back({dx, dy, e.head == v ? 0 : 1, e.id});
        }
        auto half = [](const End& e) {
            return (e.dy < 0 || (e.dy == 0 && e.dx < 0)) ? 1 : 0;
        };
        std::sort(ends.begin(), ends.end(), [&](const End& a, const End& b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            Rat cross = a.dx * b.dy - a.dy * b.dx;
            if (cross != 0) return cross > 0;
            if (a.kind != b.kind) return a.kind < b.kind;
            return a.id < b.id;
        });
        for (const End& e : ends) r.cyclic[v].push_back(e.id);
    }
    return r;
}

// ------------------------------------------------------------------- tours --

struct Tour {
    std::vector<std::pair<int, int>> steps;  // (vertex, edge id) in visit order

    // 1-based position of the pair (v, e); 0 if absent.
    int position(int v, int e) const {
        for (size_t i = 0; i < steps.size(); ++i)
            if (steps[i].first == v && steps[i].second == e) return (int)i + 1;
        return 0;
    }
};

// Walks the tree tour from the base pair (v0, e0): a non-tree edge is skipped
// (advance to the next edge in the cyclic order at the current vertex), a
// tree edge is traversed (continue from its other endpoint after the edge).
// Visits every (vertex, incident edge) pair exactly once, 2m steps.
inline Tour bernardi_tour(const Digraph& g, const RibbonStructure& r, int v0, int e0,
                          const SpanningTree& t) {
    if (v0 < 1 || v0 > g.n) throw input_error("base vertex out of range");
    const Edge& base = g.edge(e0);
    if (base.tail != v0 && base.head != v0)
        throw input_error("base edge must be incident to the base vertex");
    Tour tour;
    int v = v0, e = e0;
    const size_t total = 2 * (size_t)g.m();
    do {
        tour.steps.push_back({v, e});
        if (tour.steps.size() > total)
            throw input_error("tour fails to close; ribbon structure is inconsistent");
        if (t.contains(e)) {
            v = g.other_end(e, v);
            e = r.succ(v, e);
        } else {
            e = r.succ(v, e);
        }
    } while (!(v == v0 && e == e0));
    if (tour.steps.size() != total)
        throw input_error("tour closed early; ribbon structure is inconsistent");
    return tour;
}

// --------------------------------------------------------------- edge order --

struct EdgeOrder {
    std::vector<int> ranked;   // ranked[r-1] = edge id with rank r (1 = smallest)
    std::vector<int> rank_of;  // rank_of[id] = rank

    static EdgeOrder from_ranked(int m, std::vector<int> ranked_ids) {
        if ((int)ranked_ids.size() != m)
            throw input_error("edge order must rank every edge exactly once");
        EdgeOrder o;
        o.ranked = std::move(ranked_ids);
        o.rank_of.assign(m + 1, 0);
        for (int i = 0; i < m; ++i) {
            int id = o.ranked[i];
            if (id < 1 || id > m || o.rank_of[id])
                throw input_error("edge order must rank every edge exactly once");
            o.rank_of[id] = i + 1;
        }
        return o;
    }

    // Declaration-label order: rank = edge id.
    static EdgeOrder labels(int m) {
        std::vector<int> ids(m);
        for (int i = 0; i < m; ++i) ids[i] = i + 1;
        return from_ranked(m, std::move(ids));
    }
};

// Edges ranked by the tour position of their tail pair (tail(e), e).
inline EdgeOrder tour_order(const Digraph& g, const Tour& tour) {
    std::vector<std::pair<int, int>> pos_id;  // (tour position, edge id)
    for (const Edge& e : g.edges) {
        int p = tour.position(e.tail, e.id);
        if (p == 0) throw input_error("tour does not visit every edge tail");
        pos_id.push_back({p, e.id});
    }
    std::sort(pos_id.begin(), pos_id.end());
    std::vector<int> ranked;
    for (auto& pi : pos_id) ranked.push_back(pi.second);
    return EdgeOrder::from_ranked(g.m(), std::move(ranked));
}

// A spanning tree is a Jaeger tree iff the tour reaches every non-tree edge
// at its tail before its head.
inline bool is_jaeger(const Digraph& g, const RibbonStructure& r, int v0, int e0,
                      const SpanningTree& t) {
    Tour tour = bernardi_tour(g, r, v0, e0, t);
    for (const Edge& e : g.edges) {
        if (t.contains(e.id)) continue;
        if (tour.position(e.tail, e.id) > tour.position(e.head, e.id)) return false;
    }
    return true;
}

// -------------------------------------------------------------- passivities --

struct PassivityReport {
    int count = 0;
    std::vector<int> passive_edges;  // ascending tree edge ids
};

// A tree edge is internally semi-passive iff the order-maximal edge of its
// fundamental cut stands opposite to it.
inline PassivityReport internal_semi_passivity(const Digraph& g, const SpanningTree& t,
                                               const EdgeOrder& order) {
    PassivityReport rep;
    for (int e : t.edges) {
        Cut cut = fundamental_cut(g, t, e);
        int best = 0, best_rank = 0;
        bool best_opposite = false;
        auto scan = [&](const std::vector<int>& ids, bool opp) {
            for (int id : ids)
                if (order.rank_of[id] > best_rank) {
                    best_rank = order.rank_of[id];
                    best = id;
                    best_opposite = opp;
                }
        };
        scan(cut.parallel, false);
        scan(cut.opposite, true);
        (void)best;
        if (best_opposite) {
            rep.passive_edges.push_back(e);
            ++rep.count;
        }
    }
    return rep;
}

struct EmbeddingPassivity {
    EdgeOrder order;
    PassivityReport report;
};

// Internal semi-passivity with respect to the tree's own tour order.
inline EmbeddingPassivity embedding_semi_passivity(const Digraph& g,
                                                   const RibbonStructure& r, int v0,
                                                   int e0, const SpanningTree& t) {
    EdgeOrder order = tour_order(g, bernardi_tour(g, r, v0, e0, t));
    PassivityReport rep = internal_semi_passivity(g, t, order);
    return EmbeddingPassivity{std::move(order), std::move(rep)};
}

// Number of tree edges that point away from v0 and whose fundamental cut is
// not consistently directed (it has edges crossing both ways).
inline PassivityReport basepoint_passivity(const Digraph& g, const SpanningTree& t,
                                           int v0) {
    PassivityReport rep;
    for (int e : t.edges) {
        Cut cut = fundamental_cut(g, t, e);
        bool away = !std::binary_search(cut.shore_head.begin(), cut.shore_head.end(), v0);
        if (away && !cut.opposite.empty()) {
            rep.passive_edges.push_back(e);
            ++rep.count;
        }
    }
    return rep;
}

}  // namespace hstar
