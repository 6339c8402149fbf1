#pragma once

// Directed multigraphs with labeled edges, spanning-tree enumeration,
// fundamental cuts, and the semi-balance test.  Vertices are 1..n and edge
// ids are 1..m throughout; parallel directed edges are distinct objects.

#include "hstar/errors.hpp"
#include "hstar/rational.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace hstar {

struct Edge {
    int id = 0;
    int tail = 0;
    int head = 0;
};

struct Digraph {
    int n = 0;                                 // vertices 1..n
    std::vector<Edge> edges;                   // edges[i].id == i+1
    std::vector<std::pair<Rat, Rat>> coords;   // 1-indexed drawing coords; empty if absent
    std::vector<int> twin;                     // twin[id] = reversed copy when bidirected, else 0

    int m() const { return (int)edges.size(); }
    const Edge& edge(int id) const { return edges[id - 1]; }
    bool has_coords() const { return !coords.empty(); }
    bool is_bidirected() const {
        if (m() == 0 || (int)twin.size() != m() + 1) return false;
        for (int e = 1; e <= m(); ++e)
            if (twin[e] == 0) return false;
        return true;
    }
    int other_end(int edge_id, int v) const {
        const Edge& e = edge(edge_id);
        return e.tail == v ? e.head : e.tail;
    }
};

inline Digraph make_digraph(int n, const std::vector<Edge>& edges) {
    if (n <= 0) throw input_error("graph needs at least one vertex");
    Digraph g;
    g.n = n;
    g.edges.resize(edges.size());
    std::vector<bool> seen(edges.size() + 1, false);
    for (const Edge& e : edges) {
        if (e.id < 1 || e.id > (int)edges.size() || seen[e.id])
            throw input_error("edge ids must be 1..m and distinct");
        if (e.tail < 1 || e.tail > n || e.head < 1 || e.head > n)
            throw input_error("edge endpoint out of range");
        if (e.tail == e.head) throw input_error("self-loops are not supported");
        seen[e.id] = true;
        g.edges[e.id - 1] = e;
    }
    g.twin.assign(g.m() + 1, 0);
    return g;
}

// Doubles an undirected graph: undirected edge k with endpoints (a, b) becomes
// directed edges 2k-1 (a -> b) and 2k (b -> a), which are twins.
inline Digraph double_undirected(int n, const std::vector<Edge>& und) {
    std::vector<Edge> dir;
    dir.reserve(2 * und.size());
    std::vector<bool> seen(und.size() + 1, false);
    for (const Edge& e : und) {
        if (e.id < 1 || e.id > (int)und.size() || seen[e.id])
            throw input_error("undirected edge ids must be 1..k and distinct");
        seen[e.id] = true;
        dir.push_back({2 * e.id - 1, e.tail, e.head});
        dir.push_back({2 * e.id, e.head, e.tail});
    }
    Digraph g = make_digraph(n, dir);
    for (size_t i = 0; i < und.size(); ++i) {
        int k = und[i].id;
        g.twin[2 * k - 1] = 2 * k;
        g.twin[2 * k] = 2 * k - 1;
    }
    return g;
}

// Recognizes an explicitly-listed bidirected graph: pairs every edge with a
// reversed copy (greedy by id).  Leaves the graph untouched if no perfect
// pairing exists.
inline void detect_bidirected(Digraph& g) {
    std::vector<int> twin(g.m() + 1, 0);
    for (int e = 1; e <= g.m(); ++e) {
        if (twin[e]) continue;
        for (int f = e + 1; f <= g.m(); ++f) {
            if (twin[f]) continue;
            if (g.edge(f).tail == g.edge(e).head && g.edge(f).head == g.edge(e).tail) {
                twin[e] = f;
                twin[f] = e;
                break;
            }
        }
        if (!twin[e]) return;
    }
    g.twin = std::move(twin);
}

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace detail

inline bool is_connected(const Digraph& g) {
    detail::Dsu dsu(g.n);
    int comps = g.n;
    for (const Edge& e : g.edges)
        if (dsu.unite(e.tail, e.head)) --comps;
    return comps == 1;
}

// ------------------------------------------------------------ semi-balance --

// A digraph is semi-balanced iff some vertex potential l satisfies
// l(head) = l(tail) + 1 on every edge.  `potential` is that witness
// (normalized to minimum 0); otherwise `violating_cycle` is a closed walk
// (edge ids) with unequal numbers of forward and backward edges.
struct SemiBalance {
    bool ok = false;
    std::vector<Int> potential;        // 1-indexed when ok
    std::vector<int> violating_cycle;  // edge ids when !ok
};

inline SemiBalance is_semi_balanced(const Digraph& g) {
    if (!is_connected(g)) throw input_error("semi-balance requires a connected graph");
    SemiBalance result;
    std::vector<Int> pot(g.n + 1);
    std::vector<bool> seen(g.n + 1, false);
    std::vector<std::pair<int, int>> parent(g.n + 1, {0, 0});  // (vertex, edge id)
    std::vector<std::vector<int>> inc(g.n + 1);
    for (const Edge& e : g.edges) {
        inc[e.tail].push_back(e.id);
        inc[e.head].push_back(e.id);
    }
    std::vector<int> queue = {1};
    seen[1] = true;
    pot[1] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int eid : inc[u]) {
            const Edge& e = g.edge(eid);
            int w = e.tail == u ? e.head : e.tail;
            Int pw = pot[u] + (e.tail == u ? 1 : -1);
            if (!seen[w]) {
                seen[w] = true;
                pot[w] = pw;
                parent[w] = {u, eid};
                queue.push_back(w);
            } else if (pot[w] != pw) {
                // Conflict: BFS-tree path w -> u plus this edge is a witness.
                auto path_to_root = [&](int v) {
                    std::vector<std::pair<int, int>> steps;  // (edge id, vertex)
                    while (parent[v].first != 0) {
                        steps.push_back({parent[v].second, v});
                        v = parent[v].first;
                    }
                    return steps;
                };
                auto pu = path_to_root(u), pw2 = path_to_root(w);
                while (!pu.empty() && !pw2.empty() && pu.back().first == pw2.back().first) {
                    pu.pop_back();
                    pw2.pop_back();
                }
                result.violating_cycle.clear();
                for (auto it = pw2.rbegin(); it != pw2.rend(); ++it)
                    result.violating_cycle.push_back(it->first);
                result.violating_cycle.push_back(eid);
                for (auto& s : pu) result.violating_cycle.push_back(s.first);
                return result;
            }
        }
    }
    Int lo = pot[1];
    for (int v = 1; v <= g.n; ++v) lo = std::min(lo, pot[v]);
    result.ok = true;
    result.potential.assign(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) result.potential[v] = pot[v] - lo;
    return result;
}

// ----------------------------------------------------------- spanning trees --

struct SpanningTree {
    std::vector<int> edges;  // sorted edge ids; acyclic and spanning by construction
    bool contains(int id) const {
        return std::binary_search(edges.begin(), edges.end(), id);
    }
};

inline SpanningTree make_tree(const Digraph& g, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw input_error("tree has repeated edge ids");
    if ((int)ids.size() != g.n - 1) throw input_error("tree must have exactly n-1 edges");
    detail::Dsu dsu(g.n);
    for (int id : ids) {
        if (id < 1 || id > g.m()) throw input_error("tree edge id out of range");
        const Edge& e = g.edge(id);
        if (!dsu.unite(e.tail, e.head)) throw input_error("tree edges contain a cycle");
    }
    return SpanningTree{std::move(ids)};
}

// All spanning trees of the underlying multigraph, as sorted edge-id sets
// emitted in lexicographic order (contraction/deletion on the edge list;
// parallel directed copies give distinct trees).
inline std::vector<SpanningTree> spanning_trees(const Digraph& g,
                                                size_t guard = 1000000) {
    if (!is_connected(g)) throw input_error("spanning trees require a connected graph");
    std::vector<SpanningTree> out;
    std::vector<int> chosen;
    const int need = g.n - 1;

    auto connectable = [&](detail::Dsu dsu, int from_idx) {
        for (int i = from_idx; i < g.m(); ++i) dsu.unite(g.edges[i].tail, g.edges[i].head);
        int root = dsu.find(1);
        for (int v = 2; v <= g.n; ++v)
            if (dsu.find(v) != root) return false;
        return true;
    };

    auto rec = [&](auto&& self, int idx, detail::Dsu dsu) -> void {
        if ((int)chosen.size() == need) {
            if (out.size() >= guard)
                throw input_error("spanning tree enumeration exceeds guard");
            out.push_back(SpanningTree{chosen});
            return;
        }
        if (idx >= g.m()) return;
        const Edge& e = g.edges[idx];
        if (dsu.find(e.tail) != dsu.find(e.head)) {
            detail::Dsu with = dsu;
            with.unite(e.tail, e.head);
            chosen.push_back(e.id);
            self(self, idx + 1, std::move(with));
            chosen.pop_back();
        }
        if (connectable(dsu, idx + 1)) self(self, idx + 1, std::move(dsu));
    };
    rec(rec, 0, detail::Dsu(g.n));
    return out;
}

// ---------------------------------------------------------- fundamental cut --

// Deleting tree edge e splits the vertices into two shores; the fundamental
// cut C*(T, e) is every graph edge joining them.  A cut edge is `parallel`
// if its head lies on e's head shore, `opposite` otherwise.
struct Cut {
    int tree_edge = 0;
    std::vector<int> shore_tail;  // vertices on tail(e)'s side
    std::vector<int> shore_head;
    std::vector<int> parallel;    // edge ids, ascending (includes tree_edge)
    std::vector<int> opposite;
};

namespace detail {

// Marks the component of T - e containing e's head; returns the mark array.
inline std::vector<bool> head_side(const Digraph& g, const SpanningTree& t, int e) {
    std::vector<std::vector<int>> adj(g.n + 1);
    for (int id : t.edges) {
        if (id == e) continue;
        const Edge& te = g.edge(id);
        adj[te.tail].push_back(te.head);
        adj[te.head].push_back(te.tail);
    }
    std::vector<bool> mark(g.n + 1, false);
    std::vector<int> stack = {g.edge(e).head};
    mark[g.edge(e).head] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!mark[w]) {
                mark[w] = true;
                stack.push_back(w);
            }
    }
    return mark;
}

}  // namespace detail

inline Cut fundamental_cut(const Digraph& g, const SpanningTree& t, int e) {
    if (!t.contains(e)) throw input_error("fundamental cut needs a tree edge");
    std::vector<bool> head_side = detail::head_side(g, t, e);
    Cut cut;
    cut.tree_edge = e;
    for (int v = 1; v <= g.n; ++v)
        (head_side[v] ? cut.shore_head : cut.shore_tail).push_back(v);
    for (const Edge& f : g.edges) {
        if (head_side[f.tail] == head_side[f.head]) continue;
        (head_side[f.head] ? cut.parallel : cut.opposite).push_back(f.id);
    }
    return cut;
}

// True iff tree edge e points away from vertex v, i.e. v lies on e's tail
// shore in T - e.
inline bool points_away(const Digraph& g, const SpanningTree& t, int v, int e) {
    if (v < 1 || v > g.n) throw input_error("vertex out of range");
    return !detail::head_side(g, t, e)[v];
}

}  // namespace hstar
