// Dissections of root polytopes and symmetric edge polytopes into unimodular
// simplices indexed by spanning trees: construction from ribbon structures,
// exact verification (unimodularity, pairwise interior-disjointness, volume),
// and bounded enumeration of alternative dissecting tree sets.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart.hpp"
#include "ribbon.hpp"

namespace hstar {

// ----------------------------------------------------------------- targets --

enum class DissectionTarget { root_polytope, symmetric_edge_polytope };

inline std::string target_name(DissectionTarget t) {
    return t == DissectionTarget::root_polytope ? "root polytope"
                                                : "symmetric edge polytope";
}

// Dimension of the target polytope of a connected digraph on n vertices.
inline int target_dimension(const Digraph& g, DissectionTarget t) {
    return t == DissectionTarget::root_polytope ? g.n - 2 : g.n - 1;
}

struct DissectingTreeSet {
    DissectionTarget target = DissectionTarget::root_polytope;
    std::vector<SpanningTree> trees;
    bool verified = false;
};

// The simplex a tree contributes: its tree simplex for the root polytope and
// the cone over that simplex at the origin for the symmetric edge polytope.
inline Simplex dissection_simplex(const Digraph& g, DissectionTarget target,
                                  const SpanningTree& t) {
    return target == DissectionTarget::root_polytope ? tree_simplex(g, t)
                                                     : cone_simplex(g, t);
}

inline std::vector<Simplex> dissection_simplices(const Digraph& g,
                                                 const DissectingTreeSet& ts) {
    std::vector<Simplex> out;
    out.reserve(ts.trees.size());
    for (const SpanningTree& t : ts.trees)
        out.push_back(dissection_simplex(g, ts.target, t));
    return out;
}

// ------------------------------------------------------- disjointness tests --

// A vertex shore whose crossing edges the first tree uses only inbound and
// the second only outbound.  The shore's indicator functional is then >= 0 on
// every vertex of the first simplex and <= 0 on the second, and nonzero on at
// least one vertex of each (a spanning tree crosses every cut), so the two
// simplices share no relative-interior point.  The apex of a cone simplex
// evaluates to 0 and does not disturb the argument.
struct CutCertificate {
    std::vector<int> shore;      // vertices with indicator 1
    std::vector<int> cut_edges;  // all graph edges crossing the shore, ascending
};

inline std::optional<CutCertificate> separating_cut(const Digraph& g,
                                                    const SpanningTree& ta,
                                                    const SpanningTree& tb) {
    if (g.n > 16) return std::nullopt;  // exhaustive shores only for small graphs
    for (unsigned mask = 1; mask + 1 < (1u << g.n); ++mask) {
        auto in = [&](int v) { return ((mask >> (v - 1)) & 1u) != 0; };
        bool ok = true;
        for (int id : ta.edges) {
            const Edge& e = g.edge(id);
            if (in(e.tail) != in(e.head) && !in(e.head)) { ok = false; break; }
        }
        for (size_t i = 0; ok && i < tb.edges.size(); ++i) {
            const Edge& e = g.edge(tb.edges[i]);
            if (in(e.tail) != in(e.head) && !in(e.tail)) ok = false;
        }
        if (!ok) continue;
        CutCertificate c;
        for (int v = 1; v <= g.n; ++v)
            if (in(v)) c.shore.push_back(v);
        for (const Edge& e : g.edges)
            if (in(e.tail) != in(e.head)) c.cut_edges.push_back(e.id);
        return c;
    }
    return std::nullopt;
}

// Does normal . x <= offset hold at every vertex of the symmetric edge
// polytope?  Hyperplanes through the origin (offset 0) never support a facet
// of a full-dimensional centrally symmetric polytope, so they are rejected.
inline bool supports_polytope(const Digraph& g, const HullHyperplane& h) {
    if (h.offset <= 0) return false;
    for (const Edge& e : g.edges)
        if (h.normal[e.head - 1] - h.normal[e.tail - 1] > h.offset) return false;
    return true;
}

namespace detail {

// Hyperplane spanned by the tree's edge vectors (the base of its cone
// simplex); nullopt when they do not span a hyperplane of the sum-zero space.
inline std::optional<HullHyperplane> base_hyperplane(const Digraph& g,
                                                     const SpanningTree& t) {
    std::vector<IntVec> pts;
    pts.reserve(t.edges.size());
    for (int id : t.edges) pts.push_back(edge_vector(g, id));
    return sum_zero_hull_hyperplane(pts);
}

}  // namespace detail

// How a pair of simplices was certified interior-disjoint.
struct PairEvidence {
    enum class Kind { separating_cut, facet_hyperplanes, linear_program };

    int a = 0, b = 0;  // indices into the tree set
    Kind kind = Kind::separating_cut;
    std::vector<int> shore;      // separating_cut only
    std::vector<int> cut_edges;  // separating_cut only

    std::string describe() const {
        std::ostringstream os;
        os << "pair (" << a << ", " << b << "): ";
        switch (kind) {
            case Kind::separating_cut: {
                os << "separating cut, shore {";
                for (size_t i = 0; i < shore.size(); ++i)
                    os << (i ? " " : "") << shore[i];
                os << "}, cut edges {";
                for (size_t i = 0; i < cut_edges.size(); ++i)
                    os << (i ? " " : "") << cut_edges[i];
                os << "}";
                break;
            }
            case Kind::facet_hyperplanes:
                os << "distinct supporting facet hyperplanes";
                break;
            case Kind::linear_program:
                os << "no common relative-interior point (exact LP)";
                break;
        }
        return os.str();
    }
};

// --------------------------------------------------------------- verifying --

struct DissectionReport {
    bool valid = false;
    std::string failure;                  // empty when valid
    int failing_a = -1, failing_b = -1;   // overlapping pair, when that failed
    std::optional<RatVec> overlap_point;  // shared relative-interior point
    Int normalized_volume = 0;            // target volume per the point oracle
    std::size_t tree_count = 0;
    std::vector<PairEvidence> evidence;   // one entry per certified pair

    std::string to_string() const {
        std::ostringstream os;
        if (valid) {
            os << "valid dissection: " << tree_count
               << " unimodular simplices, pairwise interior-disjoint, "
               << "normalized volume " << normalized_volume.str();
        } else {
            os << "invalid dissection: " << failure;
        }
        return os.str();
    }
};

// Checks that the trees dissect the target polytope: every simplex is
// unimodular, the simplices are pairwise interior-disjoint, and their number
// equals the polytope's normalized volume (computed by the lattice-point
// oracle).  Disjoint unimodular simplices inside the polytope whose count
// matches the volume necessarily cover it, so these three checks are a full
// dissection proof.  Pairs are certified by a separating cut when one exists,
// by lying on distinct supporting facet hyperplanes (symmetric target), or by
// an exact LP showing no common relative-interior point.
inline DissectionReport verify_dissection(const Digraph& g,
                                          const DissectingTreeSet& ts) {
    DissectionReport rep;
    rep.tree_count = ts.trees.size();
    if (!is_connected(g)) {
        rep.failure = "graph is not connected";
        return rep;
    }
    if (ts.target == DissectionTarget::symmetric_edge_polytope &&
        !g.is_bidirected()) {
        rep.failure = "symmetric edge polytope requires a bidirected graph";
        return rep;
    }
    if (ts.target == DissectionTarget::root_polytope && !is_semi_balanced(g).ok) {
        rep.failure = "root polytope dissections require a semi-balanced digraph";
        return rep;
    }
    if (ts.trees.empty()) {
        rep.failure = "empty tree set";
        return rep;
    }

    const int want_dim = target_dimension(g, ts.target);
    if (detail::affine_rank(root_polytope_vertices(g)) != want_dim) {
        rep.failure = "polytope dimension does not match the target";
        return rep;
    }

    std::vector<Simplex> simp = dissection_simplices(g, ts);
    for (size_t i = 0; i < simp.size(); ++i) {
        if (!is_unimodular(simp[i])) {
            rep.failure = "tree " + std::to_string(i) +
                          " gives a non-unimodular simplex";
            rep.failing_a = (int)i;
            return rep;
        }
    }

    std::vector<std::optional<HullHyperplane>> hull;
    std::vector<char> supporting;
    if (ts.target == DissectionTarget::symmetric_edge_polytope) {
        hull.resize(ts.trees.size());
        supporting.assign(ts.trees.size(), 0);
        for (size_t i = 0; i < ts.trees.size(); ++i) {
            hull[i] = detail::base_hyperplane(g, ts.trees[i]);
            supporting[i] = hull[i] && supports_polytope(g, *hull[i]);
        }
    }

    for (size_t i = 0; i < simp.size(); ++i) {
        for (size_t j = i + 1; j < simp.size(); ++j) {
            PairEvidence ev;
            ev.a = (int)i;
            ev.b = (int)j;
            if (!hull.empty() && supporting[i] && supporting[j] &&
                !(*hull[i] == *hull[j])) {
                ev.kind = PairEvidence::Kind::facet_hyperplanes;
                rep.evidence.push_back(std::move(ev));
                continue;
            }
            if (auto cut = separating_cut(g, ts.trees[i], ts.trees[j])) {
                ev.kind = PairEvidence::Kind::separating_cut;
                ev.shore = std::move(cut->shore);
                ev.cut_edges = std::move(cut->cut_edges);
                rep.evidence.push_back(std::move(ev));
                continue;
            }
            InteriorDisjointness dis = interior_disjoint(simp[i], simp[j]);
            if (dis.disjoint) {
                ev.kind = PairEvidence::Kind::linear_program;
                rep.evidence.push_back(std::move(ev));
                continue;
            }
            rep.failure = "trees " + std::to_string(i) + " and " +
                          std::to_string(j) + " overlap in their interiors";
            rep.failing_a = (int)i;
            rep.failing_b = (int)j;
            rep.overlap_point = std::move(dis.common_point);
            return rep;
        }
    }

    EhrhartData oracle = ehrhart_hstar(root_polytope_vertices(g));
    rep.normalized_volume = oracle.normalized_volume;
    if (Int((unsigned long)ts.trees.size()) != oracle.normalized_volume) {
        rep.failure = "tree count " + std::to_string(ts.trees.size()) +
                      " does not equal the normalized volume " +
                      oracle.normalized_volume.str();
        return rep;
    }
    rep.valid = true;
    return rep;
}

// Verification that also stamps the set's `verified` flag.
inline DissectionReport verify_and_mark(const Digraph& g, DissectingTreeSet& ts) {
    DissectionReport rep = verify_dissection(g, ts);
    ts.verified = rep.valid;
    return rep;
}

// ------------------------------------------------------------ construction --

// All Jaeger trees of a connected semi-balanced digraph for the given ribbon
// structure and base pair (v0, e0); these trees dissect the root polytope.
inline DissectingTreeSet jaeger_dissection(const Digraph& g,
                                           const RibbonStructure& r, int v0,
                                           int e0) {
    if (!is_semi_balanced(g).ok)
        throw input_error("Jaeger-tree dissection requires a semi-balanced digraph");
    DissectingTreeSet ts;
    ts.target = DissectionTarget::root_polytope;
    for (const SpanningTree& t : spanning_trees(g))
        if (is_jaeger(g, r, v0, e0, t)) ts.trees.push_back(t);
    return ts;
}

// A facet of the symmetric edge polytope of a bidirected graph.  Facets
// correspond to integer vertex potentials, fixed by potential(1) = 0, that
// change by at most one along every edge and whose up-edges (head exactly one
// level above tail) connect all vertices.  The facet is the root polytope of
// the up-edge subgraph, which the potential certifies as semi-balanced.
struct SympolyFacet {
    std::vector<Int> potential;  // 1-indexed, potential[1] = 0
    std::vector<int> up_edges;   // ascending edge ids
};

inline std::vector<SympolyFacet> sympoly_facets(const Digraph& g) {
    if (!g.is_bidirected())
        throw input_error("symmetric edge polytope requires a bidirected graph");
    if (!is_connected(g)) throw input_error("graph must be connected");

    // Breadth-first vertex order from vertex 1; each later vertex keeps the
    // list of its earlier-ordered neighbours so every edge is constrained the
    // moment its second endpoint is assigned.
    std::vector<std::vector<int>> adj(g.n + 1);
    for (const Edge& e : g.edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    std::vector<int> order{1};
    std::vector<int> pos(g.n + 1, -1);
    pos[1] = 0;
    for (size_t h = 0; h < order.size(); ++h)
        for (int w : adj[order[h]])
            if (pos[w] < 0) {
                pos[w] = (int)order.size();
                order.push_back(w);
            }
    std::vector<std::vector<int>> before(g.n + 1);
    for (const Edge& e : g.edges) {
        int late = pos[e.tail] > pos[e.head] ? e.tail : e.head;
        int early = g.other_end(e.id, late);
        if (early != late) before[late].push_back(early);
    }

    std::vector<SympolyFacet> out;
    std::vector<Int> level(g.n + 1, 0);
    std::function<void(size_t)> assign = [&](size_t idx) {
        if (idx == order.size()) {
            std::vector<int> up;
            for (const Edge& e : g.edges)
                if (level[e.head] == level[e.tail] + 1) up.push_back(e.id);
            detail::Dsu dsu(g.n);
            int components = g.n;
            for (int id : up) {
                const Edge& e = g.edge(id);
                if (dsu.unite(e.tail, e.head)) --components;
            }
            if (components == 1) out.push_back({level, std::move(up)});
            return;
        }
        int v = order[idx];
        Int base = level[before[v].front()];
        for (Int d = base - 1; d <= base + 1; ++d) {
            bool ok = true;
            for (int u : before[v])
                if (abs(d - level[u]) > 1) { ok = false; break; }
            if (!ok) continue;
            level[v] = d;
            assign(idx + 1);
        }
    };
    assign(1);
    return out;
}

// Dissection of the symmetric edge polytope: cone at the origin over a
// Jaeger-tree dissection of every facet.  Each facet's up-edge subgraph gets
// its ribbon structure from the drawing coordinates when present and from
// declaration order otherwise, with base vertex 1 and the first edge of its
// cyclic list as base edge.
inline DissectingTreeSet sympoly_dissection(const Digraph& g) {
    DissectingTreeSet ts;
    ts.target = DissectionTarget::symmetric_edge_polytope;
    for (const SympolyFacet& f : sympoly_facets(g)) {
        std::vector<Edge> sub;
        std::vector<int> original{0};  // original[compact id]
        for (int id : f.up_edges) {
            const Edge& e = g.edge(id);
            sub.push_back(Edge{(int)sub.size() + 1, e.tail, e.head});
            original.push_back(id);
        }
        Digraph h = make_digraph(g.n, sub);
        h.coords = g.coords;
        RibbonStructure r =
            h.has_coords() ? ribbon_from_coords(h) : ribbon_from_declaration(h);
        const int v0 = 1;
        const int e0 = r.cyclic[v0].front();
        DissectingTreeSet facet = jaeger_dissection(h, r, v0, e0);
        if (facet.trees.empty())
            throw input_error("facet subgraph produced no dissecting trees");
        for (const SpanningTree& t : facet.trees) {
            std::vector<int> ids;
            ids.reserve(t.edges.size());
            for (int id : t.edges) ids.push_back(original[id]);
            ts.trees.push_back(make_tree(g, std::move(ids)));
        }
    }
    std::sort(ts.trees.begin(), ts.trees.end(),
              [](const SpanningTree& a, const SpanningTree& b) {
                  return a.edges < b.edges;
              });
    return ts;
}

// ------------------------------------------------------------- enumeration --

struct DissectionEnumeration {
    std::vector<DissectingTreeSet> sets;
    bool complete = false;  // search space exhausted within the budget
};

// All dissecting tree sets assembled from candidate spanning trees, emitted
// in lexicographic candidate order until max_sets sets are found or the node
// budget runs out.  Candidates for the symmetric target must lie on a
// supporting hyperplane; every emitted set is valid by construction
// (unimodular simplices, pairwise interior-disjoint, count equal to the
// normalized volume), so the sets come back already marked verified.
inline DissectionEnumeration enumerate_dissections(const Digraph& g,
                                                   DissectionTarget target,
                                                   std::size_t max_sets,
                                                   std::size_t node_budget = 200000) {
    if (!is_connected(g)) throw input_error("graph must be connected");
    if (target == DissectionTarget::symmetric_edge_polytope && !g.is_bidirected())
        throw input_error("symmetric edge polytope requires a bidirected graph");
    if (target == DissectionTarget::root_polytope && !is_semi_balanced(g).ok)
        throw input_error("root polytope dissections require a semi-balanced digraph");

    std::vector<SpanningTree> cand;
    std::vector<Simplex> simp;
    for (SpanningTree& t : spanning_trees(g)) {
        if (target == DissectionTarget::symmetric_edge_polytope) {
            auto h = detail::base_hyperplane(g, t);
            if (!h || !supports_polytope(g, *h)) continue;
        }
        Simplex s = dissection_simplex(g, target, t);
        if (!is_unimodular(s)) continue;
        cand.push_back(std::move(t));
        simp.push_back(std::move(s));
    }

    EhrhartData oracle = ehrhart_hstar(root_polytope_vertices(g));
    const Int volume = oracle.normalized_volume;
    DissectionEnumeration result;
    if (volume <= 0 || Int((unsigned long)cand.size()) < volume) {
        result.complete = true;
        return result;
    }
    const size_t need = (size_t)(unsigned long)volume;

    std::vector<std::vector<char>> compatible(cand.size(),
                                              std::vector<char>(cand.size(), 0));
    for (size_t i = 0; i < cand.size(); ++i) {
        for (size_t j = i + 1; j < cand.size(); ++j) {
            bool disjoint = separating_cut(g, cand[i], cand[j]).has_value() ||
                            interior_disjoint(simp[i], simp[j]).disjoint;
            compatible[i][j] = compatible[j][i] = disjoint ? 1 : 0;
        }
    }

    std::vector<int> chosen;
    std::size_t nodes = 0;
    bool truncated = false;
    std::function<void(size_t)> grow = [&](size_t next) {
        if (truncated || result.sets.size() >= max_sets) {
            truncated = true;
            return;
        }
        if (++nodes > node_budget) {
            truncated = true;
            return;
        }
        if (chosen.size() == need) {
            DissectingTreeSet ts;
            ts.target = target;
            for (int i : chosen) ts.trees.push_back(cand[i]);
            ts.verified = true;
            result.sets.push_back(std::move(ts));
            return;
        }
        for (size_t i = next; i + (need - chosen.size()) <= cand.size(); ++i) {
            bool ok = true;
            for (int c : chosen)
                if (!compatible[c][i]) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back((int)i);
            grow(i + 1);
            chosen.pop_back();
            if (truncated) return;
        }
    };
    grow(0);
    result.complete = !truncated && result.sets.size() <= max_sets;
    return result;
}

}  // namespace hstar
