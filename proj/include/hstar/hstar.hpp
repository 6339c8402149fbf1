// Four routes to the h*-polynomial of a root polytope or symmetric edge
// polytope over a dissecting tree set: away counts from a base vertex,
// internal semi-passivity for a fixed edge order, visible-facet counts from a
// generic reference point, and direct lattice-point counting.  Also the
// half-open view of a dissection used to check that the pieces partition the
// polytope.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dissect.hpp"

namespace hstar {

// --------------------------------------------------------- reference points --

// Reference point tilted toward base vertex v: coordinate (n-1)c at v and -c
// elsewhere, with c halved from 1/(n*m) until the point is interior to the
// symmetric edge polytope.
inline RatVec q_basepoint(const Digraph& g, int v) {
    if (v < 1 || v > g.n) throw input_error("base vertex out of range");
    if (!g.is_bidirected())
        throw input_error("base-vertex reference point needs a bidirected graph");
    if (!is_connected(g)) throw input_error("graph must be connected");
    std::vector<RatVec> verts;
    verts.reserve(g.m());
    for (const Edge& e : g.edges) verts.push_back(to_rat_vec(edge_vector(g, e.id)));
    Rat c = Rat(1) / (Int(g.n) * Int(g.m()));
    for (;;) {
        RatVec q(g.n, -c);
        q[v - 1] = c * (g.n - 1);
        if (relint_contains(verts, q)) return q;
        c /= 2;
    }
}

// Reference point from an edge order: the sum of edge vectors weighted by
// 2^rank, normalized by the total weight so the point stays inside the
// polytope.
inline RatVec q_order(const Digraph& g, const EdgeOrder& ord) {
    if ((int)ord.ranked.size() != g.m())
        throw input_error("edge order must rank every edge");
    Int denom = 0, w = 1;
    for (int r = 1; r <= g.m(); ++r) {
        w *= 2;
        denom += w;
    }
    RatVec q(g.n, Rat(0));
    w = 1;
    for (int r = 1; r <= g.m(); ++r) {
        w *= 2;
        const Rat weight = Rat(w) / Rat(denom);
        const Edge& e = g.edge(ord.ranked[r - 1]);
        q[e.head - 1] += weight;
        q[e.tail - 1] -= weight;
    }
    return q;
}

// --------------------------------------------------------- statistic routes --

// h* from the away statistic: per tree, the number of tree edges that point
// away from base vertex v and have a mixed fundamental cut.  On a bidirected
// graph every fundamental cut is mixed, so this counts the tree edges
// directed away from v.
inline HStarPolynomial hstar_away(const Digraph& g, const DissectingTreeSet& ts,
                                  int v) {
    if (ts.target != DissectionTarget::symmetric_edge_polytope)
        throw input_error(
            "the away statistic computes symmetric edge polytope h*-polynomials");
    if (!g.is_bidirected())
        throw input_error("the away statistic needs a bidirected graph");
    if (v < 1 || v > g.n) throw input_error("base vertex out of range");
    std::vector<int> values;
    values.reserve(ts.trees.size());
    for (const SpanningTree& t : ts.trees)
        values.push_back(basepoint_passivity(g, t, v).count);
    return hstar_from_distribution(values, target_dimension(g, ts.target));
}

// h* from internal semi-passivity with respect to a fixed edge order.
inline HStarPolynomial hstar_passivity(const Digraph& g,
                                       const DissectingTreeSet& ts,
                                       const EdgeOrder& ord) {
    if (!g.is_bidirected() && !is_semi_balanced(g).ok)
        throw input_error(
            "the passivity statistic needs a bidirected or semi-balanced digraph");
    std::vector<int> values;
    values.reserve(ts.trees.size());
    for (const SpanningTree& t : ts.trees)
        values.push_back(internal_semi_passivity(g, t, ord).count);
    return hstar_from_distribution(values, target_dimension(g, ts.target));
}

// h* from visible-facet counts: the coefficient of x^k is the number of
// simplices with exactly k facets visible from q.
inline HStarPolynomial hstar_visibility(const std::vector<Simplex>& simplices,
                                        const RatVec& q) {
    if (simplices.empty())
        throw input_error("visibility route needs at least one simplex");
    std::vector<int> values;
    values.reserve(simplices.size());
    for (const Simplex& s : simplices)
        values.push_back((int)visible_facets(s, q).size());
    return hstar_from_distribution(values, simplices.front().dim());
}

inline HStarPolynomial hstar_visibility(const Digraph& g,
                                        const DissectingTreeSet& ts,
                                        const RatVec& q) {
    return hstar_visibility(dissection_simplices(g, ts), q);
}

// ------------------------------------------------------ lattice-point route --

// h* of the digraph's polytope from lattice-point counts in the dilates
// t = 0..dim; independent of any dissection.
inline EhrhartData hstar_lattice(const Digraph& g) {
    return ehrhart_hstar(root_polytope_vertices(g));
}

// ------------------------------------------------------ half-open simplices --

// Does z lie on this facet's hyperplane in the t-th dilate?  The functional's
// constant term scales with the dilation factor.
inline bool on_dilated_facet(const Functional& f, const IntVec& z, const Int& t) {
    Rat v = f.constant * Rat(t);
    for (size_t i = 0; i < f.coeffs.size(); ++i)
        if (f.coeffs[i] != 0) v += f.coeffs[i] * Rat(z[i]);
    return v == 0;
}

// A simplex with the facets visible from a reference point removed.  Over a
// dissection the half-open pieces partition the polytope, so their per-dilate
// lattice counts add up to the Ehrhart count with every point covered exactly
// once.
struct HalfOpenSimplex {
    Simplex simplex;
    std::vector<int> removed;                   // facet indices, opposite-vertex indexing
    std::vector<Functional> removed_functionals;
    MembershipTester tester;

    HalfOpenSimplex(Simplex s, const RatVec& q)
        : simplex(std::move(s)), tester(simplex.verts) {
        removed = visible_facets(simplex, q);
        removed_functionals.reserve(removed.size());
        for (int j : removed) removed_functionals.push_back(facet_functional(simplex, j));
    }

    // z in the t-th dilate and off every removed facet hyperplane.
    bool contains(const IntVec& z, const Int& t) const {
        for (const Functional& f : removed_functionals)
            if (on_dilated_facet(f, z, t)) return false;
        return tester.contains(z, t);
    }

    // Lattice points of the t-th dilate that stay in the half-open piece.
    Int count(const Int& t) const {
        Int c = 0;
        for (const IntVec& z : lattice_points(simplex.verts, t)) {
            bool off = true;
            for (const Functional& f : removed_functionals)
                if (on_dilated_facet(f, z, t)) {
                    off = false;
                    break;
                }
            if (off) ++c;
        }
        return c;
    }
};

inline std::vector<HalfOpenSimplex> half_open_dissection(
    const std::vector<Simplex>& simplices, const RatVec& q) {
    std::vector<HalfOpenSimplex> out;
    out.reserve(simplices.size());
    for (const Simplex& s : simplices) out.emplace_back(s, q);
    return out;
}

}  // namespace hstar
