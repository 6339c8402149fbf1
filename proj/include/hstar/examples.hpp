// Bundled worked examples: the bidirected triangle and a semi-balanced
// orientation of the 2x3 grid, each with a dissecting tree set, reference
// statistics, and replay routines that recompute everything and compare.
// Also the negative findings: on a root polytope dissection that the tour
// criterion did not produce, both the base-vertex and per-tree tour
// statistics miss h*; the per-tree tour statistic fails on the symmetric
// side as well.
#pragma once

#include <array>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hstar.hpp"
#include "io.hpp"

namespace hstar::examples {

// ------------------------------------------------------------ bundled data --

// Bidirected triangle: three vertex pairs, each joined in both directions.
// Edge ids match the worked-example labelling; coordinates give the plane
// drawing used for ribbon structures.
inline constexpr const char* k3_graph_text =
    R"(# Bidirected triangle: three vertex pairs, each joined in both directions.
# Edge ids match the worked-example labelling; coordinates give the plane
# drawing used for ribbon structures.
v 3
c 1 0 0
c 2 1 3/2
c 3 2 0
e 1 1 2
e 2 2 1
e 3 3 2
e 4 2 3
e 5 1 3
e 6 3 1
)";

inline constexpr const char* k3_trees_text =
    R"(# The six oriented spanning trees whose cones at the origin dissect the
# symmetric edge polytope of the triangle.
t 4 5
t 3 6
t 2 6
t 1 5
t 1 3
t 2 4
)";

// Semi-balanced orientation of the 2x3 grid graph.
inline constexpr const char* grid_graph_text =
    R"(# Semi-balanced orientation of the 2x3 grid graph.  The drawing
# coordinates give the planar ribbon structure; tours use base vertex 5
# (lower left) with base edge 3 (lower left to lower right).
v 6
c 1 0 10
c 2 5 10
c 3 0 5
c 4 5 5
c 5 0 0
c 6 5 0
e 1 2 1
e 2 3 4
e 3 5 6
e 4 3 1
e 5 2 4
e 6 5 3
e 7 6 4
)";

inline constexpr const char* grid_trees_text =
    R"(# Dissecting trees of the grid root polytope found by the tour criterion
# for the planar ribbon structure with base pair (5, 3).
t 1 4 5 6 7
t 2 4 5 6 7
t 1 3 4 5 6
t 2 3 4 5 6
)";

inline constexpr const char* grid_alt_trees_text =
    R"(# An alternative dissection of the grid root polytope; the base-vertex
# and per-tree tour statistics both miss h* on it.
t 2 3 4 5 7
t 1 4 5 6 7
t 1 3 4 5 6
t 3 4 5 6 7
)";

// ------------------------------------------------------ reference statistics --

inline constexpr int k3_base_vertex = 3;  // lower right in the drawing
inline constexpr int k3_base_edge = 4;    // top vertex to lower right

// Internal semi-passivity per bundled tree under the declaration-label order.
inline constexpr std::array<int, 6> k3_label_passivity{1, 1, 0, 2, 1, 1};

// Tour order of each bundled tree for base pair (3, 4): ranked[r-1] is the
// edge with rank r.
inline constexpr std::array<std::array<int, 6>, 6> k3_tour_ranked{{
    {2, 4, 3, 1, 5, 6},
    {3, 4, 2, 6, 5, 1},
    {3, 6, 5, 4, 2, 1},
    {3, 1, 2, 4, 5, 6},
    {3, 4, 5, 1, 2, 6},
    {2, 1, 5, 4, 3, 6},
}};

// Internal semi-passivity of each tree under its own tour order.  The
// distribution is 3x + 3x^2, which differs from h*: re-deriving the order
// per tree is not a valid route on the symmetric side.
inline constexpr std::array<int, 6> k3_tour_passivity{2, 1, 2, 2, 1, 1};

inline constexpr std::array<int, 3> k3_hstar{1, 4, 1};
inline constexpr std::array<long, 3> k3_point_counts{1, 7, 19};

inline constexpr int grid_base_vertex = 5;
inline constexpr int grid_base_edge = 3;

// Per tree of the tour-derived grid dissection, in bundled order.
inline constexpr std::array<int, 4> grid_label_passivity{1, 0, 2, 1};
inline constexpr std::array<int, 4> grid_base_passivity{0, 1, 1, 2};

// Per tree of the alternative grid dissection, in bundled order.  The
// base-vertex distribution is 2 + x + x^3 and the tour distribution is
// 1 + 3x; both differ from h* = 1 + 2x + x^2.  The two statistics agree
// exactly on the trees the tour criterion accepts (the middle two) and
// disagree on the rejected ones.
inline constexpr std::array<int, 4> grid_alt_base_passivity{0, 0, 1, 3};
inline constexpr std::array<int, 4> grid_alt_tour_passivity{1, 0, 1, 1};

inline constexpr std::array<int, 3> grid_hstar{1, 2, 1};

// --------------------------------------------------------------- accessors --

struct Bundle {
    Digraph graph;
    DissectingTreeSet trees;  // bundled dissection in figure-panel order
    int base_vertex = 0;
    int base_edge = 0;
};

inline Bundle k3() {
    Bundle b;
    b.graph = parse_graph_text(k3_graph_text);
    b.trees.target = DissectionTarget::symmetric_edge_polytope;
    b.trees.trees = parse_trees_text(b.graph, k3_trees_text);
    b.base_vertex = k3_base_vertex;
    b.base_edge = k3_base_edge;
    return b;
}

inline Bundle grid23() {
    Bundle b;
    b.graph = parse_graph_text(grid_graph_text);
    b.trees.target = DissectionTarget::root_polytope;
    b.trees.trees = parse_trees_text(b.graph, grid_trees_text);
    b.base_vertex = grid_base_vertex;
    b.base_edge = grid_base_edge;
    return b;
}

inline Bundle grid23_alt() {
    Bundle b = grid23();
    b.trees.trees = parse_trees_text(b.graph, grid_alt_trees_text);
    b.trees.verified = false;
    return b;
}

// ------------------------------------------------------------------ replay --

struct ReplayCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ReplayReport {
    std::string example;
    std::vector<ReplayCheck> checks;

    bool ok() const {
        for (const ReplayCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string render_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

inline void push_check(ReplayReport& rep, std::string name, std::string expected,
                       std::string computed) {
    bool pass = expected == computed;
    rep.checks.push_back(
        {std::move(name), std::move(expected), std::move(computed), pass});
}

template <size_t N>
inline std::vector<int> as_vector(const std::array<int, N>& a) {
    return std::vector<int>(a.begin(), a.end());
}

// Trees as a canonically sorted list of edge-id sets, for set comparison.
inline std::vector<std::vector<int>> tree_family(const std::vector<SpanningTree>& ts) {
    std::vector<std::vector<int>> fam;
    fam.reserve(ts.size());
    for (const SpanningTree& t : ts) fam.push_back(t.edges);
    std::sort(fam.begin(), fam.end());
    return fam;
}

inline std::string render_family(const std::vector<std::vector<int>>& fam) {
    std::ostringstream os;
    for (size_t i = 0; i < fam.size(); ++i) {
        os << (i ? " " : "") << '{';
        for (size_t j = 0; j < fam[i].size(); ++j)
            os << (j ? "," : "") << fam[i][j];
        os << '}';
    }
    return os.str();
}

}  // namespace detail

// Triangle: dissection construction, all four h* routes, per-tree label-order
// passivities, and the first dilate counts.
inline ReplayReport replay_k3() {
    ReplayReport rep;
    rep.example = "k3";
    Bundle b = k3();
    const Digraph& g = b.graph;

    DissectingTreeSet built = sympoly_dissection(g);
    detail::push_check(rep, "dissecting trees",
                       detail::render_family(detail::tree_family(b.trees.trees)),
                       detail::render_family(detail::tree_family(built.trees)));
    detail::push_check(rep, "dissection verifies", "valid",
                       verify_dissection(g, b.trees).valid ? "valid" : "invalid");

    std::vector<int> label_vals;
    EdgeOrder labels = EdgeOrder::labels(g.m());
    for (const SpanningTree& t : b.trees.trees)
        label_vals.push_back(internal_semi_passivity(g, t, labels).count);
    detail::push_check(rep, "label-order passivities",
                       detail::render_ints(detail::as_vector(k3_label_passivity)),
                       detail::render_ints(label_vals));

    HStarPolynomial expect;
    expect.coeffs.assign(k3_hstar.begin(), k3_hstar.end());
    for (int v = 1; v <= g.n; ++v)
        detail::push_check(rep, "h* away, base vertex " + std::to_string(v),
                           expect.to_string(),
                           hstar_away(g, b.trees, v).to_string());
    detail::push_check(rep, "h* passivity, label order", expect.to_string(),
                       hstar_passivity(g, b.trees, labels).to_string());
    detail::push_check(rep, "h* visibility, base-vertex point", expect.to_string(),
                       hstar_visibility(g, b.trees, q_basepoint(g, 1)).to_string());
    detail::push_check(rep, "h* visibility, order point", expect.to_string(),
                       hstar_visibility(g, b.trees, q_order(g, labels)).to_string());

    EhrhartData lattice = hstar_lattice(g);
    detail::push_check(rep, "h* lattice points", expect.to_string(),
                       lattice.hstar.to_string());
    std::vector<int> counts;
    for (const Int& c : lattice.ehrhart.counts) counts.push_back((int)(long)c);
    std::vector<int> expect_counts(k3_point_counts.begin(), k3_point_counts.end());
    detail::push_check(rep, "dilate point counts",
                       detail::render_ints(expect_counts),
                       detail::render_ints(counts));
    return rep;
}

// Grid: the tour-derived dissection, its verification, per-tree statistics,
// and the three dissection-based h* routes against the lattice route.
inline ReplayReport replay_grid23() {
    ReplayReport rep;
    rep.example = "grid23";
    Bundle b = grid23();
    const Digraph& g = b.graph;

    RibbonStructure r = ribbon_from_coords(g);
    DissectingTreeSet built = jaeger_dissection(g, r, b.base_vertex, b.base_edge);
    detail::push_check(rep, "dissecting trees",
                       detail::render_family(detail::tree_family(b.trees.trees)),
                       detail::render_family(detail::tree_family(built.trees)));
    detail::push_check(rep, "dissection verifies", "valid",
                       verify_dissection(g, b.trees).valid ? "valid" : "invalid");

    EdgeOrder labels = EdgeOrder::labels(g.m());
    std::vector<int> label_vals, base_vals;
    for (const SpanningTree& t : b.trees.trees) {
        label_vals.push_back(internal_semi_passivity(g, t, labels).count);
        base_vals.push_back(basepoint_passivity(g, t, b.base_vertex).count);
    }
    detail::push_check(rep, "label-order passivities",
                       detail::render_ints(detail::as_vector(grid_label_passivity)),
                       detail::render_ints(label_vals));
    detail::push_check(rep, "base-vertex passivities",
                       detail::render_ints(detail::as_vector(grid_base_passivity)),
                       detail::render_ints(base_vals));

    HStarPolynomial expect;
    expect.coeffs.assign(grid_hstar.begin(), grid_hstar.end());
    detail::push_check(rep, "h* passivity, label order", expect.to_string(),
                       hstar_passivity(g, b.trees, labels).to_string());
    detail::push_check(rep, "h* visibility, order point", expect.to_string(),
                       hstar_visibility(g, b.trees, q_order(g, labels)).to_string());
    detail::push_check(rep, "h* lattice points", expect.to_string(),
                       hstar_lattice(g).hstar.to_string());
    return rep;
}

// Alternative grid dissection: it verifies, fixed-order passivity still gives
// h*, but the base-vertex and per-tree tour statistics both miss h*.
inline ReplayReport replay_grid23_alt() {
    ReplayReport rep;
    rep.example = "grid23-alt";
    Bundle b = grid23_alt();
    const Digraph& g = b.graph;

    detail::push_check(rep, "dissection verifies", "valid",
                       verify_dissection(g, b.trees).valid ? "valid" : "invalid");

    RibbonStructure r = ribbon_from_coords(g);
    std::vector<int> base_vals, tour_vals;
    for (const SpanningTree& t : b.trees.trees) {
        base_vals.push_back(basepoint_passivity(g, t, b.base_vertex).count);
        tour_vals.push_back(
            embedding_semi_passivity(g, r, b.base_vertex, b.base_edge, t)
                .report.count);
    }
    detail::push_check(rep, "base-vertex passivities",
                       detail::render_ints(detail::as_vector(grid_alt_base_passivity)),
                       detail::render_ints(base_vals));
    detail::push_check(rep, "tour passivities",
                       detail::render_ints(detail::as_vector(grid_alt_tour_passivity)),
                       detail::render_ints(tour_vals));

    HStarPolynomial expect;
    expect.coeffs.assign(grid_hstar.begin(), grid_hstar.end());
    HStarPolynomial base_poly = hstar_from_distribution(base_vals, g.n - 2);
    detail::push_check(rep, "base-vertex distribution misses h*",
                       "differs from " + expect.to_string(),
                       base_poly.same_polynomial(expect)
                           ? "equals " + expect.to_string()
                           : "differs from " + expect.to_string());
    HStarPolynomial tour_poly = hstar_from_distribution(tour_vals, g.n - 2);
    detail::push_check(rep, "tour distribution misses h*",
                       "differs from " + expect.to_string(),
                       tour_poly.same_polynomial(expect)
                           ? "equals " + expect.to_string()
                           : "differs from " + expect.to_string());
    detail::push_check(rep, "h* passivity, label order", expect.to_string(),
                       hstar_passivity(g, b.trees, EdgeOrder::labels(g.m()))
                           .to_string());
    return rep;
}

// Triangle tours: the tour order of every bundled tree and the per-tree tour
// statistic, whose distribution misses h*.
inline ReplayReport replay_k3_tours() {
    ReplayReport rep;
    rep.example = "k3-tours";
    Bundle b = k3();
    const Digraph& g = b.graph;
    RibbonStructure r = ribbon_from_coords(g);

    std::vector<int> tour_vals;
    for (size_t i = 0; i < b.trees.trees.size(); ++i) {
        const SpanningTree& t = b.trees.trees[i];
        EmbeddingPassivity emb =
            embedding_semi_passivity(g, r, b.base_vertex, b.base_edge, t);
        tour_vals.push_back(emb.report.count);
        std::vector<int> expect_rank(k3_tour_ranked[i].begin(),
                                     k3_tour_ranked[i].end());
        detail::push_check(rep, "tour order, tree " + std::to_string(i + 1),
                           detail::render_ints(expect_rank),
                           detail::render_ints(emb.order.ranked));
    }
    detail::push_check(rep, "tour passivities",
                       detail::render_ints(detail::as_vector(k3_tour_passivity)),
                       detail::render_ints(tour_vals));

    HStarPolynomial expect;
    expect.coeffs.assign(k3_hstar.begin(), k3_hstar.end());
    HStarPolynomial tour_poly = hstar_from_distribution(tour_vals, g.n - 1);
    detail::push_check(rep, "tour distribution misses h*",
                       "differs from " + expect.to_string(),
                       tour_poly.same_polynomial(expect)
                           ? "equals " + expect.to_string()
                           : "differs from " + expect.to_string());
    return rep;
}

inline std::vector<std::string> replay_names() {
    return {"k3", "grid23", "grid23-alt", "k3-tours"};
}

inline ReplayReport replay(const std::string& name) {
    if (name == "k3") return replay_k3();
    if (name == "grid23") return replay_grid23();
    if (name == "grid23-alt") return replay_grid23_alt();
    if (name == "k3-tours") return replay_k3_tours();
    throw input_error("unknown example '" + name + "'");
}

}  // namespace hstar::examples

namespace hstar {

// Negative findings, recomputed from the bundled examples: where each
// statistic stops matching h* once the dissection is not the one its theory
// covers.
struct NegativeSuiteReport {
    // Root polytope of the grid, alternative dissection.
    std::vector<int> root_basepoint_values;
    std::vector<int> root_tour_values;
    std::vector<bool> root_tour_accepts;  // tour criterion verdict per tree
    HStarPolynomial root_hstar;
    bool root_set_verified = false;
    bool basepoint_failure_confirmed = false;  // distribution != h*
    bool root_tour_failure_confirmed = false;  // distribution != h*

    // Symmetric edge polytope of the triangle.
    std::vector<int> symmetric_tour_values;
    HStarPolynomial symmetric_hstar;
    bool symmetric_set_verified = false;
    bool tour_failure_confirmed = false;  // distribution != h*

    std::vector<std::string> lines;

    bool ok() const {
        return root_set_verified && symmetric_set_verified &&
               basepoint_failure_confirmed && root_tour_failure_confirmed &&
               tour_failure_confirmed;
    }
};

inline NegativeSuiteReport negative_suite() {
    NegativeSuiteReport rep;
    {
        examples::Bundle b = examples::grid23_alt();
        const Digraph& g = b.graph;
        rep.root_set_verified = verify_dissection(g, b.trees).valid;
        rep.root_hstar = hstar_lattice(g).hstar;
        RibbonStructure r = ribbon_from_coords(g);
        for (const SpanningTree& t : b.trees.trees) {
            rep.root_basepoint_values.push_back(
                basepoint_passivity(g, t, b.base_vertex).count);
            rep.root_tour_values.push_back(
                embedding_semi_passivity(g, r, b.base_vertex, b.base_edge, t)
                    .report.count);
            rep.root_tour_accepts.push_back(
                is_jaeger(g, r, b.base_vertex, b.base_edge, t));
        }
        HStarPolynomial bp =
            hstar_from_distribution(rep.root_basepoint_values, g.n - 2);
        HStarPolynomial tp =
            hstar_from_distribution(rep.root_tour_values, g.n - 2);
        rep.basepoint_failure_confirmed = !bp.same_polynomial(rep.root_hstar);
        rep.root_tour_failure_confirmed = !tp.same_polynomial(rep.root_hstar);
        rep.lines.push_back(
            "root polytope, alternative grid dissection: base-vertex values " +
            examples::detail::render_ints(rep.root_basepoint_values) +
            " give " + bp.to_string() + ", but h* is " + rep.root_hstar.to_string() +
            " -> the base-vertex statistic needs a tour-derived tree set");
        rep.lines.push_back(
            "same dissection, per-tree tour statistic: values " +
            examples::detail::render_ints(rep.root_tour_values) + " give " +
            tp.to_string() +
            (rep.root_tour_failure_confirmed
                 ? ", which also differs from h*"
                 : ", which matches h*") +
            "; the values agree with the base-vertex statistic only on the "
            "trees the tour criterion accepts");
    }
    {
        examples::Bundle b = examples::k3();
        const Digraph& g = b.graph;
        rep.symmetric_set_verified = verify_dissection(g, b.trees).valid;
        rep.symmetric_hstar = hstar_lattice(g).hstar;
        RibbonStructure r = ribbon_from_coords(g);
        for (const SpanningTree& t : b.trees.trees)
            rep.symmetric_tour_values.push_back(
                embedding_semi_passivity(g, r, b.base_vertex, b.base_edge, t)
                    .report.count);
        HStarPolynomial tp =
            hstar_from_distribution(rep.symmetric_tour_values, g.n - 1);
        rep.tour_failure_confirmed = !tp.same_polynomial(rep.symmetric_hstar);
        rep.lines.push_back(
            "symmetric edge polytope of the triangle: per-tree tour values " +
            examples::detail::render_ints(rep.symmetric_tour_values) + " give " +
            tp.to_string() + ", but h* is " + rep.symmetric_hstar.to_string() +
            " -> re-deriving the order per tree is not a valid route");
    }
    return rep;
}

}  // namespace hstar
