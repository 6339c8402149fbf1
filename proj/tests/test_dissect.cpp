#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "hstar/examples.hpp"

#include <set>

using namespace hstar;

namespace {

std::set<std::vector<int>> tree_sets(const std::vector<SpanningTree>& trees) {
    std::set<std::vector<int>> out;
    for (const auto& t : trees) out.insert(t.edges);
    return out;
}

}  // namespace

TEST_CASE("dissection targets and their simplices", "[dissect]") {
    Digraph g = examples::grid23().graph;
    CHECK(target_name(DissectionTarget::root_polytope) == "root polytope");
    CHECK(target_name(DissectionTarget::symmetric_edge_polytope) ==
          "symmetric edge polytope");
    CHECK(target_dimension(g, DissectionTarget::root_polytope) == 4);
    CHECK(target_dimension(g, DissectionTarget::symmetric_edge_polytope) == 5);

    SpanningTree t = make_tree(g, {1, 4, 5, 6, 7});
    Simplex root = dissection_simplex(g, DissectionTarget::root_polytope, t);
    CHECK(root.verts.size() == 5);
    CHECK(root.edge_ids.front() == 1);
    Simplex cone = dissection_simplex(g, DissectionTarget::symmetric_edge_polytope, t);
    CHECK(cone.verts.size() == 6);
    CHECK(cone.edge_ids.front() == 0);
    CHECK(cone.verts.front() == IntVec(6, Int(0)));
}

TEST_CASE("separating cut between the two exotic grid trees", "[dissect]") {
    Digraph g = examples::grid23().graph;
    SpanningTree a = make_tree(g, {2, 3, 4, 5, 7});
    SpanningTree b = make_tree(g, {1, 4, 5, 6, 7});
    auto cert = separating_cut(g, a, b);
    REQUIRE(cert.has_value());
    CHECK(cert->shore == std::vector<int>{2, 4, 6});
    CHECK(cert->cut_edges == std::vector<int>{1, 2, 3});

    // Certificate property: a's crossing edges enter the shore, b's leave it.
    auto in_shore = [&](int v) {
        return std::binary_search(cert->shore.begin(), cert->shore.end(), v);
    };
    for (int id : cert->cut_edges) {
        const Edge& e = g.edge(id);
        CHECK(in_shore(e.tail) != in_shore(e.head));
        if (a.contains(id)) CHECK(in_shore(e.head));
        if (b.contains(id)) CHECK(in_shore(e.tail));
    }

    // No cut separates a tree from itself.
    CHECK_FALSE(separating_cut(g, a, a).has_value());
}

TEST_CASE("supporting hyperplane test for cone bases", "[dissect]") {
    Digraph g = examples::k3().graph;
    auto good = detail::base_hyperplane(g, make_tree(g, {1, 5}));
    REQUIRE(good.has_value());
    CHECK(supports_polytope(g, *good));

    // A mixed-orientation tree spans a hyperplane through the interior.
    auto bad = detail::base_hyperplane(g, make_tree(g, {2, 5}));
    REQUIRE(bad.has_value());
    CHECK(bad->normal == IntVec{Int(0), Int(-1), Int(1)});
    CHECK_FALSE(supports_polytope(g, *bad));
}

TEST_CASE("tour criterion reproduces the bundled grid dissection", "[dissect]") {
    auto b = examples::grid23();
    RibbonStructure r = ribbon_from_coords(b.graph);
    DissectingTreeSet ts = jaeger_dissection(b.graph, r, b.base_vertex, b.base_edge);
    CHECK(ts.target == DissectionTarget::root_polytope);
    CHECK(tree_sets(ts.trees) == tree_sets(b.trees.trees));

    DissectionReport rep = verify_dissection(b.graph, ts);
    CHECK(rep.valid);
    CHECK(rep.normalized_volume == 4);
    CHECK(rep.tree_count == 4);
    CHECK(rep.evidence.size() == 6);  // one certificate per pair
    CHECK(rep.to_string().find("valid dissection") == 0);

    Digraph k3 = examples::k3().graph;
    CHECK_THROWS_AS(jaeger_dissection(k3, ribbon_from_coords(k3), 3, 4), input_error);
}

TEST_CASE("facets of the symmetric edge polytope of the triangle", "[dissect]") {
    auto b = examples::k3();
    auto facets = sympoly_facets(b.graph);
    REQUIRE(facets.size() == 6);
    std::set<std::vector<int>> ups;
    for (const auto& f : facets) {
        CHECK(f.potential[1] == 0);
        for (const Edge& e : b.graph.edges) {
            Int d = f.potential[e.head] - f.potential[e.tail];
            CHECK(d >= -1);
            CHECK(d <= 1);
        }
        // The up-edges are exactly where the potential climbs.
        for (int id : f.up_edges) {
            const Edge& e = b.graph.edge(id);
            CHECK(f.potential[e.head] == f.potential[e.tail] + 1);
        }
        ups.insert(f.up_edges);
    }
    // For the triangle every facet subgraph is itself a spanning tree, and
    // they are the six bundled trees.
    CHECK(ups == tree_sets(b.trees.trees));

    Digraph oriented = examples::grid23().graph;
    CHECK_THROWS_AS(sympoly_facets(oriented), input_error);  // not bidirected
}

TEST_CASE("cone dissection of the symmetric edge polytope", "[dissect]") {
    auto b = examples::k3();
    DissectingTreeSet ts = sympoly_dissection(b.graph);
    CHECK(ts.target == DissectionTarget::symmetric_edge_polytope);
    CHECK(tree_sets(ts.trees) == tree_sets(b.trees.trees));

    DissectionReport rep = verify_dissection(b.graph, ts);
    CHECK(rep.valid);
    CHECK(rep.normalized_volume == 6);
    CHECK(rep.evidence.size() == 15);
}

TEST_CASE("verification rejects short, overlapping, and mistargeted sets", "[dissect]") {
    auto b = examples::grid23();
    DissectingTreeSet ts;
    ts.target = DissectionTarget::root_polytope;
    ts.trees = b.trees.trees;

    SECTION("missing simplex: count below the volume") {
        ts.trees.pop_back();
        DissectionReport rep = verify_dissection(b.graph, ts);
        CHECK_FALSE(rep.valid);
        CHECK(rep.failure.find("volume") != std::string::npos);
    }
    SECTION("repeated tree: overlapping interiors with a witness point") {
        ts.trees.push_back(ts.trees.front());
        DissectionReport rep = verify_dissection(b.graph, ts);
        REQUIRE_FALSE(rep.valid);
        CHECK(rep.failing_a >= 0);
        CHECK(rep.failing_b >= 0);
        REQUIRE(rep.overlap_point.has_value());
        // The witness lies in both simplices' relative interiors.
        auto simp = dissection_simplices(b.graph, ts);
        for (int idx : {rep.failing_a, rep.failing_b}) {
            std::vector<RatVec> verts;
            for (const auto& v : simp[idx].verts) verts.push_back(to_rat_vec(v));
            CHECK(relint_contains(verts, *rep.overlap_point));
        }
    }
    SECTION("empty set") {
        ts.trees.clear();
        CHECK_FALSE(verify_dissection(b.graph, ts).valid);
    }
    SECTION("root target on a graph that is not semi-balanced") {
        auto k3 = examples::k3();
        DissectingTreeSet wrong;
        wrong.target = DissectionTarget::root_polytope;
        wrong.trees = k3.trees.trees;
        DissectionReport rep = verify_dissection(k3.graph, wrong);
        CHECK_FALSE(rep.valid);
        CHECK(rep.failure.find("semi-balanced") != std::string::npos);
    }
    SECTION("symmetric target on a plain digraph") {
        DissectingTreeSet wrong;
        wrong.target = DissectionTarget::symmetric_edge_polytope;
        wrong.trees = b.trees.trees;
        DissectionReport rep = verify_dissection(b.graph, wrong);
        CHECK_FALSE(rep.valid);
        CHECK(rep.failure.find("bidirected") != std::string::npos);
    }
}

TEST_CASE("verify_and_mark stamps the set", "[dissect]") {
    auto b = examples::grid23();
    DissectingTreeSet ts;
    ts.target = DissectionTarget::root_polytope;
    ts.trees = b.trees.trees;
    CHECK_FALSE(ts.verified);
    DissectionReport rep = verify_and_mark(b.graph, ts);
    CHECK(rep.valid);
    CHECK(ts.verified);
}

TEST_CASE("enumeration finds the unique triangle dissection", "[dissect]") {
    auto b = examples::k3();
    DissectionEnumeration e =
        enumerate_dissections(b.graph, DissectionTarget::symmetric_edge_polytope, 10);
    CHECK(e.complete);
    REQUIRE(e.sets.size() == 1);
    CHECK(e.sets[0].verified);
    CHECK(tree_sets(e.sets[0].trees) == tree_sets(b.trees.trees));
}

TEST_CASE("enumeration surfaces alternative grid dissections", "[dissect]") {
    auto b = examples::grid23();
    auto alt = examples::grid23_alt();
    DissectionEnumeration e =
        enumerate_dissections(b.graph, DissectionTarget::root_polytope, 100);
    CHECK(e.complete);
    CHECK(e.sets.size() >= 2);

    std::set<std::set<std::vector<int>>> families;
    for (const auto& ts : e.sets) {
        CHECK(ts.trees.size() == 4);
        CHECK(ts.verified);
        families.insert(tree_sets(ts.trees));
        // Every dissection induces the same statistic distribution.
        std::vector<Int> histogram(5, 0);
        for (const auto& t : ts.trees)
            ++histogram[internal_semi_passivity(b.graph, t, EdgeOrder::labels(7)).count];
        CHECK(histogram == std::vector<Int>{Int(1), Int(2), Int(1), Int(0), Int(0)});
    }
    CHECK(families.count(tree_sets(b.trees.trees)) == 1);
    CHECK(families.count(tree_sets(alt.trees.trees)) == 1);
}

TEST_CASE("enumeration respects its node budget", "[dissect]") {
    auto b = examples::grid23();
    DissectionEnumeration e =
        enumerate_dissections(b.graph, DissectionTarget::root_polytope, 100, 1);
    CHECK_FALSE(e.complete);
}
