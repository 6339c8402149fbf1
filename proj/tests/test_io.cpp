#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "hstar/examples.hpp"
#include "hstar/io.hpp"

#include <fstream>
#include <sstream>

using namespace hstar;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string data_path(const std::string& name) {
    return std::string(HSTAR_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("graph files parse with coordinates and twins", "[io]") {
    Digraph g = parse_graph_text(examples::k3_graph_text);
    CHECK(g.n == 3);
    CHECK(g.m() == 6);
    CHECK(g.is_bidirected());
    CHECK(g.twin[3] == 4);
    REQUIRE(g.has_coords());
    CHECK(g.coords[2].first == Rat(1));
    CHECK(g.coords[2].second == Rat(3, 2));
    CHECK(g.edge(5).tail == 1);
    CHECK(g.edge(5).head == 3);
}

TEST_CASE("undirected u lines double into twin pairs", "[io]") {
    Digraph g = parse_graph_text(
        "v 3\n"
        "u 1 1 2\n"
        "u 2 2 3\n"
        "u 3 1 3\n");
    CHECK(g.n == 3);
    CHECK(g.m() == 6);
    CHECK(g.is_bidirected());
    CHECK(g.edge(1).tail == 1);
    CHECK(g.edge(1).head == 2);
    CHECK(g.edge(2).tail == 2);  // reversed copy of u-edge 1
    CHECK(g.edge(2).head == 1);
    CHECK(g.twin[1] == 2);
    CHECK(g.edge(5).tail == 1);  // u-edge 3 as written
    CHECK(g.edge(5).head == 3);
    CHECK_FALSE(g.has_coords());
}

TEST_CASE("comments and blank lines are ignored", "[io]") {
    Digraph g = parse_graph_text(
        "# a comment\n"
        "\n"
        "v 2\n"
        "   # indented comment\n"
        "e 1 1 2   # trailing comment\n");
    CHECK(g.n == 2);
    CHECK(g.m() == 1);
}

TEST_CASE("malformed graph files are rejected", "[io]") {
    CHECK_THROWS_AS(parse_graph_text(""), input_error);                    // no v
    CHECK_THROWS_AS(parse_graph_text("e 1 1 2\nv 2\n"), input_error);      // v not first
    CHECK_THROWS_AS(parse_graph_text("v 2\nv 2\ne 1 1 2\n"), input_error); // dup v
    CHECK_THROWS_AS(parse_graph_text("v 0\n"), input_error);
    CHECK_THROWS_AS(parse_graph_text("v 2\n"), input_error);               // no edges
    CHECK_THROWS_AS(parse_graph_text("v 2\ne 1 1 2\nu 2 1 2\n"), input_error);
    CHECK_THROWS_AS(parse_graph_text("v 2\ne 1 1 2 9\n"), input_error);    // arity
    CHECK_THROWS_AS(parse_graph_text("v 2\ne 1 1 3\n"), input_error);      // range
    CHECK_THROWS_AS(parse_graph_text("v 2\ne 1 1 1\n"), input_error);      // loop
    CHECK_THROWS_AS(parse_graph_text("v 2\ne one 1 2\n"), input_error);    // not an int
    CHECK_THROWS_AS(parse_graph_text("v 2\nx 1 1 2\n"), input_error);      // directive
    CHECK_THROWS_AS(parse_graph_text("v 2\nc 1 0 0\ne 1 1 2\n"), input_error);  // partial coords
    CHECK_THROWS_AS(parse_graph_text("v 2\nc 1 0 0\nc 1 1 1\nc 2 0 1\ne 1 1 2\n"),
                    input_error);                                          // dup coords
    CHECK_THROWS_AS(parse_graph_text("v 2\nc 3 0 0\ne 1 1 2\n"), input_error);
}

TEST_CASE("graph serialization round-trips", "[io]") {
    Digraph g = parse_graph_text(examples::k3_graph_text);
    std::string text = serialize_graph(g);
    Digraph h = parse_graph_text(text);
    CHECK(h.n == g.n);
    CHECK(h.m() == g.m());
    for (int id = 1; id <= g.m(); ++id) {
        CHECK(h.edge(id).tail == g.edge(id).tail);
        CHECK(h.edge(id).head == g.edge(id).head);
    }
    CHECK(h.coords == g.coords);
    CHECK(h.is_bidirected());
    CHECK(serialize_graph(h) == text);
    CHECK(graph_hash(h) == graph_hash(g));

    Digraph other = parse_graph_text(examples::grid_graph_text);
    CHECK(graph_hash(other) != graph_hash(g));
}

TEST_CASE("ribbon files override the fallback per vertex", "[io]") {
    Digraph g = parse_graph_text(examples::k3_graph_text);
    // No r lines: falls back to the drawing coordinates.
    RibbonStructure coords = parse_ribbon_text(g, "");
    CHECK(coords.succ(1, 5) == 2);

    // Override vertex 1 only; vertices 2 and 3 keep the coordinate order.
    RibbonStructure mixed = parse_ribbon_text(g, "r 1 1 2 5 6\n");
    CHECK(mixed.succ(1, 1) == 2);
    CHECK(mixed.succ(2, 1) == 2);
    CHECK(mixed.cyclic[3] == coords.cyclic[3]);

    // Without coordinates the fallback is declaration order.
    Digraph plain = corpus::doubled(3, corpus::complete_edges(3));
    RibbonStructure decl = parse_ribbon_text(plain, "");
    CHECK(decl.cyclic[1] == std::vector<int>{1, 2, 3, 4});

    CHECK_THROWS_AS(parse_ribbon_text(g, "q 1 1 2\n"), input_error);
    CHECK_THROWS_AS(parse_ribbon_text(g, "r 9 1 2\n"), input_error);
    CHECK_THROWS_AS(parse_ribbon_text(g, "r 1 1 2 5\n"), input_error);      // missing 6
    CHECK_THROWS_AS(parse_ribbon_text(g, "r 1 1 2 5 6\nr 1 1 2 5 6\n"), input_error);
    CHECK_THROWS_AS(parse_ribbon_text(g, "r 1 1 2 5 3\n"), input_error);    // not incident
}

TEST_CASE("tree files parse and serialize", "[io]") {
    Digraph g = parse_graph_text(examples::k3_graph_text);
    auto trees = parse_trees_text(g, examples::k3_trees_text);
    REQUIRE(trees.size() == 6);
    CHECK(trees[0].edges == std::vector<int>{4, 5});
    CHECK(serialize_trees(trees) ==
          "t 4 5\nt 3 6\nt 2 6\nt 1 5\nt 1 3\nt 2 4\n");

    CHECK_THROWS_AS(parse_trees_text(g, ""), input_error);
    CHECK_THROWS_AS(parse_trees_text(g, "t 1 2\n"), input_error);   // cycle
    CHECK_THROWS_AS(parse_trees_text(g, "t 4\n"), input_error);     // too short
    CHECK_THROWS_AS(parse_trees_text(g, "x 4 5\n"), input_error);
}

TEST_CASE("bundled data files match the built-in examples byte for byte", "[io]") {
    CHECK(slurp(data_path("k3.ug")) == examples::k3_graph_text);
    CHECK(slurp(data_path("k3.trees")) == examples::k3_trees_text);
    CHECK(slurp(data_path("grid23.dg")) == examples::grid_graph_text);
    CHECK(slurp(data_path("grid23.trees")) == examples::grid_trees_text);
    CHECK(slurp(data_path("grid23-alt.trees")) == examples::grid_alt_trees_text);
}

TEST_CASE("loading from disk mirrors parsing from text", "[io]") {
    Digraph g = load_graph(data_path("grid23.dg"));
    CHECK(g.n == 6);
    CHECK(g.m() == 7);
    auto trees = load_trees(g, data_path("grid23.trees"));
    CHECK(trees.size() == 4);
    CHECK_THROWS_AS(load_graph(data_path("missing.ug")), input_error);
    CHECK_THROWS_AS(load_trees(g, data_path("missing.trees")), input_error);
    CHECK_THROWS_AS(load_ribbon(g, data_path("missing.ribbon")), input_error);
}

TEST_CASE("hash function matches the published test vectors", "[io]") {
    CHECK(fnv1a("") == 14695981039346656037ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
}
