// Command-line driver: h*-polynomials of symmetric edge polytopes and root
// polytopes over verified dissecting tree sets, dissection verification, and
// replay of the bundled worked examples.
//
// Exit codes: 0 success (routes agree / verification passed), 1 disagreement
// or failed verification, 2 input error, 3 genericity error (a reference
// point landed on a facet hyperplane).
#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hstar/examples.hpp"

namespace {

using namespace hstar;

constexpr int exit_ok = 0;
constexpr int exit_disagreement = 1;
constexpr int exit_input = 2;
constexpr int exit_genericity = 3;

struct RunConfig {
    std::string graph_path;
    std::string method = "all";  // away|passivity|visibility|ehrhart|all
    int base_vertex = 0;         // 0 = default (vertex 1)
    int base_edge = 0;           // 0 = first ribbon edge at the base vertex
    std::string order = "labels";
    std::string ribbon = "auto";  // auto|coords|declaration|<file>
    std::string trees_path;
    std::string output = "text";  // text|record
    unsigned seed = 0;
    bool base_vertex_given = false;
};

std::string hash_hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string coeff_list(const HStarPolynomial& h) {
    std::ostringstream os;
    for (size_t i = 0; i < h.coeffs.size(); ++i)
        os << (i ? " " : "") << h.coeffs[i].str();
    return os.str();
}

std::string int_list(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::string rat_list(const RatVec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << rat_to_string(v[i]);
    return os.str();
}

EdgeOrder make_order(const Digraph& g, const std::string& spec) {
    if (spec == "labels") return EdgeOrder::labels(g.m());
    std::vector<int> ids;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            ids.push_back(std::stoi(token));
        } catch (...) {
            throw input_error("--order expects 'labels' or comma-separated edge ids");
        }
    }
    return EdgeOrder::from_ranked(g.m(), std::move(ids));
}

RibbonStructure make_ribbon(const Digraph& g, const std::string& spec) {
    if (spec == "auto")
        return g.has_coords() ? ribbon_from_coords(g) : ribbon_from_declaration(g);
    if (spec == "coords") return ribbon_from_coords(g);
    if (spec == "declaration") return ribbon_from_declaration(g);
    return load_ribbon(g, spec);
}

// One computed route: name, polynomial, and optional per-tree values.
struct RouteResult {
    std::string name;
    HStarPolynomial hstar;
    std::vector<int> values;  // per-tree statistic, empty for the lattice route
};

int run_hstar(const RunConfig& cfg) {
    Digraph g = load_graph(cfg.graph_path);
    const bool symmetric = g.is_bidirected();
    DissectionTarget target = symmetric
                                  ? DissectionTarget::symmetric_edge_polytope
                                  : DissectionTarget::root_polytope;
    if (!symmetric) {
        SemiBalance sb = is_semi_balanced(g);
        if (!sb.ok) {
            std::ostringstream os;
            os << "graph is neither bidirected nor semi-balanced; edges";
            for (int id : sb.violating_cycle) os << ' ' << id;
            os << " close a cycle whose orientation is unbalanced";
            throw input_error(os.str());
        }
    }

    const int v0 = cfg.base_vertex == 0 ? 1 : cfg.base_vertex;
    EdgeOrder order = make_order(g, cfg.order);

    // Assemble the dissecting tree set: from a file when given, otherwise
    // facet-by-facet for the symmetric target and by the tour criterion for
    // the root target.
    DissectingTreeSet ts;
    ts.target = target;
    if (!cfg.trees_path.empty()) {
        ts.trees = load_trees(g, cfg.trees_path);
    } else if (symmetric) {
        ts = sympoly_dissection(g);
    } else {
        RibbonStructure r = make_ribbon(g, cfg.ribbon);
        int e0 = cfg.base_edge;
        if (e0 == 0) {
            if (r.cyclic[v0].empty())
                throw input_error("base vertex has no incident edges");
            e0 = r.cyclic[v0].front();
        }
        ts = jaeger_dissection(g, r, v0, e0);
    }
    DissectionReport verification = verify_and_mark(g, ts);

    const bool want_all = cfg.method == "all";
    std::vector<RouteResult> routes;
    EhrhartData lattice;
    bool lattice_run = false;

    auto statistic_route = [&](const std::string& name, auto&& per_tree) {
        RouteResult r;
        r.name = name;
        for (const SpanningTree& t : ts.trees) r.values.push_back(per_tree(t));
        r.hstar = hstar_from_distribution(r.values, target_dimension(g, target));
        routes.push_back(std::move(r));
    };

    if (cfg.method == "away" || (want_all && symmetric)) {
        if (!symmetric)
            throw input_error(
                "the away statistic applies to symmetric edge polytopes "
                "(bidirected graphs)");
        statistic_route("away", [&](const SpanningTree& t) {
            return basepoint_passivity(g, t, v0).count;
        });
    }
    if (cfg.method == "passivity" || want_all) {
        statistic_route("passivity", [&](const SpanningTree& t) {
            return internal_semi_passivity(g, t, order).count;
        });
        if (want_all) {
            // Cross-check with seeded random orders; any disagreement counts.
            std::mt19937 rng(cfg.seed);
            std::vector<int> ids(g.m());
            std::iota(ids.begin(), ids.end(), 1);
            for (int k = 0; k < 3; ++k) {
                std::shuffle(ids.begin(), ids.end(), rng);
                EdgeOrder random_order = EdgeOrder::from_ranked(g.m(), ids);
                statistic_route("passivity-random-" + std::to_string(k + 1),
                                [&](const SpanningTree& t) {
                                    return internal_semi_passivity(g, t, random_order)
                                        .count;
                                });
            }
        }
    }
    if (cfg.method == "visibility" || want_all) {
        RatVec q;
        std::string point_name;
        if (cfg.base_vertex_given && cfg.method == "visibility") {
            q = q_basepoint(g, v0);
            point_name = "visibility (base-vertex point)";
        } else {
            q = q_order(g, order);
            point_name = "visibility (order point)";
        }
        std::vector<Simplex> simp = dissection_simplices(g, ts);
        RouteResult r;
        r.name = point_name;
        for (const Simplex& s : simp)
            r.values.push_back((int)visible_facets(s, q).size());
        r.hstar = hstar_from_distribution(r.values, target_dimension(g, target));
        routes.push_back(std::move(r));
        if (want_all && symmetric) {
            RatVec qb = q_basepoint(g, v0);
            RouteResult rb;
            rb.name = "visibility (base-vertex point)";
            for (const Simplex& s : simp)
                rb.values.push_back((int)visible_facets(s, qb).size());
            rb.hstar = hstar_from_distribution(rb.values, target_dimension(g, target));
            routes.push_back(std::move(rb));
        }
    }
    if (cfg.method == "ehrhart" || want_all) {
        lattice = hstar_lattice(g);
        lattice_run = true;
        RouteResult r;
        r.name = "lattice";
        r.hstar = lattice.hstar;
        routes.push_back(std::move(r));
    }

    bool agree = verification.valid;
    for (size_t i = 1; i < routes.size(); ++i)
        agree = agree && routes[i].hstar.same_polynomial(routes[0].hstar);

    if (cfg.output == "record") {
        std::cout << "record hstar\n";
        std::cout << "graph " << cfg.graph_path << "\n";
        std::cout << "hash " << hash_hex(graph_hash(g)) << "\n";
        std::cout << "target " << (symmetric ? "symmetric" : "root") << "\n";
        std::cout << "vertices " << g.n << "\n";
        std::cout << "edges " << g.m() << "\n";
        std::cout << "method " << cfg.method << "\n";
        std::cout << "order " << int_list(order.ranked) << "\n";
        std::cout << "base-vertex " << v0 << "\n";
        std::cout << "seed " << cfg.seed << "\n";
        std::cout << "trees " << ts.trees.size() << "\n";
        std::cout << "verified " << (verification.valid ? "yes" : "no") << "\n";
        std::cout << "volume " << verification.normalized_volume.str() << "\n";
        for (const RouteResult& r : routes) {
            std::cout << "route " << r.name << "\n";
            std::cout << "hstar " << coeff_list(r.hstar) << "\n";
            if (!r.values.empty())
                std::cout << "values " << int_list(r.values) << "\n";
        }
        if (lattice_run) {
            std::cout << "counts";
            for (const Int& c : lattice.ehrhart.counts) std::cout << ' ' << c.str();
            std::cout << "\n";
        }
        std::cout << "agreement " << (agree ? "yes" : "no") << "\n";
    } else {
        std::cout << "graph: " << cfg.graph_path << " (hash "
                  << hash_hex(graph_hash(g)) << ")\n";
        std::cout << "target: "
                  << (symmetric ? "symmetric edge polytope" : "root polytope")
                  << ", dimension " << target_dimension(g, target) << "\n";
        std::cout << "dissection: " << ts.trees.size() << " trees, "
                  << (verification.valid ? "verified"
                                         : "INVALID (" + verification.failure + ")")
                  << "\n";
        for (const RouteResult& r : routes)
            std::cout << r.name << ": " << r.hstar.to_string() << "\n";
        if (lattice_run) {
            std::cout << "dilate counts:";
            for (const Int& c : lattice.ehrhart.counts) std::cout << ' ' << c.str();
            std::cout << "\n";
        }
        if (want_all)
            std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
    }

    if (!verification.valid) return exit_disagreement;
    return agree ? exit_ok : exit_disagreement;
}

int run_verify(const std::string& graph_path, const std::string& trees_path,
               const std::string& target_spec, const std::string& output) {
    Digraph g = load_graph(graph_path);
    DissectingTreeSet ts;
    if (target_spec == "root") {
        ts.target = DissectionTarget::root_polytope;
    } else if (target_spec == "symmetric") {
        ts.target = DissectionTarget::symmetric_edge_polytope;
    } else if (target_spec == "auto") {
        ts.target = g.is_bidirected() ? DissectionTarget::symmetric_edge_polytope
                                      : DissectionTarget::root_polytope;
    } else {
        throw input_error("--target expects auto, root, or symmetric");
    }
    ts.trees = load_trees(g, trees_path);
    DissectionReport rep = verify_dissection(g, ts);

    if (output == "record") {
        std::cout << "record verify\n";
        std::cout << "graph " << graph_path << "\n";
        std::cout << "hash " << hash_hex(graph_hash(g)) << "\n";
        std::cout << "target "
                  << (ts.target == DissectionTarget::root_polytope ? "root"
                                                                   : "symmetric")
                  << "\n";
        std::cout << "trees " << rep.tree_count << "\n";
        std::cout << "volume " << rep.normalized_volume.str() << "\n";
        std::cout << "valid " << (rep.valid ? "yes" : "no") << "\n";
        if (!rep.valid) {
            std::cout << "failure " << rep.failure << "\n";
            if (rep.overlap_point)
                std::cout << "overlap-point " << rat_list(*rep.overlap_point) << "\n";
        }
        for (const PairEvidence& ev : rep.evidence)
            std::cout << "evidence " << ev.describe() << "\n";
    } else {
        std::cout << rep.to_string() << "\n";
        if (!rep.valid && rep.overlap_point)
            std::cout << "shared relative-interior point: "
                      << rat_list(*rep.overlap_point) << "\n";
    }
    return rep.valid ? exit_ok : exit_disagreement;
}

int run_paper(const std::string& name) {
    std::vector<std::string> names =
        name.empty() ? examples::replay_names() : std::vector<std::string>{name};
    bool all_ok = true;
    for (const std::string& n : names) {
        examples::ReplayReport rep = examples::replay(n);
        std::cout << "example " << rep.example << "\n";
        for (const examples::ReplayCheck& c : rep.checks) {
            std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name
                      << ": " << c.computed;
            if (!c.pass) std::cout << " (expected " << c.expected << ")";
            std::cout << "\n";
        }
        all_ok = all_ok && rep.ok();
    }
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return all_ok ? exit_ok : exit_disagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact h*-polynomials of symmetric edge polytopes and root polytopes"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    app.add_option("--graph", cfg.graph_path, "graph file (v/c/e/u lines)");
    app.add_option("--method", cfg.method,
                   "away | passivity | visibility | ehrhart | all")
        ->check(CLI::IsMember(
            {"away", "passivity", "visibility", "ehrhart", "all"}));
    auto* bv = app.add_option("--base-vertex", cfg.base_vertex,
                              "base vertex for away counts and tours");
    app.add_option("--base-edge", cfg.base_edge,
                   "base edge for tours (default: first ribbon edge)");
    app.add_option("--order", cfg.order,
                   "'labels' or comma-separated edge ids, rank 1 first");
    app.add_option("--ribbon", cfg.ribbon,
                   "auto | coords | declaration | <ribbon file>");
    app.add_option("--trees", cfg.trees_path, "dissecting tree set file");
    app.add_option("--output", cfg.output, "text | record")
        ->check(CLI::IsMember({"text", "record"}));
    app.add_option("--seed", cfg.seed, "seed for the random-order cross-check");

    auto* verify = app.add_subcommand("verify", "check a dissecting tree set");
    std::string vgraph, vtrees, vtarget = "auto", voutput = "text";
    verify->add_option("--graph", vgraph, "graph file")->required();
    verify->add_option("--trees", vtrees, "tree set file")->required();
    verify->add_option("--target", vtarget, "auto | root | symmetric");
    verify->add_option("--output", voutput, "text | record")
        ->check(CLI::IsMember({"text", "record"}));

    auto* paper = app.add_subcommand("paper", "replay a bundled worked example");
    std::string pname;
    paper->add_option("name", pname, "k3 | grid23 | grid23-alt | k3-tours");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }
    cfg.base_vertex_given = bv->count() > 0;

    try {
        if (verify->parsed()) return run_verify(vgraph, vtrees, vtarget, voutput);
        if (paper->parsed()) return run_paper(pname);
        if (cfg.graph_path.empty())
            throw input_error("--graph is required (or use a subcommand)");
        if (cfg.base_vertex != 0 && cfg.base_vertex < 1)
            throw input_error("--base-vertex must be a positive vertex id");
        return run_hstar(cfg);
    } catch (const genericity_error& e) {
        std::cerr << "genericity error: " << e.what() << " [" << e.functional
                  << "]\n";
        return exit_genericity;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
