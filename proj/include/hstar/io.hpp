// Text formats for graphs, ribbon structures, and tree sets, plus canonical
// serialization and a 64-bit FNV-1a content hash for run records.
#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ribbon.hpp"

namespace hstar {

namespace detail {

// Lines split into whitespace tokens; '#' starts a comment, blank lines drop.
inline std::vector<std::vector<std::string>> tokenized_lines(std::istream& in) {
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(std::move(t));
        if (!tok.empty()) out.push_back(std::move(tok));
    }
    return out;
}

inline int parse_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw input_error(std::string("expected an integer ") + what + ", got '" +
                          s + "'");
    }
}

}  // namespace detail

// ------------------------------------------------------------------ graphs --

// Graph format, one record per line, '#' starts a comment:
//   v <count>             vertex count; must come first
//   c <vertex> <x> <y>    optional drawing coordinates, exact rationals
//   e <id> <tail> <head>  directed edge with explicit id
//   u <id> <a> <b>        undirected edge; becomes directed copies 2id-1
//                         (a -> b) and 2id (b -> a)
// A file uses either e-lines or u-lines, never both.  Coordinates must cover
// every vertex or none.  Reverse-paired e-lines are recognized as a
// bidirected graph.
inline Digraph parse_graph(std::istream& in) {
    int n = -1;
    std::vector<Edge> directed, undirected;
    std::vector<std::pair<Rat, Rat>> coords;
    std::vector<bool> has_coord;
    for (const auto& tok : detail::tokenized_lines(in)) {
        const std::string& kind = tok[0];
        if (kind == "v") {
            if (n >= 0) throw input_error("duplicate v line");
            if (tok.size() != 2) throw input_error("v line needs a vertex count");
            n = detail::parse_int(tok[1], "vertex count");
            if (n < 1) throw input_error("vertex count must be positive");
            coords.assign(n + 1, {Rat(0), Rat(0)});
            has_coord.assign(n + 1, false);
        } else if (kind == "c" || kind == "e" || kind == "u") {
            if (n < 0) throw input_error("the v line must come first");
            if (tok.size() != 4)
                throw input_error(kind + " line needs exactly three fields");
            if (kind == "c") {
                int v = detail::parse_int(tok[1], "vertex");
                if (v < 1 || v > n)
                    throw input_error("coordinate vertex out of range");
                if (has_coord[v])
                    throw input_error("duplicate coordinates for vertex " +
                                      std::to_string(v));
                coords[v] = {rat_from_string(tok[2]), rat_from_string(tok[3])};
                has_coord[v] = true;
            } else {
                Edge e;
                e.id = detail::parse_int(tok[1], "edge id");
                e.tail = detail::parse_int(tok[2], "vertex");
                e.head = detail::parse_int(tok[3], "vertex");
                (kind == "e" ? directed : undirected).push_back(e);
            }
        } else {
            throw input_error("unknown line type '" + kind + "'");
        }
    }
    if (n < 0) throw input_error("missing v line");
    if (!directed.empty() && !undirected.empty())
        throw input_error("a graph file uses either e lines or u lines, not both");
    if (directed.empty() && undirected.empty())
        throw input_error("graph has no edges");
    Digraph g = undirected.empty() ? make_digraph(n, directed)
                                   : double_undirected(n, undirected);
    if (undirected.empty()) detect_bidirected(g);
    bool any = false, all = true;
    for (int v = 1; v <= n; ++v) {
        any = any || has_coord[v];
        all = all && has_coord[v];
    }
    if (any && !all)
        throw input_error("coordinates must cover every vertex or none");
    if (any) g.coords = std::move(coords);
    return g;
}

inline Digraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline Digraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read graph file: " + path);
    return parse_graph(in);
}

// Canonical serialization: v line, c lines when coordinates exist, then one
// e-line per directed edge in id order.
inline std::string serialize_graph(const Digraph& g) {
    std::ostringstream os;
    os << "v " << g.n << "\n";
    if (g.has_coords())
        for (int v = 1; v <= g.n; ++v)
            os << "c " << v << ' ' << rat_to_string(g.coords[v].first) << ' '
               << rat_to_string(g.coords[v].second) << "\n";
    for (const Edge& e : g.edges)
        os << "e " << e.id << ' ' << e.tail << ' ' << e.head << "\n";
    return os.str();
}

// ------------------------------------------------------------------ ribbons --

// Ribbon format: one `r <vertex> <edge ids...>` line per vertex giving the
// counterclockwise cyclic order of its edge ends.  Vertices without an r-line
// fall back to the drawing coordinates when the graph has them and to
// declaration order otherwise.
inline RibbonStructure parse_ribbon(const Digraph& g, std::istream& in) {
    RibbonStructure fallback =
        g.has_coords() ? ribbon_from_coords(g) : ribbon_from_declaration(g);
    std::vector<std::vector<int>> lists = fallback.cyclic;
    std::vector<bool> seen(g.n + 1, false);
    for (const auto& tok : detail::tokenized_lines(in)) {
        if (tok[0] != "r")
            throw input_error("unknown line type '" + tok[0] + "' in ribbon file");
        if (tok.size() < 2) throw input_error("r line needs a vertex");
        int v = detail::parse_int(tok[1], "vertex");
        if (v < 1 || v > g.n) throw input_error("ribbon vertex out of range");
        if (seen[v])
            throw input_error("duplicate r line for vertex " + std::to_string(v));
        seen[v] = true;
        lists[v].clear();
        for (size_t i = 2; i < tok.size(); ++i)
            lists[v].push_back(detail::parse_int(tok[i], "edge id"));
    }
    return ribbon_from_lists(g, lists);
}

inline RibbonStructure parse_ribbon_text(const Digraph& g, const std::string& text) {
    std::istringstream in(text);
    return parse_ribbon(g, in);
}

inline RibbonStructure load_ribbon(const Digraph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read ribbon file: " + path);
    return parse_ribbon(g, in);
}

// -------------------------------------------------------------------- trees --

// Tree-set format: one `t <edge ids...>` line per spanning tree.
inline std::vector<SpanningTree> parse_trees(const Digraph& g, std::istream& in) {
    std::vector<SpanningTree> out;
    for (const auto& tok : detail::tokenized_lines(in)) {
        if (tok[0] != "t")
            throw input_error("unknown line type '" + tok[0] + "' in tree file");
        std::vector<int> ids;
        ids.reserve(tok.size() - 1);
        for (size_t i = 1; i < tok.size(); ++i)
            ids.push_back(detail::parse_int(tok[i], "edge id"));
        out.push_back(make_tree(g, std::move(ids)));
    }
    if (out.empty()) throw input_error("tree file lists no trees");
    return out;
}

inline std::vector<SpanningTree> parse_trees_text(const Digraph& g,
                                                  const std::string& text) {
    std::istringstream in(text);
    return parse_trees(g, in);
}

inline std::vector<SpanningTree> load_trees(const Digraph& g,
                                            const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read tree file: " + path);
    return parse_trees(g, in);
}

inline std::string serialize_trees(const std::vector<SpanningTree>& trees) {
    std::ostringstream os;
    for (const SpanningTree& t : trees) {
        os << 't';
        for (int id : t.edges) os << ' ' << id;
        os << "\n";
    }
    return os.str();
}

// -------------------------------------------------------------------- hash --

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t graph_hash(const Digraph& g) {
    return fnv1a(serialize_graph(g));
}

}  // namespace hstar
