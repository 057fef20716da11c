#include "trifree/io.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "trifree/arrangement.hpp"

namespace trifree {

json to_json(const Diagonal& d) { return json::array({d.a, d.b}); }

json to_json(const ColoredTriangulation& t) {
    json chords = json::array();
    for (const auto& d : t.chords) chords.push_back(to_json(d));
    return {{"n", t.n}, {"chords", chords}};
}

json to_json(const ArcPermutation& p) { return {{"n", p.n}, {"letters", p.letters}}; }

json to_json(const ArcClass& cl) { return {{"n", cl.n}, {"subsets", cl.subsets}}; }

json to_json(const ShiftedTableau& t) {
    auto [r, c] = rc_words(t);
    return {{"p", t.shape.p}, {"rows", t.rows()}, {"r", r}, {"c", c}};
}

json to_json(const GeodesicPath& p, int n, Direction dir) {
    json path = json::array();
    for (const auto& c : p.vertices) path.push_back(to_string(c));
    json diagonals = json::array();
    for (const auto& d : p.diagonals) diagonals.push_back(to_json(d));
    return {{"n", n}, {"direction", to_string(dir)}, {"path", path}, {"diagonals", diagonals}};
}

ColoredTriangulation triangulation_from_json(const json& j) {
    try {
        ColoredTriangulation t{j.at("n").get<int>(), {}};
        for (const auto& pair : j.at("chords")) {
            if (pair.size() != 2) throw Error(Errc::domain, "chord must have two endpoints");
            t.chords.push_back(make_diagonal(t.n, pair[0].get<int>(), pair[1].get<int>()));
        }
        if (!is_properly_colored(t)) throw Error(Errc::domain, "chords do not form a colored triangle-free triangulation");
        return t;
    } catch (const json::exception& e) {
        throw Error(Errc::domain, std::string("malformed triangulation JSON: ") + e.what());
    }
}

ArcClass class_from_json(const json& j) {
    try {
        ArcClass cl{j.at("n").get<int>(), j.at("subsets").get<std::vector<std::vector<int>>>()};
        for (auto& s : cl.subsets) std::sort(s.begin(), s.end());
        if (!is_valid_class(cl)) throw Error(Errc::domain, "subsets do not form an arc permutation class");
        return cl;
    } catch (const json::exception& e) {
        throw Error(Errc::domain, std::string("malformed class JSON: ") + e.what());
    }
}

EdgeLabels parse_edge_labels(const std::string& text) {
    if (text == "diagonal") return EdgeLabels::diagonal;
    if (text == "generator") return EdgeLabels::generator;
    if (text == "hyperplane") return EdgeLabels::hyperplane;
    throw Error(Errc::domain, "unknown edge label kind '" + text + "'");
}

namespace {

std::string pair_label(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

// Oriented endpoints of a flip edge between u and v.
std::pair<std::size_t, std::size_t> endpoints(std::size_t u, const FlipEdge& e, bool oriented) {
    if (oriented) return e.outgoing ? std::pair{u, e.to} : std::pair{e.to, u};
    return {std::min(u, e.to), std::max(u, e.to)};
}

}  // namespace

std::vector<ExportEdge> export_edges(const FlipGraph& g, const GraphExportOptions& options) {
    std::vector<ExportEdge> out;
    if (options.labels == EdgeLabels::hyperplane) {
        auto arr = make_arrangement(k_prime(g.n));
        std::vector<Chamber> chambers;
        for (const auto& c : g.vertices) chambers.push_back(class_chamber(class_of_code(c), arr));
        auto cg = chamber_graph(chambers);
        long long modulus = rank_modulus(g.n);
        for (auto [u, v] : cg.edges) {
            auto sep = separating_set(cg.chambers[u], cg.chambers[v]);
            auto [i, j] = arr->hyperplanes[sep.at(0)];
            std::size_t tail = u, head = v;
            if (options.oriented &&
                mod(rank(g.vertices[v]) - rank(g.vertices[u]), static_cast<int>(modulus)) != 1) {
                std::swap(tail, head);
            }
            out.push_back({tail, head, pair_label(i, j)});
        }
    } else {
        for (std::size_t u = 0; u < g.size(); ++u) {
            for (const auto& e : g.adjacency[u]) {
                // Each undirected edge is emitted once, from its oriented tail.
                if (!e.outgoing) continue;
                auto [tail, head] = endpoints(u, e, options.oriented);
                std::string label = options.labels == EdgeLabels::generator ? std::to_string(e.generator)
                                                                            : pair_label(e.removed.a, e.removed.b);
                out.push_back({tail, head, label});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ExportEdge& x, const ExportEdge& y) {
        return std::tie(x.tail, x.head, x.label) < std::tie(y.tail, y.head, y.label);
    });
    return out;
}

std::string to_dot(const FlipGraph& g, const GraphExportOptions& options) {
    std::ostringstream os;
    const char* arrow = options.oriented ? " -> " : " -- ";
    os << (options.oriented ? "digraph" : "graph") << " flip_graph_" << g.n << " {\n";
    for (const auto& c : g.vertices) {
        os << "  \"" << to_string(c) << "\";\n";
    }
    for (const auto& e : export_edges(g, options)) {
        os << "  \"" << to_string(g.vertices[e.tail]) << "\"" << arrow << "\"" << to_string(g.vertices[e.head])
           << "\" [label=\"" << e.label << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

json graph_to_json(const FlipGraph& g, const GraphExportOptions& options) {
    json vertices = json::array();
    for (const auto& c : g.vertices) vertices.push_back(to_string(c));
    json edges = json::array();
    for (const auto& e : export_edges(g, options)) {
        edges.push_back({{"from", to_string(g.vertices[e.tail])},
                         {"to", to_string(g.vertices[e.head])},
                         {"label", e.label}});
    }
    return {{"n", g.n}, {"oriented", options.oriented}, {"vertices", vertices}, {"edges", edges}};
}

}  // namespace trifree
