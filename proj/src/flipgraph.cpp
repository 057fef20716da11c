#include "trifree/flipgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "trifree/arrangement.hpp"

namespace trifree {

std::size_t FlipGraph::index_of(const Code& c) const {
    if (c.n != n || !is_valid_code(c)) throw Error(Errc::domain, "code does not belong to this graph");
    return code_index(c);
}

std::size_t FlipGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& adj : adjacency) total += adj.size();
    return total / 2;
}

FlipGraph build_flip_graph(int n) {
    require_polygon_size(n);
    if (n > 24) throw Error(Errc::invalid_size, "flip graph construction is limited to n <= 24");
    FlipGraph g{n, {}, {}};
    std::size_t count = code_count(n);
    long long modulus = rank_modulus(n);
    g.vertices.reserve(count);
    for (std::size_t k = 0; k < count; ++k) g.vertices.push_back(code_from_index(n, k));
    g.adjacency.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        const auto& c = g.vertices[k];
        for (int i = 0; i <= n - 4; ++i) {
            Code d = apply_generator(c, i);
            if (d == c) continue;
            long long step = mod(rank(d) - rank(c), static_cast<int>(modulus));
            if (step != 1 && step != modulus - 1) {
                throw Error(Errc::domain, "flip " + to_string(c) + " -> " + to_string(d) + " changes rank by " +
                                              std::to_string(step));
            }
            g.adjacency[k].push_back({code_index(d), i, chord_of_label(c, i), chord_of_label(d, i), step == 1});
        }
        std::sort(g.adjacency[k].begin(), g.adjacency[k].end(),
                  [](const FlipEdge& x, const FlipEdge& y) { return x.removed < y.removed; });
    }
    return g;
}

std::vector<int> bfs_distances(const FlipGraph& g, std::size_t src) {
    std::vector<int> dist(g.size(), -1);
    std::deque<std::size_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (const auto& e : g.adjacency[u]) {
            if (dist[e.to] < 0) {
                dist[e.to] = dist[u] + 1;
                queue.push_back(e.to);
            }
        }
    }
    return dist;
}

int distance(const FlipGraph& g, const Code& a, const Code& b) {
    int d = bfs_distances(g, g.index_of(a))[g.index_of(b)];
    if (d < 0) throw Error(Errc::no_path, "codes are not connected");
    return d;
}

int diameter(const FlipGraph& g) {
    int best = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        auto dist = bfs_distances(g, k);
        for (int d : dist) {
            if (d < 0) throw Error(Errc::no_path, "flip graph is disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

Diagonal edge_diagonal(const FlipGraph& g, const Code& from, const Code& to) {
    auto u = g.index_of(from);
    auto v = g.index_of(to);
    for (const auto& e : g.adjacency[u]) {
        if (e.to == v && e.outgoing) return e.removed;
    }
    throw Error(Errc::domain, to_string(from) + " -> " + to_string(to) + " is not an oriented edge");
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::plus: return "plus";
        case Direction::minus: return "minus";
        case Direction::both: return "both";
    }
    return "both";
}

Direction parse_direction(const std::string& text) {
    if (text == "plus") return Direction::plus;
    if (text == "minus") return Direction::minus;
    if (text == "both") return Direction::both;
    throw Error(Errc::domain, "unknown direction '" + text + "'");
}

namespace {

void require_antipodal(const FlipGraph& g, const Code& src, const Code& dst) {
    g.index_of(src);
    g.index_of(dst);
    if (dst != reverse_code(src)) {
        throw Error(Errc::unsupported_endpoint, "geodesics are enumerated only from a code to its reverse");
    }
}

bool allowed(Direction dir, const FlipEdge& e) {
    return dir == Direction::both || (dir == Direction::plus) == e.outgoing;
}

}  // namespace

void enumerate_geodesics(const FlipGraph& g, const Code& src, const Code& dst, Direction dir,
                         const GeodesicVisitor& visit) {
    require_antipodal(g, src, dst);
    const int length = diagonal_count(g.n);
    auto to_dst = bfs_distances(g, g.index_of(dst));
    std::vector<std::size_t> stack{g.index_of(src)};
    std::vector<Diagonal> flipped;
    GeodesicPath path;

    // The first step fixes the orientation every later step must follow.
    auto dfs = [&](auto&& self, std::size_t u, Direction mode) -> void {
        int remaining = length - static_cast<int>(flipped.size());
        if (remaining == 0) {
            path.vertices.clear();
            for (auto k : stack) path.vertices.push_back(g.vertices[k]);
            path.diagonals = flipped;
            visit(path);
            return;
        }
        for (const auto& e : g.adjacency[u]) {
            if (!allowed(mode, e) || to_dst[e.to] != remaining - 1) continue;
            stack.push_back(e.to);
            flipped.push_back(e.removed);
            self(self, e.to, e.outgoing ? Direction::plus : Direction::minus);
            flipped.pop_back();
            stack.pop_back();
        }
    };
    if (to_dst[stack.front()] != length) return;
    dfs(dfs, stack.front(), dir);
}

std::vector<GeodesicPath> list_geodesics(const FlipGraph& g, const Code& src, const Code& dst, Direction dir) {
    std::vector<GeodesicPath> out;
    enumerate_geodesics(g, src, dst, dir, [&](const GeodesicPath& p) { out.push_back(p); });
    return out;
}

BigInt count_geodesics(const FlipGraph& g, const Code& src, const Code& dst, Direction dir) {
    require_antipodal(g, src, dst);
    if (dir == Direction::both) {
        return count_geodesics(g, src, dst, Direction::plus) + count_geodesics(g, src, dst, Direction::minus);
    }
    const int length = diagonal_count(g.n);
    // ways[v] = number of monotone walks with the current number of steps from v to dst.
    std::vector<BigInt> ways(g.size(), 0);
    ways[g.index_of(dst)] = 1;
    for (int step = 1; step <= length; ++step) {
        std::vector<BigInt> next(g.size(), 0);
        for (std::size_t u = 0; u < g.size(); ++u) {
            for (const auto& e : g.adjacency[u]) {
                if (allowed(dir, e)) next[u] += ways[e.to];
            }
        }
        ways = std::move(next);
    }
    return ways[g.index_of(src)];
}

bool verify_diagonal_multiset(int n, const GeodesicPath& p) {
    if (static_cast<int>(p.diagonals.size()) != diagonal_count(n)) return false;
    std::set<Diagonal> seen;
    for (const auto& d : p.diagonals) {
        if (d.a < 0 || d.b >= n || d.a >= d.b || !is_diagonal(n, d.a, d.b)) return false;
        if (!seen.insert(d).second) return false;
    }
    return true;
}

IsomorphismCheck check_isomorphism(int n) {
    IsomorphismCheck out;
    auto g = build_flip_graph(n);
    auto arr = make_arrangement(k_prime(n));

    std::vector<Chamber> chambers;
    chambers.reserve(g.size());
    std::map<std::string, std::size_t> by_signs;
    for (std::size_t k = 0; k < g.size(); ++k) {
        chambers.push_back(class_chamber(class_of_code(g.vertices[k]), arr));
        by_signs.emplace(chambers.back().signs, k);
    }
    out.chambers_injective = by_signs.size() == g.size();

    auto cg = chamber_graph(chambers);
    std::set<std::pair<std::size_t, std::size_t>> flip_edges;
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (const auto& e : g.adjacency[u]) {
            if (u < e.to) flip_edges.emplace(u, e.to);
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> chamber_edges(cg.edges.begin(), cg.edges.end());
    out.flip_edges = flip_edges.size();
    out.chamber_edges = chamber_edges.size();
    out.edges_match = flip_edges == chamber_edges;
    if (!out.edges_match && out.counterexample.empty()) {
        for (const auto& [u, v] : flip_edges) {
            if (!chamber_edges.count({u, v})) {
                out.counterexample = "flip edge " + to_string(g.vertices[u]) + " -- " + to_string(g.vertices[v]) +
                                     " is not a chamber adjacency";
                break;
            }
        }
        if (out.counterexample.empty()) out.counterexample = "chamber graph has extra edges";
    }

    out.labels_match = true;
    for (std::size_t u = 0; u < g.size() && out.labels_match; ++u) {
        for (const auto& e : g.adjacency[u]) {
            if (!e.outgoing) continue;
            auto sep = separating_set(chambers[u], chambers[e.to]);
            bool agree = sep.size() == 1 && arr->hyperplanes[sep[0]] == VertexPair{e.removed.a, e.removed.b};
            if (!agree) {
                out.labels_match = false;
                out.counterexample = "edge " + to_string(g.vertices[u]) + " -> " + to_string(g.vertices[e.to]) +
                                     " erases " + to_string(e.removed) + " but separating set has " +
                                     std::to_string(sep.size()) + " hyperplane(s)";
                break;
            }
        }
    }
    return out;
}

bool verify_isomorphism(int n) { return check_isomorphism(n).ok(); }

}  // namespace trifree
