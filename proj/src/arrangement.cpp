#include "trifree/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace trifree {

bool SimpleGraph::has_edge(int x, int y) const {
    VertexPair e{std::min(x, y), std::max(x, y)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

SimpleGraph make_graph(int n, std::vector<VertexPair> edges) {
    for (auto& [x, y] : edges) {
        if (x == y || x < 0 || y < 0 || x >= n || y >= n) throw Error(Errc::domain, "invalid graph edge");
        if (x > y) std::swap(x, y);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw Error(Errc::domain, "duplicate graph edge");
    }
    return {n, std::move(edges)};
}

SimpleGraph k_prime(int n) {
    if (n < 4) throw Error(Errc::domain, "K'_n needs n >= 4");
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (is_diagonal(n, i, j)) edges.emplace_back(i, j);
        }
    }
    return make_graph(n, std::move(edges));
}

std::size_t Arrangement::index_of(int i, int j) const {
    VertexPair e{std::min(i, j), std::max(i, j)};
    auto it = std::lower_bound(hyperplanes.begin(), hyperplanes.end(), e);
    if (it == hyperplanes.end() || *it != e) throw Error(Errc::domain, "no such hyperplane");
    return static_cast<std::size_t>(it - hyperplanes.begin());
}

std::shared_ptr<const Arrangement> make_arrangement(const SimpleGraph& g) {
    return std::make_shared<const Arrangement>(Arrangement{g, g.edges});
}

Chamber chamber_of(std::span<const int> permutation, std::shared_ptr<const Arrangement> arr) {
    int n = arr->graph.n;
    if (static_cast<int>(permutation.size()) != n) throw Error(Errc::domain, "permutation size mismatch");
    std::vector<int> position(n, -1);
    for (int k = 0; k < n; ++k) {
        int x = permutation[k];
        if (x < 0 || x >= n || position[x] != -1) throw Error(Errc::domain, "not a permutation");
        position[x] = k;
    }
    Chamber c{arr, std::string(arr->size(), '-'), {permutation.begin(), permutation.end()}};
    for (std::size_t h = 0; h < arr->size(); ++h) {
        auto [i, j] = arr->hyperplanes[h];
        c.signs[h] = position[i] < position[j] ? '-' : '+';
    }
    return c;
}

Chamber class_chamber(const ArcClass& cl, std::shared_ptr<const Arrangement> arr) {
    return chamber_of(representative(cl).letters, std::move(arr));
}

std::vector<std::size_t> separating_set(const Chamber& c1, const Chamber& c2) {
    if (c1.arrangement != c2.arrangement) throw Error(Errc::domain, "chambers of different arrangements");
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < c1.signs.size(); ++h) {
        if (c1.signs[h] != c2.signs[h]) out.push_back(h);
    }
    return out;
}

Chamber negative(const Chamber& c) {
    Chamber out = c;
    for (auto& s : out.signs) s = s == '+' ? '-' : '+';
    std::reverse(out.witness.begin(), out.witness.end());
    return out;
}

std::size_t ChamberGraph::index_of(const Chamber& c) const {
    for (std::size_t k = 0; k < chambers.size(); ++k) {
        if (chambers[k] == c) return k;
    }
    throw Error(Errc::domain, "chamber is not a vertex of the graph");
}

ChamberGraph chamber_graph(std::vector<Chamber> chambers) {
    ChamberGraph g{std::move(chambers), {}, {}};
    g.neighbors.resize(g.chambers.size());
    for (std::size_t i = 0; i < g.chambers.size(); ++i) {
        for (std::size_t j = i + 1; j < g.chambers.size(); ++j) {
            if (separating_set(g.chambers[i], g.chambers[j]).size() == 1) {
                g.edges.emplace_back(i, j);
                g.neighbors[i].push_back(j);
                g.neighbors[j].push_back(i);
            }
        }
    }
    return g;
}

namespace {

std::vector<std::size_t> bfs(const ChamberGraph& g, std::size_t src) {
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.chambers.size(), unreached);
    std::deque<std::size_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto v : g.neighbors[u]) {
            if (dist[v] == unreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

std::size_t gallery_distance(const ChamberGraph& g, const Chamber& from, const Chamber& to) {
    auto dist = bfs(g, g.index_of(from));
    auto d = dist[g.index_of(to)];
    if (d == std::numeric_limits<std::size_t>::max()) throw Error(Errc::no_path, "chambers are not connected");
    return d;
}

std::vector<Chamber> enumerate_chambers(std::shared_ptr<const Arrangement> arr) {
    int n = arr->graph.n;
    if (n > 9) throw Error(Errc::invalid_size, "chamber enumeration is limited to n <= 9");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::string, Chamber> seen;
    do {
        auto c = chamber_of(perm, arr);
        seen.emplace(c.signs, std::move(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Chamber> out;
    for (auto& [key, c] : seen) out.push_back(std::move(c));
    return out;
}

bool is_connected(const ChamberGraph& g) {
    if (g.chambers.empty()) return true;
    auto dist = bfs(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

bool is_cycle(const ChamberGraph& g) {
    if (g.chambers.size() < 3 || g.edges.size() != g.chambers.size()) return false;
    for (const auto& nb : g.neighbors) {
        if (nb.size() != 2) return false;
    }
    return is_connected(g);
}

}  // namespace trifree
