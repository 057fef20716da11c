#include "trifree/polygon.hpp"

#include <algorithm>
#include <deque>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>

namespace trifree {

namespace {

bool is_side(int n, int x, int y) {
    int dist = mod(y - x, n);
    return dist == 1 || dist == n - 1;
}

// Adjacency masks of the triangulation graph (sides plus chords).
std::vector<std::uint64_t> adjacency(int n, const std::vector<Diagonal>& chords) {
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v) {
        int w = mod(v + 1, n);
        adj[v] |= bit(w);
        adj[w] |= bit(v);
    }
    for (const auto& d : chords) {
        adj[d.a] |= bit(d.b);
        adj[d.b] |= bit(d.a);
    }
    return adj;
}

int internal_edges(int n, const std::array<int, 3>& tri) {
    int count = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (!is_side(n, tri[i], tri[j])) ++count;
        }
    }
    return count;
}

bool contains_edge(const std::array<int, 3>& tri, const Diagonal& d) {
    auto has = [&](int v) { return tri[0] == v || tri[1] == v || tri[2] == v; };
    return has(d.a) && has(d.b);
}

void check_label(const ColoredTriangulation& t, int label) {
    if (label < 0 || label > t.n - 4) {
        throw Error(Errc::invalid_label, "label " + std::to_string(label) + " outside 0.." +
                                             std::to_string(t.n - 4));
    }
}

}  // namespace

UncoloredTriangulation ColoredTriangulation::uncolored() const {
    UncoloredTriangulation t{n, chords};
    std::sort(t.chords.begin(), t.chords.end());
    return t;
}

bool crosses(int n, const Diagonal& x, const Diagonal& y) {
    if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
    auto inside = [&](int v) { return mod(v - x.a, n) < mod(x.b - x.a, n) && v != x.a; };
    return inside(y.a) != inside(y.b);
}

bool is_short(int n, const Diagonal& d) {
    int dist = mod(d.b - d.a, n);
    return dist == 2 || dist == n - 2;
}

bool is_triangulation(int n, const std::vector<Diagonal>& chords) {
    if (n < 3 || n > max_polygon_size) return false;
    if (static_cast<int>(chords.size()) != n - 3) return false;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        const auto& d = chords[i];
        if (d.a < 0 || d.b >= n || d.a >= d.b || !is_diagonal(n, d.a, d.b)) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (chords[j] == d || crosses(n, chords[j], d)) return false;
        }
    }
    return true;
}

std::vector<std::array<int, 3>> triangles(int n, const std::vector<Diagonal>& chords) {
    auto adj = adjacency(n, chords);
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!(adj[a] & bit(b))) continue;
            std::uint64_t common = adj[a] & adj[b];
            for (int c = b + 1; c < n; ++c) {
                if (common & bit(c)) out.push_back({a, b, c});
            }
        }
    }
    return out;
}

bool is_triangle_free(const UncoloredTriangulation& t) {
    for (const auto& tri : triangles(t.n, t.chords)) {
        if (internal_edges(t.n, tri) == 3) return false;
    }
    return true;
}

int count_short_chords(const UncoloredTriangulation& t) {
    return static_cast<int>(
        std::count_if(t.chords.begin(), t.chords.end(), [&](const Diagonal& d) { return is_short(t.n, d); }));
}

bool is_properly_colored(const ColoredTriangulation& t) {
    if (t.n <= 4 || !is_triangulation(t.n, t.chords)) return false;
    if (!is_short(t.n, t.chords[0])) return false;
    auto label_of = [&](int x, int y) {
        Diagonal d{std::min(x, y), std::max(x, y)};
        return static_cast<int>(std::find(t.chords.begin(), t.chords.end(), d) - t.chords.begin());
    };
    for (const auto& tri : triangles(t.n, t.chords)) {
        std::vector<int> labels;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                if (!is_side(t.n, tri[i], tri[j])) labels.push_back(label_of(tri[i], tri[j]));
            }
        }
        if (labels.size() == 3) return false;
        if (labels.size() == 2 && std::abs(labels[0] - labels[1]) != 1) return false;
    }
    return true;
}

ColoredTriangulation canonical_star(int n) {
    require_polygon_size(n);
    ColoredTriangulation t{n, {}};
    for (int k = 2; k <= n - 2; ++k) t.chords.push_back({0, k});
    return t;
}

std::pair<ColoredTriangulation, ColoredTriangulation> proper_colorings(const UncoloredTriangulation& t) {
    if (t.n <= 4 || !is_triangulation(t.n, t.chords) || !is_triangle_free(t)) {
        throw Error(Errc::domain, "proper colorings exist only for triangle-free triangulations with n > 4");
    }
    auto tris = triangles(t.n, t.chords);
    Diagonal start{};
    bool found = false;
    for (const auto& d : t.chords) {
        if (is_short(t.n, d)) {
            start = d;
            found = true;
            break;
        }
    }
    if (!found) throw Error(Errc::domain, "triangulation has no short chord");

    ColoredTriangulation first{t.n, {start}};
    std::array<int, 3> prev_tri{-1, -1, -1};
    Diagonal cur = start;
    // Walk the dual path: each step enters the triangle beyond the current chord.
    for (;;) {
        const std::array<int, 3>* next_tri = nullptr;
        for (const auto& tri : tris) {
            if (!contains_edge(tri, cur) || tri == prev_tri) continue;
            if (first.chords.size() == 1 && internal_edges(t.n, tri) == 1) continue;  // the ear of chord 0
            next_tri = &tri;
            break;
        }
        if (next_tri == nullptr) break;
        const auto& tri = *next_tri;
        std::optional<Diagonal> next;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                if (is_side(t.n, tri[i], tri[j])) continue;
                Diagonal d{tri[i], tri[j]};
                if (d != cur) next = d;
            }
        }
        if (!next) break;
        first.chords.push_back(*next);
        prev_tri = tri;
        cur = *next;
    }
    if (!is_properly_colored(first)) throw Error(Errc::domain, "failed to color triangulation");
    return {first, reverse(first)};
}

Diagonal flipped_diagonal(int n, const std::vector<Diagonal>& chords, const Diagonal& chord) {
    auto adj = adjacency(n, chords);
    std::uint64_t common = adj[chord.a] & adj[chord.b];
    std::vector<int> apex;
    for (int v = 0; v < n; ++v) {
        if (common & bit(v)) apex.push_back(v);
    }
    if (apex.size() != 2) throw Error(Errc::domain, "chord " + to_string(chord) + " is not in a quadrangle");
    return make_diagonal(n, apex[0], apex[1]);
}

ColoredTriangulation flip_label(const ColoredTriangulation& t, int label) {
    check_label(t, label);
    ColoredTriangulation out = t;
    out.chords[label] = flipped_diagonal(t.n, t.chords, t.chords[label]);
    return is_properly_colored(out) ? out : t;
}

ColoredTriangulation reverse(const ColoredTriangulation& t) {
    ColoredTriangulation out = t;
    std::reverse(out.chords.begin(), out.chords.end());
    return out;
}

std::vector<ColoredTriangulation> enumerate_ctft(int n) {
    require_polygon_size(n);
    std::set<ColoredTriangulation> seen;
    std::deque<ColoredTriangulation> queue;
    auto root = canonical_star(n);
    seen.insert(root);
    queue.push_back(root);
    while (!queue.empty()) {
        auto t = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i <= n - 4; ++i) {
            auto s = flip_label(t, i);
            if (seen.insert(s).second) queue.push_back(std::move(s));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<UncoloredTriangulation> enumerate_triangulations(int n) {
    if (n < 3 || n > max_polygon_size) {
        throw Error(Errc::invalid_size, "cannot triangulate a " + std::to_string(n) + "-gon");
    }
    // Chord sets of the sub-polygon lo..hi whose base edge (lo,hi) is already present.
    std::function<std::vector<std::vector<Diagonal>>(int, int)> rec = [&](int lo, int hi) {
        std::vector<std::vector<Diagonal>> out;
        if (hi - lo < 2) {
            out.emplace_back();
            return out;
        }
        for (int apex = lo + 1; apex < hi; ++apex) {
            auto left = rec(lo, apex);
            auto right = rec(apex, hi);
            for (const auto& l : left) {
                for (const auto& r : right) {
                    std::vector<Diagonal> chords = l;
                    chords.insert(chords.end(), r.begin(), r.end());
                    if (apex - lo >= 2) chords.push_back({lo, apex});
                    if (hi - apex >= 2) chords.push_back({apex, hi});
                    out.push_back(std::move(chords));
                }
            }
        }
        return out;
    };
    std::vector<UncoloredTriangulation> result;
    for (auto& chords : rec(0, n - 1)) {
        std::sort(chords.begin(), chords.end());
        result.push_back({n, std::move(chords)});
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace trifree
