#ifndef TRIFREE_FLIPGRAPH_HPP
#define TRIFREE_FLIPGRAPH_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "trifree/bigint.hpp"
#include "trifree/codec.hpp"

namespace trifree {

struct FlipEdge {
    std::size_t to = 0;
    int generator = 0;
    Diagonal removed;  // chord of the source vertex that the flip erases
    Diagonal added;
    bool outgoing = false;  // rank(to) - rank(from) == 1 mod n(n-3)
};

// The colored flip graph over all codes; vertex k is code_from_index(n, k).
struct FlipGraph {
    int n = 0;
    std::vector<Code> vertices;
    std::vector<std::vector<FlipEdge>> adjacency;  // per vertex, sorted by removed diagonal

    std::size_t size() const { return vertices.size(); }
    std::size_t index_of(const Code& c) const;
    std::size_t edge_count() const;
};

FlipGraph build_flip_graph(int n);

std::vector<int> bfs_distances(const FlipGraph& g, std::size_t src);
int distance(const FlipGraph& g, const Code& a, const Code& b);
int diameter(const FlipGraph& g);

// The diagonal erased along the oriented edge from -> to.
Diagonal edge_diagonal(const FlipGraph& g, const Code& from, const Code& to);

enum class Direction { plus, minus, both };

std::string to_string(Direction d);
Direction parse_direction(const std::string& text);

struct GeodesicPath {
    std::vector<Code> vertices;
    std::vector<Diagonal> diagonals;
};

using GeodesicVisitor = std::function<void(const GeodesicPath&)>;

// Streams every orientation-monotone path of length n(n-3)/2 from src to its
// reverse; depth-first with neighbors taken in flipped-diagonal order.
void enumerate_geodesics(const FlipGraph& g, const Code& src, const Code& dst, Direction dir,
                         const GeodesicVisitor& visit);

std::vector<GeodesicPath> list_geodesics(const FlipGraph& g, const Code& src, const Code& dst, Direction dir);

// Number of monotone paths of length n(n-3)/2 from src to dst, by dynamic programming
// over step counts; does not use distances.
BigInt count_geodesics(const FlipGraph& g, const Code& src, const Code& dst, Direction dir);

// True iff the diagonals of the path are exactly the n(n-3)/2 diagonals, each once.
bool verify_diagonal_multiset(int n, const GeodesicPath& p);

struct IsomorphismCheck {
    bool chambers_injective = false;
    bool edges_match = false;
    bool labels_match = false;
    std::size_t flip_edges = 0;
    std::size_t chamber_edges = 0;
    std::string counterexample;

    bool ok() const { return chambers_injective && edges_match && labels_match; }
};

// Compares the flip graph with the chamber graph of the arc permutation classes
// under T -> chamber(f(T)), including the erased-diagonal = separating-hyperplane labels.
IsomorphismCheck check_isomorphism(int n);
bool verify_isomorphism(int n);

}  // namespace trifree

#endif  // TRIFREE_FLIPGRAPH_HPP
