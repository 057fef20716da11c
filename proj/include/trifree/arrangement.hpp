#ifndef TRIFREE_ARRANGEMENT_HPP
#define TRIFREE_ARRANGEMENT_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trifree/arcperm.hpp"

namespace trifree {

using VertexPair = std::pair<int, int>;

struct SimpleGraph {
    int n = 0;
    std::vector<VertexPair> edges;  // sorted, first < second

    bool has_edge(int x, int y) const;
};

SimpleGraph make_graph(int n, std::vector<VertexPair> edges);

// K_n minus the Hamiltonian cycle 0-1-...-(n-1)-0.
SimpleGraph k_prime(int n);

// The graphic arrangement A(G): hyperplanes x_i = x_j, indexed lexicographically.
struct Arrangement {
    SimpleGraph graph;
    std::vector<VertexPair> hyperplanes;

    std::size_t size() const { return hyperplanes.size(); }
    std::size_t index_of(int i, int j) const;
};

std::shared_ptr<const Arrangement> make_arrangement(const SimpleGraph& g);

// A chamber as a sign vector; '-' at (i,j) means x_i < x_j.
struct Chamber {
    std::shared_ptr<const Arrangement> arrangement;
    std::string signs;
    std::vector<int> witness;

    bool operator==(const Chamber& o) const { return signs == o.signs && arrangement == o.arrangement; }
};

// c_pi = { x : x_{pi(1)} < x_{pi(2)} < ... }.
Chamber chamber_of(std::span<const int> permutation, std::shared_ptr<const Arrangement> arr);

Chamber class_chamber(const ArcClass& cl, std::shared_ptr<const Arrangement> arr);

std::vector<std::size_t> separating_set(const Chamber& c1, const Chamber& c2);

Chamber negative(const Chamber& c);

struct ChamberGraph {
    std::vector<Chamber> chambers;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
    std::vector<std::vector<std::size_t>> neighbors;

    std::size_t index_of(const Chamber& c) const;
};

// Edges join chambers separated by exactly one hyperplane.
ChamberGraph chamber_graph(std::vector<Chamber> chambers);

std::size_t gallery_distance(const ChamberGraph& g, const Chamber& from, const Chamber& to);

// All chambers of the arrangement from all permutations of the vertices; small n only.
std::vector<Chamber> enumerate_chambers(std::shared_ptr<const Arrangement> arr);

// True iff the graph is a single cycle through all its vertices.
bool is_cycle(const ChamberGraph& g);

bool is_connected(const ChamberGraph& g);

}  // namespace trifree

#endif  // TRIFREE_ARRANGEMENT_HPP
