#ifndef TRIFREE_TABLEAUX_HPP
#define TRIFREE_TABLEAUX_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "trifree/bigint.hpp"
#include "trifree/common.hpp"

namespace trifree {

// 1-based shifted coordinates: row r occupies columns r, r+1, ...
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

struct ShiftedShape {
    int p = 0;
    bool truncated = true;
    std::vector<Cell> cells;  // row-major

    std::vector<int> row_lengths() const;
    std::size_t size() const { return cells.size(); }
    std::ptrdiff_t index_of(const Cell& c) const;  // -1 if absent
};

// Truncated shifted staircase (p, p, p-1, ..., 1): cells 1 <= r <= c <= p+1 without (1, p+1).
ShiftedShape make_shape(int p);

// Full shifted staircase (m, m-1, ..., 1); m = 0 is the empty shape.
ShiftedShape make_staircase(int m);

struct ShiftedTableau {
    ShiftedShape shape;
    std::vector<int> entries;  // aligned with shape.cells

    std::vector<std::vector<int>> rows() const;
};

// Entries increase along the coordinate-wise cell order (r, c) <= (r', c').
bool is_standard(const ShiftedTableau& t);

// All standard fillings, sorted by row-reading word.
std::vector<ShiftedTableau> enumerate_syt(const ShiftedShape& shape);

// Linear extensions of the cell order, by dynamic programming over order ideals.
BigInt count_syt(const ShiftedShape& shape);

// Counts linear extensions of a poset on at most 64 elements given each element's
// set of strict predecessors.
BigInt count_linear_extensions(std::span<const std::uint64_t> predecessors);

// r(T)_i and c(T)_i: row and column of entry i.
std::pair<std::vector<int>, std::vector<int>> rc_words(const ShiftedTableau& t);

std::vector<Diagonal> tableau_to_geodesic(const ShiftedTableau& t, int n);
ShiftedTableau geodesic_to_tableau(int n, std::span<const Diagonal> diagonals);

// Diagonals under the coordinate-wise order [i,j] <= [k,l] iff i <= k and j <= l.
struct DiagonalPoset {
    int n = 0;
    std::vector<Diagonal> elements;

    bool leq(const Diagonal& x, const Diagonal& y) const { return x.a <= y.a && x.b <= y.b; }
};

DiagonalPoset diagonal_poset(int n);
bool is_linear_extension(const DiagonalPoset& poset, std::span<const Diagonal> order);

// Relabels vertices by v -> n - v (mod n), turning the order 0 = n < n-1 < ... < 1
// into the natural one.
Diagonal reflect(const Diagonal& d, int n);

using Partition = std::vector<int>;

bool contains(const Partition& outer, const Partition& inner);

struct PartitionPoset {
    int n = 0;
    std::vector<Partition> elements;                 // by size, then lexicographic
    std::vector<std::vector<std::size_t>> covers;    // upward cover relations
};

PartitionPoset lambda_poset(int n);
BigInt count_maximal_chains(const PartitionPoset& poset);

// Shifted staircase tableau count M! * prod_{i<m} i!/(2i+1)!, M = m(m+1)/2.
BigInt staircase_g(int m);

// Geodesic count between the canonical star and its reverse, n >= 6.
BigInt d_formula(int n);

}  // namespace trifree

#endif  // TRIFREE_TABLEAUX_HPP
