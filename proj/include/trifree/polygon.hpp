#ifndef TRIFREE_POLYGON_HPP
#define TRIFREE_POLYGON_HPP

#include <array>
#include <utility>
#include <vector>

#include "trifree/common.hpp"

namespace trifree {

// A triangulation of the convex n-gon given by its n-3 chords, in sorted order.
struct UncoloredTriangulation {
    int n = 0;
    std::vector<Diagonal> chords;

    auto operator<=>(const UncoloredTriangulation&) const = default;
};

// A properly colored triangle-free triangulation: chords[i] is the chord labeled i.
struct ColoredTriangulation {
    int n = 0;
    std::vector<Diagonal> chords;

    auto operator<=>(const ColoredTriangulation&) const = default;

    int label_count() const { return n - 3; }
    UncoloredTriangulation uncolored() const;
};

// Chords {a,b}, {c,d} cross iff exactly one of c,d lies strictly inside the cyclic interval (a,b).
bool crosses(int n, const Diagonal& x, const Diagonal& y);

// A short chord [i-1,i+1] cuts off the single vertex i.
bool is_short(int n, const Diagonal& d);

// Non-crossing, distinct, and n-3 of them.
bool is_triangulation(int n, const std::vector<Diagonal>& chords);

// All triangles of a triangulation as sorted vertex triples.
std::vector<std::array<int, 3>> triangles(int n, const std::vector<Diagonal>& chords);

bool is_triangle_free(const UncoloredTriangulation& t);

int count_short_chords(const UncoloredTriangulation& t);

// Membership in CTFT(n) together with the labeling rules.
bool is_properly_colored(const ColoredTriangulation& t);

ColoredTriangulation canonical_star(int n);

// The two proper colorings; the second is the label reversal of the first.
std::pair<ColoredTriangulation, ColoredTriangulation> proper_colorings(const UncoloredTriangulation& t);

// The other diagonal of the quadrangle in which `chord` is a diagonal.
Diagonal flipped_diagonal(int n, const std::vector<Diagonal>& chords, const Diagonal& chord);

// s_i T: flip the chord labeled i, keeping its label, if the result stays properly colored.
ColoredTriangulation flip_label(const ColoredTriangulation& t, int label);

ColoredTriangulation reverse(const ColoredTriangulation& t);

// CTFT(n), by orbit closure of the canonical star under the flip generators; sorted.
std::vector<ColoredTriangulation> enumerate_ctft(int n);

// Every triangulation of the n-gon, by recursion over the apex of the edge (0, n-1).
std::vector<UncoloredTriangulation> enumerate_triangulations(int n);

}  // namespace trifree

#endif  // TRIFREE_POLYGON_HPP
