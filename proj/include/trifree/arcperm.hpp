#ifndef TRIFREE_ARCPERM_HPP
#define TRIFREE_ARCPERM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "trifree/codec.hpp"
#include "trifree/polygon.hpp"

namespace trifree {

// A permutation of Z_n whose every prefix is a cyclic interval.
struct ArcPermutation {
    int n = 0;
    std::vector<int> letters;

    auto operator<=>(const ArcPermutation&) const = default;
};

// head = first letter; dirs[k] says whether letter k+2 (1-based) grew the prefix
// at its lower (0) or upper (1) end.
struct ArcVector {
    int n = 0;
    int head = 0;
    std::vector<std::uint8_t> dirs;

    auto operator<=>(const ArcVector&) const = default;
};

// A class of four arc permutations sharing the series of subsets
// {pi(1),pi(2)}, {pi(3)}, ..., {pi(n-2)}, {pi(n-1),pi(n)}. Pairs are kept sorted.
struct ArcClass {
    int n = 0;
    std::vector<std::vector<int>> subsets;

    auto operator<=>(const ArcClass&) const = default;
};

// Throws a domain error if `letters` is not a permutation of 0..n-1.
bool is_arc_permutation(int n, std::span<const int> letters);

std::vector<ArcPermutation> enumerate_arc_perms(int n);

ArcVector encode_arc(const ArcPermutation& p);
ArcPermutation decode_arc(const ArcVector& v);

// rho_i: swap positions i+1, i+2 (1-based) when the result is still an arc permutation.
ArcPermutation rho(const ArcPermutation& p, int i);

ArcClass class_of(const ArcPermutation& p);

bool is_valid_class(const ArcClass& cl);

// The four members, sorted; the first is the canonical representative.
std::vector<ArcPermutation> class_members(const ArcClass& cl);
ArcPermutation representative(const ArcClass& cl);

// theta_i, 0 <= i <= n-4.
ArcClass theta(const ArcClass& cl, int i);

ArcClass reverse_class(const ArcClass& cl);

// All classes, sorted.
std::vector<ArcClass> enumerate_classes(int n);

ArcClass f_map(const ColoredTriangulation& t);
ArcClass class_of_code(const Code& c);
ColoredTriangulation f_inv(const ArcClass& cl);

}  // namespace trifree

#endif  // TRIFREE_ARCPERM_HPP
