#ifndef TRIFREE_CODEC_HPP
#define TRIFREE_CODEC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trifree/polygon.hpp"

namespace trifree {

// Vector in Z_n x Z_2^{n-4} keying a colored triangulation. bits[k] holds entry k+1.
struct Code {
    int n = 0;
    int v0 = 0;
    std::vector<std::uint8_t> bits;

    auto operator<=>(const Code&) const = default;

    int bit_at(int index) const { return bits[index - 1]; }
};

bool is_valid_code(const Code& c);

Code encode(const ColoredTriangulation& t);
ColoredTriangulation decode(const Code& c);

// The chord labeled `label` in decode(c), read off the code without building it.
Diagonal chord_of_label(const Code& c, int label);

// ell(v) = sum_i (n-3-i) v_i with entries lifted to integers.
long long rank(const Code& c);

// Modulus of the rank arithmetic, n(n-3).
inline long long rank_modulus(int n) { return static_cast<long long>(n) * (n - 3); }

Code reverse_code(const Code& c);

// Generator s_i on codes. Index 0 is resolved through the geometric flip.
Code apply_generator(const Code& c, int i);

// Closed form of s_0 on codes: bit 1 set moves v0 up, clear moves it down; bit 1 toggles.
Code shift_generator(const Code& c);

// Codes in lexicographic order correspond to indices 0..n*2^{n-4}-1.
std::size_t code_count(int n);
std::size_t code_index(const Code& c);
Code code_from_index(int n, std::size_t index);

// "v0;b1b2...": the textual form used in DOT and JSON output.
std::string to_string(const Code& c);
Code parse_code(int n, std::string_view text);

}  // namespace trifree

#endif  // TRIFREE_CODEC_HPP
