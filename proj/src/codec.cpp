#include "trifree/codec.hpp"

#include <charconv>

namespace trifree {

namespace {

void check_code(const Code& c) {
    if (!is_valid_code(c)) throw Error(Errc::domain, "malformed code for n=" + std::to_string(c.n));
}

}  // namespace

bool is_valid_code(const Code& c) {
    if (c.n <= 4 || c.n > max_polygon_size) return false;
    if (c.v0 < 0 || c.v0 >= c.n) return false;
    if (static_cast<int>(c.bits.size()) != c.n - 4) return false;
    for (auto b : c.bits) {
        if (b > 1) return false;
    }
    return true;
}

Code encode(const ColoredTriangulation& t) {
    int n = t.n;
    if (n <= 4 || static_cast<int>(t.chords.size()) != n - 3 || !is_short(n, t.chords[0])) {
        throw Error(Errc::domain, "encode requires a colored triangle-free triangulation");
    }
    const auto& first = t.chords[0];
    int center = first.b - first.a == 2 ? first.a + 1 : mod(first.b + 1, n);
    Code c{n, center, {}};
    // The chord labeled i spans the cyclic interval lo..hi around the center.
    int lo = center - 1;
    int hi = center + 1;
    for (int i = 1; i <= n - 4; ++i) {
        const auto& d = t.chords[i];
        if (is_diagonal(n, lo - 1, hi) && d == make_diagonal(n, lo - 1, hi)) {
            c.bits.push_back(0);
            --lo;
        } else if (is_diagonal(n, lo, hi + 1) && d == make_diagonal(n, lo, hi + 1)) {
            c.bits.push_back(1);
            ++hi;
        } else {
            throw Error(Errc::domain, "chord labeled " + std::to_string(i) + " does not extend chord " +
                                          std::to_string(i - 1));
        }
    }
    return c;
}

Diagonal chord_of_label(const Code& c, int label) {
    check_code(c);
    if (label < 0 || label > c.n - 4) {
        throw Error(Errc::invalid_label, "label " + std::to_string(label) + " out of range");
    }
    long long ones = 0;
    for (int j = 1; j <= label; ++j) ones += c.bit_at(j);
    long long k = c.v0 - 1 - label + ones;
    long long m = c.v0 + 1 + ones;
    return make_diagonal(c.n, k, m);
}

ColoredTriangulation decode(const Code& c) {
    check_code(c);
    ColoredTriangulation t{c.n, {}};
    for (int i = 0; i <= c.n - 4; ++i) t.chords.push_back(chord_of_label(c, i));
    return t;
}

long long rank(const Code& c) {
    long long ell = static_cast<long long>(c.n - 3) * c.v0;
    for (int i = 1; i <= c.n - 4; ++i) ell += static_cast<long long>(c.n - 3 - i) * c.bit_at(i);
    return ell;
}

Code reverse_code(const Code& c) {
    check_code(c);
    long long sum = 2 + c.v0;
    for (auto b : c.bits) sum += b;
    Code r{c.n, mod(sum, c.n), std::vector<std::uint8_t>(c.bits.size())};
    for (int i = 1; i <= c.n - 4; ++i) r.bits[i - 1] = static_cast<std::uint8_t>(1 - c.bit_at(c.n - 3 - i));
    return r;
}

Code shift_generator(const Code& c) {
    check_code(c);
    Code r = c;
    r.v0 = mod(c.v0 + (c.bits[0] ? 1 : -1), c.n);
    r.bits[0] = static_cast<std::uint8_t>(1 - c.bits[0]);
    return r;
}

Code apply_generator(const Code& c, int i) {
    check_code(c);
    int last = c.n - 4;
    if (i < 0 || i > last) throw Error(Errc::invalid_label, "generator index " + std::to_string(i) + " out of range");
    if (i == 0) return encode(flip_label(decode(c), 0));
    Code r = c;
    if (i == last) {
        r.bits[last - 1] = static_cast<std::uint8_t>(1 - r.bits[last - 1]);
    } else {
        std::swap(r.bits[i - 1], r.bits[i]);
    }
    return r;
}

std::size_t code_count(int n) {
    require_polygon_size(n);
    return static_cast<std::size_t>(n) << (n - 4);
}

std::size_t code_index(const Code& c) {
    std::size_t index = static_cast<std::size_t>(c.v0);
    for (auto b : c.bits) index = (index << 1) | b;
    return index;
}

Code code_from_index(int n, std::size_t index) {
    if (index >= code_count(n)) throw Error(Errc::domain, "code index out of range");
    Code c{n, 0, std::vector<std::uint8_t>(n - 4)};
    for (int k = n - 5; k >= 0; --k) {
        c.bits[k] = static_cast<std::uint8_t>(index & 1);
        index >>= 1;
    }
    c.v0 = static_cast<int>(index);
    return c;
}

std::string to_string(const Code& c) {
    std::string s = std::to_string(c.v0) + ";";
    for (auto b : c.bits) s.push_back(b ? '1' : '0');
    return s;
}

Code parse_code(int n, std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw Error(Errc::domain, "code text lacks ';'");
    Code c{n, 0, {}};
    auto head = text.substr(0, semi);
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), c.v0);
    if (ec != std::errc{} || ptr != head.data() + head.size()) throw Error(Errc::domain, "bad code head");
    for (char ch : text.substr(semi + 1)) {
        if (ch != '0' && ch != '1') throw Error(Errc::domain, "bad code bit");
        c.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    check_code(c);
    return c;
}

}  // namespace trifree
