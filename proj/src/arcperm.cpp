#include "trifree/arcperm.hpp"

#include <algorithm>
#include <set>

namespace trifree {

namespace {

std::vector<int> sorted_pair(int n, int x, int y) {
    x = mod(x, n);
    y = mod(y, n);
    return {std::min(x, y), std::max(x, y)};
}

void check_class(const ArcClass& cl) {
    if (!is_valid_class(cl)) throw Error(Errc::domain, "not an arc permutation class");
}

}  // namespace

bool is_arc_permutation(int n, std::span<const int> letters) {
    if (n < 1 || n > max_polygon_size || static_cast<int>(letters.size()) != n) {
        throw Error(Errc::domain, "sequence is not a permutation of Z_" + std::to_string(n));
    }
    std::uint64_t seen = 0;
    for (int x : letters) {
        if (x < 0 || x >= n || (seen & bit(x))) {
            throw Error(Errc::domain, "sequence is not a permutation of Z_" + std::to_string(n));
        }
        seen |= bit(x);
    }
    std::uint64_t prefix = 0;
    for (int x : letters) {
        prefix |= bit(x);
        if (!is_cyclic_interval(prefix, n)) return false;
    }
    return true;
}

ArcVector encode_arc(const ArcPermutation& p) {
    int n = p.n;
    if (!is_arc_permutation(n, p.letters)) throw Error(Errc::domain, "not an arc permutation");
    ArcVector v{n, p.letters[0], {}};
    int lo = p.letters[0];
    for (int k = 1; k + 1 < n; ++k) {
        int x = p.letters[k];
        bool lower = x == mod(lo - 1, n);
        v.dirs.push_back(lower ? 0 : 1);
        if (lower) lo = x;
    }
    return v;
}

ArcPermutation decode_arc(const ArcVector& v) {
    int n = v.n;
    if (n < 2 || n > max_polygon_size || v.head < 0 || v.head >= n || static_cast<int>(v.dirs.size()) != n - 2) {
        throw Error(Errc::domain, "malformed arc vector");
    }
    ArcPermutation p{n, {v.head}};
    int lo = v.head;
    int hi = v.head;
    for (auto d : v.dirs) {
        if (d) {
            hi = mod(hi + 1, n);
            p.letters.push_back(hi);
        } else {
            lo = mod(lo - 1, n);
            p.letters.push_back(lo);
        }
    }
    p.letters.push_back(mod(hi + 1, n));
    return p;
}

std::vector<ArcPermutation> enumerate_arc_perms(int n) {
    if (n < 2 || n > 30) throw Error(Errc::invalid_size, "arc permutations supported for 2 <= n <= 30");
    std::vector<ArcPermutation> out;
    for (int head = 0; head < n; ++head) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 2)); ++mask) {
            ArcVector v{n, head, {}};
            for (int k = n - 3; k >= 0; --k) v.dirs.push_back(static_cast<std::uint8_t>((mask >> k) & 1));
            out.push_back(decode_arc(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ArcPermutation rho(const ArcPermutation& p, int i) {
    if (i < 0 || i > p.n - 2) throw Error(Errc::invalid_label, "rho index " + std::to_string(i) + " out of range");
    ArcPermutation q = p;
    std::swap(q.letters[i], q.letters[i + 1]);
    return is_arc_permutation(q.n, q.letters) ? q : p;
}

ArcClass class_of(const ArcPermutation& p) {
    int n = p.n;
    if (n <= 3) throw Error(Errc::domain, "arc permutation classes need n > 3");
    ArcClass cl{n, {}};
    cl.subsets.push_back(sorted_pair(n, p.letters[0], p.letters[1]));
    for (int k = 2; k < n - 2; ++k) cl.subsets.push_back({p.letters[k]});
    cl.subsets.push_back(sorted_pair(n, p.letters[n - 2], p.letters[n - 1]));
    return cl;
}

bool is_valid_class(const ArcClass& cl) {
    int n = cl.n;
    if (n <= 3 || n > max_polygon_size || static_cast<int>(cl.subsets.size()) != n - 2) return false;
    std::uint64_t prefix = 0;
    for (std::size_t k = 0; k < cl.subsets.size(); ++k) {
        const auto& s = cl.subsets[k];
        std::size_t want = (k == 0 || k + 1 == cl.subsets.size()) ? 2 : 1;
        if (s.size() != want) return false;
        if (want == 2 && s[0] >= s[1]) return false;
        for (int x : s) {
            if (x < 0 || x >= n || (prefix & bit(x))) return false;
            prefix |= bit(x);
        }
        if (!is_cyclic_interval(prefix, n)) return false;
    }
    return true;
}

std::vector<ArcPermutation> class_members(const ArcClass& cl) {
    check_class(cl);
    int n = cl.n;
    std::vector<int> middle;
    for (std::size_t k = 1; k + 1 < cl.subsets.size(); ++k) middle.push_back(cl.subsets[k][0]);
    std::vector<ArcPermutation> out;
    const auto& head = cl.subsets.front();
    const auto& tail = cl.subsets.back();
    for (int flip_head = 0; flip_head < 2; ++flip_head) {
        for (int flip_tail = 0; flip_tail < 2; ++flip_tail) {
            ArcPermutation p{n, {}};
            p.letters.push_back(head[flip_head]);
            p.letters.push_back(head[1 - flip_head]);
            p.letters.insert(p.letters.end(), middle.begin(), middle.end());
            p.letters.push_back(tail[flip_tail]);
            p.letters.push_back(tail[1 - flip_tail]);
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ArcPermutation representative(const ArcClass& cl) { return class_members(cl).front(); }

ArcClass theta(const ArcClass& cl, int i) {
    check_class(cl);
    int n = cl.n;
    if (i < 0 || i > n - 4) throw Error(Errc::invalid_label, "theta index " + std::to_string(i) + " out of range");
    ArcClass out = cl;
    auto& s = out.subsets;
    auto boundary = [n](std::vector<int>& pair, std::vector<int>& single) {
        int x = single[0];
        if (pair == sorted_pair(n, x - 2, x - 1)) {
            pair = sorted_pair(n, x, x - 1);
            single = {mod(x - 2, n)};
        } else if (pair == sorted_pair(n, x + 1, x + 2)) {
            pair = sorted_pair(n, x, x + 1);
            single = {mod(x + 2, n)};
        }
    };
    if (i == 0) {
        boundary(s[0], s[1]);
    } else if (i == n - 4) {
        // Mirror image of the i = 0 rule on the reversed series.
        boundary(s[n - 3], s[n - 4]);
    } else {
        std::swap(s[i], s[i + 1]);
    }
    return is_valid_class(out) ? out : cl;
}

ArcClass reverse_class(const ArcClass& cl) {
    ArcClass out = cl;
    std::reverse(out.subsets.begin(), out.subsets.end());
    return out;
}

std::vector<ArcClass> enumerate_classes(int n) {
    std::set<ArcClass> seen;
    for (const auto& p : enumerate_arc_perms(n)) seen.insert(class_of(p));
    return {seen.begin(), seen.end()};
}

ArcClass class_of_code(const Code& c) {
    if (!is_valid_code(c)) throw Error(Errc::domain, "malformed code");
    int n = c.n;
    // The prefix letters lo..hi-1 are those cut off by the current chord [lo, hi].
    int lo = c.v0 - 1;
    int hi = c.v0 + 1;
    ArcClass cl{n, {sorted_pair(n, lo, lo + 1)}};
    for (auto b : c.bits) {
        if (b) {
            cl.subsets.push_back({mod(hi, n)});
            ++hi;
        } else {
            --lo;
            cl.subsets.push_back({mod(lo, n)});
        }
    }
    cl.subsets.push_back(sorted_pair(n, hi, hi + 1));
    return cl;
}

ArcClass f_map(const ColoredTriangulation& t) { return class_of_code(encode(t)); }

ColoredTriangulation f_inv(const ArcClass& cl) {
    check_class(cl);
    int n = cl.n;
    if (n <= 4) throw Error(Errc::invalid_size, "triangulations need n > 4");
    const auto& head = cl.subsets.front();
    int lo = head[1] == head[0] + 1 ? head[0] : head[1];
    int hi = lo + 2;
    ColoredTriangulation t{n, {make_diagonal(n, lo, hi)}};
    for (std::size_t k = 1; k + 1 < cl.subsets.size(); ++k) {
        int x = cl.subsets[k][0];
        if (x == mod(lo - 1, n)) {
            --lo;
        } else if (x == mod(hi, n)) {
            ++hi;
        } else {
            throw Error(Errc::domain, "class does not correspond to a triangulation");
        }
        t.chords.push_back(make_diagonal(n, lo, hi));
    }
    return t;
}

}  // namespace trifree
