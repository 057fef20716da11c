#ifndef TRIFREE_COMMON_HPP
#define TRIFREE_COMMON_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trifree {

enum class Errc {
    invalid_size,
    invalid_label,
    domain,
    no_path,
    unsupported_endpoint,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Polygons are limited by 64-bit vertex masks.
inline constexpr int max_polygon_size = 64;

inline int mod(long long x, int n) {
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// True iff the vertex set `mask` over Z_n is a cyclic interval (empty and full count).
inline bool is_cyclic_interval(std::uint64_t mask, int n) {
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
    if (mask == 0 || mask == full) return true;
    int starts = 0;
    for (int v = 0; v < n; ++v) {
        if ((mask & bit(v)) && !(mask & bit(mod(v - 1, n)))) ++starts;
    }
    return starts == 1;
}

// A chord [a,b] of the convex n-gon, stored with a < b.
struct Diagonal {
    int a = 0;
    int b = 0;

    auto operator<=>(const Diagonal&) const = default;
};

// Normalizes the unordered vertex pair {x, y} (taken mod n); throws if it is a side or a point.
Diagonal make_diagonal(int n, long long x, long long y);

bool is_diagonal(int n, int x, int y);

// Number of polygon diagonals, n(n-3)/2.
inline int diagonal_count(int n) { return n * (n - 3) / 2; }

void require_polygon_size(int n);

std::string to_string(const Diagonal& d);

}  // namespace trifree

#endif  // TRIFREE_COMMON_HPP
