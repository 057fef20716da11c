#include "trifree/common.hpp"

#include <utility>

namespace trifree {

bool is_diagonal(int n, int x, int y) {
    int dist = mod(y - x, n);
    return dist >= 2 && dist <= n - 2;
}

Diagonal make_diagonal(int n, long long x, long long y) {
    int a = mod(x, n);
    int b = mod(y, n);
    if (!is_diagonal(n, a, b)) {
        throw Error(Errc::domain, "not a diagonal of the " + std::to_string(n) + "-gon: {" +
                                      std::to_string(a) + "," + std::to_string(b) + "}");
    }
    if (a > b) std::swap(a, b);
    return {a, b};
}

void require_polygon_size(int n) {
    if (n <= 4) throw Error(Errc::invalid_size, "polygon size must exceed 4, got " + std::to_string(n));
    if (n > max_polygon_size) {
        throw Error(Errc::invalid_size, "polygon size must be at most " + std::to_string(max_polygon_size));
    }
}

std::string to_string(const Diagonal& d) {
    return "[" + std::to_string(d.a) + "," + std::to_string(d.b) + "]";
}

}  // namespace trifree
