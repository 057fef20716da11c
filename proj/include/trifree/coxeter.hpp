#ifndef TRIFREE_COXETER_HPP
#define TRIFREE_COXETER_HPP

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace trifree {

// Orbit of `seed` under generators 0..rank applied through act(x, i); sorted.
template <class T, class Act>
std::vector<T> orbit(const T& seed, int rank, Act act) {
    std::set<T> seen{seed};
    std::deque<T> queue{seed};
    while (!queue.empty()) {
        T x = queue.front();
        queue.pop_front();
        for (int i = 0; i <= rank; ++i) {
            T y = act(x, i);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

// Checks the defining relations of the affine group C~_rank (generators 0..rank) on
// every element: s_i^2 = 1, (s_i s_j)^2 = 1 for |i-j| > 1, (s_i s_{i+1})^3 = 1 for
// 1 <= i <= rank-2, (s_0 s_1)^4 = (s_{rank-1} s_rank)^4 = 1. Returns the first violation.
template <class T, class Act>
std::optional<std::string> coxeter_violation(const std::vector<T>& elements, int rank, Act act) {
    auto power = [&](const T& x, int i, int j, int k) {
        T y = x;
        for (int step = 0; step < k; ++step) y = act(act(y, j), i);
        return y;
    };
    auto order = [rank](int i, int j) {
        if (i == j) return 1;
        if (j < i) std::swap(i, j);
        if (j - i > 1) return 2;
        if (rank >= 2 && (i == 0 || j == rank)) return 4;
        if (rank < 2) return 0;  // C~_1 is the infinite dihedral group
        return 3;
    };
    for (const auto& x : elements) {
        for (int i = 0; i <= rank; ++i) {
            if (act(act(x, i), i) != x) return "s_" + std::to_string(i) + " is not an involution";
            for (int j = i + 1; j <= rank; ++j) {
                int k = order(i, j);
                if (k == 0) continue;
                if (power(x, i, j, k) != x) {
                    return "(s_" + std::to_string(i) + " s_" + std::to_string(j) + ")^" + std::to_string(k) +
                           " acts nontrivially";
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace trifree

#endif  // TRIFREE_COXETER_HPP
