#include "trifree/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace trifree {

namespace {

std::vector<std::uint64_t> cell_predecessors(const ShiftedShape& shape) {
    std::vector<std::uint64_t> preds(shape.size(), 0);
    for (std::size_t k = 0; k < shape.size(); ++k) {
        const auto& c = shape.cells[k];
        for (std::size_t j = 0; j < shape.size(); ++j) {
            const auto& q = shape.cells[j];
            if (j != k && q.row <= c.row && q.col <= c.col) preds[k] |= bit(static_cast<int>(j));
        }
    }
    return preds;
}

void require_small(const ShiftedShape& shape) {
    if (shape.size() > 64) throw Error(Errc::invalid_size, "shape has more than 64 cells");
}

}  // namespace

std::vector<int> ShiftedShape::row_lengths() const {
    std::vector<int> lengths;
    for (const auto& c : cells) {
        if (static_cast<int>(lengths.size()) < c.row) lengths.resize(c.row, 0);
        ++lengths[c.row - 1];
    }
    return lengths;
}

std::ptrdiff_t ShiftedShape::index_of(const Cell& c) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    return it != cells.end() && *it == c ? it - cells.begin() : -1;
}

ShiftedShape make_shape(int p) {
    if (p < 1) throw Error(Errc::invalid_size, "truncated staircase needs p >= 1");
    ShiftedShape s{p, true, {}};
    for (int r = 1; r <= p + 1; ++r) {
        for (int c = r; c <= p + 1; ++c) {
            if (r == 1 && c == p + 1) continue;
            s.cells.push_back({r, c});
        }
    }
    return s;
}

ShiftedShape make_staircase(int m) {
    if (m < 0) throw Error(Errc::invalid_size, "staircase needs m >= 0");
    ShiftedShape s{m, false, {}};
    for (int r = 1; r <= m; ++r) {
        for (int c = r; c <= m; ++c) s.cells.push_back({r, c});
    }
    return s;
}

std::vector<std::vector<int>> ShiftedTableau::rows() const {
    std::vector<std::vector<int>> out;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        int r = shape.cells[k].row;
        if (static_cast<int>(out.size()) < r) out.resize(r);
        out[r - 1].push_back(entries[k]);
    }
    return out;
}

bool is_standard(const ShiftedTableau& t) {
    const auto& shape = t.shape;
    if (t.entries.size() != shape.size()) return false;
    std::vector<int> sorted = t.entries;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != static_cast<int>(k) + 1) return false;
    }
    auto preds = cell_predecessors(shape);
    for (std::size_t k = 0; k < shape.size(); ++k) {
        for (std::size_t j = 0; j < shape.size(); ++j) {
            if ((preds[k] & bit(static_cast<int>(j))) && t.entries[j] >= t.entries[k]) return false;
        }
    }
    return true;
}

std::vector<ShiftedTableau> enumerate_syt(const ShiftedShape& shape) {
    require_small(shape);
    auto preds = cell_predecessors(shape);
    std::vector<ShiftedTableau> out;
    ShiftedTableau current{shape, std::vector<int>(shape.size(), 0)};
    auto place = [&](auto&& self, std::uint64_t filled, int next) -> void {
        if (next > static_cast<int>(shape.size())) {
            out.push_back(current);
            return;
        }
        for (std::size_t k = 0; k < shape.size(); ++k) {
            if ((filled & bit(static_cast<int>(k))) || (preds[k] & ~filled)) continue;
            current.entries[k] = next;
            self(self, filled | bit(static_cast<int>(k)), next + 1);
        }
    };
    place(place, 0, 1);
    std::sort(out.begin(), out.end(),
              [](const ShiftedTableau& x, const ShiftedTableau& y) { return x.entries < y.entries; });
    return out;
}

BigInt count_linear_extensions(std::span<const std::uint64_t> predecessors) {
    const std::size_t size = predecessors.size();
    if (size > 64) throw Error(Errc::invalid_size, "poset has more than 64 elements");
    const std::uint64_t full = size == 64 ? ~std::uint64_t{0} : bit(static_cast<int>(size)) - 1;
    std::unordered_map<std::uint64_t, BigInt> memo;
    auto count = [&](auto&& self, std::uint64_t ideal) -> BigInt {
        if (ideal == full) return 1;
        if (auto it = memo.find(ideal); it != memo.end()) return it->second;
        BigInt total = 0;
        for (std::size_t k = 0; k < size; ++k) {
            auto b = bit(static_cast<int>(k));
            if (!(ideal & b) && !(predecessors[k] & ~ideal)) total += self(self, ideal | b);
        }
        memo.emplace(ideal, total);
        return total;
    };
    return count(count, 0);
}

BigInt count_syt(const ShiftedShape& shape) {
    require_small(shape);
    auto preds = cell_predecessors(shape);
    return count_linear_extensions(preds);
}

std::pair<std::vector<int>, std::vector<int>> rc_words(const ShiftedTableau& t) {
    std::vector<int> r(t.entries.size()), c(t.entries.size());
    for (std::size_t k = 0; k < t.entries.size(); ++k) {
        int e = t.entries[k];
        if (e < 1 || e > static_cast<int>(t.entries.size())) throw Error(Errc::domain, "entry out of range");
        r[e - 1] = t.shape.cells[k].row;
        c[e - 1] = t.shape.cells[k].col;
    }
    return {r, c};
}

std::vector<Diagonal> tableau_to_geodesic(const ShiftedTableau& t, int n) {
    if (!t.shape.truncated || t.shape.p != n - 3) {
        throw Error(Errc::domain, "tableau shape does not match the " + std::to_string(n) + "-gon");
    }
    auto [r, c] = rc_words(t);
    std::vector<Diagonal> out;
    for (std::size_t i = 0; i < r.size(); ++i) out.push_back({r[i] - 1, c[i] + 1});
    return out;
}

ShiftedTableau geodesic_to_tableau(int n, std::span<const Diagonal> diagonals) {
    require_polygon_size(n);
    ShiftedTableau t{make_shape(n - 3), {}};
    if (diagonals.size() != t.shape.size()) throw Error(Errc::domain, "geodesic record has wrong length");
    t.entries.assign(t.shape.size(), 0);
    for (std::size_t i = 0; i < diagonals.size(); ++i) {
        const auto& d = diagonals[i];
        auto idx = t.shape.index_of({d.a + 1, d.b - 1});
        if (idx < 0 || t.entries[idx] != 0) throw Error(Errc::domain, "geodesic record repeats or leaves the shape");
        t.entries[idx] = static_cast<int>(i) + 1;
    }
    if (!is_standard(t)) throw Error(Errc::domain, "diagonal order is not a plus geodesic record");
    return t;
}

DiagonalPoset diagonal_poset(int n) {
    require_polygon_size(n);
    DiagonalPoset poset{n, {}};
    for (int a = 0; a < n; ++a) {
        for (int b = a + 2; b < n; ++b) {
            if (is_diagonal(n, a, b)) poset.elements.push_back({a, b});
        }
    }
    return poset;
}

bool is_linear_extension(const DiagonalPoset& poset, std::span<const Diagonal> order) {
    if (order.size() != poset.elements.size()) return false;
    std::set<Diagonal> seen(order.begin(), order.end());
    if (seen.size() != order.size()) return false;
    for (const auto& d : order) {
        if (!std::binary_search(poset.elements.begin(), poset.elements.end(), d)) return false;
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (poset.leq(order[j], order[i])) return false;
        }
    }
    return true;
}

Diagonal reflect(const Diagonal& d, int n) { return make_diagonal(n, n - d.a, n - d.b); }

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t k = 0; k < inner.size(); ++k) {
        if (inner[k] > outer[k]) return false;
    }
    return true;
}

PartitionPoset lambda_poset(int n) {
    if (n < 1 || n > 12) throw Error(Errc::invalid_size, "Lambda(n) is supported for 1 <= n <= 12");
    PartitionPoset poset{n, {}, {}};
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Partition distinct;
        for (int part = n; part >= 1; --part) {
            if (mask & (1u << (part - 1))) distinct.push_back(part);
        }
        poset.elements.push_back(distinct);
        if (!distinct.empty() && distinct[0] == n) {
            Partition doubled = distinct;
            doubled.insert(doubled.begin(), n);
            poset.elements.push_back(doubled);
        }
    }
    auto weight = [](const Partition& p) {
        int s = 0;
        for (int x : p) s += x;
        return s;
    };
    std::sort(poset.elements.begin(), poset.elements.end(), [&](const Partition& x, const Partition& y) {
        int wx = weight(x), wy = weight(y);
        return wx != wy ? wx < wy : x < y;
    });
    const auto size = poset.elements.size();
    poset.covers.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (i == j || !contains(poset.elements[j], poset.elements[i])) continue;
            bool cover = true;
            for (std::size_t k = 0; k < size && cover; ++k) {
                if (k == i || k == j) continue;
                if (contains(poset.elements[k], poset.elements[i]) && contains(poset.elements[j], poset.elements[k])) {
                    cover = false;
                }
            }
            if (cover) poset.covers[i].push_back(j);
        }
    }
    return poset;
}

BigInt count_maximal_chains(const PartitionPoset& poset) {
    const auto size = poset.elements.size();
    std::vector<bool> has_lower(size, false);
    for (const auto& up : poset.covers) {
        for (auto j : up) has_lower[j] = true;
    }
    // Elements are sorted by weight, so covers always point forward.
    std::vector<BigInt> ways(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
        if (!has_lower[i]) ways[i] = 1;
    }
    BigInt total = 0;
    for (std::size_t i = 0; i < size; ++i) {
        if (poset.covers[i].empty()) total += ways[i];
        for (auto j : poset.covers[i]) ways[j] += ways[i];
    }
    return total;
}

BigInt staircase_g(int m) {
    if (m < 0) throw Error(Errc::invalid_size, "staircase_g needs m >= 0");
    BigInt num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(m) * (m + 1) / 2);
    BigInt den = 1;
    for (int i = 0; i < m; ++i) {
        BigInt fi, f2;
        mpz_fac_ui(fi.get_mpz_t(), i);
        mpz_fac_ui(f2.get_mpz_t(), 2 * i + 1);
        num *= fi;
        den *= f2;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw Error(Errc::domain, "staircase_g is not integral");
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

BigInt d_formula(int n) {
    if (n < 6) throw Error(Errc::invalid_size, "the product formula needs n >= 6");
    const unsigned long total = static_cast<unsigned long>(n) * (n - 3) / 2;
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), total, static_cast<unsigned long>(4 * n - 15));
    BigInt num = staircase_g(n - 6) * binom * (8 * (2 * n - 9));
    BigInt den = n - 3;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw Error(Errc::domain, "d_n is not integral");
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

}  // namespace trifree
