#include "trifree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "trifree/arrangement.hpp"
#include "trifree/coxeter.hpp"

namespace trifree {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::add(std::string id, std::string description, bool ok, std::string counterexample) {
    if (ok) {
        counterexample.clear();
    } else if (counterexample.empty()) {
        counterexample = "property failed";
    }
    checks.push_back({std::move(id), std::move(description), ok, std::move(counterexample)});
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all", "actions", "diameter", "isomorphism", "geodesics", "tableaux"};
    return names;
}

int suite_cap(const std::string& suite) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw Error(Errc::domain, "unknown suite '" + suite + "'");
    }
    return 9;
}

namespace {

std::string ctft_string(const ColoredTriangulation& t) { return to_json(t).dump(); }

void check_actions(VerificationReport& r, int n) {
    const auto ctft = enumerate_ctft(n);
    const std::size_t expected = static_cast<std::size_t>(n) << (n - 4);
    r.add("ctft-cardinality", "|CTFT(n)| = n*2^(n-4) = " + std::to_string(expected), ctft.size() == expected,
          "found " + std::to_string(ctft.size()));

    if (n <= 8) {
        std::set<ColoredTriangulation> brute;
        std::size_t triangle_free = 0;
        for (const auto& t : enumerate_triangulations(n)) {
            if (!is_triangle_free(t)) continue;
            ++triangle_free;
            auto [first, second] = proper_colorings(t);
            brute.insert(first);
            brute.insert(second);
        }
        bool same = std::equal(brute.begin(), brute.end(), ctft.begin(), ctft.end());
        r.add("ctft-brute-force", "orbit of the star equals brute-force colored triangle-free triangulations",
              same && triangle_free * 2 == expected,
              "brute force found " + std::to_string(brute.size()) + " from " + std::to_string(triangle_free));
    }

    std::string bad;
    for (const auto& t : ctft) {
        auto u = t.uncolored();
        if (count_short_chords(u) != 2 || !is_short(n, t.chords[0]) || is_triangle_free(u) != true) {
            bad = ctft_string(t);
            break;
        }
    }
    r.add("two-short-chords", "every triangulation has exactly two short chords, label 0 short", bad.empty(), bad);

    bad.clear();
    std::set<Code> codes;
    for (const auto& t : ctft) {
        auto c = encode(t);
        codes.insert(c);
        if (decode(c) != t) {
            bad = ctft_string(t);
            break;
        }
    }
    r.add("codec-bijection", "encode/decode are inverse bijections onto Z_n x Z_2^(n-4)",
          bad.empty() && codes.size() == code_count(n), bad);

    bad.clear();
    for (const auto& t : ctft) {
        auto c = encode(t);
        for (int i = 0; i <= n - 4 && bad.empty(); ++i) {
            if (apply_generator(c, i) != encode(flip_label(t, i))) {
                bad = to_string(c) + " under s_" + std::to_string(i);
            }
        }
        if (bad.empty() && shift_generator(c) != apply_generator(c, 0)) bad = to_string(c) + " under closed-form s_0";
        if (bad.empty() && reverse_code(c) != encode(reverse(t))) bad = to_string(c) + " reversal";
        if (!bad.empty()) break;
    }
    r.add("generator-codes", "generators and reversal on codes agree with geometric flips", bad.empty(), bad);

    auto flip = [](const ColoredTriangulation& t, int i) { return flip_label(t, i); };
    auto v = coxeter_violation(ctft, n - 4, flip);
    r.add("flip-coxeter", "flips satisfy the C~_(n-4) Coxeter relations", !v, v.value_or(""));
    r.add("flip-transitive", "flip action is transitive", orbit(canonical_star(n), n - 4, flip).size() == ctft.size());

    const auto perms = enumerate_arc_perms(n);
    auto rho_act = [](const ArcPermutation& p, int i) { return rho(p, i); };
    v = coxeter_violation(perms, n - 2, rho_act);
    r.add("rho-coxeter", "rho satisfies the C~_(n-2) Coxeter relations on arc permutations", !v, v.value_or(""));
    r.add("rho-transitive", "rho action is transitive on arc permutations",
          orbit(perms.front(), n - 2, rho_act).size() == perms.size());

    const auto classes = enumerate_classes(n);
    auto theta_act = [](const ArcClass& cl, int i) { return theta(cl, i); };
    v = coxeter_violation(classes, n - 4, theta_act);
    r.add("theta-coxeter", "theta satisfies the C~_(n-4) Coxeter relations on classes", !v, v.value_or(""));
    r.add("theta-transitive", "theta action is transitive on classes",
          classes.size() == expected && orbit(classes.front(), n - 4, theta_act).size() == classes.size());

    bad.clear();
    std::set<ArcClass> images;
    for (const auto& t : ctft) {
        auto cl = f_map(t);
        images.insert(cl);
        if (f_inv(cl) != t) bad = ctft_string(t) + " does not round-trip";
        for (int i = 0; i <= n - 4 && bad.empty(); ++i) {
            if (f_map(flip_label(t, i)) != theta(cl, i)) bad = ctft_string(t) + " breaks intertwining at " + std::to_string(i);
        }
        if (bad.empty() && f_map(reverse(t)) != reverse_class(cl)) bad = ctft_string(t) + " breaks reversal";
        if (!bad.empty()) break;
    }
    r.add("f-equivariant", "f is a bijection onto classes intertwining flips with theta",
          bad.empty() && images.size() == classes.size(), bad);
}

void check_diameter(VerificationReport& r, int n) {
    auto g = build_flip_graph(n);
    const int target = diagonal_count(n);
    int diam = diameter(g);
    r.add("diameter", "diameter of the flip graph is n(n-3)/2 = " + std::to_string(target), diam == target,
          "diameter " + std::to_string(diam));

    std::string bad;
    for (std::size_t k = 0; k < g.size() && bad.empty(); ++k) {
        auto dist = bfs_distances(g, k);
        if (dist[g.index_of(reverse_code(g.vertices[k]))] != target) bad = to_string(g.vertices[k]);
    }
    r.add("antipodes", "every T is at distance n(n-3)/2 from its reverse", bad.empty(), bad);

    bad.clear();
    const long long modulus = rank_modulus(n);
    for (std::size_t u = 0; u < g.size() && bad.empty(); ++u) {
        for (const auto& e : g.adjacency[u]) {
            long long step = mod(rank(g.vertices[e.to]) - rank(g.vertices[u]), static_cast<int>(modulus));
            if (e.outgoing != (step == 1)) bad = to_string(g.vertices[u]) + " -> " + to_string(g.vertices[e.to]);
        }
    }
    r.add("rank-coherence", "oriented edges raise the rank by 1 mod n(n-3)", bad.empty(), bad);

    bad.clear();
    for (std::size_t u = 0; u < g.size() && bad.empty(); ++u) {
        const auto& c = g.vertices[u];
        int expected = 2;
        for (int i = 1; i + 1 <= n - 4; ++i) expected += c.bit_at(i) != c.bit_at(i + 1);
        if (static_cast<int>(g.adjacency[u].size()) != expected) bad = to_string(c);
    }
    r.add("degree", "degree is 2 plus the number of adjacent unequal bits", bad.empty(), bad);
}

void check_isomorphism_suite(VerificationReport& r, int n) {
    auto iso = check_isomorphism(n);
    r.add("chamber-injective", "distinct classes give distinct chambers of A(K'_n)", iso.chambers_injective);
    r.add("edge-bijection", "flip edges correspond exactly to chamber adjacencies (" +
                                std::to_string(iso.flip_edges) + " edges)",
          iso.edges_match, iso.counterexample);
    r.add("edge-labels", "erased diagonal equals the separating hyperplane on every oriented edge",
          iso.labels_match, iso.counterexample);

    auto arr = make_arrangement(k_prime(n));
    std::string bad;
    for (std::size_t k = 0; k < code_count(n) && bad.empty(); ++k) {
        auto c = code_from_index(n, k);
        auto chamber = class_chamber(class_of_code(c), arr);
        auto opposite = class_chamber(class_of_code(reverse_code(c)), arr);
        if (!(opposite == negative(chamber))) bad = to_string(c);
    }
    r.add("negative-chamber", "the reverse triangulation lands on the negative chamber", bad.empty(), bad);

    if (n == 5) {
        std::vector<Chamber> chambers;
        for (const auto& cl : enumerate_classes(5)) chambers.push_back(class_chamber(cl, arr));
        r.add("ten-cycle", "chamber graph of the classes is a 10-cycle", is_cycle(chamber_graph(chambers)));
    }
}

void check_geodesics(VerificationReport& r, int n) {
    auto g = build_flip_graph(n);
    auto src = encode(canonical_star(n));
    auto dst = reverse_code(src);
    const Diagonal first_plus{0, 2};
    const Diagonal last_plus{n - 3, n - 1};

    std::size_t plus = 0, minus = 0;
    std::string bad;
    enumerate_geodesics(g, src, dst, Direction::plus, [&](const GeodesicPath& p) {
        ++plus;
        if (!bad.empty()) return;
        if (!verify_diagonal_multiset(n, p)) bad = "plus geodesic repeats a diagonal";
        else if (p.diagonals.front() != first_plus || p.diagonals.back() != last_plus) bad = "plus geodesic endpoints";
    });
    enumerate_geodesics(g, src, dst, Direction::minus, [&](const GeodesicPath& p) {
        ++minus;
        if (bad.empty() && !verify_diagonal_multiset(n, p)) bad = "minus geodesic repeats a diagonal";
    });
    const std::size_t total = plus + minus;
    r.add("diagonals-once", "every geodesic from the star to its reverse flips each diagonal once (" +
                                std::to_string(total) + " geodesics)",
          bad.empty(), bad);
    r.add("plus-minus-symmetry", "plus and minus geodesics are equinumerous", plus == minus,
          std::to_string(plus) + " vs " + std::to_string(minus));
    BigInt dp = count_geodesics(g, src, dst, Direction::both);
    r.add("dag-count", "enumeration agrees with the monotone-path dynamic program", dp == total,
          "dp " + dp.get_str() + " vs " + std::to_string(total));
    if (n >= 6) {
        BigInt formula = d_formula(n);
        r.add("d-formula", "geodesic count equals the product formula d_n = " + formula.get_str(), formula == total,
              "enumerated " + std::to_string(total));
    }
}

void check_tableaux(VerificationReport& r, int n) {
    if (n < 6) {
        r.add("tableaux-range", "tableau checks need n >= 6", true);
        return;
    }
    auto shape = make_shape(n - 3);
    BigInt count = count_syt(shape);
    BigInt formula = d_formula(n);
    r.add("syt-count", "d_n = 2 * #SYT of the truncated shifted staircase (" + count.get_str() + ")",
          formula == 2 * count, "formula " + formula.get_str());

    if (n > 8) return;  // listing the d_9 / 2 tableaux is left to counting

    auto g = build_flip_graph(n);
    auto src = encode(canonical_star(n));
    auto tableaux = enumerate_syt(shape);
    std::set<std::vector<Diagonal>> from_tableaux;
    for (const auto& t : tableaux) from_tableaux.insert(tableau_to_geodesic(t, n));
    std::set<std::vector<Diagonal>> plus;
    std::string bad;
    enumerate_geodesics(g, src, reverse_code(src), Direction::plus, [&](const GeodesicPath& p) {
        plus.insert(p.diagonals);
        if (bad.empty()) {
            auto t = geodesic_to_tableau(n, p.diagonals);
            if (tableau_to_geodesic(t, n) != p.diagonals) bad = "round trip failed";
        }
    });
    r.add("syt-bijection", "plus geodesics and standard tableaux correspond bijectively",
          bad.empty() && plus == from_tableaux && tableaux.size() == count, bad);

    auto poset = diagonal_poset(n);
    bool all_extensions = std::all_of(plus.begin(), plus.end(),
                                      [&](const std::vector<Diagonal>& s) { return is_linear_extension(poset, s); });
    r.add("linear-extensions", "plus geodesic orders are linear extensions of the coordinate-wise order",
          all_extensions && plus.size() == count);
}

}  // namespace

VerificationReport run_suite(const std::string& suite, int n) {
    int cap = suite_cap(suite);
    if (n < 5 || n > cap) {
        throw Error(Errc::invalid_size, "suite '" + suite + "' accepts 5 <= n <= " + std::to_string(cap) + ", got " +
                                            std::to_string(n));
    }
    auto start = std::chrono::steady_clock::now();
    VerificationReport r{suite, n, {}, 0.0};
    bool all = suite == "all";
    if (all || suite == "actions") check_actions(r, n);
    if (all || suite == "diameter") check_diameter(r, n);
    if (all || suite == "isomorphism") check_isomorphism_suite(r, n);
    if (all || suite == "geodesics") check_geodesics(r, n);
    if (all || suite == "tableaux") check_tableaux(r, n);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string format_report(const VerificationReport& report) {
    std::ostringstream os;
    os << "suite " << report.suite << " n=" << report.n << "\n";
    for (const auto& c : report.checks) {
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.id << ": " << c.description;
        if (!c.passed) os << " (counterexample: " << c.counterexample << ")";
        os << "\n";
    }
    os << (report.passed() ? "PASS" : "FAIL") << " " << report.checks.size() << " checks\n";
    return os.str();
}

json report_to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"id", c.id},
                          {"description", c.description},
                          {"passed", c.passed},
                          {"counterexample", c.counterexample}});
    }
    return {{"suite", report.suite}, {"n", report.n}, {"passed", report.passed()}, {"checks", checks}};
}

}  // namespace trifree
