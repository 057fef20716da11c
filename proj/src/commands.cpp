#include "trifree/commands.hpp"

#include "trifree/io.hpp"
#include "trifree/verify.hpp"

namespace trifree {

namespace {

void require_range(const std::string& what, int n, int lo, int hi) {
    if (n < lo || n > hi) {
        throw Error(Errc::invalid_size, what + " supports " + std::to_string(lo) + " <= n <= " + std::to_string(hi) +
                                            ", got " + std::to_string(n));
    }
}

void emit_count(std::ostream& out, std::size_t count) { out << json{{"count", count}}.dump() << "\n"; }

}  // namespace

int cmd_enumerate(int n, const std::string& what, std::ostream& out) {
    std::size_t count = 0;
    if (what == "ctft") {
        // |CTFT(n)| = n * 2^(n-4)
        require_range("enumerate ctft", n, 5, 16);
        for (std::size_t k = 0; k < code_count(n); ++k) {
            out << to_json(decode(code_from_index(n, k))).dump() << "\n";
            ++count;
        }
    } else if (what == "arcperm") {
        // |U_n| = n * 2^(n-2)
        require_range("enumerate arcperm", n, 2, 14);
        for (const auto& p : enumerate_arc_perms(n)) {
            out << to_json(p).dump() << "\n";
            ++count;
        }
    } else if (what == "classes") {
        require_range("enumerate classes", n, 4, 14);
        for (const auto& cl : enumerate_classes(n)) {
            out << to_json(cl).dump() << "\n";
            ++count;
        }
    } else if (what == "tableaux") {
        // d_9 / 2 = 3552120 tableaux; listing stops at n = 8.
        require_range("enumerate tableaux", n, 5, 8);
        for (const auto& t : enumerate_syt(make_shape(n - 3))) {
            out << to_json(t).dump() << "\n";
            ++count;
        }
    } else {
        throw Error(Errc::domain, "unknown object kind '" + what + "'");
    }
    emit_count(out, count);
    return 0;
}

int cmd_verify(int n, const std::string& suite, bool as_json, std::ostream& out) {
    auto report = run_suite(suite, n);
    if (as_json) {
        out << report_to_json(report).dump(2) << "\n";
    } else {
        out << format_report(report);
    }
    return report.passed() ? 0 : 1;
}

int cmd_graph(int n, const std::string& format, bool oriented, const std::string& labels, std::ostream& out) {
    require_range("graph", n, 5, 12);
    GraphExportOptions options{oriented, parse_edge_labels(labels)};
    auto g = build_flip_graph(n);
    if (format == "dot") {
        out << to_dot(g, options);
    } else if (format == "json") {
        out << graph_to_json(g, options).dump(2) << "\n";
    } else {
        throw Error(Errc::domain, "unknown graph format '" + format + "'");
    }
    return 0;
}

int cmd_dn(int n, const std::string& method, std::ostream& out) {
    BigInt value;
    if (method == "formula") {
        require_range("dn --method formula", n, 6, 60);
        value = d_formula(n);
    } else if (method == "tableaux") {
        require_range("dn --method tableaux", n, 6, 12);
        value = 2 * count_syt(make_shape(n - 3));
    } else if (method == "enumerate") {
        require_range("dn --method enumerate", n, 5, 8);
        auto g = build_flip_graph(n);
        auto src = encode(canonical_star(n));
        std::size_t total = 0;
        enumerate_geodesics(g, src, reverse_code(src), Direction::both, [&](const GeodesicPath&) { ++total; });
        value = static_cast<unsigned long>(total);
    } else {
        throw Error(Errc::domain, "unknown method '" + method + "'");
    }
    out << value.get_str() << "\n";
    return 0;
}

int cmd_geodesics(int n, const std::string& direction, std::ostream& out) {
    require_range("geodesics", n, 5, 8);
    auto dir = parse_direction(direction);
    auto g = build_flip_graph(n);
    auto src = encode(canonical_star(n));
    std::size_t count = 0;
    enumerate_geodesics(g, src, reverse_code(src), dir, [&](const GeodesicPath& p) {
        out << to_json(p, n, dir).dump() << "\n";
        ++count;
    });
    emit_count(out, count);
    return 0;
}

}  // namespace trifree
