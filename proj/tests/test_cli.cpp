#include <doctest.h>

#include <map>
#include <sstream>

#include "trifree/commands.hpp"
#include "trifree/io.hpp"

using namespace trifree;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::string run_dn(int n, const std::string& method) {
    std::ostringstream out;
    CHECK(cmd_dn(n, method, out) == 0);
    return out.str();
}

}  // namespace

TEST_CASE("enumerate") {
    std::ostringstream out;
    CHECK(cmd_enumerate(6, "ctft", out) == 0);
    auto ls = lines(out.str());
    REQUIRE(ls.size() == 25);
    CHECK(json::parse(ls.back())["count"] == 24);
    CHECK(triangulation_from_json(json::parse(ls[0])).n == 6);

    std::ostringstream arcs;
    cmd_enumerate(5, "arcperm", arcs);
    CHECK(lines(arcs.str()).size() == 41);

    std::ostringstream tabs;
    cmd_enumerate(6, "tableaux", tabs);
    CHECK(lines(tabs.str()).size() == 5);

    std::ostringstream classes;
    cmd_enumerate(6, "classes", classes);
    CHECK(json::parse(lines(classes.str()).back())["count"] == 24);

    std::ostringstream sink;
    CHECK_THROWS_AS(cmd_enumerate(4, "ctft", sink), Error);
    CHECK_THROWS_AS(cmd_enumerate(6, "chambers", sink), Error);
}

TEST_CASE("verify") {
    std::ostringstream out;
    CHECK(cmd_verify(7, "isomorphism", false, out) == 0);
    std::ostringstream geo;
    CHECK(cmd_verify(6, "geodesics", true, geo) == 0);
    auto j = json::parse(geo.str());
    CHECK(j["passed"] == true);
    std::ostringstream sink;
    CHECK_THROWS_AS(cmd_verify(4, "all", false, sink), Error);
    CHECK_THROWS_AS(cmd_verify(6, "everything", false, sink), Error);
}

TEST_CASE("dn") {
    CHECK(run_dn(6, "enumerate") == "8\n");
    CHECK(run_dn(7, "formula") == "140\n");
    CHECK(run_dn(8, "tableaux") == "12768\n");
    CHECK(run_dn(5, "enumerate") == "2\n");
    for (int n = 6; n <= 8; ++n) {
        CHECK(run_dn(n, "formula") == run_dn(n, "enumerate"));
        CHECK(run_dn(n, "formula") == run_dn(n, "tableaux"));
    }
    for (int n = 9; n <= 11; ++n) CHECK(run_dn(n, "formula") == run_dn(n, "tableaux"));
    std::ostringstream sink;
    CHECK_THROWS_AS(cmd_dn(9, "enumerate", sink), Error);
    CHECK_THROWS_AS(cmd_dn(5, "formula", sink), Error);
    CHECK_THROWS_AS(cmd_dn(61, "formula", sink), Error);
}

TEST_CASE("graph") {
    std::ostringstream out;
    CHECK(cmd_graph(6, "json", true, "diagonal", out) == 0);
    auto j = json::parse(out.str());
    std::map<std::string, int> in, outdeg;
    for (const auto& e : j["edges"]) {
        ++outdeg[e["from"].get<std::string>()];
        ++in[e["to"].get<std::string>()];
    }
    auto g = build_flip_graph(6);
    for (std::size_t u = 0; u < g.size(); ++u) {
        auto name = to_string(g.vertices[u]);
        CHECK(in[name] + outdeg[name] == static_cast<int>(g.adjacency[u].size()));
    }
    std::ostringstream dot;
    CHECK(cmd_graph(5, "dot", false, "diagonal", dot) == 0);
    CHECK(dot.str() == to_dot(build_flip_graph(5), {}));
    std::ostringstream sink;
    CHECK_THROWS_AS(cmd_graph(13, "dot", false, "diagonal", sink), Error);
}

TEST_CASE("geodesics") {
    std::ostringstream out;
    CHECK(cmd_geodesics(6, "both", out) == 0);
    auto ls = lines(out.str());
    int records = 0;
    for (const auto& l : ls) {
        auto j = json::parse(l);
        if (j.contains("path")) ++records;
    }
    CHECK(records == 8);
}
