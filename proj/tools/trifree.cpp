#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "trifree/commands.hpp"
#include "trifree/common.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Colored triangle-free triangulations: flip graphs, arrangements, geodesics and tableaux"};
    app.require_subcommand(1);

    int n = 0;
    std::string what = "ctft";
    std::string suite = "all";
    std::string format = "dot";
    std::string labels = "diagonal";
    std::string method = "formula";
    std::string direction = "both";
    bool oriented = false;
    bool as_json = false;

    auto* enumerate = app.add_subcommand("enumerate", "List objects as JSON lines");
    enumerate->add_option("--n", n, "Polygon size")->required();
    enumerate->add_option("--what", what, "ctft | arcperm | classes | tableaux")
        ->check(CLI::IsMember({"ctft", "arcperm", "classes", "tableaux"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--n", n, "Polygon size")->required();
    verify->add_option("--suite", suite, "all | actions | diameter | isomorphism | geodesics | tableaux")
        ->check(CLI::IsMember({"all", "actions", "diameter", "isomorphism", "geodesics", "tableaux"}));
    verify->add_flag("--json", as_json, "Emit the report as JSON");

    auto* graph = app.add_subcommand("graph", "Export the flip graph");
    graph->add_option("--n", n, "Polygon size")->required();
    graph->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
    graph->add_flag("--oriented", oriented, "Orient edges by the rank function");
    graph->add_option("--labels", labels, "diagonal | generator | hyperplane")
        ->check(CLI::IsMember({"diagonal", "generator", "hyperplane"}));

    auto* dn = app.add_subcommand("dn", "Number of geodesics from the canonical star to its reverse");
    dn->add_option("--n", n, "Polygon size")->required();
    dn->add_option("--method", method, "formula | tableaux | enumerate")
        ->check(CLI::IsMember({"formula", "tableaux", "enumerate"}));

    auto* geodesics = app.add_subcommand("geodesics", "List geodesics from the canonical star to its reverse");
    geodesics->add_option("--n", n, "Polygon size")->required();
    geodesics->add_option("--direction", direction, "plus | minus | both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));

    CLI11_PARSE(app, argc, argv);

    auto start = std::chrono::steady_clock::now();
    int status = 0;
    try {
        if (*enumerate) status = trifree::cmd_enumerate(n, what, std::cout);
        if (*verify) status = trifree::cmd_verify(n, suite, as_json, std::cout);
        if (*graph) status = trifree::cmd_graph(n, format, oriented, labels, std::cout);
        if (*dn) status = trifree::cmd_dn(n, method, std::cout);
        if (*geodesics) status = trifree::cmd_geodesics(n, direction, std::cout);
    } catch (const trifree::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (*verify) {
        std::cerr << "elapsed "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    }
    return status;
}
