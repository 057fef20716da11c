#ifndef TRIFREE_IO_HPP
#define TRIFREE_IO_HPP

#include <json.hpp>
#include <string>

#include "trifree/arcperm.hpp"
#include "trifree/flipgraph.hpp"
#include "trifree/tableaux.hpp"

namespace trifree {

using json = nlohmann::json;

json to_json(const Diagonal& d);
json to_json(const ColoredTriangulation& t);
json to_json(const ArcPermutation& p);
json to_json(const ArcClass& cl);
json to_json(const ShiftedTableau& t);
json to_json(const GeodesicPath& p, int n, Direction dir);

ColoredTriangulation triangulation_from_json(const json& j);
ArcClass class_from_json(const json& j);

enum class EdgeLabels { diagonal, generator, hyperplane };

EdgeLabels parse_edge_labels(const std::string& text);

struct GraphExportOptions {
    bool oriented = false;
    EdgeLabels labels = EdgeLabels::diagonal;
};

// One exported edge. With orientation, tail -> head follows the rank orientation;
// without it tail < head by vertex index.
struct ExportEdge {
    std::size_t tail = 0;
    std::size_t head = 0;
    std::string label;
};

// Vertices are codes in index order. The hyperplane view rebuilds the edges from the
// chamber graph of the arc permutation classes, keyed by the same codes.
std::vector<ExportEdge> export_edges(const FlipGraph& g, const GraphExportOptions& options);

std::string to_dot(const FlipGraph& g, const GraphExportOptions& options);
json graph_to_json(const FlipGraph& g, const GraphExportOptions& options);

}  // namespace trifree

#endif  // TRIFREE_IO_HPP
