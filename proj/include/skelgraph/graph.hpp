#pragma once

#include <utility>
#include <vector>

#include "skelgraph/errors.hpp"

namespace skelgraph {

struct GraphNode {
    int id = 0;
    double x = 0.0;
    double y = 0.0;

    bool operator==(const GraphNode&) const = default;
};

/// Undirected simple graph over 2D node positions, in the pixel frame of the
/// image it was learned from. Canonical form: nodes sorted by id, each edge
/// stored with the smaller id first, edges sorted lexicographically.
struct SkeletonGraph {
    int width = 0;
    int height = 0;
    std::vector<GraphNode> nodes;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const SkeletonGraph&) const = default;

    /// Sort nodes and edges into canonical order.
    void normalize();
};

/// Check SkeletonGraph invariants: positive dimensions, unique node ids,
/// edge endpoints that exist, no self-loops, no duplicate edges. Throws
/// Error naming the violation.
void validate_graph(const SkeletonGraph& graph);

}  // namespace skelgraph
