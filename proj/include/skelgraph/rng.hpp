#pragma once

#include <span>
#include <utility>
#include <vector>

#include "skelgraph/geometry.hpp"
#include "skelgraph/graph.hpp"

namespace skelgraph {

enum class RewireMode {
    Recompute,  // rebuild the edge set from node positions
    Prune,      // keep only input edges that the rebuilt set also contains
};

struct RewireParams {
    double cap_factor = 0.15;  // edge length cap as a fraction of the image diagonal
    RewireMode mode = RewireMode::Recompute;

    void validate() const;
};

/// Relative-neighborhood edges of a planar point set, with an absolute edge
/// length cap. Pair (i, j) is kept iff d(i, j) <= cap and no third point z
/// has both d(z, i) < d(i, j) and d(z, j) < d(i, j). Comparisons use squared
/// distances; ties (equality) never block an edge. Returns index pairs
/// (i < j) in lexicographic order.
std::vector<std::pair<int, int>> relative_neighbor_edges(std::span<const Vec2> points, double cap);

/// Replace the graph's edges with relative-neighborhood edges over its node
/// positions, cap = cap_factor * sqrt(W^2 + H^2). Positions are untouched.
SkeletonGraph rewire(const SkeletonGraph& graph, const RewireParams& params = {});

}  // namespace skelgraph
