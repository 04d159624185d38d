#include "skelgraph/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace skelgraph {

void RewireParams::validate() const {
    if (!(cap_factor > 0.0)) throw Error("cap_factor must be positive");
}

std::vector<std::pair<int, int>> relative_neighbor_edges(std::span<const Vec2> points,
                                                         double cap) {
    const int n = static_cast<int>(points.size());
    std::vector<std::pair<int, int>> edges;
    if (n < 2) return edges;

    const double cap_sq = cap * cap;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d_ij = squared_distance(points[i], points[j]);
            if (d_ij > cap_sq) continue;
            bool blocked = false;
            for (int z = 0; z < n && !blocked; ++z) {
                if (z == i || z == j) continue;
                blocked = squared_distance(points[z], points[i]) < d_ij &&
                          squared_distance(points[z], points[j]) < d_ij;
            }
            if (!blocked) edges.emplace_back(i, j);
        }
    }
    return edges;
}

SkeletonGraph rewire(const SkeletonGraph& graph, const RewireParams& params) {
    params.validate();

    SkeletonGraph out = graph;
    out.normalize();

    std::vector<Vec2> points;
    points.reserve(out.nodes.size());
    for (const GraphNode& node : out.nodes) points.push_back({node.x, node.y});

    const double diagonal = std::sqrt(static_cast<double>(graph.width) * graph.width +
                                      static_cast<double>(graph.height) * graph.height);
    const auto index_edges = relative_neighbor_edges(points, params.cap_factor * diagonal);

    std::vector<std::pair<int, int>> rebuilt;
    rebuilt.reserve(index_edges.size());
    for (const auto& [i, j] : index_edges) {
        const auto [a, b] = std::minmax(out.nodes[i].id, out.nodes[j].id);
        rebuilt.emplace_back(a, b);
    }
    std::sort(rebuilt.begin(), rebuilt.end());

    if (params.mode == RewireMode::Prune) {
        std::vector<std::pair<int, int>> kept;
        std::set_intersection(out.edges.begin(), out.edges.end(), rebuilt.begin(), rebuilt.end(),
                              std::back_inserter(kept));
        out.edges = std::move(kept);
    } else {
        out.edges = std::move(rebuilt);
    }
    return out;
}

}  // namespace skelgraph
