#include "skelgraph/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <vector>

#include "skelgraph/geometry.hpp"

namespace skelgraph {

namespace {

int find_root(std::map<int, int>& parent, int id) {
    while (parent[id] != id) {
        parent[id] = parent[parent[id]];
        id = parent[id];
    }
    return id;
}

}  // namespace

TopologySignature signature(const SkeletonGraph& graph, double corner_threshold_deg) {
    TopologySignature sig;

    std::map<int, Vec2> position;
    std::map<int, std::vector<int>> adjacency;
    std::map<int, int> parent;
    for (const GraphNode& n : graph.nodes) {
        position[n.id] = {n.x, n.y};
        adjacency[n.id];
        parent[n.id] = n.id;
    }
    for (const auto& [a, b] : graph.edges) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
        parent[find_root(parent, a)] = find_root(parent, b);
    }

    for (const auto& [id, around] : adjacency) {
        const std::size_t degree = around.size();
        if (degree == 1) ++sig.endpoints;
        if (degree >= 3) ++sig.junctions;
        if (degree == 2) {
            const Vec2 v = position[id];
            const Vec2 u1 = position[around[0]] - v;
            const Vec2 u2 = position[around[1]] - v;
            const double n1 = std::sqrt(u1.x * u1.x + u1.y * u1.y);
            const double n2 = std::sqrt(u2.x * u2.x + u2.y * u2.y);
            if (n1 > 0.0 && n2 > 0.0) {
                const double c = std::clamp((u1.x * u2.x + u1.y * u2.y) / (n1 * n2), -1.0, 1.0);
                const double angle_deg = std::acos(c) * 180.0 / std::numbers::pi;
                if (angle_deg < corner_threshold_deg) ++sig.corners;
            }
        }
    }

    std::vector<int> roots;
    for (const GraphNode& n : graph.nodes) roots.push_back(find_root(parent, n.id));
    std::sort(roots.begin(), roots.end());
    sig.components =
        static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());

    sig.cycles = static_cast<int>(graph.edges.size()) - static_cast<int>(graph.nodes.size()) +
                 sig.components;
    return sig;
}

bool same_topology(const TopologySignature& a, const TopologySignature& b, bool include_corners) {
    return a.endpoints == b.endpoints && a.junctions == b.junctions && a.cycles == b.cycles &&
           a.components == b.components && (!include_corners || a.corners == b.corners);
}

int signature_distance(const TopologySignature& a, const TopologySignature& b) {
    return std::abs(a.endpoints - b.endpoints) + std::abs(a.junctions - b.junctions) +
           std::abs(a.cycles - b.cycles) + std::abs(a.components - b.components) +
           std::abs(a.corners - b.corners);
}

}  // namespace skelgraph
