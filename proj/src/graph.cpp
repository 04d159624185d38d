#include "skelgraph/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

namespace skelgraph {

void SkeletonGraph::normalize() {
    std::sort(nodes.begin(), nodes.end(),
              [](const GraphNode& a, const GraphNode& b) { return a.id < b.id; });
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
}

void validate_graph(const SkeletonGraph& graph) {
    if (graph.width < 1 || graph.height < 1)
        throw Error("invalid graph dimensions " + std::to_string(graph.width) + "x" +
                    std::to_string(graph.height));

    std::unordered_set<int> ids;
    for (const GraphNode& n : graph.nodes)
        if (!ids.insert(n.id).second)
            throw Error("duplicate node id " + std::to_string(n.id));

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : graph.edges) {
        if (a == b) throw Error("self-loop on node " + std::to_string(a));
        for (int endpoint : {a, b})
            if (!ids.contains(endpoint))
                throw Error("dangling edge endpoint: unknown node id " + std::to_string(endpoint));
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw Error("duplicate edge (" + std::to_string(key.first) + ", " +
                        std::to_string(key.second) + ")");
    }
}

}  // namespace skelgraph
