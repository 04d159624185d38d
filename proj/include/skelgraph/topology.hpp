#pragma once

#include "skelgraph/graph.hpp"

namespace skelgraph {

/// Structural summary of a skeleton graph: what a character's "essential
/// skeleton" looks like independent of node placement.
struct TopologySignature {
    int endpoints = 0;   // degree-1 nodes
    int junctions = 0;   // degree >= 3 nodes
    int cycles = 0;      // cyclomatic number E - V + components
    int components = 0;  // connected components
    int corners = 0;     // degree-2 nodes with an acute bend

    bool operator==(const TopologySignature&) const = default;
};

/// Compute the signature. A degree-2 node counts as a corner when the angle
/// between its two incident edge directions is strictly below
/// corner_threshold_deg (degrees).
TopologySignature signature(const SkeletonGraph& graph, double corner_threshold_deg = 90.0);

/// All five counts equal; pass include_corners = false to compare only the
/// four placement-insensitive counts.
bool same_topology(const TopologySignature& a, const TopologySignature& b,
                   bool include_corners = true);

/// L1 distance across the five counts.
int signature_distance(const TopologySignature& a, const TopologySignature& b);

}  // namespace skelgraph
