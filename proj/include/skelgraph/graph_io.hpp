#pragma once

#include <string>
#include <string_view>

#include "skelgraph/gng.hpp"
#include "skelgraph/graph.hpp"
#include "skelgraph/image.hpp"
#include "skelgraph/topology.hpp"

namespace skelgraph {

/// Canonical JSON encoding:
///   {"width":W,"height":H,"nodes":[{"id":N,"x":F,"y":F},...],"edges":[[A,B],...]}
/// Nodes sorted by id, edges with the smaller id first and sorted
/// lexicographically, coordinates as fixed 4-fraction-digit decimals, no
/// whitespace. Equal graphs serialize to identical bytes.
std::string to_json(const SkeletonGraph& graph);

/// Parse and validate a graph. Violations (schema, dangling edge endpoint,
/// duplicate node id, ...) raise Error naming the problem. The result is in
/// canonical order regardless of input order.
SkeletonGraph graph_from_json(std::string_view text);

/// Undirected DOT text with node positions embedded as pos attributes.
std::string to_dot(const SkeletonGraph& graph);

/// SVG 1.1 document: one circle per node, one line per edge, and optionally
/// the character mask as a unit-square raster layer underneath. Coordinates
/// are image pixels, y pointing down.
std::string render_svg(const SkeletonGraph& graph, const BinaryImage* background = nullptr);

/// Flat JSON object {"endpoints":..,"junctions":..,"cycles":..,
/// "components":..,"corners":..}.
std::string to_json(const TopologySignature& sig);
TopologySignature signature_from_json(std::string_view text);

/// Flat JSON object with fields lambda0, T, n_max, a_max, error0,
/// insert_interval, reset_interval, neighbor_scale, seed. Absent fields take
/// their defaults; unknown fields are rejected.
std::string to_json(const GngParams& params);
GngParams params_from_json(std::string_view text);

}  // namespace skelgraph
