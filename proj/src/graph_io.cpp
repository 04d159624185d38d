#include "skelgraph/graph_io.hpp"

#include <cstdio>
#include <map>

#include <json.hpp>

namespace skelgraph {

namespace {

using nlohmann::json;

/// Fixed 4-fraction-digit decimal; the canonical coordinate encoding.
std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

json parse_or_throw(std::string_view text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(std::string("malformed ") + what + ": invalid JSON");
    return j;
}

long long require_int(const json& j, const char* key, const char* context) {
    if (!j.contains(key))
        throw Error(std::string(context) + ": missing field '" + key + "'");
    const json& v = j.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw Error(std::string(context) + ": field '" + key + "' must be an integer");
    return v.get<long long>();
}

double require_number(const json& j, const char* key, const char* context) {
    if (!j.contains(key))
        throw Error(std::string(context) + ": missing field '" + key + "'");
    const json& v = j.at(key);
    if (!v.is_number())
        throw Error(std::string(context) + ": field '" + key + "' must be a number");
    return v.get<double>();
}

}  // namespace

std::string to_json(const SkeletonGraph& graph) {
    SkeletonGraph g = graph;
    g.normalize();

    std::string out = "{\"width\":" + std::to_string(g.width) +
                      ",\"height\":" + std::to_string(g.height) + ",\"nodes\":[";
    bool first = true;
    for (const GraphNode& n : g.nodes) {
        if (!first) out += ',';
        first = false;
        out += "{\"id\":" + std::to_string(n.id) + ",\"x\":" + fmt4(n.x) + ",\"y\":" + fmt4(n.y) +
               "}";
    }
    out += "],\"edges\":[";
    first = true;
    for (const auto& [a, b] : g.edges) {
        if (!first) out += ',';
        first = false;
        out += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    }
    out += "]}";
    return out;
}

SkeletonGraph graph_from_json(std::string_view text) {
    const json j = parse_or_throw(text, "graph");
    if (!j.is_object()) throw Error("malformed graph: top level must be an object");
    for (const auto& [key, value] : j.items())
        if (key != "width" && key != "height" && key != "nodes" && key != "edges")
            throw Error("malformed graph: unknown field '" + key + "'");

    SkeletonGraph graph;
    graph.width = static_cast<int>(require_int(j, "width", "malformed graph"));
    graph.height = static_cast<int>(require_int(j, "height", "malformed graph"));

    if (!j.contains("nodes") || !j.at("nodes").is_array())
        throw Error("malformed graph: 'nodes' must be an array");
    for (const json& n : j.at("nodes")) {
        if (!n.is_object()) throw Error("malformed graph: node entries must be objects");
        GraphNode node;
        node.id = static_cast<int>(require_int(n, "id", "malformed node"));
        node.x = require_number(n, "x", "malformed node");
        node.y = require_number(n, "y", "malformed node");
        graph.nodes.push_back(node);
    }

    if (!j.contains("edges") || !j.at("edges").is_array())
        throw Error("malformed graph: 'edges' must be an array");
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw Error("malformed graph: edges must be [a, b] id pairs");
        graph.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    graph.normalize();
    validate_graph(graph);
    return graph;
}

std::string to_dot(const SkeletonGraph& graph) {
    SkeletonGraph g = graph;
    g.normalize();

    std::string out = "graph skeleton {\n  node [shape=point];\n";
    for (const GraphNode& n : g.nodes)
        out += "  " + std::to_string(n.id) + " [pos=\"" + fmt4(n.x) + "," + fmt4(n.y) + "!\"];\n";
    for (const auto& [a, b] : g.edges)
        out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

std::string render_svg(const SkeletonGraph& graph, const BinaryImage* background) {
    SkeletonGraph g = graph;
    g.normalize();

    std::map<int, Vec2> position;
    for (const GraphNode& n : g.nodes) position[n.id] = {n.x, n.y};

    const std::string w = std::to_string(g.width);
    const std::string h = std::to_string(g.height);
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
        w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    out += "<rect width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";

    if (background) {
        out += "<g fill=\"#c4c4c4\">\n";
        for (const Pixel& p : background->foreground())
            out += "<rect x=\"" + std::to_string(p.x) + "\" y=\"" + std::to_string(p.y) +
                   "\" width=\"1\" height=\"1\"/>\n";
        out += "</g>\n";
    }

    out += "<g stroke=\"#2266cc\" stroke-width=\"0.8\" stroke-linecap=\"round\">\n";
    for (const auto& [a, b] : g.edges) {
        const Vec2 pa = position[a];
        const Vec2 pb = position[b];
        out += "<line x1=\"" + fmt4(pa.x) + "\" y1=\"" + fmt4(pa.y) + "\" x2=\"" + fmt4(pb.x) +
               "\" y2=\"" + fmt4(pb.y) + "\"/>\n";
    }
    out += "</g>\n<g fill=\"#cc3322\">\n";
    for (const GraphNode& n : g.nodes)
        out += "<circle cx=\"" + fmt4(n.x) + "\" cy=\"" + fmt4(n.y) + "\" r=\"1.2\"/>\n";
    out += "</g>\n</svg>\n";
    return out;
}

std::string to_json(const TopologySignature& sig) {
    return "{\"endpoints\":" + std::to_string(sig.endpoints) +
           ",\"junctions\":" + std::to_string(sig.junctions) +
           ",\"cycles\":" + std::to_string(sig.cycles) +
           ",\"components\":" + std::to_string(sig.components) +
           ",\"corners\":" + std::to_string(sig.corners) + "}";
}

TopologySignature signature_from_json(std::string_view text) {
    const json j = parse_or_throw(text, "signature");
    if (!j.is_object()) throw Error("malformed signature: top level must be an object");
    TopologySignature sig;
    sig.endpoints = static_cast<int>(require_int(j, "endpoints", "malformed signature"));
    sig.junctions = static_cast<int>(require_int(j, "junctions", "malformed signature"));
    sig.cycles = static_cast<int>(require_int(j, "cycles", "malformed signature"));
    sig.components = static_cast<int>(require_int(j, "components", "malformed signature"));
    sig.corners = static_cast<int>(require_int(j, "corners", "malformed signature"));
    return sig;
}

std::string to_json(const GngParams& params) {
    json j;
    j["lambda0"] = params.lambda0;
    j["T"] = params.max_steps;
    j["n_max"] = params.max_nodes;
    j["a_max"] = params.max_edge_age;
    j["error0"] = params.error0;
    j["insert_interval"] = params.insert_interval;
    j["reset_interval"] = params.reset_interval;
    j["neighbor_scale"] = params.neighbor_scale;
    j["seed"] = params.seed;
    return j.dump();
}

GngParams params_from_json(std::string_view text) {
    const json j = parse_or_throw(text, "params");
    if (!j.is_object()) throw Error("malformed params: top level must be an object");

    GngParams params;
    for (const auto& [key, value] : j.items()) {
        if (key == "lambda0") params.lambda0 = require_number(j, "lambda0", "malformed params");
        else if (key == "T") params.max_steps = require_int(j, "T", "malformed params");
        else if (key == "n_max")
            params.max_nodes = static_cast<int>(require_int(j, "n_max", "malformed params"));
        else if (key == "a_max")
            params.max_edge_age = static_cast<int>(require_int(j, "a_max", "malformed params"));
        else if (key == "error0") params.error0 = require_number(j, "error0", "malformed params");
        else if (key == "insert_interval")
            params.insert_interval = require_int(j, "insert_interval", "malformed params");
        else if (key == "reset_interval")
            params.reset_interval = require_int(j, "reset_interval", "malformed params");
        else if (key == "neighbor_scale")
            params.neighbor_scale = require_number(j, "neighbor_scale", "malformed params");
        else if (key == "seed") {
            if (!value.is_number_integer() && !value.is_number_unsigned())
                throw Error("malformed params: field 'seed' must be an integer");
            params.seed = value.get<std::uint64_t>();
        } else {
            throw Error("malformed params: unknown field '" + key + "'");
        }
    }
    params.validate();
    return params;
}

}  // namespace skelgraph
