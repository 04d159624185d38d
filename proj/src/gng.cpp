#include "skelgraph/gng.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "skelgraph/random.hpp"

namespace skelgraph {

void GngParams::validate() const {
    if (!(lambda0 > 0.0 && lambda0 <= 1.0))
        throw Error("lambda0 must lie in (0, 1], got " + std::to_string(lambda0));
    if (max_steps < 0) throw Error("T must be non-negative");
    if (max_nodes < 2) throw Error("n_max must be at least 2");
    if (max_edge_age < 1) throw Error("a_max must be at least 1");
    if (!(error0 >= 0.0)) throw Error("error0 must be non-negative");
    if (insert_interval < 1) throw Error("insert_interval must be at least 1");
    if (reset_interval < 1) throw Error("reset_interval must be at least 1");
    if (!(neighbor_scale >= 0.0 && neighbor_scale <= 1.0))
        throw Error("neighbor_scale must lie in [0, 1], got " + std::to_string(neighbor_scale));
}

namespace {

std::pair<int, int> edge_key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

bool GngState::has_edge(int a, int b) const { return edges.contains(edge_key(a, b)); }

std::vector<int> GngState::neighbors(int id) const {
    std::vector<int> out;
    for (const auto& [key, age] : edges) {
        if (key.first == id) out.push_back(key.second);
        else if (key.second == id) out.push_back(key.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double learning_rate(std::int64_t t, const GngParams& params) {
    if (params.max_steps == 0) return params.lambda0;  // degenerate schedule, never consumed
    return params.lambda0 *
           (1.0 - static_cast<double>(t) / static_cast<double>(params.max_steps));
}

GngState gng_init(const GngParams& params, int width, int height) {
    if (width < 1 || height < 1) throw Error("image dimensions must be at least 1x1");
    GngState state;
    state.width = width;
    state.height = height;
    std::mt19937_64 engine(derive_seed(params.seed, kStreamInit));
    for (int i = 0; i < 2; ++i) {
        GngNode node;
        node.w.x = uniform_unit(engine) * width;
        node.w.y = uniform_unit(engine) * height;
        state.nodes.emplace(state.next_id++, node);
    }
    state.edges.emplace(edge_key(0, 1), 0);
    return state;
}

std::pair<int, int> nearest_two(const GngState& state, Vec2 x) {
    if (state.nodes.size() < 2) throw Error("nearest_two requires at least two nodes");
    int best = -1, second = -1;
    double best_d = std::numeric_limits<double>::infinity();
    double second_d = std::numeric_limits<double>::infinity();
    // ascending id order, strict improvement: ties resolve to the lowest id
    for (const auto& [id, node] : state.nodes) {
        const double d = squared_distance(node.w, x);
        if (d < best_d) {
            second = best;
            second_d = best_d;
            best = id;
            best_d = d;
        } else if (d < second_d) {
            second = id;
            second_d = d;
        }
    }
    return {best, second};
}

void train_step(GngState& state, Vec2 x, const GngParams& params) {
    assert(x.x >= 0 && x.x < state.width && x.y >= 0 && x.y < state.height);
    const auto [winner, runner_up] = nearest_two(state, x);

    for (auto& [key, age] : state.edges)
        if (key.first == winner || key.second == winner) ++age;

    GngNode& w = state.nodes.at(winner);
    w.error += squared_distance(w.w, x);

    const double rate = learning_rate(state.step, params);
    w.w = w.w + rate * (x - w.w);
    for (int n : state.neighbors(winner)) {
        GngNode& node = state.nodes.at(n);
        node.w = node.w + params.neighbor_scale * rate * (x - node.w);
    }

    state.edges[edge_key(winner, runner_up)] = 0;

    // only endpoints of a removed edge can end up isolated
    std::vector<int> touched;
    for (auto it = state.edges.begin(); it != state.edges.end();) {
        if (it->second > params.max_edge_age) {
            touched.push_back(it->first.first);
            touched.push_back(it->first.second);
            it = state.edges.erase(it);
        } else {
            ++it;
        }
    }
    for (int id : touched) {
        if (!state.nodes.contains(id)) continue;
        bool connected = false;
        for (const auto& [key, age] : state.edges)
            if (key.first == id || key.second == id) {
                connected = true;
                break;
            }
        if (!connected) state.nodes.erase(id);
    }

    ++state.step;
}

void maybe_insert(GngState& state, const GngParams& params) {
    if (static_cast<int>(state.nodes.size()) >= params.max_nodes) return;

    int worst = -1;
    double worst_error = -1.0;
    for (const auto& [id, node] : state.nodes) {
        if (node.error > worst_error) {
            worst_error = node.error;
            worst = id;
        }
    }
    if (!(worst_error > params.error0)) return;  // strictly more than error0

    const std::vector<int> around = state.neighbors(worst);
    assert(!around.empty());
    const Vec2 anchor = state.nodes.at(worst).w;
    int farthest = -1;
    double farthest_d = -1.0;
    for (int n : around) {
        const double d = squared_distance(anchor, state.nodes.at(n).w);
        if (d > farthest_d) {
            farthest_d = d;
            farthest = n;
        }
    }

    GngNode inserted;
    inserted.w = 0.5 * (anchor + state.nodes.at(farthest).w);
    const int id = state.next_id++;
    state.nodes.emplace(id, inserted);
    state.edges.erase(edge_key(worst, farthest));
    state.edges.emplace(edge_key(worst, id), 0);
    state.edges.emplace(edge_key(id, farthest), 0);
}

void reset_errors(GngState& state) {
    for (auto& [id, node] : state.nodes) node.error = 0.0;
}

SkeletonGraph to_skeleton_graph(const GngState& state) {
    SkeletonGraph graph;
    graph.width = state.width;
    graph.height = state.height;
    for (const auto& [id, node] : state.nodes) graph.nodes.push_back({id, node.w.x, node.w.y});
    for (const auto& [key, age] : state.edges) graph.edges.push_back(key);
    graph.normalize();
    return graph;
}

SkeletonGraph gng_train(PixelSampler& sampler, int width, int height, const GngParams& params,
                        const TrainObserver& observer, std::int64_t observe_every) {
    params.validate();
    GngState state = gng_init(params, width, height);
    if (observer) observer(state);
    for (std::int64_t step = 1; step <= params.max_steps; ++step) {
        train_step(state, sampler.draw(), params);
        if (step % params.insert_interval == 0) maybe_insert(state, params);
        if (step % params.reset_interval == 0) reset_errors(state);
        if (observer && ((observe_every > 0 && step % observe_every == 0) || step == params.max_steps))
            observer(state);
    }
    return to_skeleton_graph(state);
}

SkeletonGraph gng_train(const BinaryImage& image, const GngParams& params,
                        const TrainObserver& observer, std::int64_t observe_every) {
    PixelSampler sampler(image, std::mt19937_64(derive_seed(params.seed, kStreamSampler)));
    return gng_train(sampler, image.width(), image.height(), params, observer, observe_every);
}

SkeletonGraph gng_train(const GrayImage& image, Polarity polarity, const GngParams& params,
                        const TrainObserver& observer, std::int64_t observe_every) {
    PixelSampler sampler(image, polarity, std::mt19937_64(derive_seed(params.seed, kStreamSampler)));
    return gng_train(sampler, image.width(), image.height(), params, observer, observe_every);
}

}  // namespace skelgraph
