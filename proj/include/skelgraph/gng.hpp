#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "skelgraph/geometry.hpp"
#include "skelgraph/graph.hpp"
#include "skelgraph/image.hpp"

namespace skelgraph {

/// Growing-neural-gas tunables. JSON field names: lambda0, T, n_max, a_max,
/// error0, insert_interval, reset_interval, neighbor_scale, seed.
struct GngParams {
    double lambda0 = 0.2;               // initial learning coefficient
    std::int64_t max_steps = 80000;     // T, the final training step
    int max_nodes = 40;                 // N_max
    int max_edge_age = 28;              // a_max
    double error0 = 10.0;               // accumulated-error insertion threshold
    std::int64_t insert_interval = 100; // signals between insertion attempts
    std::int64_t reset_interval = 100;  // signals between error resets
    double neighbor_scale = 1.0;        // multiplier on lambda(t) for neighbors
    std::uint64_t seed = 0;

    bool operator==(const GngParams&) const = default;

    /// Throws Error on out-of-range values. max_steps == 0 is accepted and
    /// trains nothing.
    void validate() const;
};

struct GngNode {
    Vec2 w;               // reference vector (position over the image)
    double error = 0.0;   // accumulated squared winner distance
};

/// Full network state during training. Plain data so tests can stage
/// arbitrary configurations.
struct GngState {
    int width = 0;
    int height = 0;
    std::map<int, GngNode> nodes;
    std::map<std::pair<int, int>, int> edges;  // (a, b) with a < b -> age
    std::int64_t step = 0;                     // t, number of signals consumed
    int next_id = 0;

    bool has_edge(int a, int b) const;
    /// Neighbor ids of `id` in ascending order.
    std::vector<int> neighbors(int id) const;
};

/// lambda(t) = lambda0 * (1 - t / T). Linear decay, exactly 0 at t = T.
double learning_rate(std::int64_t t, const GngParams& params);

/// Two nodes at independent uniform-random positions in [0, W) x [0, H),
/// connected by one edge of age 0. Deterministic given params.seed.
GngState gng_init(const GngParams& params, int width, int height);

/// Winner and second-nearest node ids for input x; Euclidean metric, ties
/// broken toward the lower id. Requires at least two nodes.
std::pair<int, int> nearest_two(const GngState& state, Vec2 x);

/// One adaptation step: age edges at the winner, accumulate its error, move
/// winner and its neighbors toward x, refresh or create the winner/runner-up
/// edge, prune over-age edges and nodes they isolate, advance t.
void train_step(GngState& state, Vec2 x, const GngParams& params);

/// Insertion attempt: if below the node cap and the maximum accumulated
/// error exceeds error0, split the longest edge at the worst node's farthest
/// neighbor by a midpoint node.
void maybe_insert(GngState& state, const GngParams& params);

/// Zero every node's accumulated error.
void reset_errors(GngState& state);

/// Node/edge structure of the state (edge ages dropped), in canonical order.
SkeletonGraph to_skeleton_graph(const GngState& state);

/// Called with the state at observation points during training; t is
/// state.step. Observations happen between steps, so pruning has already run.
using TrainObserver = std::function<void(const GngState&)>;

/// Full training loop: init, then for each of params.max_steps signals draw
/// a pixel, adapt, and run the periodic insertion / error-reset schedules.
/// The observer (when given) fires after init and every observe_every steps,
/// and always at the final step.
SkeletonGraph gng_train(PixelSampler& sampler, int width, int height, const GngParams& params,
                        const TrainObserver& observer = nullptr, std::int64_t observe_every = 0);

/// Convenience overloads owning the sampler; these derive the sampler seed
/// from params.seed. Throw if the image has no sampleable pixel.
SkeletonGraph gng_train(const BinaryImage& image, const GngParams& params,
                        const TrainObserver& observer = nullptr, std::int64_t observe_every = 0);
SkeletonGraph gng_train(const GrayImage& image, Polarity polarity, const GngParams& params,
                        const TrainObserver& observer = nullptr, std::int64_t observe_every = 0);

}  // namespace skelgraph
