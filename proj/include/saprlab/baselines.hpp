#pragma once

#include <cstdint>
#include <vector>

#include "saprlab/graph.hpp"
#include "saprlab/path_set.hpp"

namespace saprlab {

// Fixed per-node weights for the non-adaptive protocols. The weight of a
// node is the cost of routing through it; sources are free as usual.

// Shortest paths: every node costs one unit.
std::vector<double> spr_weights(const Graph& g);

// Efficient paths: node cost k^beta. Degree-zero nodes are rejected (their
// cost would be meaningless and they cannot route anything anyway).
std::vector<double> epr_weights(const Graph& g, double beta);

// Hybrid variant: linear cost k up to the crossover degree k_c, then the
// flattened k_c^eps * k^(1-eps). The two branches agree exactly at k = k_c.
std::vector<double> epr2_weights(const Graph& g, double k_c = 15.0, double eps = 0.3);

// One Dijkstra tree per source over fixed node weights, with exact cost ties
// settled by a fair coin per encounter, same as the adaptive sweeps.
PathSet dijkstra_static(const Graph& g, const std::vector<double>& weights, std::uint64_t seed);

struct OrOptions {
    int iterations = 2000;
    double step = 1.0;           // weight bump applied to the hottest node
    bool multiplicative = false; // false: w += step, true: w *= step
    std::uint64_t seed = 1;
};

struct OrRun {
    PathSet paths;                         // best (lowest b_max) routing seen
    std::vector<std::int64_t> best_b_max;  // best-so-far after each iteration, non-increasing
    std::int64_t b_max = 0;                // final best
};

// Load-flattening heuristic: repeatedly route over the current weights,
// find the node carrying the most paths, and make it more expensive. Keeps
// the best routing ever seen, so more iterations never hurt the result.
OrRun run_or(const Graph& g, const OrOptions& opt);

}  // namespace saprlab
