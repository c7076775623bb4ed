#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "saprlab/forwarding.hpp"
#include "saprlab/graph.hpp"
#include "saprlab/path_set.hpp"
#include "saprlab/sim.hpp"

namespace saprlab {

// Mean hop count over all ordered pairs of a complete path set.
double average_path_length(const PathSet& ps);

// Interior visit count per node, recomputed from scratch by walking every
// stored path; endpoints do not count toward their own paths. This is the
// slow, independent mirror of the counts the routing sweeps maintain
// incrementally.
std::vector<std::int64_t> interior_counts(const PathSet& ps);

struct DegreeLoad {
    NodeId node;
    NodeId degree;
    std::int64_t n_paths;
};

// Per-node (degree, interior path count), sorted by descending count then
// ascending node id.
std::vector<DegreeLoad> betweenness_profile(const PathSet& ps, const Graph& g);

struct AnalyticThreshold {
    std::int64_t b_max = 0;       // heaviest interior load in the path set
    double gamma_c = 0.0;         // (N-1)/b_max, per-node critical generation rate
    double implied_rc = 0.0;      // N * gamma_c, network-wide rate
    bool unbounded = false;       // no interior load at all (e.g. complete graph)
};

AnalyticThreshold analytic_gamma_c(const PathSet& ps);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least-squares fit of mean path length against ln N; input pairs are
// (N, avg_path_length).
FitResult small_world_fit(const std::vector<std::pair<double, double>>& n_vs_len);

struct RcSample {
    int r;
    double eta;
    double avg_travel_time;
};

struct RcEstimate {
    int r_c = 0;
    double eta_threshold = 0.0;
    std::vector<RcSample> curve;  // every sampled injection rate, ascending
};

// Raised when even the largest allowed injection rate stays uncongested; the
// sampled curve rides along for reporting (CLI exit code 3).
class RangeExhaustedError : public DataError {
public:
    RangeExhaustedError(const std::string& what, std::vector<RcSample> curve)
        : DataError(what), curve_(std::move(curve)) {}

    const std::vector<RcSample>& curve() const { return curve_; }

private:
    std::vector<RcSample> curve_;
};

struct RcOptions {
    int r_min = 1;
    int r_max = 200;
    double eta_threshold = 0.01;
    int averaging_seeds = 3;  // sim seeds averaged per sampled rate
    int jobs = 1;
};

// Mean order parameter and travel time at one injection rate, averaged over
// opt.averaging_seeds simulation seeds derived from sim_cfg.seed.
RcSample measure_rate(const Graph& g, const ForwardingPlan& plan, const SimConfig& sim_cfg,
                      const RcOptions& opt, int r);

// Smallest integer injection rate whose mean order parameter reaches the
// threshold: bisection over [r_min, r_max] plus a +-2 confirming scan around
// the crossing. The sim config supplies steps/warmup/window/capacity and the
// base seed the averaging seeds derive from.
RcEstimate estimate_rc(const Graph& g, const ForwardingPlan& plan, const SimConfig& sim_cfg,
                       const RcOptions& opt);

}  // namespace saprlab
