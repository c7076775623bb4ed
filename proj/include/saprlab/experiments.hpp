#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "saprlab/baselines.hpp"
#include "saprlab/config.hpp"
#include "saprlab/forwarding.hpp"
#include "saprlab/graph.hpp"
#include "saprlab/path_set.hpp"
#include "saprlab/sapr.hpp"

namespace saprlab {

Graph build_network(const NetworkSpec& spec);

struct RouteBuild {
    PathSet paths;
    // sapr: mean path length after each iteration; static protocols get the
    // single final value.
    std::vector<double> avg_path_length;
    // or: best-so-far heaviest load after each iteration.
    std::vector<std::int64_t> b_max_series;
    bool converged = true;
};

RouteBuild build_routes(const Graph& g, const RoutingSpec& spec);

ForwardingMode parse_mode(const std::string& mode);

// Named figure bundles: each runs a full experiment at full-scale defaults,
// honoring size/budget overrides from the config, and drops CSVs under
// out_dir. Returns the files written.
std::vector<std::string> reproduce(const std::string& figure, const ExperimentConfig& cfg);

const std::vector<std::string>& figure_names();

}  // namespace saprlab
