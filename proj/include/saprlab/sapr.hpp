#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "saprlab/graph.hpp"
#include "saprlab/path_set.hpp"
#include "saprlab/rng.hpp"

namespace saprlab {

// Cost charged for routing through a node that currently lies on n_paths
// stored paths (as an interior hop). Zero counts still cost one unit.
double node_cost(std::int64_t n_paths, double alpha);

// Mutable routing state shared by the sweeps: per-node interior path counts,
// the matching node costs (memoized powers), and the stored paths. Row s of
// `paths` is the live antecedent map while source s is being swept.
class RoutingState {
public:
    RoutingState(NodeId n, double alpha);

    NodeId node_count() const { return paths.node_count(); }
    double alpha() const { return alpha_; }
    double cost(NodeId u) const { return cost_[static_cast<std::size_t>(u)]; }
    std::int64_t count(NodeId u) const { return n_paths_[static_cast<std::size_t>(u)]; }
    const std::vector<std::int64_t>& counts() const { return n_paths_; }

    // Adjusts one node's interior count and refreshes its cached cost.
    void bump(NodeId u, int delta);

    PathSet paths;

private:
    double power_of_count(std::int64_t c);

    double alpha_;
    std::vector<std::int64_t> n_paths_;
    std::vector<double> cost_;
    std::vector<double> pow_table_;  // pow_table_[c] = max(c, 1)^alpha, grown on demand
};

// Walks the antecedent chain of source s from `tail` back to (but excluding)
// s, adding +1/-1 to each visited node's count. `tail` itself is included;
// passing tail == s touches nothing. Used when a tentative path through tail
// is adopted or abandoned.
void increment_path(RoutingState& st, NodeId source, NodeId tail);
void decrement_path(RoutingState& st, NodeId source, NodeId tail);

enum class RelaxOutcome { kept, replaced, tie_kept, tie_replaced };

// One relaxation of edge (u, v) during the sweep for `source`, with u newly
// finalized. Compares the tentative distance d(v) against d(u) + cost(v):
// worse offers are dropped, better ones replace the stored path (counts
// rebooked along both antecedent chains), and exact ties are settled by a
// fair coin.
RelaxOutcome relax_neighbor(RoutingState& st, std::vector<double>& dist, NodeId source,
                            NodeId u, NodeId v, Rng& rng);

// Dijkstra sweep from one source over live node costs: costs move mid-sweep
// as other nodes' counts change, so later relaxations see the updated
// landscape. Leaves row `source` of st.paths holding a full shortest-path
// tree and every interior count adjusted. Throws DataError if some node is
// unreachable.
void build_source_tree(RoutingState& st, const Graph& g, NodeId source, Rng& rng);

// Subtracts the stored tree of `source` from the counts and clears its row;
// the inverse of build_source_tree's bookkeeping, used between iterations.
void remove_source_tree(RoutingState& st, NodeId source);

struct SaprOptions {
    double alpha = 1.0;
    int max_iterations = 50;
    double tolerance = 1e-3;  // relative change of mean path length
    std::uint64_t seed = 1;
};

struct SaprRun {
    RoutingState state;
    std::vector<double> avg_path_length;  // one entry per completed iteration
    bool converged = false;

    int iterations() const { return static_cast<int>(avg_path_length.size()); }
};

using IterationObserver = std::function<void(const RoutingState&, int iteration)>;

// Full self-avoiding-paths build: iterate sweeps over all sources (ascending)
// until the mean path length moves by less than `tolerance` relatively, or
// the iteration budget runs out. From the second iteration on, each source's
// previous tree is withdrawn from the counts just before that source is
// reswept, so the rest of the network keeps pressing on the sweep.
SaprRun run_sapr(const Graph& g, const SaprOptions& opt, const IterationObserver& observer = {});

}  // namespace saprlab
