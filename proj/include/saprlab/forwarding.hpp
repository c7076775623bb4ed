#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "saprlab/graph.hpp"
#include "saprlab/path_set.hpp"

namespace saprlab {

enum class ForwardingMode { source_routing, next_hop };

// How the simulator asks "where does this packet go next". Source routing
// answers from the stored path of the packet's own (source, dest) pair;
// next-hop mode compiles the paths down to a per-node table keyed by
// destination only, the way a router FIB would.
class ForwardingPlan {
public:
    ForwardingMode mode() const { return mode_; }
    NodeId node_count() const { return n_; }

    NodeId next_node(NodeId source, NodeId dest, NodeId current) const;

    const PathSet& paths() const;
    NodeId table_entry(NodeId current, NodeId dest) const;

    friend ForwardingPlan build_plan(PathSet paths, ForwardingMode mode);

private:
    ForwardingPlan(ForwardingMode mode, NodeId n) : mode_(mode), n_(n) {}

    ForwardingMode mode_;
    NodeId n_;
    std::optional<PathSet> paths_;
    std::vector<NodeId> table_;  // next_hop mode: [current * n + dest]
};

// Compiles a complete PathSet into a plan. Throws DataError if any pair has
// no stored path.
ForwardingPlan build_plan(PathSet paths, ForwardingMode mode);

struct LoopReport {
    bool ok = true;
    std::vector<std::pair<NodeId, NodeId>> bad_pairs;  // (start, dest) that never arrive
};

// Exhaustively walks every (start, dest) pair through a next-hop table,
// checking each hop is a real edge and the walk arrives within n steps.
// Next-hop plans must pass this gate before they are allowed to drive
// traffic: destination-only tables built from per-source paths can disagree
// between sources and orbit forever.
LoopReport validate_loop_free(const ForwardingPlan& plan, const Graph& g);

// Dumps a next-hop table as CSV rows "current,dest,next".
void write_next_hop_csv(const ForwardingPlan& plan, std::ostream& out);

}  // namespace saprlab
