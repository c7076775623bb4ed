#include "saprlab/forwarding.hpp"

#include "saprlab/errors.hpp"

namespace saprlab {

NodeId ForwardingPlan::next_node(NodeId source, NodeId dest, NodeId current) const {
    if (mode_ == ForwardingMode::source_routing)
        return paths_->successor_toward(source, dest, current);
    if (current == dest) throw DataError("next_node: already at destination");
    const NodeId nxt = table_[static_cast<std::size_t>(current) * static_cast<std::size_t>(n_) +
                              static_cast<std::size_t>(dest)];
    if (nxt == kNoNode) throw DataError("next-hop table has no entry for this pair");
    return nxt;
}

const PathSet& ForwardingPlan::paths() const {
    if (!paths_) throw ParameterError("plan holds no path set (next-hop mode)");
    return *paths_;
}

NodeId ForwardingPlan::table_entry(NodeId current, NodeId dest) const {
    if (mode_ != ForwardingMode::next_hop) throw ParameterError("plan holds no table (source-routing mode)");
    return table_[static_cast<std::size_t>(current) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(dest)];
}

ForwardingPlan build_plan(PathSet paths, ForwardingMode mode) {
    const NodeId n = paths.node_count();
    if (!paths.complete()) throw DataError("cannot build a forwarding plan from an incomplete path set");

    ForwardingPlan plan(mode, n);
    if (mode == ForwardingMode::source_routing) {
        plan.paths_ = std::move(paths);
        return plan;
    }

    // Destination-keyed table: each node forwards toward d the way its own
    // stored path (source = current node) does.
    plan.table_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kNoNode);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId d = 0; d < n; ++d)
            if (v != d)
                plan.table_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(d)] = paths.successor_toward(v, d, v);
    return plan;
}

LoopReport validate_loop_free(const ForwardingPlan& plan, const Graph& g) {
    if (plan.mode() != ForwardingMode::next_hop)
        throw ParameterError("loop validation applies to next-hop plans");
    const NodeId n = plan.node_count();
    if (n != g.node_count()) throw ParameterError("plan and graph disagree on node count");

    LoopReport report;
    for (NodeId start = 0; start < n; ++start) {
        for (NodeId dest = 0; dest < n; ++dest) {
            if (start == dest) continue;
            NodeId at = start;
            bool arrived = false;
            for (NodeId hops = 0; hops < n; ++hops) {
                const NodeId nxt = plan.table_entry(at, dest);
                if (nxt == kNoNode || !g.adjacent(at, nxt)) break;
                at = nxt;
                if (at == dest) {
                    arrived = true;
                    break;
                }
            }
            if (!arrived) {
                report.ok = false;
                report.bad_pairs.emplace_back(start, dest);
            }
        }
    }
    return report;
}

void write_next_hop_csv(const ForwardingPlan& plan, std::ostream& out) {
    if (plan.mode() != ForwardingMode::next_hop)
        throw ParameterError("CSV dump applies to next-hop plans");
    const NodeId n = plan.node_count();
    out << "current,dest,next\n";
    for (NodeId v = 0; v < n; ++v)
        for (NodeId d = 0; d < n; ++d)
            if (v != d) out << v << ',' << d << ',' << plan.table_entry(v, d) << '\n';
}

}  // namespace saprlab
