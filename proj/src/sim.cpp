#include "saprlab/sim.hpp"

#include <algorithm>
#include <numeric>

#include "saprlab/errors.hpp"

namespace saprlab {

void SimConfig::validate() const {
    if (packets_per_step < 1) throw ParameterError("sim: packets_per_step must be >= 1");
    if (capacity < 1) throw ParameterError("sim: capacity must be >= 1");
    if (steps < 1) throw ParameterError("sim: steps must be >= 1");
    if (warmup < 0 || window < 1) throw ParameterError("sim: bad warmup/window");
    if (warmup + window > steps - 1)
        throw ParameterError("sim: steps must exceed warmup + window so at least one growth sample exists");
}

void SimState::inject(NodeId source, NodeId dest) {
    if (source == dest) throw ParameterError("inject: source and destination coincide");
    queues_[static_cast<std::size_t>(source)].push_back(
        {source, dest, now_, now_, next_id_++});
    ++generated_;
}

void step(SimState& st, const Graph& g, const ForwardingPlan& plan, const SimConfig& cfg, Rng& rng) {
    const NodeId n = st.node_count();
    const int t = st.now_;

    // Injection: uniform source, uniform destination among the other nodes.
    for (int i = 0; i < cfg.packets_per_step; ++i) {
        const NodeId src = rng.node_below(n);
        NodeId dst = rng.node_below(n - 1);
        if (dst >= src) ++dst;
        st.queues_[static_cast<std::size_t>(src)].push_back({src, dst, t, t, st.next_id_++});
        ++st.generated_;
    }

    // Service: nodes act in a fresh random order; each moves up to C packets
    // from its queue head. Packets enqueued this very step (just generated or
    // just hopped in) wait for the next step, so a hop takes a full step.
    if (st.order_.empty()) {
        st.order_.resize(static_cast<std::size_t>(n));
        std::iota(st.order_.begin(), st.order_.end(), 0);
    }
    rng.shuffle(st.order_);

    for (NodeId x : st.order_) {
        auto& q = st.queues_[static_cast<std::size_t>(x)];
        for (int served = 0; served < cfg.capacity; ++served) {
            if (q.empty() || q.front().enqueue_step >= t) break;
            Packet p = q.front();
            q.pop_front();
            const NodeId nxt = g.adjacent(x, p.dest) ? p.dest : plan.next_node(p.source, p.dest, x);
            if (nxt == p.dest) {
                ++st.delivered_;
                st.deliveries_.push_back({t, t - p.birth_step});
            } else {
                p.enqueue_step = t;
                st.queues_[static_cast<std::size_t>(nxt)].push_back(p);
            }
        }
    }
    ++st.now_;
}

double order_parameter(const std::vector<std::int64_t>& n_packets, const SimConfig& cfg) {
    cfg.validate();
    const std::size_t last = n_packets.size();
    if (static_cast<std::size_t>(cfg.warmup + cfg.window) >= last)
        throw ParameterError("order_parameter: series too short for warmup + window");

    // Window deltas telescope: the mean slope is set by the first and last
    // sampled counts.
    const std::size_t first_idx = static_cast<std::size_t>(cfg.warmup);
    const std::size_t spans = (last - 1 - first_idx) / static_cast<std::size_t>(cfg.window);
    const std::size_t last_idx = first_idx + spans * static_cast<std::size_t>(cfg.window);
    const double mean_slope =
        static_cast<double>(n_packets[last_idx] - n_packets[first_idx]) /
        static_cast<double>(spans * static_cast<std::size_t>(cfg.window));
    return mean_slope * static_cast<double>(cfg.capacity) / static_cast<double>(cfg.packets_per_step);
}

SimResult run(const Graph& g, const ForwardingPlan& plan, const SimConfig& cfg) {
    cfg.validate();
    const NodeId n = g.node_count();
    if (n < 2) throw ParameterError("sim: need at least two nodes");
    if (plan.node_count() != n) throw ParameterError("sim: plan and graph disagree on node count");

    SimState st(n);
    Rng rng(cfg.seed);
    SimResult res;
    res.n_packets.reserve(static_cast<std::size_t>(cfg.steps));
    for (int t = 0; t < cfg.steps; ++t) {
        step(st, g, plan, cfg, rng);
        res.n_packets.push_back(st.in_network());
    }

    res.eta_raw = order_parameter(res.n_packets, cfg);
    res.eta = std::max(0.0, res.eta_raw);
    res.generated = st.generated();
    res.delivered = st.delivered();

    std::int64_t sum = 0;
    for (const Delivery& d : st.deliveries()) {
        if (d.step >= cfg.warmup) {
            res.travel_times.push_back(d.travel_time);
            sum += d.travel_time;
        }
    }
    if (!res.travel_times.empty())
        res.avg_travel_time = static_cast<double>(sum) / static_cast<double>(res.travel_times.size());
    return res;
}

}  // namespace saprlab
