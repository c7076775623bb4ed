#include "saprlab/sapr.hpp"

#include <cmath>
#include <limits>
#include <queue>

#include "saprlab/errors.hpp"
#include "saprlab/metrics.hpp"

namespace saprlab {

double node_cost(std::int64_t n_paths, double alpha) {
    const double base = static_cast<double>(n_paths < 1 ? 1 : n_paths);
    return std::pow(base, alpha);
}

RoutingState::RoutingState(NodeId n, double alpha)
    : paths(n),
      alpha_(alpha),
      n_paths_(static_cast<std::size_t>(n), 0),
      cost_(static_cast<std::size_t>(n), 1.0) {
    if (n < 1) throw ParameterError("routing state needs at least one node");
    if (!(alpha >= 0.0)) throw ParameterError("alpha must be >= 0");
    pow_table_.assign(2, 1.0);  // counts 0 and 1 both cost 1
}

double RoutingState::power_of_count(std::int64_t c) {
    const std::size_t i = static_cast<std::size_t>(c < 1 ? 1 : c);
    if (i >= pow_table_.size()) {
        std::size_t old = pow_table_.size();
        pow_table_.resize(std::max(i + 1, old * 2));
        for (std::size_t k = old; k < pow_table_.size(); ++k)
            pow_table_[k] = std::pow(static_cast<double>(k), alpha_);
    }
    return pow_table_[i];
}

void RoutingState::bump(NodeId u, int delta) {
    auto& c = n_paths_[static_cast<std::size_t>(u)];
    c += delta;
    if (c < 0) throw InternalError("interior path count went negative");
    cost_[static_cast<std::size_t>(u)] = power_of_count(c);
}

namespace {

template <int Delta>
void walk_chain(RoutingState& st, NodeId source, NodeId tail) {
    NodeId r = tail;
    int hops = 0;
    const NodeId n = st.node_count();
    while (r != source) {
        if (r == kNoNode || ++hops > n)
            throw InternalError("antecedent chain does not reach the source");
        st.bump(r, Delta);
        r = st.paths.predecessor(source, r);
    }
}

}  // namespace

void increment_path(RoutingState& st, NodeId source, NodeId tail) { walk_chain<+1>(st, source, tail); }
void decrement_path(RoutingState& st, NodeId source, NodeId tail) { walk_chain<-1>(st, source, tail); }

RelaxOutcome relax_neighbor(RoutingState& st, std::vector<double>& dist, NodeId source,
                            NodeId u, NodeId v, Rng& rng) {
    const double du = dist[static_cast<std::size_t>(u)];
    if (du < 0.0) throw InternalError("negative tentative distance");
    const double offer = du + st.cost(v);
    const double held = dist[static_cast<std::size_t>(v)];

    if (held < offer) return RelaxOutcome::kept;

    const bool tie = (held == offer);
    if (tie && !rng.coin()) return RelaxOutcome::tie_kept;

    const NodeId old_tail = st.paths.predecessor(source, v);
    if (old_tail != kNoNode) decrement_path(st, source, old_tail);
    dist[static_cast<std::size_t>(v)] = offer;
    st.paths.set_predecessor(source, v, u);
    increment_path(st, source, u);
    return tie ? RelaxOutcome::tie_replaced : RelaxOutcome::replaced;
}

void build_source_tree(RoutingState& st, const Graph& g, NodeId source, Rng& rng) {
    const NodeId n = g.node_count();
    std::vector<double> dist(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    std::vector<char> finalized(static_cast<std::size_t>(n), 0);

    using Entry = std::pair<double, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    dist[static_cast<std::size_t>(source)] = 0.0;
    heap.emplace(0.0, source);
    NodeId done = 0;

    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (finalized[static_cast<std::size_t>(u)]) continue;
        finalized[static_cast<std::size_t>(u)] = 1;
        ++done;
        for (NodeId v : g.neighbors(u)) {
            // A finalized neighbor's path is settled; re-relaxing it would let
            // antecedent chains drift away from the booked counts.
            if (v == source || finalized[static_cast<std::size_t>(v)]) continue;
            RelaxOutcome out = relax_neighbor(st, dist, source, u, v, rng);
            if (out == RelaxOutcome::replaced || out == RelaxOutcome::tie_replaced)
                heap.emplace(dist[static_cast<std::size_t>(v)], v);
        }
    }
    if (done < n)
        throw DataError("graph is disconnected: " + std::to_string(n - done) +
                        " nodes unreachable from node " + std::to_string(source));
}

void remove_source_tree(RoutingState& st, NodeId source) {
    const NodeId n = st.node_count();
    for (NodeId t = 0; t < n; ++t) {
        if (t == source) continue;
        const NodeId tail = st.paths.predecessor(source, t);
        if (tail == kNoNode) throw InternalError("removing an incomplete source tree");
        decrement_path(st, source, tail);
    }
    st.paths.clear_source(source);
}

SaprRun run_sapr(const Graph& g, const SaprOptions& opt, const IterationObserver& observer) {
    if (opt.max_iterations < 1) throw ParameterError("max_iterations must be >= 1");
    if (!(opt.tolerance > 0.0)) throw ParameterError("tolerance must be positive");
    const NodeId n = g.node_count();

    SaprRun run{RoutingState(n, opt.alpha), {}, false};
    Rng rng(opt.seed);

    for (int iter = 1; iter <= opt.max_iterations; ++iter) {
        for (NodeId s = 0; s < n; ++s) {
            if (iter > 1) remove_source_tree(run.state, s);
            build_source_tree(run.state, g, s, rng);
        }
        const double len = average_path_length(run.state.paths);
        run.avg_path_length.push_back(len);
        if (observer) observer(run.state, iter);
        if (iter > 1) {
            const double prev = run.avg_path_length[static_cast<std::size_t>(iter) - 2];
            const double rel = (len > 0.0) ? std::abs(len - prev) / len : 0.0;
            if (rel < opt.tolerance) {
                run.converged = true;
                break;
            }
        }
    }
    return run;
}

}  // namespace saprlab
