#include "saprlab/baselines.hpp"

#include <cmath>
#include <limits>
#include <queue>

#include "saprlab/errors.hpp"
#include "saprlab/metrics.hpp"
#include "saprlab/rng.hpp"

namespace saprlab {

std::vector<double> spr_weights(const Graph& g) {
    return std::vector<double>(static_cast<std::size_t>(g.node_count()), 1.0);
}

std::vector<double> epr_weights(const Graph& g, double beta) {
    std::vector<double> w(static_cast<std::size_t>(g.node_count()));
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const NodeId k = g.degree(u);
        if (k == 0) throw DataError("epr weights: node " + std::to_string(u) + " is isolated");
        // Exact integer weights for the common exponents, so cost ties are
        // bit-for-bit reproducible.
        double wu;
        if (beta == 0.0)
            wu = 1.0;
        else if (beta == 1.0)
            wu = static_cast<double>(k);
        else
            wu = std::pow(static_cast<double>(k), beta);
        w[static_cast<std::size_t>(u)] = wu;
    }
    return w;
}

std::vector<double> epr2_weights(const Graph& g, double k_c, double eps) {
    if (!(k_c >= 1.0)) throw ParameterError("epr2 weights: k_c must be >= 1");
    if (!(eps >= 0.0 && eps <= 1.0)) throw ParameterError("epr2 weights: eps must lie in [0, 1]");
    std::vector<double> w(static_cast<std::size_t>(g.node_count()));
    const double flatten = std::pow(k_c, eps);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const NodeId k = g.degree(u);
        if (k == 0) throw DataError("epr2 weights: node " + std::to_string(u) + " is isolated");
        const double kd = static_cast<double>(k);
        w[static_cast<std::size_t>(u)] = (kd <= k_c) ? kd : flatten * std::pow(kd, 1.0 - eps);
    }
    return w;
}

PathSet dijkstra_static(const Graph& g, const std::vector<double>& weights, std::uint64_t seed) {
    const NodeId n = g.node_count();
    if (static_cast<NodeId>(weights.size()) != n)
        throw ParameterError("dijkstra_static: weight vector size mismatch");
    for (double w : weights)
        if (!(w > 0.0)) throw ParameterError("dijkstra_static: weights must be positive");

    PathSet ps(n);
    Rng rng(seed);
    std::vector<double> dist(static_cast<std::size_t>(n));
    std::vector<char> finalized(static_cast<std::size_t>(n));
    using Entry = std::pair<double, NodeId>;

    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        std::fill(finalized.begin(), finalized.end(), 0);
        std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
        dist[static_cast<std::size_t>(s)] = 0.0;
        heap.emplace(0.0, s);
        NodeId done = 0;

        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (finalized[static_cast<std::size_t>(u)]) continue;
            finalized[static_cast<std::size_t>(u)] = 1;
            ++done;
            for (NodeId v : g.neighbors(u)) {
                if (v == s || finalized[static_cast<std::size_t>(v)]) continue;
                const double offer = d + weights[static_cast<std::size_t>(v)];
                const double held = dist[static_cast<std::size_t>(v)];
                if (held < offer) continue;
                if (held == offer && !rng.coin()) continue;
                dist[static_cast<std::size_t>(v)] = offer;
                ps.set_predecessor(s, v, u);
                heap.emplace(offer, v);
            }
        }
        if (done < n)
            throw DataError("graph is disconnected: " + std::to_string(n - done) +
                            " nodes unreachable from node " + std::to_string(s));
    }
    return ps;
}

OrRun run_or(const Graph& g, const OrOptions& opt) {
    if (opt.iterations < 1) throw ParameterError("or: iterations must be >= 1");
    if (opt.multiplicative ? !(opt.step > 1.0) : !(opt.step > 0.0))
        throw ParameterError("or: step must be > 0 (additive) or > 1 (multiplicative)");

    const NodeId n = g.node_count();
    std::vector<double> weights(static_cast<std::size_t>(n), 1.0);

    OrRun best{PathSet(n), {}, std::numeric_limits<std::int64_t>::max()};
    best.best_b_max.reserve(static_cast<std::size_t>(opt.iterations));

    for (int it = 0; it < opt.iterations; ++it) {
        PathSet ps = dijkstra_static(g, weights, Rng::derive(opt.seed, static_cast<std::uint64_t>(it)));
        const auto counts = interior_counts(ps);

        std::int64_t b_max = 0;
        NodeId hottest = 0;
        for (NodeId u = 0; u < n; ++u) {
            if (counts[static_cast<std::size_t>(u)] > b_max) {
                b_max = counts[static_cast<std::size_t>(u)];
                hottest = u;  // ties keep the lowest id
            }
        }

        if (b_max < best.b_max) {
            best.b_max = b_max;
            best.paths = std::move(ps);
        }
        best.best_b_max.push_back(best.b_max);

        if (opt.multiplicative)
            weights[static_cast<std::size_t>(hottest)] *= opt.step;
        else
            weights[static_cast<std::size_t>(hottest)] += opt.step;
    }
    return best;
}

}  // namespace saprlab
