#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <utility>
#include <vector>

#include "saprlab/graph.hpp"
#include "saprlab/path_set.hpp"
#include "saprlab/rng.hpp"

namespace saprtest {

using namespace saprlab;

inline Graph path_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(n - 1, 0);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

// Node 0 in the middle, spokes 1..n-1.
inline Graph star_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 1; u < n; ++u) e.emplace_back(0, u);
    return Graph::from_edges(n, e);
}

// Hop distances from s by plain breadth-first search; the reference for
// anything that claims to find fewest-hop paths.
inline std::vector<int> bfs_hops(const Graph& g, NodeId s) {
    std::vector<int> hops(static_cast<std::size_t>(g.node_count()), -1);
    std::deque<NodeId> frontier{s};
    hops[static_cast<std::size_t>(s)] = 0;
    while (!frontier.empty()) {
        NodeId u = frontier.front();
        frontier.pop_front();
        for (NodeId v : g.neighbors(u)) {
            if (hops[static_cast<std::size_t>(v)] < 0) {
                hops[static_cast<std::size_t>(v)] = hops[static_cast<std::size_t>(u)] + 1;
                frontier.push_back(v);
            }
        }
    }
    return hops;
}

// Random spanning tree plus a sprinkle of extra edges; always connected,
// deterministic per seed.
inline Graph random_connected_graph(NodeId n, int extra_edges, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 1; v < n; ++v) edges.emplace_back(rng.node_below(v), v);

    auto has_edge = [&](NodeId a, NodeId b) {
        const auto e = std::make_pair(std::min(a, b), std::max(a, b));
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    };
    int added = 0, attempts = 0;
    while (added < extra_edges && attempts < extra_edges * 20) {
        ++attempts;
        const NodeId a = rng.node_below(n);
        const NodeId b = rng.node_below(n);
        if (a == b || has_edge(a, b)) continue;
        edges.emplace_back(std::min(a, b), std::max(a, b));
        ++added;
    }
    return Graph::from_edges(n, edges);
}

// Cheapest source->t cost over node weights (source free, every later node
// on the path charged), by exhaustive simple-path enumeration. Only for tiny
// graphs.
inline double brute_force_min_cost(const Graph& g, const std::vector<double>& w, NodeId s, NodeId t) {
    const NodeId n = g.node_count();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    double best = std::numeric_limits<double>::infinity();
    auto dfs = [&](auto&& self, NodeId u, double cost) -> void {
        if (u == t) {
            best = std::min(best, cost);
            return;
        }
        if (cost > best) return;
        used[static_cast<std::size_t>(u)] = 1;
        for (NodeId v : g.neighbors(u)) {
            if (!used[static_cast<std::size_t>(v)])
                self(self, v, cost + w[static_cast<std::size_t>(v)]);
        }
        used[static_cast<std::size_t>(u)] = 0;
    };
    dfs(dfs, s, 0.0);
    return best;
}

// Cost of the stored path under node weights: every node after the source.
inline double stored_path_cost(const PathSet& ps, const std::vector<double>& w, NodeId s, NodeId t) {
    double cost = 0.0;
    for (NodeId u : ps.path(s, t))
        if (u != s) cost += w[static_cast<std::size_t>(u)];
    return cost;
}

}  // namespace saprtest
