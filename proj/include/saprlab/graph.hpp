#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "saprlab/types.hpp"

namespace saprlab {

// Undirected simple graph in compressed adjacency form. Node ids are dense
// [0, n). Neighbor lists are sorted ascending, which also fixes the order in
// which routing sweeps visit edges.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Rejects out-of-range ids, self-loops and
    // duplicate edges: callers (generators, loaders) sanitize first.
    static Graph from_edges(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges);

    NodeId node_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {targets_.data() + offsets_[static_cast<std::size_t>(u)],
                targets_.data() + offsets_[static_cast<std::size_t>(u) + 1]};
    }

    NodeId degree(NodeId u) const {
        return static_cast<NodeId>(offsets_[static_cast<std::size_t>(u) + 1] -
                                   offsets_[static_cast<std::size_t>(u)]);
    }

    bool adjacent(NodeId u, NodeId v) const;

    NodeId max_degree() const;
    bool is_connected() const;

    // Every edge once, with u < v, in ascending order.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    NodeId n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> targets_;
};

// Barabasi-Albert network: an m0-clique seed, then each new node attaches to
// m distinct existing nodes drawn preferentially by degree. Deterministic for
// a given seed.
Graph generate_ba(NodeId n, NodeId m0, NodeId m, std::uint64_t seed);

// Reads a whitespace-separated edge list ("u v" per line, '#' comments,
// blank lines allowed). External ids may be arbitrary integers; they are
// relabeled densely in order of first appearance. Self-loops are dropped
// (the endpoint still counts as a node) and duplicate edges in either
// orientation collapse to one.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// Induced subgraph on the largest connected component, nodes relabeled
// densely in ascending order of their old ids. Ties between equal-sized
// components go to the one containing the smallest node id.
Graph largest_connected_component(const Graph& g);

// Writes a graph so that load_edge_list reads back an identical labeling:
// a header comment, then one line introducing each node in id order (an
// incident edge where possible, a placeholder self-loop for nodes with no
// earlier-introduced neighbor), then the remaining edges.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace saprlab
