#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "saprlab/errors.hpp"
#include "saprlab/types.hpp"

namespace saprlab {

// One routing path per ordered (source, dest) pair, stored as a predecessor
// matrix: pred(s, v) is the node before v on the path s -> v, pred(s, s) = s,
// kNoNode where no path is stored. Row s is exactly the antecedent map the
// routing sweeps maintain, so path updates are O(1) pointer swings and full
// paths are recovered by walking back to the source.
class PathSet {
public:
    explicit PathSet(NodeId n) : n_(n), pred_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kNoNode) {
        for (NodeId s = 0; s < n; ++s) pred_[idx(s, s)] = s;
    }

    NodeId node_count() const { return n_; }

    NodeId predecessor(NodeId s, NodeId v) const { return pred_[idx(s, v)]; }
    void set_predecessor(NodeId s, NodeId v, NodeId u) { pred_[idx(s, v)] = u; }

    // Resets row s to "no paths stored" (pred(s, s) stays s).
    void clear_source(NodeId s) {
        for (NodeId v = 0; v < n_; ++v) pred_[idx(s, v)] = (v == s) ? s : kNoNode;
    }

    bool has_path(NodeId s, NodeId t) const { return pred_[idx(s, t)] != kNoNode; }
    bool complete() const;

    // Node sequence s, ..., t. Throws InternalError on a broken or cyclic
    // predecessor chain.
    std::vector<NodeId> path(NodeId s, NodeId t) const;

    int hop_length(NodeId s, NodeId t) const;

    // The node following `current` on the stored path s -> t. Throws
    // DataError if the pair has no path or `current` does not lie on it.
    NodeId successor_toward(NodeId s, NodeId t, NodeId current) const;

    void write_archive(std::ostream& out) const;
    static PathSet read_archive(std::istream& in);
    void write_archive_file(const std::string& path) const;
    static PathSet read_archive_file(const std::string& path);

private:
    std::size_t idx(NodeId s, NodeId v) const {
        return static_cast<std::size_t>(s) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    NodeId n_;
    std::vector<NodeId> pred_;
};

}  // namespace saprlab
