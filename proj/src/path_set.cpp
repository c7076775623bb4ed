#include "saprlab/path_set.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace saprlab {

bool PathSet::complete() const {
    return std::find(pred_.begin(), pred_.end(), kNoNode) == pred_.end();
}

std::vector<NodeId> PathSet::path(NodeId s, NodeId t) const {
    std::vector<NodeId> rev;
    NodeId r = t;
    while (r != s) {
        rev.push_back(r);
        r = pred_[idx(s, r)];
        if (r == kNoNode) throw InternalError("predecessor chain broken");
        if (static_cast<NodeId>(rev.size()) > n_) throw InternalError("predecessor chain cyclic");
    }
    rev.push_back(s);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

int PathSet::hop_length(NodeId s, NodeId t) const {
    int hops = 0;
    NodeId r = t;
    while (r != s) {
        r = pred_[idx(s, r)];
        if (r == kNoNode) throw InternalError("predecessor chain broken");
        if (++hops > n_) throw InternalError("predecessor chain cyclic");
    }
    return hops;
}

NodeId PathSet::successor_toward(NodeId s, NodeId t, NodeId current) const {
    if (current == t) throw DataError("successor_toward: already at destination");
    if (!has_path(s, t)) throw DataError("no stored path for requested pair");
    NodeId r = t;
    NodeId after = kNoNode;
    int hops = 0;
    while (r != current) {
        after = r;
        r = pred_[idx(s, r)];
        if (r == kNoNode || ++hops > n_)
            throw DataError("node is not on the stored path for this pair");
    }
    return after;
}

void PathSet::write_archive(std::ostream& out) const {
    out << "pathset v1 " << n_ << "\n";
    for (NodeId s = 0; s < n_; ++s) {
        for (NodeId v = 0; v < n_; ++v) {
            if (v) out << ' ';
            out << pred_[idx(s, v)];
        }
        out << "\n";
    }
}

PathSet PathSet::read_archive(std::istream& in) {
    std::string magic, version;
    long long n = 0;
    if (!(in >> magic >> version >> n) || magic != "pathset" || version != "v1")
        throw DataError("not a pathset archive");
    if (n < 0 || n > 100000) throw DataError("pathset archive: implausible node count");

    PathSet ps(static_cast<NodeId>(n));
    for (NodeId s = 0; s < ps.n_; ++s) {
        for (NodeId v = 0; v < ps.n_; ++v) {
            long long p = 0;
            if (!(in >> p)) throw DataError("pathset archive truncated");
            if (p < -1 || p >= n) throw DataError("pathset archive: predecessor out of range");
            if (v == s && p != s) throw DataError("pathset archive: diagonal must be the source");
            ps.pred_[ps.idx(s, v)] = static_cast<NodeId>(p);
        }
    }
    long long extra;
    if (in >> extra) throw DataError("pathset archive: trailing data");
    return ps;
}

void PathSet::write_archive_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write pathset archive: " + path);
    write_archive(out);
    if (!out.good()) throw DataError("write failed: " + path);
}

PathSet PathSet::read_archive_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open pathset archive: " + path);
    return read_archive(in);
}

}  // namespace saprlab
