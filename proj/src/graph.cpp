#include "saprlab/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "saprlab/errors.hpp"
#include "saprlab/rng.hpp"

namespace saprlab {

Graph Graph::from_edges(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    if (n < 0) throw InternalError("graph size must be nonnegative");
    std::vector<std::pair<NodeId, NodeId>> norm;
    norm.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InternalError("edge endpoint out of range");
        if (a == b) throw InternalError("self-loop passed to Graph::from_edges");
        norm.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(norm.begin(), norm.end());
    if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
        throw InternalError("duplicate edge passed to Graph::from_edges");

    Graph g;
    g.n_ = n;
    g.edge_count_ = norm.size();
    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : norm) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (NodeId u = 0; u < n; ++u)
        g.offsets_[static_cast<std::size_t>(u) + 1] = g.offsets_[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(u)];
    g.targets_.resize(2 * norm.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [a, b] : norm) {
        g.targets_[fill[static_cast<std::size_t>(a)]++] = b;
        g.targets_[fill[static_cast<std::size_t>(b)]++] = a;
    }
    // Targets come out sorted because the normalized edges were sorted, but
    // only per the (a, b) sweep for the lower endpoint; sort each list to be
    // safe and to keep the neighbor-visit order well defined.
    for (NodeId u = 0; u < n; ++u) {
        auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(u)]);
        auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(u) + 1]);
        std::sort(first, last);
    }
    return g;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

NodeId Graph::max_degree() const {
    NodeId best = 0;
    for (NodeId u = 0; u < n_; ++u) best = std::max(best, degree(u));
    return best;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    NodeId reached = 1;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph generate_ba(NodeId n, NodeId m0, NodeId m, std::uint64_t seed) {
    if (m < 1) throw ParameterError("ba: m must be at least 1");
    if (m0 < m) throw ParameterError("ba: seed clique size m0 must be >= m");
    if (n < m0) throw ParameterError("ba: n must be >= m0");

    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(m0) * (m0 - 1) / 2 +
                  static_cast<std::size_t>(m) * static_cast<std::size_t>(n - m0));

    // Attachment pool: node id repeated once per unit of degree. Drawing a
    // uniform pool entry is a degree-proportional draw.
    std::vector<NodeId> pool;
    for (NodeId a = 0; a < m0; ++a)
        for (NodeId b = a + 1; b < m0; ++b) {
            edges.emplace_back(a, b);
            pool.push_back(a);
            pool.push_back(b);
        }

    std::vector<NodeId> chosen;
    for (NodeId v = m0; v < n; ++v) {
        chosen.clear();
        // The pool is frozen while v picks its m targets; collisions are
        // redrawn so the targets are distinct.
        while (static_cast<NodeId>(chosen.size()) < m) {
            NodeId u = pool.empty() ? rng.node_below(v)
                                    : pool[static_cast<std::size_t>(rng.below(pool.size()))];
            if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
        }
        for (NodeId u : chosen) {
            edges.emplace_back(u, v);
            pool.push_back(u);
            pool.push_back(v);
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

bool parse_node_token(const char* tok, long long* out) {
    char* end = nullptr;
    long long v = std::strtoll(tok, &end, 10);
    if (end == tok || *end != '\0') return false;
    *out = v;
    return true;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::unordered_map<long long, NodeId> label;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::string line;
    long lineno = 0;

    auto intern = [&](long long ext) {
        auto [it, fresh] = label.emplace(ext, static_cast<NodeId>(label.size()));
        (void)fresh;
        return it->second;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;

        // Exactly two integer tokens per data line.
        long long a = 0, b = 0;
        std::string tok[3];
        int ntok = 0;
        std::size_t i = pos;
        while (i < line.size() && ntok < 3) {
            std::size_t j = line.find_first_of(" \t\r", i);
            if (j == std::string::npos) j = line.size();
            tok[ntok++] = line.substr(i, j - i);
            i = line.find_first_not_of(" \t\r", j);
            if (i == std::string::npos) break;
        }
        if (ntok != 2 || !parse_node_token(tok[0].c_str(), &a) || !parse_node_token(tok[1].c_str(), &b))
            throw ParseError("malformed edge line: expected two integers", lineno);

        NodeId na = intern(a);
        NodeId nb = intern(b);
        if (na == nb) continue;  // self-loop: node registered, edge dropped
        edges.emplace_back(std::min(na, nb), std::max(na, nb));
    }

    if (label.empty()) throw DataError("edge list holds no nodes");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(static_cast<NodeId>(label.size()), edges);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list: " + path);
    return load_edge_list(in);
}

Graph largest_connected_component(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) throw ParameterError("largest_connected_component: empty graph");

    std::vector<NodeId> comp(static_cast<std::size_t>(n), kNoNode);
    NodeId ncomp = 0;
    std::vector<NodeId> stack;
    std::vector<std::size_t> size;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != kNoNode) continue;
        NodeId c = ncomp++;
        size.push_back(0);
        stack.assign(1, s);
        comp[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            ++size[static_cast<std::size_t>(c)];
            for (NodeId v : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(v)] == kNoNode) {
                    comp[static_cast<std::size_t>(v)] = c;
                    stack.push_back(v);
                }
            }
        }
    }

    // Largest component; ties resolved toward the component discovered first,
    // i.e. the one holding the smallest node id.
    NodeId best = 0;
    for (NodeId c = 1; c < ncomp; ++c)
        if (size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(best)]) best = c;

    std::vector<NodeId> dense(static_cast<std::size_t>(n), kNoNode);
    NodeId kept = 0;
    for (NodeId u = 0; u < n; ++u)
        if (comp[static_cast<std::size_t>(u)] == best) dense[static_cast<std::size_t>(u)] = kept++;

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& [a, b] : g.edges())
        if (comp[static_cast<std::size_t>(a)] == best)
            edges.emplace_back(dense[static_cast<std::size_t>(a)], dense[static_cast<std::size_t>(b)]);
    return Graph::from_edges(kept, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    const NodeId n = g.node_count();
    out << "# nodes " << n << " edges " << g.edge_count() << "\n";
    out << "# node ids appear in label order; lone 'u u' lines register isolated nodes\n";

    std::unordered_set<std::uint64_t> emitted;
    auto key = [n](NodeId a, NodeId b) {
        return static_cast<std::uint64_t>(std::min(a, b)) * static_cast<std::uint64_t>(n) +
               static_cast<std::uint64_t>(std::max(a, b));
    };

    std::vector<char> appeared(static_cast<std::size_t>(n), 0);
    for (NodeId u = 0; u < n; ++u) {
        if (appeared[static_cast<std::size_t>(u)]) continue;
        NodeId anchor = kNoNode;
        for (NodeId v : g.neighbors(u)) {
            if (appeared[static_cast<std::size_t>(v)]) {
                anchor = v;
                break;
            }
        }
        if (anchor != kNoNode) {
            out << anchor << " " << u << "\n";
            emitted.insert(key(anchor, u));
        } else if (u + 1 < n && g.adjacent(u, u + 1)) {
            out << u << " " << (u + 1) << "\n";
            appeared[static_cast<std::size_t>(u) + 1] = 1;
            emitted.insert(key(u, u + 1));
        } else {
            out << u << " " << u << "\n";
        }
        appeared[static_cast<std::size_t>(u)] = 1;
    }
    for (const auto& [a, b] : g.edges())
        if (!emitted.count(key(a, b))) out << a << " " << b << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write edge list: " + path);
    write_edge_list(g, out);
    if (!out.good()) throw DataError("write failed: " + path);
}

}  // namespace saprlab
