#include "saprlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "saprlab/errors.hpp"
#include "saprlab/parallel.hpp"
#include "saprlab/rng.hpp"

namespace saprlab {

double average_path_length(const PathSet& ps) {
    const NodeId n = ps.node_count();
    if (n < 2) return 0.0;

    std::int64_t total = 0;
    std::vector<NodeId> depth(static_cast<std::size_t>(n));
    std::vector<NodeId> chain;
    for (NodeId s = 0; s < n; ++s) {
        std::fill(depth.begin(), depth.end(), kNoNode);
        depth[static_cast<std::size_t>(s)] = 0;
        for (NodeId t = 0; t < n; ++t) {
            if (depth[static_cast<std::size_t>(t)] != kNoNode) continue;
            chain.clear();
            NodeId r = t;
            while (depth[static_cast<std::size_t>(r)] == kNoNode) {
                chain.push_back(r);
                r = ps.predecessor(s, r);
                if (r == kNoNode) throw DataError("path set incomplete: missing predecessor");
                if (chain.size() > static_cast<std::size_t>(n)) throw InternalError("predecessor chain cyclic");
            }
            NodeId d = depth[static_cast<std::size_t>(r)];
            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                depth[static_cast<std::size_t>(*it)] = ++d;
        }
        for (NodeId t = 0; t < n; ++t)
            if (t != s) total += depth[static_cast<std::size_t>(t)];
    }
    return static_cast<double>(total) /
           (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::vector<std::int64_t> interior_counts(const PathSet& ps) {
    const NodeId n = ps.node_count();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = 0; t < n; ++t) {
            if (t == s) continue;
            NodeId r = ps.predecessor(s, t);
            if (r == kNoNode) throw DataError("path set incomplete: missing predecessor");
            int hops = 0;
            while (r != s) {
                ++counts[static_cast<std::size_t>(r)];
                r = ps.predecessor(s, r);
                if (r == kNoNode) throw DataError("path set incomplete: missing predecessor");
                if (++hops > n) throw InternalError("predecessor chain cyclic");
            }
        }
    }
    return counts;
}

std::vector<DegreeLoad> betweenness_profile(const PathSet& ps, const Graph& g) {
    if (ps.node_count() != g.node_count())
        throw ParameterError("betweenness_profile: path set and graph disagree on node count");
    const auto counts = interior_counts(ps);
    std::vector<DegreeLoad> rows;
    rows.reserve(counts.size());
    for (NodeId u = 0; u < g.node_count(); ++u)
        rows.push_back({u, g.degree(u), counts[static_cast<std::size_t>(u)]});
    std::sort(rows.begin(), rows.end(), [](const DegreeLoad& a, const DegreeLoad& b) {
        if (a.n_paths != b.n_paths) return a.n_paths > b.n_paths;
        return a.node < b.node;
    });
    return rows;
}

AnalyticThreshold analytic_gamma_c(const PathSet& ps) {
    const auto counts = interior_counts(ps);
    AnalyticThreshold at;
    for (std::int64_t c : counts) at.b_max = std::max(at.b_max, c);
    const double n = static_cast<double>(ps.node_count());
    if (at.b_max == 0) {
        at.unbounded = true;
        at.gamma_c = std::numeric_limits<double>::infinity();
        at.implied_rc = std::numeric_limits<double>::infinity();
    } else {
        at.gamma_c = (n - 1.0) / static_cast<double>(at.b_max);
        at.implied_rc = n * at.gamma_c;
    }
    return at;
}

FitResult small_world_fit(const std::vector<std::pair<double, double>>& n_vs_len) {
    if (n_vs_len.size() < 3) throw ParameterError("small_world_fit: need at least three sizes");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n_vs_len.size());
    for (const auto& [n, len] : n_vs_len) {
        if (!(n > 1.0)) throw ParameterError("small_world_fit: sizes must exceed 1");
        const double x = std::log(n);
        sx += x;
        sy += len;
        sxx += x * x;
        sxy += x * len;
    }
    const double denom = m * sxx - sx * sx;
    if (denom <= 0.0) throw ParameterError("small_world_fit: sizes are degenerate");

    FitResult fit;
    fit.slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;

    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / m;
    for (const auto& [n, len] : n_vs_len) {
        const double pred = fit.intercept + fit.slope * std::log(n);
        ss_res += (len - pred) * (len - pred);
        ss_tot += (len - mean_y) * (len - mean_y);
    }
    fit.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

RcSample measure_rate(const Graph& g, const ForwardingPlan& plan, const SimConfig& base,
                      const RcOptions& opt, int r) {
    std::vector<double> etas(static_cast<std::size_t>(opt.averaging_seeds));
    std::vector<double> travels(static_cast<std::size_t>(opt.averaging_seeds));
    parallel_for(static_cast<std::size_t>(opt.averaging_seeds), opt.jobs, [&](std::size_t i) {
        SimConfig cfg = base;
        cfg.packets_per_step = r;
        cfg.seed = Rng::derive(base.seed, (static_cast<std::uint64_t>(r) << 16) + i);
        SimResult res = run(g, plan, cfg);
        etas[i] = res.eta;
        travels[i] = res.avg_travel_time;
    });
    RcSample s{r, 0.0, 0.0};
    for (double e : etas) s.eta += e;
    for (double t : travels) s.avg_travel_time += t;
    s.eta /= static_cast<double>(opt.averaging_seeds);
    s.avg_travel_time /= static_cast<double>(opt.averaging_seeds);
    return s;
}

RcEstimate estimate_rc(const Graph& g, const ForwardingPlan& plan, const SimConfig& sim_cfg,
                       const RcOptions& opt) {
    if (opt.r_min < 1 || opt.r_max < opt.r_min)
        throw ParameterError("estimate_rc: need 1 <= r_min <= r_max");
    if (opt.averaging_seeds < 1) throw ParameterError("estimate_rc: averaging_seeds must be >= 1");
    if (!(opt.eta_threshold > 0.0)) throw ParameterError("estimate_rc: threshold must be positive");

    std::map<int, RcSample> samples;
    auto eta_at = [&](int r) -> const RcSample& {
        auto it = samples.find(r);
        if (it == samples.end())
            it = samples.emplace(r, measure_rate(g, plan, sim_cfg, opt, r)).first;
        return it->second;
    };

    auto curve = [&]() {
        std::vector<RcSample> c;
        c.reserve(samples.size());
        for (const auto& [r, s] : samples) c.push_back(s);
        return c;
    };

    if (eta_at(opt.r_max).eta < opt.eta_threshold)
        throw RangeExhaustedError("no congestion up to injection rate " + std::to_string(opt.r_max),
                                  curve());

    int crossing = opt.r_max;
    if (eta_at(opt.r_min).eta >= opt.eta_threshold) {
        crossing = opt.r_min;
    } else {
        int lo = opt.r_min, hi = opt.r_max;
        while (hi - lo > 1) {
            const int mid = lo + (hi - lo) / 2;
            if (eta_at(mid).eta >= opt.eta_threshold)
                hi = mid;
            else
                lo = mid;
        }
        crossing = hi;
    }

    // Confirming scan around the bisection answer; noise can pull the true
    // first crossing a notch or two below it.
    for (int r = std::max(opt.r_min, crossing - 2); r <= std::min(opt.r_max, crossing + 2); ++r)
        eta_at(r);

    RcEstimate est;
    est.eta_threshold = opt.eta_threshold;
    est.curve = curve();
    est.r_c = 0;
    for (const RcSample& s : est.curve) {
        if (s.eta >= opt.eta_threshold) {
            est.r_c = s.r;
            break;
        }
    }
    return est;
}

}  // namespace saprlab
