#include "saprlab/experiments.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "saprlab/csv.hpp"
#include "saprlab/errors.hpp"
#include "saprlab/metrics.hpp"
#include "saprlab/parallel.hpp"
#include "saprlab/rng.hpp"
#include "saprlab/sim.hpp"

namespace saprlab {

Graph build_network(const NetworkSpec& spec) {
    if (spec.type == "ba") {
        return generate_ba(spec.n, spec.m0, spec.m, spec.seed);
    }
    if (spec.type == "edgelist") {
        Graph g = load_edge_list_file(spec.path);
        if (spec.keep_lcc) g = largest_connected_component(g);
        if (!g.is_connected())
            throw DataError("loaded network is disconnected; set network.keep_lcc=true");
        return g;
    }
    throw ParameterError("unknown network type: " + spec.type);
}

RouteBuild build_routes(const Graph& g, const RoutingSpec& spec) {
    if (spec.protocol == "sapr") {
        SaprOptions opt;
        opt.alpha = spec.alpha;
        opt.max_iterations = spec.iterations;
        opt.tolerance = spec.tolerance;
        opt.seed = spec.seed;
        SaprRun run = run_sapr(g, opt);
        return {std::move(run.state.paths), std::move(run.avg_path_length), {}, run.converged};
    }
    if (spec.protocol == "or") {
        OrOptions opt;
        opt.iterations = spec.or_iterations;
        opt.step = spec.or_step;
        opt.multiplicative = spec.or_multiplicative;
        opt.seed = spec.seed;
        OrRun run = run_or(g, opt);
        const double len = average_path_length(run.paths);
        return {std::move(run.paths), {len}, std::move(run.best_b_max), true};
    }

    std::vector<double> w;
    if (spec.protocol == "spr")
        w = spr_weights(g);
    else if (spec.protocol == "epr")
        w = epr_weights(g, spec.beta);
    else if (spec.protocol == "epr2")
        w = epr2_weights(g, spec.k_c, spec.eps);
    else
        throw ParameterError("unknown protocol: " + spec.protocol);

    PathSet ps = dijkstra_static(g, w, spec.seed);
    const double len = average_path_length(ps);
    return {std::move(ps), {len}, {}, true};
}

ForwardingMode parse_mode(const std::string& mode) {
    if (mode == "source") return ForwardingMode::source_routing;
    if (mode == "next-hop") return ForwardingMode::next_hop;
    throw ParameterError("routing.mode must be 'source' or 'next-hop'");
}

namespace {

namespace fs = std::filesystem;

std::string alpha_tag(double a) {
    std::string s = csv_num(a);
    std::replace(s.begin(), s.end(), '.', 'p');
    return s;
}

SimConfig to_sim(const TrafficSpec& t) {
    SimConfig cfg;
    cfg.packets_per_step = t.r;
    cfg.capacity = t.capacity;
    cfg.steps = t.steps;
    cfg.warmup = t.warmup;
    cfg.window = t.window;
    cfg.seed = t.seed;
    return cfg;
}

RcOptions to_rc(const TrafficSpec& t, int jobs) {
    RcOptions opt;
    opt.r_min = t.r_min;
    opt.r_max = t.r_max;
    opt.eta_threshold = t.eta_threshold;
    opt.averaging_seeds = t.seeds;
    opt.jobs = jobs;
    return opt;
}

std::vector<int> rate_grid(int lo, int hi, int max_points) {
    std::vector<int> rates;
    const int stride = std::max(1, (hi - lo) / std::max(1, max_points - 1));
    for (int r = lo; r <= hi; r += stride) rates.push_back(r);
    if (rates.back() != hi) rates.push_back(hi);
    return rates;
}

std::string figure_dir(const ExperimentConfig& cfg, const std::string& figure) {
    const fs::path dir = fs::path(cfg.out_dir) / figure;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw DataError("cannot create output directory: " + dir.string());
    return dir.string();
}

std::string rate_rows_file(const std::string& dir, const std::string& name,
                           const std::vector<RcSample>& samples) {
    std::vector<std::string> rows;
    rows.reserve(samples.size());
    for (const RcSample& s : samples)
        rows.push_back(std::to_string(s.r) + "," + csv_num(s.eta) + "," + csv_num(s.avg_travel_time));
    const std::string path = dir + "/" + name;
    write_csv(path, "R,eta,avg_travel_time", rows);
    return path;
}

std::vector<RcSample> sweep_rates(const Graph& g, const ForwardingPlan& plan,
                                  const ExperimentConfig& cfg, const std::vector<int>& rates) {
    const SimConfig sim_cfg = to_sim(cfg.traffic);
    const RcOptions opt = to_rc(cfg.traffic, cfg.jobs);
    std::vector<RcSample> out;
    out.reserve(rates.size());
    for (int r : rates) out.push_back(measure_rate(g, plan, sim_cfg, opt, r));
    return out;
}

RoutingSpec protocol_spec(const ExperimentConfig& cfg, const std::string& protocol, double alpha) {
    RoutingSpec spec = cfg.routing;
    spec.protocol = protocol;
    spec.alpha = alpha;
    return spec;
}

ForwardingPlan plan_for(const Graph& g, const ExperimentConfig& cfg, const std::string& protocol,
                        double alpha) {
    RouteBuild build = build_routes(g, protocol_spec(cfg, protocol, alpha));
    return build_plan(std::move(build.paths), ForwardingMode::source_routing);
}

// eta / travel-time curves per protocol variant over a shared rate grid.
std::vector<std::string> sweep_figure(const ExperimentConfig& cfg, const std::string& figure,
                                      const std::vector<std::pair<std::string, double>>& variants) {
    const Graph g = build_network(cfg.network);
    const std::string dir = figure_dir(cfg, figure);
    const std::vector<int> rates = rate_grid(cfg.traffic.r_min, cfg.traffic.r_max, 24);
    std::vector<std::string> written;
    for (const auto& [protocol, alpha] : variants) {
        const ForwardingPlan plan = plan_for(g, cfg, protocol, alpha);
        const auto samples = sweep_rates(g, plan, cfg, rates);
        const std::string name =
            (protocol == "sapr") ? "eta_sapr_alpha" + alpha_tag(alpha) + ".csv" : "eta_" + protocol + ".csv";
        written.push_back(rate_rows_file(dir, name, samples));
    }
    return written;
}

std::vector<std::string> fig_ord_param(const ExperimentConfig& cfg) {
    std::vector<std::pair<std::string, double>> variants;
    for (double a : {1.0, 2.0, 4.0, 6.0, 10.0}) variants.emplace_back("sapr", a);
    return sweep_figure(cfg, "ord_param", variants);
}

std::vector<std::string> fig_compar(const ExperimentConfig& cfg) {
    return sweep_figure(cfg, "compar", {{"spr", 0.0}, {"epr", 0.0}, {"sapr", 10.0}});
}

std::vector<std::string> fig_compar_real(const ExperimentConfig& cfg) {
    if (cfg.network.type != "edgelist")
        throw ParameterError(
            "compar_real runs on a loaded snapshot: set network.type=edgelist and network.path");
    return sweep_figure(cfg, "compar_real", {{"spr", 0.0}, {"epr", 0.0}, {"sapr", 5.0}});
}

const std::vector<double> kAlphaGrid{0.0, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 10.0};

std::vector<std::string> fig_avlength(const ExperimentConfig& cfg) {
    const Graph g = build_network(cfg.network);
    const std::string dir = figure_dir(cfg, "avlength");
    std::vector<std::string> rows;
    for (double a : kAlphaGrid) {
        RouteBuild build = build_routes(g, protocol_spec(cfg, "sapr", a));
        rows.push_back(csv_num(a) + "," + csv_num(build.avg_path_length.back()));
    }
    const std::string path = dir + "/avg_path_length.csv";
    write_csv(path, "alpha,avg_path_length", rows);
    return {path};
}

std::vector<std::string> fig_gen_rate(const ExperimentConfig& cfg) {
    const Graph g = build_network(cfg.network);
    const std::string dir = figure_dir(cfg, "gen_rate");
    const SimConfig sim_cfg = to_sim(cfg.traffic);
    const RcOptions rc_opt = to_rc(cfg.traffic, cfg.jobs);
    std::vector<std::string> rows;
    for (double a : kAlphaGrid) {
        const ForwardingPlan plan = plan_for(g, cfg, "sapr", a);
        const RcEstimate est = estimate_rc(g, plan, sim_cfg, rc_opt);
        rows.push_back(csv_num(a) + "," + std::to_string(est.r_c));
    }
    const std::string path = dir + "/rc_vs_alpha.csv";
    write_csv(path, "alpha,r_c", rows);
    return {path};
}

std::vector<std::string> fig_nb_paths(const ExperimentConfig& cfg) {
    const Graph g = build_network(cfg.network);
    const std::string dir = figure_dir(cfg, "nb_paths");
    std::vector<std::string> written;
    const std::vector<std::pair<std::string, double>> variants{
        {"spr", 0.0}, {"epr", 0.0}, {"epr2", 0.0}, {"sapr", 10.0}};
    for (const auto& [protocol, alpha] : variants) {
        RouteBuild build = build_routes(g, protocol_spec(cfg, protocol, alpha));
        const auto profile = betweenness_profile(build.paths, g);
        std::vector<std::string> rows;
        rows.reserve(profile.size());
        for (const DegreeLoad& row : profile)
            rows.push_back(std::to_string(row.node) + "," + std::to_string(row.degree) + "," +
                           std::to_string(row.n_paths));
        const std::string name =
            (protocol == "sapr") ? "profile_sapr_alpha" + alpha_tag(alpha) + ".csv"
                                 : "profile_" + protocol + ".csv";
        const std::string path = dir + "/" + name;
        write_csv(path, "node,degree,n_paths", rows);
        written.push_back(path);
    }
    return written;
}

std::vector<std::string> fig_small_world(const ExperimentConfig& cfg) {
    const std::string dir = figure_dir(cfg, "small_world");
    const std::vector<int> sizes{250, 500, 1000, 2000};
    std::vector<std::string> written;
    for (double a : {2.0, 4.0, 6.0}) {
        std::vector<std::string> rows;
        std::vector<std::pair<double, double>> pts;
        for (int n : sizes) {
            NetworkSpec net = cfg.network;
            net.type = "ba";
            net.n = n;
            const Graph g = build_network(net);
            RouteBuild build = build_routes(g, protocol_spec(cfg, "sapr", a));
            rows.push_back(std::to_string(n) + "," + csv_num(build.avg_path_length.back()));
            pts.emplace_back(static_cast<double>(n), build.avg_path_length.back());
        }
        const FitResult fit = small_world_fit(pts);
        std::cout << "small_world alpha=" << csv_num(a) << ": slope " << csv_num(fit.slope)
                  << " r^2 " << csv_num(fit.r_squared) << "\n";
        const std::string path = dir + "/scaling_alpha" + alpha_tag(a) + ".csv";
        write_csv(path, "N,avg_path_length", rows);
        written.push_back(path);
    }
    return written;
}

std::vector<std::string> fig_path_iter(const ExperimentConfig& cfg) {
    const Graph g = build_network(cfg.network);
    const std::string dir = figure_dir(cfg, "path_iter");
    std::vector<std::string> written;
    for (double a : {4.0, 6.0, 10.0}) {
        RouteBuild build = build_routes(g, protocol_spec(cfg, "sapr", a));
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < build.avg_path_length.size(); ++i)
            rows.push_back(std::to_string(i + 1) + "," + csv_num(build.avg_path_length[i]));
        const std::string path = dir + "/convergence_alpha" + alpha_tag(a) + ".csv";
        write_csv(path, "iteration,avg_path_length", rows);
        written.push_back(path);
    }
    return written;
}

std::vector<std::string> fig_comp_or(const ExperimentConfig& cfg) {
    NetworkSpec net = cfg.network;
    if (net.type == "ba" && net.n > 400) net.n = 200;  // heuristic scale, OR is O(iters * n^2 log n)
    const Graph g = build_network(net);
    const std::string dir = figure_dir(cfg, "comp_OR");
    std::vector<std::string> written;

    RouteBuild or_build = build_routes(g, protocol_spec(cfg, "or", 0.0));
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < or_build.b_max_series.size(); ++i)
        rows.push_back(std::to_string(i + 1) + "," + std::to_string(or_build.b_max_series[i]));
    const std::string or_path = dir + "/bmax_or.csv";
    write_csv(or_path, "iteration,b_max", rows);
    written.push_back(or_path);

    std::vector<std::int64_t> sapr_series;
    SaprOptions opt;
    opt.alpha = 6.0;
    opt.max_iterations = cfg.routing.iterations;
    opt.tolerance = cfg.routing.tolerance;
    opt.seed = cfg.routing.seed;
    run_sapr(g, opt, [&](const RoutingState& st, int) {
        sapr_series.push_back(*std::max_element(st.counts().begin(), st.counts().end()));
    });
    rows.clear();
    for (std::size_t i = 0; i < sapr_series.size(); ++i)
        rows.push_back(std::to_string(i + 1) + "," + std::to_string(sapr_series[i]));
    const std::string sapr_path = dir + "/bmax_sapr.csv";
    write_csv(sapr_path, "iteration,b_max", rows);
    written.push_back(sapr_path);

    const auto spr_counts = interior_counts(dijkstra_static(g, spr_weights(g), cfg.routing.seed));
    std::cout << "comp_OR: spr b_max " << *std::max_element(spr_counts.begin(), spr_counts.end())
              << ", or best " << or_build.b_max_series.back() << ", sapr final "
              << sapr_series.back() << "\n";
    return written;
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names{
        "ord_param", "compar",      "compar_real", "avlength", "gen_rate",
        "nb_paths",  "small_world", "path_iter",   "comp_OR"};
    return names;
}

std::vector<std::string> reproduce(const std::string& figure, const ExperimentConfig& cfg) {
    if (figure == "ord_param") return fig_ord_param(cfg);
    if (figure == "compar") return fig_compar(cfg);
    if (figure == "compar_real") return fig_compar_real(cfg);
    if (figure == "avlength") return fig_avlength(cfg);
    if (figure == "gen_rate") return fig_gen_rate(cfg);
    if (figure == "nb_paths") return fig_nb_paths(cfg);
    if (figure == "small_world") return fig_small_world(cfg);
    if (figure == "path_iter") return fig_path_iter(cfg);
    if (figure == "comp_OR") return fig_comp_or(cfg);
    throw ParameterError("unknown figure: " + figure + " (see 'reproduce --list')");
}

}  // namespace saprlab
