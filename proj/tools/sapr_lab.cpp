#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "saprlab/config.hpp"
#include "saprlab/csv.hpp"
#include "saprlab/errors.hpp"
#include "saprlab/experiments.hpp"
#include "saprlab/forwarding.hpp"
#include "saprlab/graph.hpp"
#include "saprlab/metrics.hpp"
#include "saprlab/sim.hpp"

namespace fs = std::filesystem;
using namespace saprlab;

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir;
    int jobs = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-c,--config", args.config_path, "INI config file");
    cmd->add_option("--set", args.overrides, "override a config key, section.key=value")
        ->take_all();
    cmd->add_option("-o,--out", args.out_dir, "output directory");
    cmd->add_option("-j,--jobs", args.jobs, "worker threads for independent runs");
}

ExperimentConfig load_config(const CommonArgs& args) {
    ConfigMap map = args.config_path.empty() ? ConfigMap{} : ConfigMap::from_file(args.config_path);
    for (const std::string& ov : args.overrides) map.set_assignment(ov);
    ExperimentConfig cfg = ExperimentConfig::from_map(map);
    if (!args.out_dir.empty()) cfg.out_dir = args.out_dir;
    if (args.jobs > 0) cfg.jobs = args.jobs;
    return cfg;
}

void ensure_out_dir(const ExperimentConfig& cfg) {
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) throw DataError("cannot create output directory: " + cfg.out_dir);
}

ForwardingPlan load_plan(const ExperimentConfig& cfg, const std::string& routes_path, const Graph& g) {
    PathSet ps = PathSet::read_archive_file(routes_path);
    if (ps.node_count() != g.node_count())
        throw DataError("routes archive was built for a different network size");
    ForwardingPlan plan = build_plan(std::move(ps), parse_mode(cfg.routing.mode));
    if (plan.mode() == ForwardingMode::next_hop) {
        const LoopReport report = validate_loop_free(plan, g);
        if (!report.ok)
            throw DataError("next-hop table loops for " + std::to_string(report.bad_pairs.size()) +
                            " pairs; use source routing for this protocol");
    }
    return plan;
}

int cmd_generate(const CommonArgs& args) {
    ExperimentConfig cfg = load_config(args);
    ensure_out_dir(cfg);
    Graph g = build_network(cfg.network);
    const std::string path = cfg.out_dir + "/graph.txt";
    write_edge_list_file(g, path);
    std::cout << "wrote " << path << " (" << g.node_count() << " nodes, " << g.edge_count()
              << " edges, max degree " << g.max_degree() << ")\n";
    return 0;
}

int cmd_build_routes(const CommonArgs& args) {
    ExperimentConfig cfg = load_config(args);
    ensure_out_dir(cfg);
    Graph g = build_network(cfg.network);
    RouteBuild build = build_routes(g, cfg.routing);

    const std::string routes_path = cfg.out_dir + "/routes.paths";
    build.paths.write_archive_file(routes_path);

    std::vector<std::string> rows;
    for (std::size_t i = 0; i < build.avg_path_length.size(); ++i)
        rows.push_back(std::to_string(i + 1) + "," + csv_num(build.avg_path_length[i]));
    write_csv(cfg.out_dir + "/convergence.csv", "iteration,avg_path_length", rows);

    if (!build.b_max_series.empty()) {
        rows.clear();
        for (std::size_t i = 0; i < build.b_max_series.size(); ++i)
            rows.push_back(std::to_string(i + 1) + "," + std::to_string(build.b_max_series[i]));
        write_csv(cfg.out_dir + "/bmax.csv", "iteration,b_max", rows);
    }

    if (cfg.routing.mode == "next-hop") {
        ForwardingPlan plan = build_plan(build.paths, ForwardingMode::next_hop);
        const LoopReport report = validate_loop_free(plan, g);
        std::ofstream table(cfg.out_dir + "/next_hop.csv");
        write_next_hop_csv(plan, table);
        if (!report.ok)
            throw DataError("next-hop table loops for " + std::to_string(report.bad_pairs.size()) +
                            " pairs; use source routing for this protocol");
    }

    const AnalyticThreshold at = analytic_gamma_c(build.paths);
    std::cout << "routes: protocol " << cfg.routing.protocol << ", <L> "
              << csv_num(build.avg_path_length.back()) << ", iterations "
              << build.avg_path_length.size() << (build.converged ? "" : " (not converged)")
              << ", b_max " << at.b_max << ", implied R_c " << csv_num(at.implied_rc) << "\n";
    std::cout << "wrote " << routes_path << "\n";
    return 0;
}

int cmd_simulate(const CommonArgs& args, const std::string& routes_path) {
    ExperimentConfig cfg = load_config(args);
    ensure_out_dir(cfg);
    Graph g = build_network(cfg.network);
    const std::string routes =
        routes_path.empty() ? cfg.out_dir + "/routes.paths" : routes_path;
    ForwardingPlan plan = load_plan(cfg, routes, g);

    SimConfig sim_cfg;
    sim_cfg.packets_per_step = cfg.traffic.r;
    sim_cfg.capacity = cfg.traffic.capacity;
    sim_cfg.steps = cfg.traffic.steps;
    sim_cfg.warmup = cfg.traffic.warmup;
    sim_cfg.window = cfg.traffic.window;
    sim_cfg.seed = cfg.traffic.seed;
    SimResult res = run(g, plan, sim_cfg);

    std::vector<std::string> rows;
    rows.reserve(res.n_packets.size());
    for (std::size_t t = 0; t < res.n_packets.size(); ++t)
        rows.push_back(std::to_string(t) + "," + std::to_string(res.n_packets[t]));
    write_csv(cfg.out_dir + "/timeseries.csv", "t,n_packets", rows);

    write_csv(cfg.out_dir + "/summary.csv", "R,eta,avg_travel_time,delivered,generated",
              {std::to_string(cfg.traffic.r) + "," + csv_num(res.eta) + "," +
               csv_num(res.avg_travel_time) + "," + std::to_string(res.delivered) + "," +
               std::to_string(res.generated)});

    std::cout << "sim: R " << cfg.traffic.r << ", eta " << csv_num(res.eta) << ", <T> "
              << csv_num(res.avg_travel_time) << ", delivered " << res.delivered << "/"
              << res.generated << "\n";
    return 0;
}

int cmd_scan_rc(const CommonArgs& args, const std::string& routes_path) {
    ExperimentConfig cfg = load_config(args);
    ensure_out_dir(cfg);
    Graph g = build_network(cfg.network);
    const std::string routes =
        routes_path.empty() ? cfg.out_dir + "/routes.paths" : routes_path;
    ForwardingPlan plan = load_plan(cfg, routes, g);

    SimConfig sim_cfg;
    sim_cfg.capacity = cfg.traffic.capacity;
    sim_cfg.steps = cfg.traffic.steps;
    sim_cfg.warmup = cfg.traffic.warmup;
    sim_cfg.window = cfg.traffic.window;
    sim_cfg.seed = cfg.traffic.seed;

    RcOptions opt;
    opt.r_min = cfg.traffic.r_min;
    opt.r_max = cfg.traffic.r_max;
    opt.eta_threshold = cfg.traffic.eta_threshold;
    opt.averaging_seeds = cfg.traffic.seeds;
    opt.jobs = cfg.jobs;

    auto write_curve = [&](const std::vector<RcSample>& curve) {
        std::vector<std::string> rows;
        for (const RcSample& s : curve)
            rows.push_back(std::to_string(s.r) + "," + csv_num(s.eta) + "," +
                           csv_num(s.avg_travel_time));
        write_csv(cfg.out_dir + "/eta_curve.csv", "R,eta,avg_travel_time", rows);
    };

    try {
        const RcEstimate est = estimate_rc(g, plan, sim_cfg, opt);
        write_curve(est.curve);
        write_csv(cfg.out_dir + "/rc.csv", "alpha,r_c",
                  {csv_num(cfg.routing.alpha) + "," + std::to_string(est.r_c)});
        std::cout << "R_c " << est.r_c << " (eta threshold " << csv_num(est.eta_threshold)
                  << ", " << est.curve.size() << " rates sampled)\n";
    } catch (const RangeExhaustedError& e) {
        write_curve(e.curve());
        throw;
    }
    return 0;
}

int cmd_reproduce(const CommonArgs& args, const std::string& figure, bool list) {
    if (list) {
        for (const std::string& name : figure_names()) std::cout << name << "\n";
        return 0;
    }
    ExperimentConfig cfg = load_config(args);
    ensure_out_dir(cfg);
    for (const std::string& path : reproduce(figure, cfg)) std::cout << "wrote " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"routing laboratory: adaptive self-avoiding paths vs static baselines"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string routes_path;
    std::string figure;
    bool list_figures = false;

    CLI::App* generate = app.add_subcommand("generate", "build a network and write its edge list");
    add_common(generate, args);

    CLI::App* build = app.add_subcommand("build-routes", "compute routes and archive them");
    add_common(build, args);

    CLI::App* simulate = app.add_subcommand("simulate", "drive packet traffic over archived routes");
    add_common(simulate, args);
    simulate->add_option("--routes", routes_path, "pathset archive (default <out>/routes.paths)");

    CLI::App* scan = app.add_subcommand("scan-rc", "find the congestion threshold R_c");
    add_common(scan, args);
    scan->add_option("--routes", routes_path, "pathset archive (default <out>/routes.paths)");

    CLI::App* repro = app.add_subcommand("reproduce", "run a named figure bundle");
    add_common(repro, args);
    repro->add_option("figure", figure, "figure name (see --list)");
    repro->add_flag("--list", list_figures, "list available figures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (generate->parsed()) return cmd_generate(args);
        if (build->parsed()) return cmd_build_routes(args);
        if (simulate->parsed()) return cmd_simulate(args, routes_path);
        if (scan->parsed()) return cmd_scan_rc(args, routes_path);
        if (repro->parsed()) {
            if (!list_figures && figure.empty())
                throw ParameterError("reproduce needs a figure name (or --list)");
            return cmd_reproduce(args, figure, list_figures);
        }
    } catch (const RangeExhaustedError& e) {
        std::cerr << "range exhausted: " << e.what() << "\n";
        return 3;
    } catch (const ParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
