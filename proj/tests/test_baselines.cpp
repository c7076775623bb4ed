#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "saprlab/baselines.hpp"
#include "saprlab/errors.hpp"
#include "saprlab/metrics.hpp"
#include "test_support.hpp"

using namespace saprlab;
using namespace saprtest;

TEST_CASE("spr weights are flat") {
    Graph g = generate_ba(30, 3, 2, 1);
    const auto w = spr_weights(g);
    CHECK(w.size() == 30);
    CHECK(std::count(w.begin(), w.end(), 1.0) == 30);
}

TEST_CASE("epr weights follow degree") {
    Graph g = star_graph(6);
    const auto w1 = epr_weights(g, 1.0);
    CHECK(w1[0] == 5.0);
    CHECK(w1[3] == 1.0);
    const auto w0 = epr_weights(g, 0.0);
    CHECK(std::count(w0.begin(), w0.end(), 1.0) == 6);
    const auto w2 = epr_weights(g, 2.0);
    CHECK(w2[0] == doctest::Approx(25.0));

    Graph lonely = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(epr_weights(lonely, 1.0), DataError);
}

TEST_CASE("epr2 weights flatten above the crossover") {
    // Degrees 1 (spokes) and 20 (hub).
    Graph g = star_graph(21);
    const auto w = epr2_weights(g, 15.0, 0.3);
    CHECK(w[1] == 1.0);
    // 15^0.3 * 20^0.7, frozen from a hand evaluation of the closed form.
    CHECK(w[0] == doctest::Approx(18.3462950928).epsilon(1e-8));

    // A node of degree exactly k_c sits on the linear branch: the two
    // branches agree there, so the function is continuous.
    Graph at_kc = star_graph(16);  // hub degree 15
    const auto w_kc = epr2_weights(at_kc, 15.0, 0.3);
    CHECK(w_kc[0] == 15.0);

    CHECK_THROWS_AS(epr2_weights(g, 0.5, 0.3), ParameterError);
    CHECK_THROWS_AS(epr2_weights(g, 15.0, 1.5), ParameterError);
    Graph lonely = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(epr2_weights(lonely, 15.0, 0.3), DataError);
}

TEST_CASE("epr2 grows sublinearly past the crossover") {
    // One graph holding degrees on both sides of k_c.
    Graph g = generate_ba(300, 3, 2, 3);
    const auto w = epr2_weights(g, 15.0, 0.3);
    const auto deg_of = [&](NodeId u) { return static_cast<double>(g.degree(u)); };
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (deg_of(u) <= 15.0)
            CHECK(w[static_cast<std::size_t>(u)] == deg_of(u));
        else {
            CHECK(w[static_cast<std::size_t>(u)] > 15.0);
            CHECK(w[static_cast<std::size_t>(u)] < deg_of(u));  // flattening
        }
    }
}

TEST_CASE("dijkstra_static finds cheapest paths on small corpora") {
    std::vector<Graph> corpus;
    corpus.push_back(path_graph(5));
    corpus.push_back(cycle_graph(6));
    corpus.push_back(complete_graph(5));
    corpus.push_back(star_graph(7));
    for (std::uint64_t s = 0; s < 6; ++s)
        corpus.push_back(random_connected_graph(static_cast<NodeId>(6 + s % 4), 4, 500 + s));

    std::uint64_t wseed = 1;
    for (const Graph& g : corpus) {
        const NodeId n = g.node_count();
        std::vector<std::vector<double>> schemes;
        schemes.push_back(spr_weights(g));
        schemes.push_back(epr_weights(g, 1.0));
        {
            Rng wr(wseed++);
            std::vector<double> random_w(static_cast<std::size_t>(n));
            for (double& w : random_w) w = 0.1 + wr.unit();
            schemes.push_back(random_w);
        }
        for (const auto& w : schemes) {
            PathSet ps = dijkstra_static(g, w, 42);
            for (NodeId s = 0; s < n; ++s) {
                for (NodeId t = 0; t < n; ++t) {
                    if (s == t) continue;
                    const double got = stored_path_cost(ps, w, s, t);
                    const double want = brute_force_min_cost(g, w, s, t);
                    CHECK(got == doctest::Approx(want).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("dijkstra_static flips a coin on exact ties") {
    Graph g = cycle_graph(4);
    const auto w = spr_weights(g);
    bool via1 = false, via3 = false;
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        PathSet ps = dijkstra_static(g, w, seed);
        const NodeId via = ps.predecessor(0, 2);
        if (via == 1) via1 = true;
        if (via == 3) via3 = true;
    }
    CHECK(via1);
    CHECK(via3);
}

TEST_CASE("dijkstra_static is deterministic and validates input") {
    Graph g = generate_ba(50, 3, 2, 2);
    const auto w = epr_weights(g, 1.0);
    PathSet a = dijkstra_static(g, w, 7);
    PathSet b = dijkstra_static(g, w, 7);
    for (NodeId s = 0; s < 50; ++s)
        for (NodeId t = 0; t < 50; ++t) CHECK(a.predecessor(s, t) == b.predecessor(s, t));

    CHECK_THROWS_AS(dijkstra_static(g, std::vector<double>(49, 1.0), 1), ParameterError);
    CHECK_THROWS_AS(dijkstra_static(g, std::vector<double>(50, 0.0), 1), ParameterError);
    CHECK_THROWS_AS(dijkstra_static(g, std::vector<double>(50, -2.0), 1), ParameterError);

    Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(dijkstra_static(split, std::vector<double>(4, 1.0), 1), DataError);
}

TEST_CASE("load balancing heuristic improves monotonically") {
    Graph g = generate_ba(60, 3, 2, 4);
    OrOptions opt;
    opt.iterations = 150;
    opt.seed = 5;
    OrRun run = run_or(g, opt);

    REQUIRE(run.best_b_max.size() == 150);
    for (std::size_t i = 1; i < run.best_b_max.size(); ++i)
        CHECK(run.best_b_max[i] <= run.best_b_max[i - 1]);
    CHECK(run.b_max == run.best_b_max.back());

    // The returned paths really achieve the reported best.
    const auto counts = interior_counts(run.paths);
    CHECK(*std::max_element(counts.begin(), counts.end()) == run.b_max);

    // And the heuristic should not lose to plain shortest paths.
    const auto spr_counts = interior_counts(dijkstra_static(g, spr_weights(g), 5));
    CHECK(run.b_max <= *std::max_element(spr_counts.begin(), spr_counts.end()));
}

TEST_CASE("load balancing heuristic validates options") {
    Graph g = path_graph(4);
    OrOptions opt;
    opt.iterations = 0;
    CHECK_THROWS_AS(run_or(g, opt), ParameterError);
    opt.iterations = 5;
    opt.step = 0.0;
    CHECK_THROWS_AS(run_or(g, opt), ParameterError);
    opt.multiplicative = true;
    opt.step = 1.0;
    CHECK_THROWS_AS(run_or(g, opt), ParameterError);
    opt.step = 1.5;
    CHECK(run_or(g, opt).b_max == 4);  // line: inner nodes carry 2 each way
}
