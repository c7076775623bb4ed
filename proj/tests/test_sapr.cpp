#include <doctest.h>

#include <cmath>
#include <limits>

#include "saprlab/errors.hpp"
#include "saprlab/metrics.hpp"
#include "saprlab/sapr.hpp"
#include "test_support.hpp"

using namespace saprlab;
using namespace saprtest;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("node_cost") {
    CHECK(node_cost(0, 1.0) == 1.0);
    CHECK(node_cost(1, 1.0) == 1.0);
    CHECK(node_cost(7, 1.0) == 7.0);
    CHECK(node_cost(5, 2.0) == 25.0);
    CHECK(node_cost(123, 0.0) == 1.0);
    CHECK(node_cost(4, 0.5) == doctest::Approx(2.0));
}

TEST_CASE("bump keeps counts and costs in lockstep") {
    RoutingState st(4, 2.0);
    CHECK(st.count(1) == 0);
    CHECK(st.cost(1) == 1.0);
    st.bump(1, +1);
    CHECK(st.cost(1) == 1.0);
    st.bump(1, +1);
    CHECK(st.count(1) == 2);
    CHECK(st.cost(1) == 4.0);
    st.bump(1, +3);
    CHECK(st.cost(1) == 25.0);
    st.bump(1, -4);
    CHECK(st.cost(1) == 1.0);
    CHECK_THROWS_AS(st.bump(2, -1), InternalError);
}

TEST_CASE("increment and decrement walk the antecedent chain") {
    RoutingState st(4, 1.0);
    st.paths.set_predecessor(0, 1, 0);
    st.paths.set_predecessor(0, 2, 1);
    st.paths.set_predecessor(0, 3, 2);

    increment_path(st, 0, 2);  // bumps 2 then 1, stops at the source
    CHECK(st.count(0) == 0);
    CHECK(st.count(1) == 1);
    CHECK(st.count(2) == 1);
    CHECK(st.count(3) == 0);

    increment_path(st, 0, 0);  // tail == source: no-op
    CHECK(st.count(0) == 0);

    decrement_path(st, 0, 2);
    for (NodeId u = 0; u < 4; ++u) CHECK(st.count(u) == 0);

    // A second decrement drives a count negative.
    CHECK_THROWS_AS(decrement_path(st, 0, 2), InternalError);
}

TEST_CASE("chains that never reach the source are rejected") {
    RoutingState st(4, 1.0);
    st.paths.set_predecessor(0, 3, 2);  // pred(0, 2) unset
    CHECK_THROWS_AS(increment_path(st, 0, 3), InternalError);

    RoutingState cyc(4, 1.0);
    cyc.paths.set_predecessor(0, 3, 2);
    cyc.paths.set_predecessor(0, 2, 3);
    CHECK_THROWS_AS(increment_path(cyc, 0, 3), InternalError);
}

TEST_CASE("relax_neighbor keeps a strictly better stored path") {
    RoutingState st(3, 1.0);
    Rng rng(1);
    std::vector<double> dist{0.0, 1.0, kInf};
    st.paths.set_predecessor(0, 1, 0);
    // Offer to node 1 via node 2 at distance 5: worse, nothing changes.
    dist[2] = 5.0;
    CHECK(relax_neighbor(st, dist, 0, 2, 1, rng) == RelaxOutcome::kept);
    CHECK(dist[1] == 1.0);
    CHECK(st.paths.predecessor(0, 1) == 0);
}

TEST_CASE("relax_neighbor adopts a first or better path and books counts") {
    // Line 0-1-2; source 0 relaxing 1 then 2.
    RoutingState st(3, 1.0);
    Rng rng(1);
    std::vector<double> dist{0.0, kInf, kInf};

    CHECK(relax_neighbor(st, dist, 0, 0, 1, rng) == RelaxOutcome::replaced);
    CHECK(dist[1] == 1.0);
    CHECK(st.count(1) == 0);  // tail is the source's neighbor; chain is just node 0's side

    CHECK(relax_neighbor(st, dist, 0, 1, 2, rng) == RelaxOutcome::replaced);
    CHECK(dist[2] == 2.0);
    CHECK(st.count(1) == 1);  // 1 is now interior to the stored 0-1-2 path
    CHECK(dist[2] == dist[1] + st.cost(2));
}

TEST_CASE("replacement rebooks the old chain") {
    // Node 3 first reached through 1, then more cheaply through 2.
    RoutingState st(4, 1.0);
    Rng rng(1);
    std::vector<double> dist{0.0, 1.0, 1.0, kInf};
    st.paths.set_predecessor(0, 1, 0);
    st.paths.set_predecessor(0, 2, 0);

    CHECK(relax_neighbor(st, dist, 0, 1, 3, rng) == RelaxOutcome::replaced);
    CHECK(st.count(1) == 1);
    CHECK(st.count(2) == 0);

    dist[2] = 0.5;  // pretend 2 became cheaper to reach
    CHECK(relax_neighbor(st, dist, 0, 2, 3, rng) == RelaxOutcome::replaced);
    CHECK(st.count(1) == 0);  // old chain withdrawn
    CHECK(st.count(2) == 1);
    CHECK(st.paths.predecessor(0, 3) == 2);
    CHECK(dist[3] == 1.5);
}

TEST_CASE("exact ties are settled by a fair coin") {
    int replaced = 0;
    const int trials = 2000;
    for (int i = 0; i < trials; ++i) {
        RoutingState st(4, 1.0);
        Rng rng(static_cast<std::uint64_t>(i));
        std::vector<double> dist{0.0, 1.0, 1.0, 2.0};
        st.paths.set_predecessor(0, 1, 0);
        st.paths.set_predecessor(0, 2, 0);
        st.paths.set_predecessor(0, 3, 1);
        st.bump(1, +1);

        const RelaxOutcome out = relax_neighbor(st, dist, 0, 2, 3, rng);
        if (out == RelaxOutcome::tie_replaced) {
            ++replaced;
            CHECK(st.paths.predecessor(0, 3) == 2);
            CHECK(st.count(1) == 0);
            CHECK(st.count(2) == 1);
        } else {
            CHECK(out == RelaxOutcome::tie_kept);
            CHECK(st.paths.predecessor(0, 3) == 1);
            CHECK(st.count(1) == 1);
        }
    }
    // ~N(1000, 22): five sigma leaves a wide but meaningful band.
    CHECK(replaced > 870);
    CHECK(replaced < 1130);
}

TEST_CASE("relax_neighbor rejects negative distances") {
    RoutingState st(3, 1.0);
    Rng rng(1);
    std::vector<double> dist{0.0, -1.0, kInf};
    CHECK_THROWS_AS(relax_neighbor(st, dist, 0, 1, 2, rng), InternalError);
}

TEST_CASE("build_source_tree on a line charges interior nodes") {
    Graph g = path_graph(5);
    RoutingState st(5, 1.0);
    Rng rng(1);
    build_source_tree(st, g, 0, rng);
    // Paths 0->1..4 exist; node k is interior to paths reaching k+1..4.
    CHECK(st.count(0) == 0);
    CHECK(st.count(1) == 3);
    CHECK(st.count(2) == 2);
    CHECK(st.count(3) == 1);
    CHECK(st.count(4) == 0);
    CHECK(st.paths.path(0, 4) == std::vector<NodeId>{0, 1, 2, 3, 4});
}

TEST_CASE("build_source_tree settles square ties consistently") {
    // Square 0-1-2-3-0: node 2 is reachable from 0 both ways at equal cost.
    Graph g = cycle_graph(4);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        RoutingState st(4, 1.0);
        Rng rng(seed);
        build_source_tree(st, g, 0, rng);
        const NodeId via = st.paths.predecessor(0, 2);
        CHECK((via == 1 || via == 3));
        CHECK(st.count(via) == 1);
        CHECK(st.count(via == 1 ? 3 : 1) == 0);
        CHECK(st.count(0) == 0);
        CHECK(st.count(2) == 0);
    }
}

TEST_CASE("remove_source_tree undoes the bookkeeping exactly") {
    Graph g = random_connected_graph(12, 6, 77);
    RoutingState st(12, 1.5);
    Rng rng(3);
    build_source_tree(st, g, 4, rng);
    remove_source_tree(st, 4);
    for (NodeId u = 0; u < 12; ++u) CHECK(st.count(u) == 0);
    CHECK(!st.paths.has_path(4, (4 + 1) % 12));

    CHECK_THROWS_AS(remove_source_tree(st, 4), InternalError);  // row already cleared
}

TEST_CASE("disconnected graphs are rejected by the sweep") {
    Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
    SaprOptions opt;
    opt.alpha = 1.0;
    CHECK_THROWS_AS(run_sapr(g, opt), DataError);
}

TEST_CASE("alpha zero reproduces fewest-hop routing") {
    // With flat costs, stored path lengths must match plain BFS everywhere.
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const NodeId n = static_cast<NodeId>(5 + seed % 46);
        Graph g = random_connected_graph(n, static_cast<int>(seed % 7), 1000 + seed);
        SaprOptions opt;
        opt.alpha = 0.0;
        opt.max_iterations = 5;
        opt.seed = seed;
        SaprRun run = run_sapr(g, opt);
        CHECK(run.converged);
        int mismatches = 0;
        for (NodeId s = 0; s < n; ++s) {
            const auto hops = bfs_hops(g, s);
            for (NodeId t = 0; t < n; ++t)
                if (run.state.paths.hop_length(s, t) != hops[static_cast<std::size_t>(t)])
                    ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("incremental counts match a full recount after every iteration") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const NodeId n = static_cast<NodeId>(5 + seed % 26);
        Graph g = random_connected_graph(n, static_cast<int>(seed % 9), 2000 + seed);
        SaprOptions opt;
        opt.alpha = 0.5 + static_cast<double>(seed % 4);
        opt.max_iterations = 4;
        opt.tolerance = 1e-12;  // keep iterating; every pass must stay consistent
        opt.seed = seed * 31 + 1;

        int iterations_seen = 0;
        SaprRun run = run_sapr(g, opt, [&](const RoutingState& st, int iter) {
            ++iterations_seen;
            REQUIRE(st.paths.complete());
            const auto recount = interior_counts(st.paths);
            for (NodeId u = 0; u < n; ++u)
                REQUIRE(st.count(u) == recount[static_cast<std::size_t>(u)]);
            REQUIRE(iter == iterations_seen);
        });
        CHECK(iterations_seen == run.iterations());

        // Total interior load equals total hops minus one per path.
        std::int64_t total = 0;
        for (std::int64_t c : run.state.counts()) total += c;
        std::int64_t hops_minus = 0;
        for (NodeId s = 0; s < n; ++s)
            for (NodeId t = 0; t < n; ++t)
                if (s != t) hops_minus += run.state.paths.hop_length(s, t) - 1;
        CHECK(total == hops_minus);
    }
}

TEST_CASE("first iteration on a star loads the hub fully") {
    Graph g = star_graph(5);
    SaprOptions opt;
    opt.alpha = 1.0;
    opt.max_iterations = 3;
    std::int64_t hub_after_first = -1;
    run_sapr(g, opt, [&](const RoutingState& st, int iter) {
        if (iter == 1) hub_after_first = st.count(0);
    });
    // Every spoke pair routes through the hub: (n-1)(n-2) ordered pairs.
    CHECK(hub_after_first == 12);
}

TEST_CASE("complete graphs carry no interior load") {
    Graph g = complete_graph(6);
    SaprOptions opt;
    opt.alpha = 3.0;
    SaprRun run = run_sapr(g, opt);
    for (NodeId u = 0; u < 6; ++u) CHECK(run.state.count(u) == 0);
    CHECK(run.avg_path_length.back() == 1.0);
    CHECK(run.converged);
}

TEST_CASE("run_sapr is seed-deterministic") {
    Graph g = generate_ba(80, 3, 2, 5);
    SaprOptions opt;
    opt.alpha = 2.0;
    opt.max_iterations = 6;
    opt.seed = 99;
    SaprRun a = run_sapr(g, opt);
    SaprRun b = run_sapr(g, opt);
    CHECK(a.avg_path_length == b.avg_path_length);
    CHECK(a.state.counts() == b.state.counts());
    for (NodeId s = 0; s < 80; ++s)
        for (NodeId t = 0; t < 80; ++t)
            CHECK(a.state.paths.predecessor(s, t) == b.state.paths.predecessor(s, t));
}

TEST_CASE("iteration budget and convergence flag") {
    Graph g = path_graph(6);  // unique paths: length series is flat
    SaprOptions opt;
    opt.alpha = 1.0;
    opt.max_iterations = 1;
    SaprRun one = run_sapr(g, opt);
    CHECK(one.iterations() == 1);
    CHECK(!one.converged);

    opt.max_iterations = 10;
    SaprRun more = run_sapr(g, opt);
    CHECK(more.converged);
    CHECK(more.iterations() == 2);
    CHECK(more.avg_path_length[0] == more.avg_path_length[1]);

    opt.max_iterations = 0;
    CHECK_THROWS_AS(run_sapr(g, opt), ParameterError);
    opt.max_iterations = 5;
    opt.tolerance = 0.0;
    CHECK_THROWS_AS(run_sapr(g, opt), ParameterError);
}

TEST_CASE("total stored paths stay at n(n-1) across iterations") {
    Graph g = generate_ba(40, 3, 2, 8);
    SaprOptions opt;
    opt.alpha = 4.0;
    opt.max_iterations = 6;
    opt.tolerance = 1e-12;
    run_sapr(g, opt, [&](const RoutingState& st, int) {
        int paths = 0;
        for (NodeId s = 0; s < 40; ++s)
            for (NodeId t = 0; t < 40; ++t)
                if (s != t && st.paths.has_path(s, t)) ++paths;
        REQUIRE(paths == 40 * 39);
    });
}
