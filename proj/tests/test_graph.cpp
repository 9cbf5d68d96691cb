#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "graphgeom/errors.hpp"
#include "graphgeom/graph.hpp"
#include "testutil.hpp"

using namespace graphgeom;

TEST_CASE("build_graph canonicalizes raw input") {
    const Graph g = build_graph(2, {{0, 1}, {1, 0}, {0, 0}});
    CHECK(g.num_nodes() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});

    const Graph empty = build_graph(3, {});
    CHECK(empty.num_edges() == 0);

    const Graph sorted = build_graph(4, {{3, 1}, {1, 3}, {2, 0}});
    CHECK(sorted.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
}

TEST_CASE("build_graph rejects out-of-range endpoints") {
    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), InputError);
    CHECK_THROWS_AS(build_graph(2, {{-1, 0}}), InputError);
    CHECK_THROWS_AS(build_graph(-1, {}), InputError);
}

TEST_CASE("build_graph is idempotent") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = testutil::random_graph(seed);
        CHECK(build_graph(g.num_nodes(), g.edges()) == g);
    }
}

TEST_CASE("degrees") {
    CHECK(degrees(complete_graph(2)) == std::vector<int>{1, 1});
    CHECK(degrees(star_graph(3)) == std::vector<int>{3, 1, 1, 1});
    CHECK(degrees(build_graph(3, {})) == std::vector<int>{0, 0, 0});
}

TEST_CASE("degree sum equals twice the edge count") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = testutil::random_graph(seed + 100);
        const auto d = degrees(g);
        CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * g.num_edges());
    }
}

TEST_CASE("symmetric difference count") {
    const Graph k2 = complete_graph(2);
    CHECK(symmetric_difference_count(k2, k2) == 0);
    CHECK(symmetric_difference_count(k2, build_graph(2, {})) == 1);
    // C_4 vs P_4: the cycle adds exactly (0, 3).
    CHECK(symmetric_difference_count(cycle_graph(4), path_graph(4)) == 1);
    CHECK_THROWS_AS(symmetric_difference_count(k2, complete_graph(3)), InputError);
}

TEST_CASE("symmetric difference is a metric") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        SplitMix64 rng(seed);
        const int n = 4 + static_cast<int>(rng.next_below(12));
        const Graph a = erdos_renyi(n, 0.3, rng.next_u64());
        const Graph b = erdos_renyi(n, 0.3, rng.next_u64());
        const Graph c = erdos_renyi(n, 0.3, rng.next_u64());
        const int ab = symmetric_difference_count(a, b);
        const int ba = symmetric_difference_count(b, a);
        CHECK(ab == ba);
        CHECK(ab >= 0);
        CHECK((symmetric_difference_count(a, c) <=
               ab + symmetric_difference_count(b, c)));
        CHECK(symmetric_difference_count(a, a) == 0);
    }
}

TEST_CASE("relabeled copy preserves size and degree multiset") {
    const Graph g = testutil::random_graph(7);
    const Graph h = relabeled_copy(g, 99);
    CHECK(h.num_nodes() == g.num_nodes());
    CHECK(h.num_edges() == g.num_edges());
    auto dg = degrees(g), dh = degrees(h);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    CHECK(dg == dh);
}

TEST_CASE("require_labels validates shape") {
    LabeledGraph lg;
    lg.graph = path_graph(3);
    CHECK_THROWS_AS(require_labels(lg), InputError);
    lg.labels = std::vector<int>{0, 1};
    CHECK_THROWS_AS(require_labels(lg), InputError);
    lg.labels = std::vector<int>{0, -1, 0};
    CHECK_THROWS_AS(require_labels(lg), InputError);
    lg.labels = std::vector<int>{0, 1, 0};
    CHECK(require_labels(lg).size() == 3);
    CHECK(num_classes(*lg.labels) == 2);
}
