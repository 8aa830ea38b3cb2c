#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "twforge/generators.hpp"
#include "twforge/graph.hpp"
#include "twforge/iso.hpp"

using namespace twforge;
using namespace testsupport;

TEST_CASE("graph basics and validation") {
    Graph g(4, {{0, 1}, {1, 2}, {1, 2}});  // duplicate collapses
    CHECK(g.m() == 2);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
    auto k4 = complete_graph(4);
    auto sub = induced_subgraph(k4, {0, 1, 3});
    CHECK(sub.graph.n() == 3);
    CHECK(sub.graph.m() == 3);
    CHECK(sub.to_host == std::vector<int>{0, 1, 3});

    auto c6 = cycle_graph(6);
    auto alt = induced_subgraph(c6, {0, 2, 4});
    CHECK(alt.graph.m() == 0);

    auto wall = make_wall(3);
    std::vector<int> all;
    for (int v = 0; v < wall.graph.n(); ++v) all.push_back(v);
    auto same = induced_subgraph(wall.graph, all);
    CHECK(is_isomorphic(same.graph, wall.graph));

    CHECK_THROWS_AS(induced_subgraph(k4, {9}), std::invalid_argument);
}

TEST_CASE("line graph") {
    auto claw = complete_bipartite(1, 3);
    auto lg = line_graph(claw);
    CHECK(is_isomorphic(lg.graph, complete_graph(3)));

    auto p4 = path_graph(4);
    CHECK(is_isomorphic(line_graph(p4).graph, path_graph(3)));

    auto c5 = cycle_graph(5);
    CHECK(is_isomorphic(line_graph(c5).graph, c5));
}

TEST_CASE("line graph counts") {
    Rng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        auto g = random_graph(rng, 10, 0.3);
        auto lg = line_graph(g);
        CHECK(lg.graph.n() == g.m());
        long expect = 0;
        for (int v = 0; v < g.n(); ++v)
            expect += long(g.degree(v)) * (g.degree(v) - 1) / 2;
        CHECK(lg.graph.m() == expect);
    }
}

TEST_CASE("subdivide") {
    auto k3 = complete_graph(3);
    auto s = subdivide_uniform(k3, 2);
    CHECK(is_isomorphic(s.graph, cycle_graph(6)));

    auto k4 = complete_graph(4);
    auto same = subdivide_uniform(k4, 1);
    CHECK(is_isomorphic(same.graph, k4));

    // 1-subdivision of K_4: 4 branch vertices plus one per edge.
    auto s2 = subdivide_uniform(k4, 2);
    CHECK(s2.graph.n() == 4 + 6);
    CHECK_THROWS_AS(subdivide_uniform(k4, 0), std::invalid_argument);
}

TEST_CASE("girth") {
    CHECK(girth(cycle_graph(7)) == 7);
    CHECK_FALSE(girth(path_graph(6)).has_value());
    CHECK(girth(complete_graph(4)) == 3);

    auto j = make_davies(0, 2, 3);
    auto got = girth(j.graph);
    auto expect = girth_oracle(j.graph);
    REQUIRE(got.has_value());
    CHECK(got == expect);
    CHECK(*got >= 2 * 2 + 4);

    // girth multiplies under uniform subdivision
    Rng rng(3);
    for (int rep = 0; rep < 8; ++rep) {
        auto g = random_connected_graph(rng, 9, 0.35);
        auto base = girth(g);
        if (!base) continue;
        for (int r = 1; r <= 2; ++r) {
            auto s = subdivide_uniform(g, r + 1);
            CHECK(girth(s.graph) == (r + 1) * *base);
        }
    }
}

TEST_CASE("girth matches oracle on random graphs") {
    Rng rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        auto g = random_graph(rng, 10, 0.25);
        CHECK(girth(g) == girth_oracle(g));
    }
}

TEST_CASE("components and simplicial set") {
    auto p5 = path_graph(5);
    CHECK(simplicial_set(p5) == std::vector<int>{0, 4});
    CHECK(simplicial_set(complete_graph(4)) == std::vector<int>{0, 1, 2, 3});

    Graph two(5, {{0, 1}, {2, 3}});
    CHECK(components(two).size() == 3);
}

TEST_CASE("suppress bumps") {
    // C_6 with marks {0,1,3}: the runs 2 and 4-5 collapse to edges.
    auto c6 = cycle_graph(6);
    auto res = suppress_bumps(c6, {0, 1, 3});
    CHECK(res.kept == std::vector<int>{0, 1, 3});
    CHECK(is_isomorphic(res.graph, complete_graph(3)));

    // Re-subdivision recovers the original shape.
    Rng rng(5);
    for (int rep = 0; rep < 8; ++rep) {
        auto g = random_connected_graph(rng, 8, 0.3);
        std::vector<int> lengths;
        for (int e = 0; e < g.m(); ++e) lengths.push_back(1 + rng.below(3));
        auto s = subdivide(g, lengths);
        std::vector<int> marks;
        for (int v = 0; v < g.n(); ++v) marks.push_back(s.branch_of[v]);
        auto back = suppress_bumps(s.graph, marks);
        CHECK(is_isomorphic(back.graph, g));
    }
}

TEST_CASE("contract sets") {
    auto c6 = cycle_graph(6);
    auto two = contract_sets(c6, {{0, 1, 2}, {3, 4, 5}});
    CHECK(is_isomorphic(two.graph, complete_graph(2)));

    auto j = make_davies(0, 1, 3);
    auto contracted = contract_sets(j.graph, j.paths);
    // Hubs against contracted paths form a complete bipartite pattern.
    bool all = true;
    for (int i = 0; i < 3; ++i)
        for (int hub : j.hubs) all &= contracted.graph.has_edge(i, contracted.image[hub]);
    CHECK(all);

    auto same = contract_sets(c6, {});
    CHECK(is_isomorphic(same.graph, c6));

    CHECK_THROWS_AS(contract_sets(c6, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(contract_sets(c6, {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("paths and separations") {
    auto c5 = cycle_graph(5);
    CHECK(is_path(c5, PathSeq{{0, 1, 2}}));
    CHECK_FALSE(is_path(c5, PathSeq{{0, 2}}));
    CHECK(is_induced_path(c5, PathSeq{{0, 1, 2}}));
    CHECK(is_induced_path(c5, PathSeq{{1, 0, 4}}));
    CHECK_FALSE(is_induced_path(c5, PathSeq{{0, 1, 2, 3, 4}}));  // closing chord 4-0

    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Separation s{{0, 1}, {2}, {3, 4}};
    CHECK(is_separation(g, s));
    Separation bad{{0, 1, 2}, {}, {3, 4}};
    CHECK_FALSE(is_separation(g, bad));
}

TEST_CASE("maximal cliques") {
    auto k4 = complete_graph(4);
    auto cl = maximal_cliques(k4);
    REQUIRE(cl.size() == 1);
    CHECK(cl[0] == std::vector<int>{0, 1, 2, 3});

    auto c5 = cycle_graph(5);
    CHECK(maximal_cliques(c5).size() == 5);
}
