#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "routelab/corpus.hpp"
#include "routelab/error.hpp"
#include "routelab/oracle.hpp"
#include "routelab/random.hpp"
#include "routelab/routing.hpp"

using namespace routelab;
using namespace routelab::test;

namespace {

WeightedGraph two_nodes() { return make_graph(2, {{0, 1, 4}}); }

WeightedGraph star() { return make_graph(5, {{0, 1, 3}, {0, 2, 1}, {0, 3, 4}, {0, 4, 1}}); }

WeightedGraph equal_k4() {
    return make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

std::vector<EdgeId> all_edges(const WeightedGraph& g) { return {g.edges().begin(), g.edges().end()}; }

std::vector<GraphInstance> small_corpus(std::size_t count, std::uint64_t seed) {
    CorpusSpec spec;
    spec.graph_count = count;
    spec.max_nodes = 7;
    spec.weights = WeightDistribution::uniform_rational(1, 100, 1000);
    spec.seed = seed;
    return generate_corpus(spec);
}

}  // namespace

TEST_CASE("algorithm names round trip") {
    for (AlgorithmId id : kAllAlgorithms) CHECK(parse_algorithm(to_string(id)) == id);
    CHECK_THROWS_AS(parse_algorithm("dijkstra"), Error);
}

TEST_CASE("mst") {
    CHECK(mst_route(g_tri(), 2).edges() == edges({{0, 1}, {1, 2}}));
    CHECK(mst_route(g_tri(), 2).total_weight() == 2);
    CHECK(mst_route(g_wl(), 2).edges() == edges({{0, 2}, {1, 2}}));
    CHECK(mst_route(g_wl(), 2).total_weight() == 3);
    CHECK(mst_route(two_nodes(), 1).edges() == edges({{0, 1}}));
}

TEST_CASE("shortest path") {
    RoutingTree t = shortest_path_route(g_tri(), 2);
    CHECK(t.edges() == edges({{0, 1}, {1, 2}}));
    CHECK(tree_path(t, 0).edges == edges({{0, 1}, {1, 2}}));
    // Shifting by +2 makes the direct edge cheaper: 5 < 6.
    CHECK(shortest_path_route(shift_weights(g_tri(), 2), 2).edges() == edges({{0, 2}, {1, 2}}));
    CHECK(shortest_path_route(star(), 0).edges() == all_edges(star()));
    CHECK_THROWS_AS(shortest_path_route(shift_weights(g_tri(), -1), 2), Error);
    try {
        shortest_path_route(shift_weights(g_tri(), -1), 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPositiveWeight);
    }
}

TEST_CASE("weakest link") {
    RoutingTree t = weakest_link_route(g_wl(), 2);
    CHECK(t.edges() == edges({{0, 1}, {0, 2}}));
    CHECK(tree_path(t, 1).edges == edges({{0, 1}, {0, 2}}));
    CHECK(tree_path(weakest_link_route(g_tri(), 2), 0).edges == edges({{0, 2}}));
    CHECK(weakest_link_route(two_nodes(), 0).edges() == edges({{0, 1}}));
}

TEST_CASE("max spanning tree") {
    CHECK(max_spanning_tree_route(g_tri(), 2).edges() == edges({{0, 1}, {0, 2}}));
    CHECK(max_spanning_tree_route(two_nodes(), 0).edges() == edges({{0, 1}}));
    CHECK(max_spanning_tree_route(equal_k4(), 0).edges() == mst_route(equal_k4(), 0).edges());
}

TEST_CASE("longest path") {
    CHECK(longest_path_route(g_tri(), 2).edges() == edges({{0, 1}, {0, 2}}));
    CHECK(longest_path_route(two_nodes(), 0).edges() == edges({{0, 1}}));
    CHECK(longest_path_route(star(), 0).edges() == all_edges(star()));
    // Fewest hops: every node of the triangle is adjacent to d.
    CHECK(longest_path_route(g_tri(), 2, PathTreeConstruction::FewestHops).edges() == edges({{0, 2}, {1, 2}}));
    // Square 0-1-2-3-0 with d = 0: node 2 has two 2-hop paths, sums 1+5 and 2+1.
    WeightedGraph square = make_graph(4, {{0, 1, 5}, {1, 2, 1}, {2, 3, 2}, {0, 3, 1}});
    CHECK(tree_path(longest_path_route(square, 0, PathTreeConstruction::FewestHops), 2).edges ==
          edges({{1, 2}, {0, 1}}));

    std::vector<WeightedEdge> big;
    for (NodeId v = 1; v < 13; ++v) big.push_back({EdgeId(0, v), Weight(1)});
    WeightedGraph g13(13, big);
    try {
        longest_path_route(g13, 0);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("strongest link") {
    // Node 1's own best path goes via 0 (max 5 against 1), but node 0 commits 0-1-2 first.
    Weight best_via_max = 0;
    std::vector<EdgeId> best_path;
    const WeightedGraph wl = g_wl();
    for (const Path& p : enumerate_simple_paths(wl, 1, 2)) {
        Weight m = 0;
        for (const EdgeId& e : p.edges) m = std::max(m, wl.weight(e));
        if (m > best_via_max) {
            best_via_max = m;
            best_path = p.edges;
        }
    }
    CHECK(best_path == edges({{0, 1}, {0, 2}}));
    CHECK(tree_path(strongest_link_route(g_wl(), 2), 0).edges == edges({{0, 1}, {1, 2}}));
    CHECK(tree_path(strongest_link_route(g_wl(), 2), 1).edges == edges({{1, 2}}));
    CHECK(strongest_link_route(two_nodes(), 0).edges() == edges({{0, 1}}));
    // All weights equal: node 1 takes its lexicographically first path, the direct edge.
    CHECK(strongest_link_route(equal_k4(), 0).edges() == edges({{0, 1}, {0, 2}, {0, 3}}));
    // Min-of-min prefers the path through the weakest edge.
    CHECK(tree_path(strongest_link_route(g_wl(), 2, StrongestLinkReading::MinOfMin), 0).edges ==
          edges({{0, 1}, {1, 2}}));
    CHECK(tree_path(strongest_link_route(g_wl(), 2, StrongestLinkReading::MaxOfMax, PathTreeConstruction::FewestHops),
                    1)
              .edges == edges({{1, 2}}));
}

TEST_CASE("router names and domains") {
    CHECK(make_router(AlgorithmId::Mst).name == "mst");
    CHECK(make_router(AlgorithmId::StrongestLink, {StrongestLinkReading::MinOfMin}).name == "strongest-link/min-of-min");
    CHECK(make_router(AlgorithmId::LongestPath, {StrongestLinkReading::MaxOfMax, PathTreeConstruction::FewestHops})
              .name == "longest-path/fewest-hops");
    CHECK_FALSE(make_router(AlgorithmId::ShortestPath).accepts(shift_weights(g_tri(), -1)));
    CHECK(make_router(AlgorithmId::Mst).accepts(shift_weights(g_tri(), -1)));
    for (AlgorithmId id : kAllAlgorithms) {
        CHECK(make_router(id).route(g_wl(), 2).edges() == route(id, g_wl(), 2).edges());
    }
}

TEST_CASE("input order does not matter") {
    for (const auto& inst : small_corpus(40, 3)) {
        auto shuffled = inst.graph.weighted_edges();
        Rng rng(derive_seed(9, inst.graph.edge_count()));
        rng.shuffle(shuffled.begin(), shuffled.end());
        WeightedGraph h(inst.graph.node_count(), shuffled);
        for (AlgorithmId id : kAllAlgorithms) {
            CHECK(route(id, h, inst.destination).edges() == route(id, inst.graph, inst.destination).edges());
        }
    }
}

TEST_CASE("mst does not depend on the destination") {
    for (const auto& inst : small_corpus(60, 5)) {
        const auto reference = mst_route(inst.graph, 0).edges();
        for (NodeId d = 1; d < inst.graph.node_count(); ++d) CHECK(mst_route(inst.graph, d).edges() == reference);
    }
}
