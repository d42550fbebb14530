#ifndef ROUTELAB_TESTS_FIXTURES_HPP
#define ROUTELAB_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <tuple>
#include <vector>

#include "routelab/graph.hpp"

namespace routelab::test {

inline WeightedGraph make_graph(std::size_t n, std::initializer_list<std::tuple<NodeId, NodeId, long>> edges) {
    std::vector<WeightedEdge> out;
    for (const auto& [u, v, w] : edges) out.push_back({EdgeId(u, v), Weight(w)});
    return WeightedGraph(n, std::move(out));
}

// Triangle where the two-hop path 0-1-2 beats the direct edge (0,2).
inline WeightedGraph g_tri() { return make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}}); }

// Triangle where the weakest-link and MST trees differ.
inline WeightedGraph g_wl() { return make_graph(3, {{0, 1, 5}, {1, 2, 1}, {0, 2, 2}}); }

inline std::vector<EdgeId> edges(std::initializer_list<std::pair<NodeId, NodeId>> list) {
    std::vector<EdgeId> out;
    for (const auto& [u, v] : list) out.emplace_back(u, v);
    return out;
}

}  // namespace routelab::test

#endif  // ROUTELAB_TESTS_FIXTURES_HPP
