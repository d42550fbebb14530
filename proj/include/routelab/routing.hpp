#ifndef ROUTELAB_ROUTING_HPP
#define ROUTELAB_ROUTING_HPP

#include <functional>
#include <string>
#include <string_view>

#include "routelab/graph.hpp"

namespace routelab {

enum class AlgorithmId {
    Mst,
    ShortestPath,
    WeakestLink,
    MaxSpanningTree,
    LongestPath,
    StrongestLink,
};

inline constexpr AlgorithmId kAllAlgorithms[] = {
    AlgorithmId::Mst,         AlgorithmId::ShortestPath, AlgorithmId::WeakestLink,
    AlgorithmId::MaxSpanningTree, AlgorithmId::LongestPath, AlgorithmId::StrongestLink,
};

// Largest graph the brute-force path constructions accept.
inline constexpr std::size_t kBruteForceMaxNodes = 12;

// Lowercase hyphenated CLI names: "mst", "shortest-path", ...
std::string_view to_string(AlgorithmId id);
// Throws Error{UnknownName}.
AlgorithmId parse_algorithm(std::string_view name);

// The strongest-link tree has two readings: maximize the largest edge on the
// path, or minimize the smallest one.
enum class StrongestLinkReading { MaxOfMax, MinOfMin };

// How the brute-force path trees reconcile per-node preferences.
enum class PathTreeConstruction {
    // Nodes in ascending id each take their best simple path consistent with
    // the paths already committed.
    GreedyNodeOrder,
    // Restrict every node to its fewest-hop paths and take the best of those
    // by dynamic programming over the hop layers (a DAG), parent ties to the
    // smaller id.
    FewestHops,
};

struct RouterVariant {
    StrongestLinkReading reading = StrongestLinkReading::MaxOfMax;
    PathTreeConstruction construction = PathTreeConstruction::GreedyNodeOrder;
};

// Kruskal over (weight ascending, EdgeId ascending). Destination only orients the tree.
RoutingTree mst_route(const WeightedGraph& g, NodeId d);

// Dijkstra toward d. Each node's parent is the neighbor u with
// dist(u) + w(u, v) == dist(v) minimizing (dist(u), u).
// Throws Error{NonPositiveWeight} if any weight <= 0.
RoutingTree shortest_path_route(const WeightedGraph& g, NodeId d);

// Maximin paths for all nodes at once, realized as a maximum spanning tree
// (Kruskal over weight descending, EdgeId ascending).
RoutingTree weakest_link_route(const WeightedGraph& g, NodeId d);

RoutingTree max_spanning_tree_route(const WeightedGraph& g, NodeId d);

// Brute force; nodes are visited in ascending id and each picks its best
// simple path consistent with the paths already committed, which then become
// fixed suffixes. Ties go to the lexicographically smaller edge sequence.
// Throws Error{TooLarge} above kBruteForceMaxNodes.
RoutingTree longest_path_route(const WeightedGraph& g, NodeId d,
                               PathTreeConstruction construction = PathTreeConstruction::GreedyNodeOrder);
RoutingTree strongest_link_route(const WeightedGraph& g, NodeId d,
                                 StrongestLinkReading reading = StrongestLinkReading::MaxOfMax,
                                 PathTreeConstruction construction = PathTreeConstruction::GreedyNodeOrder);

RoutingTree route(AlgorithmId id, const WeightedGraph& g, NodeId d);

// A routing function plus its input precondition. Checkers work against this
// so that composite (hybrid) functions can be tested the same way.
struct Router {
    std::string name;
    std::function<RoutingTree(const WeightedGraph&, NodeId)> route;
    // False when g is outside the function's domain (e.g. non-positive
    // weights for shortest path). Checkers skip such instances.
    std::function<bool(const WeightedGraph&)> accepts;
};

// Names carry the variant when it is not the default, e.g.
// "longest-path/fewest-hops" or "strongest-link/min-of-min".
Router make_router(AlgorithmId id, RouterVariant variant = {});

}  // namespace routelab

#endif  // ROUTELAB_ROUTING_HPP
