#ifndef ROUTELAB_GRAPH_HPP
#define ROUTELAB_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "routelab/weight.hpp"

namespace routelab {

using NodeId = std::uint32_t;

// Undirected edge identity: the endpoint pair, stored with u < v.
// Ordering is lexicographic on (u, v) and is the tie-break order used by
// every routing function.
struct EdgeId {
    NodeId u = 0;
    NodeId v = 0;

    EdgeId() = default;
    EdgeId(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool touches(NodeId x) const { return u == x || v == x; }
    NodeId other(NodeId x) const { return x == u ? v : u; }

    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct WeightedEdge {
    EdgeId id;
    Weight weight;
};

// Immutable, simple, connected, undirected graph with exact weights.
// Copies share storage; every "modifying" operation returns a new graph.
class WeightedGraph {
public:
    struct Neighbor {
        NodeId node;
        std::size_t edge;  // index into edges()
    };

    // Throws Error{InvariantViolation} on loops, parallel edges, endpoints
    // out of range, or a disconnected result.
    WeightedGraph(std::size_t node_count, std::vector<WeightedEdge> edges);

    std::size_t node_count() const { return data_->n; }
    std::size_t edge_count() const { return data_->edges.size(); }

    // Sorted lexicographically by EdgeId.
    std::span<const EdgeId> edges() const { return data_->edges; }
    std::span<const Weight> weights() const { return data_->weights; }
    std::span<const Neighbor> neighbors(NodeId v) const { return data_->adjacency[v]; }

    std::optional<std::size_t> index_of(EdgeId e) const;
    bool contains(EdgeId e) const { return index_of(e).has_value(); }
    // Throws Error{UnknownEdge}.
    const Weight& weight(EdgeId e) const;

    std::vector<WeightedEdge> weighted_edges() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    struct Data {
        std::size_t n = 0;
        std::vector<EdgeId> edges;
        std::vector<Weight> weights;
        std::vector<std::vector<Neighbor>> adjacency;
    };
    std::shared_ptr<const Data> data_;
};

// Simple path from source to destination as an ordered edge list.
// Empty when source == destination.
struct Path {
    NodeId source = 0;
    NodeId destination = 0;
    std::vector<EdgeId> edges;

    std::vector<NodeId> nodes() const;
    std::optional<EdgeId> first_hop() const {
        if (edges.empty()) return std::nullopt;
        return edges.front();
    }
    bool contains(EdgeId e) const;

    friend bool operator==(const Path&, const Path&) = default;
};

// Spanning tree of a graph oriented toward a destination.
class RoutingTree {
public:
    // Throws Error{InvariantViolation} unless tree_edges is a spanning tree of g.
    RoutingTree(WeightedGraph g, NodeId destination, std::vector<EdgeId> tree_edges);

    const WeightedGraph& graph() const { return graph_; }
    NodeId destination() const { return destination_; }
    // Sorted lexicographically.
    const std::vector<EdgeId>& edges() const { return edges_; }
    bool contains(EdgeId e) const;

    // Next node toward the destination; nullopt for the destination itself.
    std::optional<NodeId> parent(NodeId v) const;
    std::optional<EdgeId> parent_edge(NodeId v) const;

    // True iff the tree path from `from` to the destination visits `through`.
    bool path_passes(NodeId from, NodeId through) const;

    Weight total_weight() const;

private:
    WeightedGraph graph_;
    NodeId destination_;
    std::vector<EdgeId> edges_;
    std::vector<std::optional<NodeId>> parent_;
};

// Edge-set equality; the trees must belong to equal graphs for this to be meaningful.
bool same_edges(const RoutingTree& a, const RoutingTree& b);

Path tree_path(const RoutingTree& tree, NodeId v);

bool is_bridge(const WeightedGraph& g, EdgeId e);

// Throws Error{BridgeRemoval} if e is a bridge, Error{UnknownEdge} if e is absent.
WeightedGraph remove_edge(const WeightedGraph& g, EdgeId e);

// Every weight w becomes scale * w + shift. Any scale is accepted here.
WeightedGraph transform_weights(const WeightedGraph& g, const Weight& scale, const Weight& shift);
// Scale-invariance transformation; throws Error{NonPositiveScale} for alpha <= 0.
WeightedGraph scale_weights(const WeightedGraph& g, const Weight& alpha);
WeightedGraph shift_weights(const WeightedGraph& g, const Weight& alpha);

// Throws Error{UnknownEdge}.
WeightedGraph set_edge_weight(const WeightedGraph& g, EdgeId e, const Weight& w);
WeightedGraph set_edge_weights(const WeightedGraph& g, std::span<const WeightedEdge> updates);

bool is_connected(std::size_t n, std::span<const EdgeId> edges);
// Number of independent cycles, m - n + 1 for a connected graph.
std::size_t cyclomatic_number(const WeightedGraph& g);
bool is_unicyclic(const WeightedGraph& g);
// Edges of the unique cycle. Throws Error{NotUnicyclic}.
std::vector<EdgeId> unique_cycle(const WeightedGraph& g);

Weight max_abs_weight(const WeightedGraph& g);
bool all_positive(const WeightedGraph& g);
bool distinct_weights(const WeightedGraph& g);

}  // namespace routelab

#endif  // ROUTELAB_GRAPH_HPP
