#include "routelab/graph.hpp"

#include <algorithm>
#include <string>

#include "routelab/detail/disjoint_sets.hpp"
#include "routelab/error.hpp"

namespace routelab {

namespace {

std::string edge_text(EdgeId e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t node_count, std::vector<WeightedEdge> edges) {
    if (node_count == 0) throw Error(ErrorKind::InvariantViolation, "graph has no nodes");
    for (const auto& e : edges) {
        if (e.id.u == e.id.v) {
            throw Error(ErrorKind::InvariantViolation, "self-loop at node " + std::to_string(e.id.u));
        }
        if (e.id.v >= node_count) {
            throw Error(ErrorKind::InvariantViolation,
                        "edge " + edge_text(e.id) + " has endpoint >= " + std::to_string(node_count));
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].id == edges[i - 1].id) {
            throw Error(ErrorKind::InvariantViolation, "parallel edge " + edge_text(edges[i].id));
        }
    }

    auto data = std::make_shared<Data>();
    data->n = node_count;
    data->edges.reserve(edges.size());
    data->weights.reserve(edges.size());
    data->adjacency.resize(node_count);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        data->edges.push_back(edges[i].id);
        data->weights.push_back(std::move(edges[i].weight));
        data->adjacency[edges[i].id.u].push_back({edges[i].id.v, i});
        data->adjacency[edges[i].id.v].push_back({edges[i].id.u, i});
    }
    for (auto& adj : data->adjacency) {
        std::sort(adj.begin(), adj.end(), [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }
    if (!is_connected(node_count, data->edges)) {
        throw Error(ErrorKind::InvariantViolation, "graph is disconnected");
    }
    data_ = std::move(data);
}

std::optional<std::size_t> WeightedGraph::index_of(EdgeId e) const {
    const auto& edges = data_->edges;
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
}

const Weight& WeightedGraph::weight(EdgeId e) const {
    auto idx = index_of(e);
    if (!idx) throw Error(ErrorKind::UnknownEdge, "edge " + edge_text(e) + " not in graph");
    return data_->weights[*idx];
}

std::vector<WeightedEdge> WeightedGraph::weighted_edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i) out.push_back({data_->edges[i], data_->weights[i]});
    return out;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->n == b.data_->n && a.data_->edges == b.data_->edges && a.data_->weights == b.data_->weights;
}

std::vector<NodeId> Path::nodes() const {
    std::vector<NodeId> out{source};
    NodeId cur = source;
    for (EdgeId e : edges) {
        cur = e.other(cur);
        out.push_back(cur);
    }
    return out;
}

bool Path::contains(EdgeId e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

RoutingTree::RoutingTree(WeightedGraph g, NodeId destination, std::vector<EdgeId> tree_edges)
    : graph_(std::move(g)), destination_(destination), edges_(std::move(tree_edges)) {
    const std::size_t n = graph_.node_count();
    if (destination_ >= n) throw Error(ErrorKind::InvariantViolation, "destination out of range");
    std::sort(edges_.begin(), edges_.end());
    if (edges_.size() != n - 1) {
        throw Error(ErrorKind::InvariantViolation,
                    "tree has " + std::to_string(edges_.size()) + " edges, expected " + std::to_string(n - 1));
    }
    for (EdgeId e : edges_) {
        if (!graph_.contains(e)) throw Error(ErrorKind::InvariantViolation, "tree edge " + edge_text(e) + " not in graph");
    }
    // n - 1 edges that connect all n nodes form a spanning tree.
    if (!is_connected(n, edges_)) throw Error(ErrorKind::InvariantViolation, "tree edges do not span the graph");

    std::vector<std::vector<NodeId>> adj(n);
    for (EdgeId e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    parent_.assign(n, std::nullopt);
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack{destination_};
    seen[destination_] = true;
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (NodeId y : adj[x]) {
            if (seen[y]) continue;
            seen[y] = true;
            parent_[y] = x;
            stack.push_back(y);
        }
    }
}

bool RoutingTree::contains(EdgeId e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<NodeId> RoutingTree::parent(NodeId v) const { return parent_.at(v); }

std::optional<EdgeId> RoutingTree::parent_edge(NodeId v) const {
    auto p = parent_.at(v);
    if (!p) return std::nullopt;
    return EdgeId(v, *p);
}

bool RoutingTree::path_passes(NodeId from, NodeId through) const {
    for (std::optional<NodeId> cur = from; cur; cur = parent_[*cur]) {
        if (*cur == through) return true;
    }
    return false;
}

Weight RoutingTree::total_weight() const {
    Weight total = 0;
    for (EdgeId e : edges_) total += graph_.weight(e);
    return total;
}

bool same_edges(const RoutingTree& a, const RoutingTree& b) { return a.edges() == b.edges(); }

Path tree_path(const RoutingTree& tree, NodeId v) {
    if (v >= tree.graph().node_count()) throw Error(ErrorKind::InvariantViolation, "node out of range");
    Path path{v, tree.destination(), {}};
    for (NodeId cur = v; auto next = tree.parent(cur); cur = *next) {
        path.edges.emplace_back(cur, *next);
    }
    return path;
}

bool is_connected(std::size_t n, std::span<const EdgeId> edges) {
    detail::DisjointSets sets(n);
    std::size_t components = n;
    for (EdgeId e : edges) {
        if (sets.unite(e.u, e.v)) --components;
    }
    return components == 1;
}

bool is_bridge(const WeightedGraph& g, EdgeId e) {
    if (!g.contains(e)) throw Error(ErrorKind::UnknownEdge, "edge " + edge_text(e) + " not in graph");
    std::vector<EdgeId> rest;
    rest.reserve(g.edge_count() - 1);
    for (EdgeId f : g.edges()) {
        if (f != e) rest.push_back(f);
    }
    return !is_connected(g.node_count(), rest);
}

WeightedGraph remove_edge(const WeightedGraph& g, EdgeId e) {
    if (is_bridge(g, e)) throw Error(ErrorKind::BridgeRemoval, "edge " + edge_text(e) + " is a bridge");
    std::vector<WeightedEdge> rest;
    for (auto& we : g.weighted_edges()) {
        if (we.id != e) rest.push_back(std::move(we));
    }
    return WeightedGraph(g.node_count(), std::move(rest));
}

WeightedGraph transform_weights(const WeightedGraph& g, const Weight& scale, const Weight& shift) {
    auto edges = g.weighted_edges();
    for (auto& e : edges) e.weight = scale * e.weight + shift;
    return WeightedGraph(g.node_count(), std::move(edges));
}

WeightedGraph scale_weights(const WeightedGraph& g, const Weight& alpha) {
    if (sgn(alpha) <= 0) throw Error(ErrorKind::NonPositiveScale, "scale " + format_weight(alpha) + " is not positive");
    return transform_weights(g, alpha, 0);
}

WeightedGraph shift_weights(const WeightedGraph& g, const Weight& alpha) { return transform_weights(g, 1, alpha); }

WeightedGraph set_edge_weight(const WeightedGraph& g, EdgeId e, const Weight& w) {
    WeightedEdge update{e, w};
    return set_edge_weights(g, std::span<const WeightedEdge>(&update, 1));
}

WeightedGraph set_edge_weights(const WeightedGraph& g, std::span<const WeightedEdge> updates) {
    auto edges = g.weighted_edges();
    for (const auto& u : updates) {
        auto idx = g.index_of(u.id);
        if (!idx) throw Error(ErrorKind::UnknownEdge, "edge " + edge_text(u.id) + " not in graph");
        edges[*idx].weight = u.weight;
    }
    return WeightedGraph(g.node_count(), std::move(edges));
}

std::size_t cyclomatic_number(const WeightedGraph& g) { return g.edge_count() - g.node_count() + 1; }

bool is_unicyclic(const WeightedGraph& g) { return cyclomatic_number(g) == 1; }

std::vector<EdgeId> unique_cycle(const WeightedGraph& g) {
    if (!is_unicyclic(g)) {
        throw Error(ErrorKind::NotUnicyclic, "graph has " + std::to_string(g.edge_count()) + " edges on " +
                                                 std::to_string(g.node_count()) + " nodes");
    }
    // Peel degree-1 nodes; what remains is the cycle.
    const std::size_t n = g.node_count();
    std::vector<std::size_t> degree(n);
    for (NodeId v = 0; v < n; ++v) degree[v] = g.neighbors(v).size();
    std::vector<bool> removed(n, false);
    std::vector<NodeId> leaves;
    for (NodeId v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        NodeId v = leaves.back();
        leaves.pop_back();
        removed[v] = true;
        for (const auto& nb : g.neighbors(v)) {
            if (!removed[nb.node] && --degree[nb.node] == 1) leaves.push_back(nb.node);
        }
    }
    std::vector<EdgeId> cycle;
    for (EdgeId e : g.edges()) {
        if (!removed[e.u] && !removed[e.v]) cycle.push_back(e);
    }
    return cycle;
}

Weight max_abs_weight(const WeightedGraph& g) {
    Weight m = 0;
    for (const auto& w : g.weights()) {
        Weight a = abs(w);
        if (a > m) m = a;
    }
    return m;
}

bool all_positive(const WeightedGraph& g) {
    return std::all_of(g.weights().begin(), g.weights().end(), [](const Weight& w) { return sgn(w) > 0; });
}

bool distinct_weights(const WeightedGraph& g) {
    std::vector<Weight> ws(g.weights().begin(), g.weights().end());
    std::sort(ws.begin(), ws.end());
    return std::adjacent_find(ws.begin(), ws.end()) == ws.end();
}

}  // namespace routelab
