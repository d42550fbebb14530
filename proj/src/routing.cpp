#include "routelab/routing.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "routelab/detail/disjoint_sets.hpp"
#include "routelab/error.hpp"

namespace routelab {

std::string_view to_string(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::Mst: return "mst";
        case AlgorithmId::ShortestPath: return "shortest-path";
        case AlgorithmId::WeakestLink: return "weakest-link";
        case AlgorithmId::MaxSpanningTree: return "max-spanning-tree";
        case AlgorithmId::LongestPath: return "longest-path";
        case AlgorithmId::StrongestLink: return "strongest-link";
    }
    return "unknown";
}

AlgorithmId parse_algorithm(std::string_view name) {
    for (AlgorithmId id : kAllAlgorithms) {
        if (to_string(id) == name) return id;
    }
    throw Error(ErrorKind::UnknownName, "unknown algorithm '" + std::string(name) + "'");
}

namespace {

enum class Order { Ascending, Descending };

RoutingTree kruskal(const WeightedGraph& g, NodeId d, Order order) {
    std::vector<std::size_t> idx(g.edge_count());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const auto weights = g.weights();
    // edges() is already in EdgeId order, so a stable sort keeps it as the tie-break.
    if (order == Order::Ascending) {
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
    } else {
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
    }
    detail::DisjointSets sets(g.node_count());
    std::vector<EdgeId> chosen;
    chosen.reserve(g.node_count() - 1);
    for (std::size_t i : idx) {
        EdgeId e = g.edges()[i];
        if (sets.unite(e.u, e.v)) chosen.push_back(e);
        if (chosen.size() + 1 == g.node_count()) break;
    }
    return RoutingTree(g, d, std::move(chosen));
}

void check_destination(const WeightedGraph& g, NodeId d) {
    if (d >= g.node_count()) throw Error(ErrorKind::InvariantViolation, "destination out of range");
}

// Path ranking for the brute-force constructions. Returns true if a beats b
// on the primary criterion; equal keys fall through to edge-sequence order.
struct PathKey {
    Weight sum = 0;
    Weight max;
    Weight min;
};

PathKey key_of(const WeightedGraph& g, const std::vector<EdgeId>& edges) {
    PathKey k;
    bool first = true;
    for (EdgeId e : edges) {
        const Weight& w = g.weight(e);
        k.sum += w;
        if (first || w > k.max) k.max = w;
        if (first || w < k.min) k.min = w;
        first = false;
    }
    return k;
}

enum class Criterion { LongestSum, MaxOfMax, MinOfMin };

// -1 if a is preferred, +1 if b is preferred, 0 if the keys tie.
int compare_keys(const PathKey& a, const PathKey& b, Criterion c) {
    auto pick = [](bool a_better, bool b_better) { return a_better ? -1 : (b_better ? 1 : 0); };
    switch (c) {
        case Criterion::LongestSum: return pick(a.sum > b.sum, b.sum > a.sum);
        case Criterion::MaxOfMax: {
            if (int r = pick(a.max > b.max, b.max > a.max)) return r;
            return pick(a.min > b.min, b.min > a.min);
        }
        case Criterion::MinOfMin: {
            if (int r = pick(a.min < b.min, b.min < a.min)) return r;
            return pick(a.max < b.max, b.max < a.max);
        }
    }
    return 0;
}

class GreedyPathCommit {
public:
    GreedyPathCommit(const WeightedGraph& g, NodeId d, Criterion c)
        : g_(g), criterion_(c), committed_(g.node_count()), on_stack_(g.node_count(), false) {
        committed_[d] = std::vector<EdgeId>{};
    }

    RoutingTree build(NodeId d) {
        for (NodeId v = 0; v < g_.node_count(); ++v) {
            if (committed_[v]) continue;
            best_.reset();
            prefix_.clear();
            on_stack_[v] = true;
            search(v);
            on_stack_[v] = false;
            commit(v, *best_);
        }
        std::vector<EdgeId> tree;
        for (NodeId v = 0; v < g_.node_count(); ++v) {
            if (v != d) tree.push_back(committed_[v]->front());
        }
        return RoutingTree(g_, d, std::move(tree));
    }

private:
    void search(NodeId cur) {
        for (const auto& nb : g_.neighbors(cur)) {
            if (on_stack_[nb.node]) continue;
            EdgeId e(cur, nb.node);
            if (committed_[nb.node]) {
                std::vector<EdgeId> candidate = prefix_;
                candidate.push_back(e);
                const auto& suffix = *committed_[nb.node];
                candidate.insert(candidate.end(), suffix.begin(), suffix.end());
                consider(std::move(candidate));
            } else {
                on_stack_[nb.node] = true;
                prefix_.push_back(e);
                search(nb.node);
                prefix_.pop_back();
                on_stack_[nb.node] = false;
            }
        }
    }

    void consider(std::vector<EdgeId> candidate) {
        PathKey key = key_of(g_, candidate);
        if (best_) {
            int cmp = compare_keys(key, best_key_, criterion_);
            if (cmp > 0 || (cmp == 0 && !(candidate < *best_))) return;
        }
        best_ = std::move(candidate);
        best_key_ = std::move(key);
    }

    void commit(NodeId v, const std::vector<EdgeId>& path) {
        NodeId cur = v;
        for (std::size_t i = 0; i < path.size() && !committed_[cur]; ++i) {
            committed_[cur] = std::vector<EdgeId>(path.begin() + static_cast<std::ptrdiff_t>(i), path.end());
            cur = path[i].other(cur);
        }
    }

    const WeightedGraph& g_;
    Criterion criterion_;
    std::vector<std::optional<std::vector<EdgeId>>> committed_;
    std::vector<bool> on_stack_;
    std::vector<EdgeId> prefix_;
    std::optional<std::vector<EdgeId>> best_;
    PathKey best_key_;
};

// Per-node value of the best fewest-hop path, built layer by layer outward
// from d. Only the primary criterion is compared, so every criterion here is
// isotone: a node's best path extends its parent's best path.
RoutingTree fewest_hop_tree(const WeightedGraph& g, NodeId d, Criterion c) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> hops(n, n);
    std::vector<NodeId> order{d};
    hops[d] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& nb : g.neighbors(order[i])) {
            if (hops[nb.node] == n) {
                hops[nb.node] = hops[order[i]] + 1;
                order.push_back(nb.node);
            }
        }
    }
    std::vector<Weight> value(n);
    std::vector<EdgeId> tree;
    tree.reserve(n - 1);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const NodeId v = order[i];
        std::optional<NodeId> parent;
        for (const auto& nb : g.neighbors(v)) {
            if (hops[nb.node] + 1 != hops[v]) continue;
            const Weight& w = g.weights()[nb.edge];
            Weight candidate;
            if (nb.node == d) {
                candidate = w;
            } else if (c == Criterion::LongestSum) {
                candidate = value[nb.node] + w;
            } else if (c == Criterion::MaxOfMax) {
                candidate = std::max(value[nb.node], w);
            } else {
                candidate = std::min(value[nb.node], w);
            }
            const bool better = !parent || (c == Criterion::MinOfMin ? candidate < value[v] : candidate > value[v]);
            if (better) {  // neighbors ascend, so ties keep the smaller id
                parent = nb.node;
                value[v] = candidate;
            }
        }
        tree.emplace_back(v, *parent);
    }
    return RoutingTree(g, d, std::move(tree));
}

RoutingTree path_tree(const WeightedGraph& g, NodeId d, Criterion c, PathTreeConstruction construction) {
    check_destination(g, d);
    if (g.node_count() > kBruteForceMaxNodes) {
        throw Error(ErrorKind::TooLarge, std::to_string(g.node_count()) + " nodes exceeds brute-force bound of " +
                                             std::to_string(kBruteForceMaxNodes));
    }
    if (construction == PathTreeConstruction::FewestHops) return fewest_hop_tree(g, d, c);
    return GreedyPathCommit(g, d, c).build(d);
}

}  // namespace

RoutingTree mst_route(const WeightedGraph& g, NodeId d) {
    check_destination(g, d);
    return kruskal(g, d, Order::Ascending);
}

RoutingTree shortest_path_route(const WeightedGraph& g, NodeId d) {
    check_destination(g, d);
    if (!all_positive(g)) throw Error(ErrorKind::NonPositiveWeight, "shortest path requires positive weights");

    const std::size_t n = g.node_count();
    std::vector<std::optional<Weight>> dist(n);
    std::vector<bool> done(n, false);
    dist[d] = Weight(0);
    // O(n^2) selection; graphs here are small and dense.
    for (std::size_t round = 0; round < n; ++round) {
        std::optional<NodeId> next;
        for (NodeId v = 0; v < n; ++v) {
            if (done[v] || !dist[v]) continue;
            if (!next || *dist[v] < *dist[*next]) next = v;
        }
        if (!next) break;
        done[*next] = true;
        for (const auto& nb : g.neighbors(*next)) {
            Weight cand = *dist[*next] + g.weights()[nb.edge];
            if (!dist[nb.node] || cand < *dist[nb.node]) dist[nb.node] = cand;
        }
    }

    std::vector<EdgeId> tree;
    tree.reserve(n - 1);
    for (NodeId v = 0; v < n; ++v) {
        if (v == d) continue;
        std::optional<NodeId> parent;
        for (const auto& nb : g.neighbors(v)) {
            if (*dist[nb.node] + g.weights()[nb.edge] != *dist[v]) continue;
            if (!parent || *dist[nb.node] < *dist[*parent]) parent = nb.node;  // neighbors ascend, so ties keep the smaller id
        }
        tree.emplace_back(v, *parent);
    }
    return RoutingTree(g, d, std::move(tree));
}

RoutingTree weakest_link_route(const WeightedGraph& g, NodeId d) {
    check_destination(g, d);
    return kruskal(g, d, Order::Descending);
}

RoutingTree max_spanning_tree_route(const WeightedGraph& g, NodeId d) {
    check_destination(g, d);
    return kruskal(g, d, Order::Descending);
}

RoutingTree longest_path_route(const WeightedGraph& g, NodeId d, PathTreeConstruction construction) {
    return path_tree(g, d, Criterion::LongestSum, construction);
}

RoutingTree strongest_link_route(const WeightedGraph& g, NodeId d, StrongestLinkReading reading,
                                 PathTreeConstruction construction) {
    return path_tree(g, d, reading == StrongestLinkReading::MaxOfMax ? Criterion::MaxOfMax : Criterion::MinOfMin,
                     construction);
}

RoutingTree route(AlgorithmId id, const WeightedGraph& g, NodeId d) {
    switch (id) {
        case AlgorithmId::Mst: return mst_route(g, d);
        case AlgorithmId::ShortestPath: return shortest_path_route(g, d);
        case AlgorithmId::WeakestLink: return weakest_link_route(g, d);
        case AlgorithmId::MaxSpanningTree: return max_spanning_tree_route(g, d);
        case AlgorithmId::LongestPath: return longest_path_route(g, d);
        case AlgorithmId::StrongestLink: return strongest_link_route(g, d);
    }
    throw Error(ErrorKind::UnknownName, "unknown algorithm");
}

Router make_router(AlgorithmId id, RouterVariant variant) {
    Router r;
    r.name = std::string(to_string(id));
    switch (id) {
        case AlgorithmId::ShortestPath:
            r.accepts = [](const WeightedGraph& g) { return all_positive(g); };
            break;
        case AlgorithmId::LongestPath:
        case AlgorithmId::StrongestLink:
            r.accepts = [](const WeightedGraph& g) { return g.node_count() <= kBruteForceMaxNodes; };
            break;
        default:
            r.accepts = [](const WeightedGraph&) { return true; };
    }
    const auto construction = variant.construction;
    if (id == AlgorithmId::StrongestLink) {
        const auto reading = variant.reading;
        if (reading == StrongestLinkReading::MinOfMin) r.name += "/min-of-min";
        if (construction == PathTreeConstruction::FewestHops) r.name += "/fewest-hops";
        r.route = [reading, construction](const WeightedGraph& g, NodeId d) {
            return strongest_link_route(g, d, reading, construction);
        };
    } else if (id == AlgorithmId::LongestPath) {
        if (construction == PathTreeConstruction::FewestHops) r.name += "/fewest-hops";
        r.route = [construction](const WeightedGraph& g, NodeId d) { return longest_path_route(g, d, construction); };
    } else {
        r.route = [id](const WeightedGraph& g, NodeId d) { return route(id, g, d); };
    }
    return r;
}

}  // namespace routelab
