#include "routelab/oracle.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "routelab/detail/disjoint_sets.hpp"
#include "routelab/error.hpp"

namespace routelab {

namespace {

void check_bound(const WeightedGraph& g) {
    if (g.node_count() > kOracleMaxNodes) {
        throw Error(ErrorKind::TooLarge, std::to_string(g.node_count()) + " nodes exceeds oracle bound of " +
                                             std::to_string(kOracleMaxNodes));
    }
}

class SpanningTreeEnumerator {
public:
    explicit SpanningTreeEnumerator(const WeightedGraph& g) : g_(g) {}

    std::vector<std::vector<EdgeId>> run() {
        recurse(0);
        return std::move(out_);
    }

private:
    bool forms_cycle(EdgeId e) const {
        detail::DisjointSets sets(g_.node_count());
        for (EdgeId c : chosen_) sets.unite(c.u, c.v);
        return sets.find(e.u) == sets.find(e.v);
    }

    // Can the chosen edges plus edges[from..] still span the graph?
    bool can_complete(std::size_t from) const {
        std::vector<EdgeId> pool = chosen_;
        pool.insert(pool.end(), g_.edges().begin() + static_cast<std::ptrdiff_t>(from), g_.edges().end());
        return is_connected(g_.node_count(), pool);
    }

    void recurse(std::size_t i) {
        if (chosen_.size() + 1 == g_.node_count()) {
            out_.push_back(chosen_);
            return;
        }
        if (i == g_.edge_count()) return;
        EdgeId e = g_.edges()[i];
        if (!forms_cycle(e)) {
            chosen_.push_back(e);
            recurse(i + 1);
            chosen_.pop_back();
        }
        if (can_complete(i + 1)) recurse(i + 1);
    }

    const WeightedGraph& g_;
    std::vector<EdgeId> chosen_;
    std::vector<std::vector<EdgeId>> out_;
};

void collect_paths(const WeightedGraph& g, NodeId cur, NodeId d, std::vector<bool>& on_path, Path& prefix,
                   std::vector<Path>& out) {
    if (cur == d) {
        out.push_back(prefix);
        return;
    }
    for (const auto& nb : g.neighbors(cur)) {
        if (on_path[nb.node]) continue;
        on_path[nb.node] = true;
        prefix.edges.emplace_back(cur, nb.node);
        collect_paths(g, nb.node, d, on_path, prefix, out);
        prefix.edges.pop_back();
        on_path[nb.node] = false;
    }
}

Weight path_sum(const WeightedGraph& g, const Path& p) {
    Weight s = 0;
    for (EdgeId e : p.edges) s += g.weight(e);
    return s;
}

// Bottleneck of a non-empty path.
Weight path_min(const WeightedGraph& g, const Path& p) {
    Weight m = g.weight(p.edges.front());
    for (EdgeId e : p.edges) {
        if (g.weight(e) < m) m = g.weight(e);
    }
    return m;
}

bool certify_instance(const GraphInstance& inst, AlgorithmId id) {
    auto criterion = criterion_for(id);
    if (!criterion) throw Error(ErrorKind::UnknownName, std::string(to_string(id)) + " has no oracle criterion");
    return certify_tree(route(id, inst.graph, inst.destination), *criterion);
}

}  // namespace

std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const WeightedGraph& g) {
    check_bound(g);
    return SpanningTreeEnumerator(g).run();
}

std::vector<Path> enumerate_simple_paths(const WeightedGraph& g, NodeId v, NodeId d) {
    check_bound(g);
    std::vector<Path> out;
    std::vector<bool> on_path(g.node_count(), false);
    on_path[v] = true;
    Path prefix{v, d, {}};
    collect_paths(g, v, d, on_path, prefix, out);
    return out;
}

mpz_class matrix_tree_count(const WeightedGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 1) return 1;
    const std::size_t k = n - 1;
    // Laplacian with row/column 0 deleted.
    std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(k, 0));
    for (EdgeId e : g.edges()) {
        if (e.u > 0) a[e.u - 1][e.u - 1] += 1;
        if (e.v > 0) a[e.v - 1][e.v - 1] += 1;
        if (e.u > 0 && e.v > 0) {
            a[e.u - 1][e.v - 1] -= 1;
            a[e.v - 1][e.u - 1] -= 1;
        }
    }
    mpq_class det = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && a[pivot][col] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
            if (a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < k; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det.get_num();
}

std::string_view to_string(OracleCriterion c) {
    switch (c) {
        case OracleCriterion::MinTotal: return "MIN_TOTAL";
        case OracleCriterion::ShortestAll: return "SHORTEST_ALL";
        case OracleCriterion::MaximinAll: return "MAXIMIN_ALL";
    }
    return "UNKNOWN";
}

std::optional<OracleCriterion> criterion_for(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::Mst: return OracleCriterion::MinTotal;
        case AlgorithmId::ShortestPath: return OracleCriterion::ShortestAll;
        case AlgorithmId::WeakestLink: return OracleCriterion::MaximinAll;
        default: return std::nullopt;
    }
}

bool certify_tree(const RoutingTree& tree, OracleCriterion criterion) {
    const WeightedGraph& g = tree.graph();
    check_bound(g);
    switch (criterion) {
        case OracleCriterion::MinTotal: {
            const Weight total = tree.total_weight();
            for (const auto& other : enumerate_spanning_trees(g)) {
                Weight t = 0;
                for (EdgeId e : other) t += g.weight(e);
                if (t < total) return false;
            }
            return true;
        }
        case OracleCriterion::ShortestAll:
        case OracleCriterion::MaximinAll: {
            for (NodeId v = 0; v < g.node_count(); ++v) {
                if (v == tree.destination()) continue;
                const Path mine = tree_path(tree, v);
                const bool shortest = criterion == OracleCriterion::ShortestAll;
                const Weight value = shortest ? path_sum(g, mine) : path_min(g, mine);
                for (const auto& p : enumerate_simple_paths(g, v, tree.destination())) {
                    if (shortest ? path_sum(g, p) < value : path_min(g, p) > value) return false;
                }
            }
            return true;
        }
    }
    return false;
}

std::vector<CertifyFailure> certify_corpus(const std::vector<GraphInstance>& corpus,
                                           const std::vector<AlgorithmId>& algorithms) {
    const auto count = static_cast<std::ptrdiff_t>(corpus.size());
    std::vector<std::vector<CertifyFailure>> per_instance(corpus.size());
    std::vector<std::exception_ptr> errors(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            for (AlgorithmId id : algorithms) {
                if (!certify_instance(corpus[idx], id)) per_instance[idx].push_back({idx, id});
            }
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<CertifyFailure> out;
    for (auto& v : per_instance) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<CertifyFailure> certify_corpus_serial(const std::vector<GraphInstance>& corpus,
                                                  const std::vector<AlgorithmId>& algorithms) {
    std::vector<CertifyFailure> out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (AlgorithmId id : algorithms) {
            if (!certify_instance(corpus[i], id)) out.push_back({i, id});
        }
    }
    return out;
}

}  // namespace routelab
