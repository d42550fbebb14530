#include "routelab/corpus.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "routelab/error.hpp"
#include "routelab/random.hpp"

namespace routelab {

namespace {

constexpr std::uint64_t kGraphSalt = 0x67726170;  // "grap"

std::size_t max_edges(std::size_t n) { return n * (n - 1) / 2; }

std::size_t target_edges(const CorpusSpec& spec, std::size_t n) {
    if (spec.unicyclic) return n;
    Weight want = spec.edge_density * Weight(static_cast<long>(max_edges(n)));
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), mpz_class(2 * want.get_num() + want.get_den()).get_mpz_t(),
               mpz_class(2 * want.get_den()).get_mpz_t());
    auto m = static_cast<std::size_t>(rounded.get_ui());
    return std::clamp(m, n - 1, max_edges(n));
}

Weight draw_weight(Rng& rng, const WeightDistribution& dist) {
    if (dist.kind == WeightDistribution::Kind::UniformInt) {
        return Weight(static_cast<long>(rng.uniform_int(dist.lo, dist.hi)));
    }
    return rng.rational(dist.lo, dist.hi, dist.den);
}

std::int64_t value_count(const WeightDistribution& dist) {
    const std::int64_t den = dist.kind == WeightDistribution::Kind::UniformInt ? 1 : dist.den;
    return (dist.hi - dist.lo) * den + 1;
}

// Random spanning tree via random attachment over a shuffled node order.
std::vector<EdgeId> random_tree(Rng& rng, std::size_t n) {
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(order.begin(), order.end());
    std::vector<EdgeId> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(order[i], order[rng.index(i)]);
    return edges;
}

WeightedGraph build(const CorpusSpec& spec, Rng& rng, std::size_t n, std::size_t m) {
    std::vector<EdgeId> edges = random_tree(rng, n);
    std::set<EdgeId> used(edges.begin(), edges.end());
    std::vector<EdgeId> spare;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (!used.count(EdgeId(u, v))) spare.emplace_back(u, v);
        }
    }
    rng.shuffle(spare.begin(), spare.end());
    for (std::size_t i = 0; edges.size() < m && i < spare.size(); ++i) edges.push_back(spare[i]);
    std::sort(edges.begin(), edges.end());

    std::vector<WeightedEdge> weighted;
    weighted.reserve(edges.size());
    std::set<Weight> seen;
    for (EdgeId e : edges) {
        Weight w = draw_weight(rng, spec.weights);
        // Rejection keeps the distribution uniform over the remaining values.
        while (spec.distinct_weights && seen.count(w)) w = draw_weight(rng, spec.weights);
        seen.insert(w);
        weighted.push_back({e, std::move(w)});
    }
    return WeightedGraph(n, std::move(weighted));
}

Rng instance_rng(const CorpusSpec& spec, std::size_t index) {
    return Rng(derive_seed(spec.seed, index, kGraphSalt));
}

std::size_t draw_node_count(Rng& rng, const CorpusSpec& spec) {
    return static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(spec.min_nodes),
                                                    static_cast<std::int64_t>(spec.max_nodes)));
}

}  // namespace

void validate(const CorpusSpec& spec) {
    auto infeasible = [](const std::string& why) { throw Error(ErrorKind::InfeasibleSpec, why); };
    if (spec.min_nodes < 2) infeasible("min_nodes must be >= 2");
    if (spec.min_nodes > spec.max_nodes) infeasible("min_nodes exceeds max_nodes");
    if (spec.unicyclic && spec.min_nodes < 3) infeasible("unicyclic graphs need at least 3 nodes");
    if (sgn(spec.edge_density) <= 0 || spec.edge_density > 1) infeasible("edge density must lie in (0, 1]");
    if (spec.weights.lo > spec.weights.hi) infeasible("weight range is empty");
    if (spec.weights.kind == WeightDistribution::Kind::UniformRational && spec.weights.den <= 0) {
        infeasible("rational weight denominator must be positive");
    }
    if (spec.distinct_weights) {
        std::size_t most = spec.unicyclic ? spec.max_nodes : target_edges(spec, spec.max_nodes);
        if (value_count(spec.weights) < static_cast<std::int64_t>(most)) {
            infeasible("weight range has fewer than " + std::to_string(most) + " distinct values");
        }
    }
}

WeightedGraph gen_connected(const CorpusSpec& spec, std::size_t index) {
    CorpusSpec plain = spec;
    plain.unicyclic = false;
    validate(plain);
    Rng rng = instance_rng(spec, index);
    std::size_t n = draw_node_count(rng, plain);
    return build(plain, rng, n, target_edges(plain, n));
}

WeightedGraph gen_unicyclic(const CorpusSpec& spec, std::size_t index) {
    CorpusSpec cyclic = spec;
    cyclic.unicyclic = true;
    validate(cyclic);
    Rng rng = instance_rng(spec, index);
    std::size_t n = draw_node_count(rng, cyclic);
    return build(cyclic, rng, n, n);
}

GraphInstance gen_instance(const CorpusSpec& spec, std::size_t index) {
    WeightedGraph g = spec.unicyclic ? gen_unicyclic(spec, index) : gen_connected(spec, index);
    Rng rng(derive_seed(spec.seed, index, kGraphSalt + 1));
    auto d = static_cast<NodeId>(rng.index(g.node_count()));
    return {std::move(g), d};
}

std::vector<GraphInstance> generate_corpus(const CorpusSpec& spec) {
    validate(spec);
    std::vector<GraphInstance> out;
    out.reserve(spec.graph_count);
    for (std::size_t i = 0; i < spec.graph_count; ++i) out.push_back(gen_instance(spec, i));
    return out;
}

}  // namespace routelab
