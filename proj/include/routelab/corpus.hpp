#ifndef ROUTELAB_CORPUS_HPP
#define ROUTELAB_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "routelab/graph.hpp"
#include "routelab/graph_io.hpp"

namespace routelab {

struct WeightDistribution {
    enum class Kind { UniformInt, UniformRational };
    Kind kind = Kind::UniformInt;
    std::int64_t lo = 1;
    std::int64_t hi = 100;
    std::int64_t den = 1;  // UniformRational only

    static WeightDistribution uniform_int(std::int64_t lo, std::int64_t hi) { return {Kind::UniformInt, lo, hi, 1}; }
    static WeightDistribution uniform_rational(std::int64_t lo, std::int64_t hi, std::int64_t den) {
        return {Kind::UniformRational, lo, hi, den};
    }
};

struct CorpusSpec {
    std::size_t graph_count = 100;
    std::size_t min_nodes = 2;
    std::size_t max_nodes = 7;
    // Target fraction of the n(n-1)/2 possible edges; never fewer than a spanning tree.
    Weight edge_density = Weight(1, 2);
    WeightDistribution weights;
    bool distinct_weights = true;
    bool unicyclic = false;
    std::uint64_t seed = 1;
};

// Throws Error{InfeasibleSpec}.
void validate(const CorpusSpec& spec);

// Random spanning tree, then extra edges up to the target density.
// Deterministic in (spec.seed, index).
WeightedGraph gen_connected(const CorpusSpec& spec, std::size_t index);

// Random spanning tree plus exactly one extra edge. Needs n >= 3.
WeightedGraph gen_unicyclic(const CorpusSpec& spec, std::size_t index);

// gen_connected or gen_unicyclic per spec.unicyclic, with a destination
// drawn from the same (seed, index) stream.
GraphInstance gen_instance(const CorpusSpec& spec, std::size_t index);

std::vector<GraphInstance> generate_corpus(const CorpusSpec& spec);

}  // namespace routelab

#endif  // ROUTELAB_CORPUS_HPP
