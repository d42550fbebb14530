#ifndef ROUTELAB_ORACLE_HPP
#define ROUTELAB_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "routelab/graph.hpp"
#include "routelab/graph_io.hpp"
#include "routelab/routing.hpp"

namespace routelab {

// Enumeration bound for the brute-force oracles.
inline constexpr std::size_t kOracleMaxNodes = 9;

// Every spanning tree exactly once, each as a sorted edge list.
// Throws Error{TooLarge} above kOracleMaxNodes.
std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const WeightedGraph& g);

// All simple v -> d paths, depth-first with neighbors in ascending order.
// Throws Error{TooLarge} above kOracleMaxNodes.
std::vector<Path> enumerate_simple_paths(const WeightedGraph& g, NodeId v, NodeId d);

// Kirchhoff: any cofactor of the (unweighted) Laplacian, computed exactly.
mpz_class matrix_tree_count(const WeightedGraph& g);

enum class OracleCriterion { MinTotal, ShortestAll, MaximinAll };

std::string_view to_string(OracleCriterion c);
// The criterion a characterized algorithm must satisfy; nullopt for the alternatives.
std::optional<OracleCriterion> criterion_for(AlgorithmId id);

bool certify_tree(const RoutingTree& tree, OracleCriterion criterion);

struct CertifyFailure {
    std::size_t index;
    AlgorithmId algorithm;
};

// Runs each algorithm on every instance and certifies it against its own
// criterion. Failures come back sorted by (index, algorithm order).
std::vector<CertifyFailure> certify_corpus(const std::vector<GraphInstance>& corpus,
                                           const std::vector<AlgorithmId>& algorithms);
// Single-threaded reference for certify_corpus.
std::vector<CertifyFailure> certify_corpus_serial(const std::vector<GraphInstance>& corpus,
                                                  const std::vector<AlgorithmId>& algorithms);

}  // namespace routelab

#endif  // ROUTELAB_ORACLE_HPP
