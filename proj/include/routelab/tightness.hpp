#ifndef ROUTELAB_TIGHTNESS_HPP
#define ROUTELAB_TIGHTNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "routelab/axioms.hpp"
#include "routelab/graph.hpp"
#include "routelab/routing.hpp"

namespace routelab {

enum class TightnessStatus { Confirmed, Unconfirmed, FigureDependent };

// "CONFIRMED", "UNCONFIRMED", "FIGURE_DEPENDENT".
std::string_view to_string(TightnessStatus status);

// Label used in place of an algorithm name when the alternative came from
// the hybrid search.
inline constexpr std::string_view kSearchedAlternative = "SEARCHED";

struct TightnessCell {
    AlgorithmId target;
    AxiomId dropped;
};

// The characterizing axioms of mst, shortest-path and weakest-link, with the
// monotonicity direction each one uses. Throws Error{UnknownCase} otherwise.
std::vector<AxiomId> characterizing_axioms(AlgorithmId target);

// All 14 cells, MST first, then shortest path, then weakest link.
std::vector<TightnessCell> tightness_grid();

// True for the robustness / scale / shift cells, whose alternatives are
// hybrids that exist only as figures.
bool is_figure_dependent(AlgorithmId target, AxiomId dropped);

// Named alternatives for a cell, in the order they are tried. Empty for
// figure-dependent cells. Throws Error{UnknownCase} outside the grid.
std::vector<Router> named_alternatives(AlgorithmId target, AxiomId dropped);

// Two routers disagreeing on one graph and destination.
struct DivergenceWitness {
    WeightedGraph graph;
    NodeId destination;
    std::vector<EdgeId> target_tree;
    std::vector<EdgeId> alternative_tree;
};

// First instance (general, then unicyclic; index order) and destination
// (ascending) on which both routers accept the graph and their edge sets
// differ.
std::optional<DivergenceWitness> search_divergence(const Router& a, const Router& b, const SuiteCorpus& corpus);
std::optional<DivergenceWitness> search_divergence(AlgorithmId a, AlgorithmId b, const SuiteCorpus& corpus);

// True iff both routers still produce the recorded trees and those differ.
bool replay_divergence(const Router& target, const Router& alternative, const DivergenceWitness& w);

// Applies `target` except on graphs matching `pattern` up to the weight
// transformations that the retained axioms of (target, dropped) allow, where
// it returns pattern.alternative_tree instead.
Router make_hybrid_router(AlgorithmId target, AxiomId dropped, const DivergenceWitness& pattern);

struct TightnessAttempt {
    std::string alternative;
    std::vector<AxiomReport> retained;
    std::vector<AxiomReport> dropped;
    std::optional<DivergenceWitness> witness;
    // Direction in which a retained monotonicity axiom held, if any.
    std::optional<Direction> monotonicity;
    bool retained_hold = false;
};

struct TightnessCase {
    AlgorithmId target = AlgorithmId::Mst;
    AxiomId dropped = AxiomId::Robustness;
    std::string alternative;
    TightnessStatus status = TightnessStatus::Unconfirmed;
    std::uint64_t seed = 0;
    std::optional<DivergenceWitness> witness;
    // The attempt backing `alternative`, or the last one tried.
    std::optional<TightnessAttempt> chosen;
    // Every named alternative tried, plus the hybrid that succeeded if any.
    std::vector<TightnessAttempt> attempts;
    std::size_t hybrid_candidates = 0;
};

struct TightnessOptions {
    CheckOptions check;
    std::size_t hybrid_graphs = 6;       // pattern graphs drawn from the corpus
    std::size_t hybrid_max_nodes = 5;
    std::size_t hybrid_candidates = 120;  // (graph, tree) pairs tried at most
};

// The corpus used by the tightness grid: 200 distinct-weight graphs on 2..8
// nodes and 100 unicyclic graphs on 3..8 nodes, rational weights in [1, 100].
SuiteCorpus standard_corpus(std::uint64_t seed);

// Retained axioms are checked with run_suite on `corpus`. A retained
// monotonicity axiom holds if either direction shows no violation. Throws
// Error{UnknownCase} outside the grid.
TightnessCase run_tightness(AlgorithmId target, AxiomId dropped, const SuiteCorpus& corpus, std::uint64_t seed,
                            const TightnessOptions& options = {});

// Cells in tightness_grid() order; cells run in parallel.
std::vector<TightnessCase> run_tightness_grid(const SuiteCorpus& corpus, std::uint64_t seed,
                                              const TightnessOptions& options = {});
std::vector<TightnessCase> run_tightness_grid_serial(const SuiteCorpus& corpus, std::uint64_t seed,
                                                     const TightnessOptions& options = {});

}  // namespace routelab

#endif  // ROUTELAB_TIGHTNESS_HPP
