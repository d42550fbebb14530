#ifndef ROUTELAB_AXIOMS_HPP
#define ROUTELAB_AXIOMS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "routelab/graph.hpp"
#include "routelab/graph_io.hpp"
#include "routelab/routing.hpp"

namespace routelab {

enum class AxiomId {
    Robustness,
    ScaleInvariance,
    ShiftInvariance,
    Monotonicity,         // raising an excluded edge keeps it out
    InverseMonotonicity,  // lowering an included edge eventually drops it
    FirstHop,
    PathCardinalInvariance,
    PathOrdinalInvariance,
};

inline constexpr AxiomId kAllAxioms[] = {
    AxiomId::Robustness,  AxiomId::ScaleInvariance,        AxiomId::ShiftInvariance,
    AxiomId::Monotonicity, AxiomId::InverseMonotonicity,   AxiomId::FirstHop,
    AxiomId::PathCardinalInvariance, AxiomId::PathOrdinalInvariance,
};

// "robustness", "scale-invariance", ..., "path-ordinal-invariance".
std::string_view to_string(AxiomId id);
// Accepts the hyphenated names and the numeric shorthand 1..7 / 4d.
// Throws Error{UnknownName}.
AxiomId parse_axiom(std::string_view token);
// Axioms 6 and 7 are only defined on graphs with exactly one cycle.
bool needs_unicyclic(AxiomId id);

// How the ordinal checker bounds the new weight of the perturbed edge.
enum class OrdinalReading {
    Conservative,  // strictly between the neighbouring weights of p1 u p2
    Literal,       // only the >= direction within the edge's own path
};

// A replayable description of one axiom transformation.
//   Robustness:          edges = {removed}, vertex = v
//   Scale/ShiftInvariance: values = {alpha}
//   (Inverse)Monotonicity: reweight = W' on other edges, edges = {e'}, values = {M}
//   FirstHop:            vertex = v, reweight = W' on every non-candidate edge
//   PathCardinal:        vertex = v, edges = {e', e''}, values = {alpha}
//   PathOrdinal:         vertex = v, edges = {e'}, values = {new weight}
struct Transformation {
    AxiomId axiom = AxiomId::Robustness;
    std::optional<NodeId> vertex;
    std::vector<EdgeId> edges;
    std::vector<Weight> values;
    std::vector<WeightedEdge> reweight;
};

// A path (path-level axioms) or a tree edge set (tree-level axioms).
using Outcome = std::variant<Path, std::vector<EdgeId>>;

struct Witness {
    WeightedGraph graph;
    NodeId destination;
    Transformation transformation;
    Outcome expected;
    Outcome actual;
};

struct Evaluation {
    enum class Verdict { Pass, Violation, Skip };
    Verdict verdict = Verdict::Skip;
    std::optional<Outcome> expected;
    std::optional<Outcome> actual;
    std::string skip_reason;
};

// Applies one transformation and judges it. Checkers and witness replay both
// go through here.
Evaluation evaluate(const Router& router, const WeightedGraph& g, NodeId d, const Transformation& t);

// True iff the witness still reproduces a violation with the same expected
// and actual outcomes.
bool replay(const Router& router, const Witness& w);

struct AxiomReport {
    AxiomId axiom = AxiomId::Robustness;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t skipped = 0;
    std::vector<Witness> violations;
    std::map<std::string, std::size_t> skip_reasons;
    std::string note;

    std::size_t passes() const { return trials - skipped - violations.size(); }
    void record_skip(const std::string& reason, std::size_t count = 1);
    void merge(const AxiomReport& other);
};

struct CheckOptions {
    std::size_t samples = 20;    // random probes on top of the fixed ones (scale, shift, 6, 7)
    std::size_t trials = 100;    // first hop
    std::size_t reweightings = 3;  // extra W' draws for monotonicity
    OrdinalReading ordinal = OrdinalReading::Conservative;
};

AxiomReport check_robustness(const Router& router, const WeightedGraph& g, NodeId d);
AxiomReport check_scale_invariance(const Router& router, const WeightedGraph& g, NodeId d, std::size_t samples,
                                   std::uint64_t seed);
AxiomReport check_shift_invariance(const Router& router, const WeightedGraph& g, NodeId d, std::size_t samples,
                                   std::uint64_t seed);

enum class Direction { Up, Down };
AxiomReport check_monotonicity(const Router& router, const WeightedGraph& g, NodeId d, Direction direction,
                               std::uint64_t seed, std::size_t reweightings = 3);
AxiomReport check_first_hop(const Router& router, const WeightedGraph& g, NodeId d, std::size_t trials,
                            std::uint64_t seed);
// Both throw Error{NotUnicyclic} unless g has exactly one cycle.
AxiomReport check_path_cardinal_invariance(const Router& router, const WeightedGraph& g, NodeId d,
                                           std::size_t samples, std::uint64_t seed);
AxiomReport check_path_ordinal_invariance(const Router& router, const WeightedGraph& g, NodeId d,
                                          std::size_t samples, std::uint64_t seed,
                                          OrdinalReading reading = OrdinalReading::Conservative);

AxiomReport check_axiom(AxiomId axiom, const Router& router, const WeightedGraph& g, NodeId d, std::uint64_t seed,
                        const CheckOptions& options = {});

struct SuiteCorpus {
    std::vector<GraphInstance> general;
    std::vector<GraphInstance> unicyclic;
};

// One aggregated report per requested axiom. Unicyclic-only axioms run on
// corpus.unicyclic; all others on general followed by unicyclic. Instance i
// is checked with a seed derived from (seed, axiom, i), so the result does
// not depend on scheduling. Checker errors become skips with a reason.
std::vector<AxiomReport> run_suite(const Router& router, const std::vector<AxiomId>& axioms, const SuiteCorpus& corpus,
                                   std::uint64_t seed, const CheckOptions& options = {});
// Single-threaded reference for run_suite; must produce identical reports.
std::vector<AxiomReport> run_suite_serial(const Router& router, const std::vector<AxiomId>& axioms,
                                          const SuiteCorpus& corpus, std::uint64_t seed,
                                          const CheckOptions& options = {});

std::size_t total_violations(const std::vector<AxiomReport>& reports);

}  // namespace routelab

#endif  // ROUTELAB_AXIOMS_HPP
