#ifndef ROUTELAB_REPORT_JSON_HPP
#define ROUTELAB_REPORT_JSON_HPP

#include <json.hpp>

#include <cstdint>
#include <vector>

#include "routelab/axioms.hpp"
#include "routelab/tightness.hpp"

namespace routelab {

// Insertion-ordered so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

// {axiom, algorithm, seed, trials, skipped, passed, skip_reasons, note,
//  violation_count, violations: [{graph, destination, transformation,
//  expected, actual}]} where graph is the text graph format. At most
// `witness_limit` witnesses are listed, the first ones found.
Json to_json(const AxiomReport& report, std::size_t witness_limit = SIZE_MAX);
Json to_json(const std::vector<AxiomReport>& reports, std::size_t witness_limit = SIZE_MAX);
Json to_json(const Witness& witness);
Json to_json(const Transformation& t);
Json to_json(const Outcome& outcome);

// Inverse of to_json(Witness). Throws Error{ParseError} on malformed input.
Witness witness_from_json(const Json& j);

// {graph, destination, target_tree, alternative_tree}
Json to_json(const DivergenceWitness& w);
// Throws Error{ParseError} on malformed input.
DivergenceWitness divergence_from_json(const Json& j);

// Witnesses listed per axiom report inside tightness JSON.
inline constexpr std::size_t kTightnessWitnessLimit = 3;

// {target, dropped, alternative, status, seed, witness_graph?, witness?,
//  monotonicity_direction?, hybrid_candidates?, suite_reports, dropped_reports,
//  attempts: [{alternative, retained_hold, diverges, retained_violations,
//  dropped_violations}]}
Json to_json(const TightnessCase& c);
Json to_json(const std::vector<TightnessCase>& cases);

}  // namespace routelab

#endif  // ROUTELAB_REPORT_JSON_HPP
