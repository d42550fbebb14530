#include "routelab/report_json.hpp"

#include <string>

#include "routelab/error.hpp"

namespace routelab {

namespace {

Json edge_json(EdgeId e) { return Json::array({e.u, e.v}); }

Json edges_json(const std::vector<EdgeId>& edges) {
    Json out = Json::array();
    for (EdgeId e : edges) out.push_back(edge_json(e));
    return out;
}

EdgeId edge_from(const Json& j) { return EdgeId(j.at(0).get<NodeId>(), j.at(1).get<NodeId>()); }

std::vector<EdgeId> edges_from(const Json& j) {
    std::vector<EdgeId> out;
    for (const auto& e : j) out.push_back(edge_from(e));
    return out;
}

Outcome outcome_from(const Json& j) {
    if (j.contains("tree")) return edges_from(j.at("tree"));
    return Path{j.at("source").get<NodeId>(), j.at("destination").get<NodeId>(), edges_from(j.at("path"))};
}

}  // namespace

Json to_json(const Outcome& outcome) {
    Json j;
    if (const auto* p = std::get_if<Path>(&outcome)) {
        j["source"] = p->source;
        j["destination"] = p->destination;
        j["path"] = edges_json(p->edges);
    } else {
        j["tree"] = edges_json(std::get<std::vector<EdgeId>>(outcome));
    }
    return j;
}

Json to_json(const Transformation& t) {
    Json j;
    j["kind"] = std::string(to_string(t.axiom));
    if (t.vertex) j["vertex"] = *t.vertex;
    j["edges"] = edges_json(t.edges);
    Json values = Json::array();
    for (const auto& v : t.values) values.push_back(format_weight(v));
    j["values"] = std::move(values);
    Json reweight = Json::array();
    for (const auto& we : t.reweight) reweight.push_back(Json::array({we.id.u, we.id.v, format_weight(we.weight)}));
    j["reweight"] = std::move(reweight);
    return j;
}

Json to_json(const Witness& w) {
    Json j;
    j["graph"] = serialize_graph(w.graph, w.destination);
    j["destination"] = w.destination;
    j["transformation"] = to_json(w.transformation);
    j["expected"] = to_json(w.expected);
    j["actual"] = to_json(w.actual);
    return j;
}

Json to_json(const AxiomReport& r, std::size_t witness_limit) {
    Json j;
    j["axiom"] = std::string(to_string(r.axiom));
    j["algorithm"] = r.algorithm;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["skipped"] = r.skipped;
    j["passed"] = r.passes();
    Json reasons = Json::object();
    for (const auto& [reason, count] : r.skip_reasons) reasons[reason] = count;
    j["skip_reasons"] = std::move(reasons);
    if (!r.note.empty()) j["note"] = r.note;
    j["violation_count"] = r.violations.size();
    Json violations = Json::array();
    for (std::size_t i = 0; i < r.violations.size() && i < witness_limit; ++i) {
        violations.push_back(to_json(r.violations[i]));
    }
    j["violations"] = std::move(violations);
    return j;
}

Json to_json(const std::vector<AxiomReport>& reports, std::size_t witness_limit) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(to_json(r, witness_limit));
    return out;
}

Witness witness_from_json(const Json& j) {
    try {
        GraphInstance inst = parse_graph(j.at("graph").get<std::string>());
        const Json& tj = j.at("transformation");
        Transformation t;
        t.axiom = parse_axiom(tj.at("kind").get<std::string>());
        if (tj.contains("vertex")) t.vertex = tj.at("vertex").get<NodeId>();
        t.edges = edges_from(tj.at("edges"));
        for (const auto& v : tj.at("values")) t.values.push_back(parse_weight(v.get<std::string>()));
        for (const auto& r : tj.at("reweight")) {
            t.reweight.push_back({EdgeId(r.at(0).get<NodeId>(), r.at(1).get<NodeId>()),
                                  parse_weight(r.at(2).get<std::string>())});
        }
        return Witness{std::move(inst.graph), j.at("destination").get<NodeId>(), std::move(t),
                       outcome_from(j.at("expected")), outcome_from(j.at("actual"))};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed witness: ") + e.what());
    }
}

Json to_json(const DivergenceWitness& w) {
    Json j;
    j["graph"] = serialize_graph(w.graph, w.destination);
    j["destination"] = w.destination;
    j["target_tree"] = edges_json(w.target_tree);
    j["alternative_tree"] = edges_json(w.alternative_tree);
    return j;
}

DivergenceWitness divergence_from_json(const Json& j) {
    try {
        GraphInstance inst = parse_graph(j.at("graph").get<std::string>());
        return DivergenceWitness{std::move(inst.graph), j.at("destination").get<NodeId>(),
                                 edges_from(j.at("target_tree")), edges_from(j.at("alternative_tree"))};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed divergence witness: ") + e.what());
    }
}

Json to_json(const TightnessCase& c) {
    Json j;
    j["target"] = std::string(to_string(c.target));
    j["dropped"] = std::string(to_string(c.dropped));
    j["alternative"] = c.alternative;
    j["status"] = std::string(to_string(c.status));
    j["seed"] = c.seed;
    if (c.witness) {
        j["witness_graph"] = serialize_graph(c.witness->graph, c.witness->destination);
        j["witness"] = to_json(*c.witness);
    }
    if (c.chosen && c.chosen->monotonicity) {
        j["monotonicity_direction"] = *c.chosen->monotonicity == Direction::Up ? "up" : "down";
    }
    if (is_figure_dependent(c.target, c.dropped)) {
        j["hybrid_candidates"] = c.hybrid_candidates;
        if (c.chosen) j["hybrid"] = c.chosen->alternative;
    }
    j["suite_reports"] = c.chosen ? to_json(c.chosen->retained, kTightnessWitnessLimit) : Json::array();
    j["dropped_reports"] = c.chosen ? to_json(c.chosen->dropped, kTightnessWitnessLimit) : Json::array();
    Json attempts = Json::array();
    for (const auto& a : c.attempts) {
        Json aj;
        aj["alternative"] = a.alternative;
        aj["retained_hold"] = a.retained_hold;
        aj["diverges"] = a.witness.has_value();
        Json retained = Json::object();
        for (const auto& r : a.retained) retained[std::string(to_string(r.axiom))] = r.violations.size();
        aj["retained_violations"] = std::move(retained);
        Json dropped = Json::object();
        for (const auto& r : a.dropped) dropped[std::string(to_string(r.axiom))] = r.violations.size();
        aj["dropped_violations"] = std::move(dropped);
        attempts.push_back(std::move(aj));
    }
    j["attempts"] = std::move(attempts);
    return j;
}

Json to_json(const std::vector<TightnessCase>& cases) {
    Json out = Json::array();
    for (const auto& c : cases) out.push_back(to_json(c));
    return out;
}

}  // namespace routelab
