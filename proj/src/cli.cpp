#include "routelab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "routelab/axioms.hpp"
#include "routelab/corpus.hpp"
#include "routelab/error.hpp"
#include "routelab/graph_io.hpp"
#include "routelab/oracle.hpp"
#include "routelab/report_json.hpp"
#include "routelab/routing.hpp"
#include "routelab/tightness.hpp"

namespace routelab {

namespace {

GraphInstance load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_graph(text);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << text;
}

// Writes JSON to the file if one was named, otherwise to `out`.
void emit_json(const Json& j, const std::string& json_path, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (json_path.empty()) {
        out << text;
    } else {
        write_file(json_path, text);
    }
}

struct VariantFlags {
    std::string reading = "max-of-max";
    std::string construction = "greedy";

    void add_to(CLI::App* cmd) {
        cmd->add_option("--reading", reading, "strongest-link reading")
            ->check(CLI::IsMember({"max-of-max", "min-of-min"}))
            ->capture_default_str();
        cmd->add_option("--construction", construction, "longest/strongest-link tree construction")
            ->check(CLI::IsMember({"greedy", "fewest-hops"}))
            ->capture_default_str();
    }

    Router router(const std::string& algo) const {
        RouterVariant v;
        v.reading = reading == "min-of-min" ? StrongestLinkReading::MinOfMin : StrongestLinkReading::MaxOfMax;
        v.construction = construction == "fewest-hops" ? PathTreeConstruction::FewestHops
                                                       : PathTreeConstruction::GreedyNodeOrder;
        return make_router(parse_algorithm(algo), v);
    }
};

struct CorpusFlags {
    std::size_t graphs = 200;
    std::size_t unicyclic_graphs = 100;
    std::size_t min_nodes = 2;
    std::size_t max_nodes = 8;
    std::string density = "1/2";
    std::string weights = "rational";
    std::int64_t lo = 1;
    std::int64_t hi = 100;
    std::int64_t den = 1000;
    bool distinct = true;

    void add_to(CLI::App* cmd, bool with_counts) {
        if (with_counts) {
            cmd->add_option("--graphs", graphs, "general graphs in the corpus")->capture_default_str();
            cmd->add_option("--unicyclic-graphs", unicyclic_graphs, "unicyclic graphs in the corpus")
                ->capture_default_str();
        }
        cmd->add_option("--min-nodes", min_nodes)->capture_default_str();
        cmd->add_option("--max-nodes", max_nodes)->capture_default_str();
        cmd->add_option("--density", density, "fraction of possible edges, e.g. 1/2")->capture_default_str();
        cmd->add_option("--weights", weights, "weight distribution")
            ->check(CLI::IsMember({"int", "rational"}))
            ->capture_default_str();
        cmd->add_option("--lo", lo)->capture_default_str();
        cmd->add_option("--hi", hi)->capture_default_str();
        cmd->add_option("--den", den, "denominator for rational weights")->capture_default_str();
        cmd->add_flag("--distinct,!--no-distinct", distinct, "require pairwise distinct weights");
    }

    CorpusSpec spec(std::uint64_t seed) const {
        CorpusSpec s;
        s.graph_count = graphs;
        s.min_nodes = min_nodes;
        s.max_nodes = max_nodes;
        s.edge_density = parse_weight(density);
        s.weights = weights == "int" ? WeightDistribution::uniform_int(lo, hi)
                                     : WeightDistribution::uniform_rational(lo, hi, den);
        s.distinct_weights = distinct;
        s.seed = seed;
        return s;
    }
};

NodeId pick_destination(const GraphInstance& inst, const std::optional<NodeId>& dest) {
    NodeId d = dest.value_or(inst.destination);
    if (d >= inst.graph.node_count()) throw Error(ErrorKind::InvariantViolation, "destination out of range");
    return d;
}

void require_domain(const Router& router, const WeightedGraph& g) {
    if (!router.accepts(g)) throw Error(ErrorKind::InvariantViolation, "graph outside the domain of " + router.name);
}

std::vector<AxiomId> parse_axiom_list(const std::string& csv) {
    std::vector<AxiomId> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) out.push_back(parse_axiom(token));
    }
    if (out.empty()) throw Error(ErrorKind::UnknownName, "no axioms given");
    return out;
}

void summarize(const AxiomReport& r, std::ostream& err) {
    err << r.algorithm << " " << to_string(r.axiom) << ": " << r.trials << " trials, " << r.skipped << " skipped, "
        << r.violations.size() << " violations\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Routing-characterization lab: routing trees, axiom checks, oracles, tightness", "routelab"};
    app.require_subcommand(1);

    std::string graph_file, algo, axiom, axioms_csv, json_path, dot_path, out_path, target, drop;
    std::optional<NodeId> dest;
    std::uint64_t seed = 1;
    std::optional<std::size_t> trials;
    std::string ordinal = "conservative";
    std::size_t index = 0;
    std::optional<std::size_t> nodes;
    bool unicyclic = false;
    bool all_cells = false;
    VariantFlags variant;
    CorpusFlags corpus;

    auto* route = app.add_subcommand("route", "print the routing tree as `e u v w` lines");
    route->add_option("graph", graph_file, "graph file")->required();
    route->add_option("--algo", algo, "algorithm name")->required();
    route->add_option("--dest", dest, "destination (default: from the file header)");
    route->add_option("--dot", dot_path, "also write Graphviz DOT here");
    variant.add_to(route);

    auto* check = app.add_subcommand("check", "check one axiom on one graph; AxiomReport JSON");
    check->add_option("graph", graph_file, "graph file")->required();
    check->add_option("--algo", algo, "algorithm name")->required();
    check->add_option("--axiom", axiom, "axiom name, or 1..7 / 4d")->required();
    check->add_option("--dest", dest, "destination (default: from the file header)");
    check->add_option("--seed", seed)->capture_default_str();
    check->add_option("--trials", trials, "random probes per check");
    check->add_option("--ordinal", ordinal, "path ordinal invariance reading")
        ->check(CLI::IsMember({"conservative", "literal"}))
        ->capture_default_str();
    check->add_option("--json", json_path, "write JSON here instead of stdout");
    variant.add_to(check);

    auto* suite = app.add_subcommand("suite", "run axiom checks over a generated corpus");
    suite->add_option("algo", algo, "algorithm name")->required();
    suite->add_option("axioms", axioms_csv, "comma-separated axioms, e.g. 1,2,3,4d,7")->required();
    suite->add_option("--seed", seed)->capture_default_str();
    suite->add_option("--trials", trials, "random probes per check");
    suite->add_option("--ordinal", ordinal)->check(CLI::IsMember({"conservative", "literal"}))->capture_default_str();
    suite->add_option("--json", json_path, "write JSON here instead of stdout");
    corpus.add_to(suite, true);
    variant.add_to(suite);

    auto* gen = app.add_subcommand("gen", "write one generated graph in the text format");
    gen->add_option("--seed", seed)->capture_default_str();
    gen->add_option("--index", index, "instance index within the seeded corpus")->capture_default_str();
    gen->add_option("--nodes", nodes, "exact node count (overrides --min-nodes/--max-nodes)");
    gen->add_flag("--unicyclic", unicyclic, "exactly one cycle");
    gen->add_option("--out", out_path, "write here instead of stdout");
    corpus.add_to(gen, false);

    auto* oracle = app.add_subcommand("oracle-verify", "certify a routing tree against brute force");
    oracle->add_option("graph", graph_file, "graph file")->required();
    oracle->add_option("--algo", algo, "mst, shortest-path or weakest-link")->required();
    oracle->add_option("--dest", dest, "destination (default: from the file header)");

    auto* tight = app.add_subcommand("tightness", "run axiom-drop experiments");
    tight->add_option("target", target, "mst, shortest-path or weakest-link");
    tight->add_option("--drop", drop, "dropped axiom");
    tight->add_flag("--all", all_cells, "run the full grid");
    tight->add_option("--seed", seed)->capture_default_str();
    tight->add_option("--json", json_path, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CheckOptions options;
    if (trials) {
        options.trials = *trials;
        options.samples = *trials;
    }
    options.ordinal = ordinal == "literal" ? OrdinalReading::Literal : OrdinalReading::Conservative;

    try {
        if (route->parsed()) {
            const GraphInstance inst = load_graph(graph_file);
            const NodeId d = pick_destination(inst, dest);
            const Router router = variant.router(algo);
            require_domain(router, inst.graph);
            const RoutingTree tree = router.route(inst.graph, d);
            for (EdgeId e : tree.edges()) {
                out << "e " << e.u << " " << e.v << " " << format_weight(inst.graph.weight(e)) << "\n";
            }
            if (!dot_path.empty()) write_file(dot_path, emit_dot(inst.graph, &tree));
            return kExitOk;
        }

        if (check->parsed()) {
            const GraphInstance inst = load_graph(graph_file);
            const NodeId d = pick_destination(inst, dest);
            const Router router = variant.router(algo);
            const AxiomId id = parse_axiom(axiom);
            require_domain(router, inst.graph);
            const AxiomReport report = check_axiom(id, router, inst.graph, d, seed, options);
            emit_json(to_json(report), json_path, out);
            summarize(report, err);
            return report.violations.empty() ? kExitOk : kExitViolations;
        }

        if (suite->parsed()) {
            const Router router = variant.router(algo);
            const auto axioms = parse_axiom_list(axioms_csv);
            CorpusSpec general = corpus.spec(seed);
            CorpusSpec cyclic = general;
            cyclic.graph_count = corpus.unicyclic_graphs;
            cyclic.min_nodes = std::max<std::size_t>(3, corpus.min_nodes);
            cyclic.unicyclic = true;
            SuiteCorpus sc{generate_corpus(general), generate_corpus(cyclic)};
            const auto reports = run_suite(router, axioms, sc, seed, options);
            emit_json(to_json(reports), json_path, out);
            for (const auto& r : reports) summarize(r, err);
            return total_violations(reports) == 0 ? kExitOk : kExitViolations;
        }

        if (gen->parsed()) {
            CorpusSpec spec = corpus.spec(seed);
            if (nodes) spec.min_nodes = spec.max_nodes = *nodes;
            spec.unicyclic = unicyclic;
            validate(spec);
            const GraphInstance inst = gen_instance(spec, index);
            const std::string text = serialize_graph(inst.graph, inst.destination);
            if (out_path.empty()) {
                out << text;
            } else {
                write_file(out_path, text);
            }
            return kExitOk;
        }

        if (oracle->parsed()) {
            const GraphInstance inst = load_graph(graph_file);
            const NodeId d = pick_destination(inst, dest);
            const AlgorithmId id = parse_algorithm(algo);
            const auto criterion = criterion_for(id);
            if (!criterion) throw Error(ErrorKind::UnknownName, algo + " has no oracle criterion");
            if (inst.graph.node_count() > kOracleMaxNodes) {
                throw Error(ErrorKind::TooLarge, std::to_string(inst.graph.node_count()) +
                                                     " nodes exceeds oracle bound of " + std::to_string(kOracleMaxNodes));
            }
            const Router router = make_router(id);
            require_domain(router, inst.graph);
            const bool ok = certify_tree(router.route(inst.graph, d), *criterion);
            out << (ok ? "PASS " : "FAIL ") << algo << " " << to_string(*criterion) << "\n";
            return ok ? kExitOk : kExitViolations;
        }

        if (tight->parsed()) {
            std::vector<TightnessCell> cells;
            if (all_cells) {
                if (!target.empty() || !drop.empty()) throw Error(ErrorKind::UnknownCase, "--all takes no cell");
                cells = tightness_grid();
            } else {
                if (target.empty() || drop.empty()) throw Error(ErrorKind::UnknownCase, "need a target and --drop, or --all");
                cells.push_back({parse_algorithm(target), parse_axiom(drop)});
                characterizing_axioms(cells.back().target);
                is_figure_dependent(cells.back().target, cells.back().dropped);
            }
            const SuiteCorpus sc = standard_corpus(seed);
            std::vector<TightnessCase> cases;
            if (all_cells) {
                cases = run_tightness_grid(sc, seed);
            } else {
                cases.push_back(run_tightness(cells[0].target, cells[0].dropped, sc, seed));
            }
            emit_json(all_cells ? to_json(cases) : to_json(cases.front()), json_path, out);
            bool unconfirmed = false;
            for (const auto& c : cases) {
                err << to_string(c.target) << " without " << to_string(c.dropped) << ": " << to_string(c.status)
                    << " (" << c.alternative << ")\n";
                unconfirmed = unconfirmed || c.status == TightnessStatus::Unconfirmed;
            }
            return unconfirmed ? kExitViolations : kExitOk;
        }
    } catch (const Error& e) {
        err << "routelab: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace routelab
