#include "routelab/tightness.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "routelab/corpus.hpp"
#include "routelab/error.hpp"
#include "routelab/oracle.hpp"

namespace routelab {

std::string_view to_string(TightnessStatus status) {
    switch (status) {
        case TightnessStatus::Confirmed: return "CONFIRMED";
        case TightnessStatus::Unconfirmed: return "UNCONFIRMED";
        case TightnessStatus::FigureDependent: return "FIGURE_DEPENDENT";
    }
    return "UNKNOWN";
}

namespace {

using SuiteFn = std::vector<AxiomReport> (*)(const Router&, const std::vector<AxiomId>&, const SuiteCorpus&,
                                            std::uint64_t, const CheckOptions&);

[[noreturn]] void unknown_case(AlgorithmId target, AxiomId dropped) {
    throw Error(ErrorKind::UnknownCase,
                "no tightness cell for " + std::string(to_string(target)) + " without " + std::string(to_string(dropped)));
}

bool is_monotonicity(AxiomId a) { return a == AxiomId::Monotonicity || a == AxiomId::InverseMonotonicity; }

// Accepts either monotonicity id for the target's monotonicity axiom.
AxiomId canonical_drop(AlgorithmId target, AxiomId dropped) {
    const auto axioms = characterizing_axioms(target);
    for (AxiomId a : axioms) {
        if (a == dropped || (is_monotonicity(a) && is_monotonicity(dropped))) return a;
    }
    unknown_case(target, dropped);
}

std::vector<AxiomId> retained_axioms(AlgorithmId target, AxiomId dropped) {
    std::vector<AxiomId> out;
    for (AxiomId a : characterizing_axioms(target)) {
        if (a != dropped) out.push_back(a);
    }
    return out;
}

bool contains(const std::vector<AxiomId>& axioms, AxiomId a) {
    return std::find(axioms.begin(), axioms.end(), a) != axioms.end();
}

// Weight maps a graph class is closed under: w -> scale * w + shift.
struct PatternClass {
    bool scale = false;
    bool shift = false;
};

bool matches(const WeightedGraph& h, NodeId d, const DivergenceWitness& p, PatternClass cls) {
    const WeightedGraph& g = p.graph;
    if (d != p.destination || h.node_count() != g.node_count() ||
        !std::ranges::equal(h.edges(), g.edges())) {
        return false;
    }
    const auto gw = g.weights();
    const auto hw = h.weights();
    if (gw.empty()) return true;
    Weight scale = 1;
    Weight shift = 0;
    if (cls.scale && cls.shift) {
        auto j = static_cast<std::size_t>(std::find_if(gw.begin(), gw.end(), [&](const Weight& w) { return w != gw[0]; }) -
                                          gw.begin());
        if (j == gw.size()) {
            // All pattern weights equal: any all-equal graph is a transform of it.
            return std::all_of(hw.begin(), hw.end(), [&](const Weight& w) { return w == hw[0]; });
        }
        scale = (hw[0] - hw[j]) / (gw[0] - gw[j]);
        shift = hw[0] - scale * gw[0];
    } else if (cls.scale) {
        auto j = static_cast<std::size_t>(std::find_if(gw.begin(), gw.end(), [](const Weight& w) { return sgn(w) != 0; }) -
                                          gw.begin());
        if (j == gw.size()) return std::all_of(hw.begin(), hw.end(), [](const Weight& w) { return sgn(w) == 0; });
        scale = hw[j] / gw[j];
    } else if (cls.shift) {
        shift = hw[0] - gw[0];
    }
    if (sgn(scale) <= 0) return false;
    for (std::size_t i = 0; i < gw.size(); ++i) {
        if (hw[i] != scale * gw[i] + shift) return false;
    }
    return true;
}

// Runs the retained suite; a retained monotonicity axiom is also run in the
// opposite direction and holds if either direction is clean.
void check_retained(TightnessAttempt& attempt, const Router& router, const std::vector<AxiomId>& retained,
                    const SuiteCorpus& corpus, std::uint64_t seed, const CheckOptions& options, SuiteFn suite) {
    std::vector<AxiomId> axioms = retained;
    bool has_mono = false;
    for (AxiomId a : retained) {
        if (is_monotonicity(a)) {
            has_mono = true;
            axioms.push_back(a == AxiomId::Monotonicity ? AxiomId::InverseMonotonicity : AxiomId::Monotonicity);
        }
    }
    attempt.retained = suite(router, axioms, corpus, seed, options);
    bool hold = true;
    const AxiomReport* up = nullptr;
    const AxiomReport* down = nullptr;
    for (const auto& r : attempt.retained) {
        if (r.axiom == AxiomId::Monotonicity) {
            up = &r;
        } else if (r.axiom == AxiomId::InverseMonotonicity) {
            down = &r;
        } else if (!r.violations.empty()) {
            hold = false;
        }
    }
    if (has_mono) {
        // Prefer the target's own direction when both hold.
        const bool prefer_up = contains(retained, AxiomId::Monotonicity);
        const AxiomReport* first = prefer_up ? up : down;
        const AxiomReport* second = prefer_up ? down : up;
        if (first->violations.empty()) {
            attempt.monotonicity = prefer_up ? Direction::Up : Direction::Down;
        } else if (second->violations.empty()) {
            attempt.monotonicity = prefer_up ? Direction::Down : Direction::Up;
        } else {
            hold = false;
        }
    }
    attempt.retained_hold = hold;
}

void check_dropped(TightnessAttempt& attempt, const Router& router, AxiomId dropped, const SuiteCorpus& corpus,
                   std::uint64_t seed, const CheckOptions& options, SuiteFn suite) {
    std::vector<AxiomId> axioms{dropped};
    if (is_monotonicity(dropped)) axioms = {AxiomId::Monotonicity, AxiomId::InverseMonotonicity};
    attempt.dropped = suite(router, axioms, corpus, seed, options);
}

TightnessAttempt try_alternative(const Router& target, const Router& alternative, AxiomId dropped,
                                 const std::vector<AxiomId>& retained, const SuiteCorpus& corpus, std::uint64_t seed,
                                 const CheckOptions& options, SuiteFn suite) {
    TightnessAttempt attempt;
    attempt.alternative = alternative.name;
    attempt.witness = search_divergence(target, alternative, corpus);
    check_retained(attempt, alternative, retained, corpus, seed, options, suite);
    check_dropped(attempt, alternative, dropped, corpus, seed, options, suite);
    return attempt;
}

bool confirms(const TightnessAttempt& a) { return a.retained_hold && a.witness.has_value(); }

// Pattern graphs for the hybrid search: small corpus instances with at least
// two spanning trees, in corpus order.
std::vector<GraphInstance> hybrid_patterns(const SuiteCorpus& corpus, const TightnessOptions& options) {
    std::vector<GraphInstance> out;
    for (const auto* part : {&corpus.general, &corpus.unicyclic}) {
        for (const auto& inst : *part) {
            if (out.size() == options.hybrid_graphs) return out;
            const std::size_t n = inst.graph.node_count();
            if (n >= 3 && n <= options.hybrid_max_nodes && inst.graph.edge_count() >= n) out.push_back(inst);
        }
    }
    return out;
}

// The pattern plus every graph obtained by adding one edge to it (below,
// between and above its weights), all with the pattern's destination. Removing
// the added edge maps these back onto the pattern, which is where a hybrid can
// break robustness.
SuiteCorpus pattern_neighbourhood(const GraphInstance& inst) {
    SuiteCorpus out;
    (is_unicyclic(inst.graph) ? out.unicyclic : out.general).push_back(inst);
    const WeightedGraph& g = inst.graph;
    std::vector<Weight> sorted(g.weights().begin(), g.weights().end());
    std::sort(sorted.begin(), sorted.end());
    const Weight low = sorted.front() / 2;
    const Weight mid = (sorted[(sorted.size() - 1) / 2] + sorted[sorted.size() / 2]) / 2 + Weight(1, 7);
    const Weight high = sorted.back() * 2;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = u + 1; v < g.node_count(); ++v) {
            if (g.contains(EdgeId(u, v))) continue;
            for (const Weight& w : {low, mid, high}) {
                auto edges = g.weighted_edges();
                edges.push_back({EdgeId(u, v), w});
                WeightedGraph h(g.node_count(), std::move(edges));
                (is_unicyclic(h) ? out.unicyclic : out.general).push_back({std::move(h), inst.destination});
            }
        }
    }
    return out;
}

void append(SuiteCorpus& to, const SuiteCorpus& from) {
    to.general.insert(to.general.end(), from.general.begin(), from.general.end());
    to.unicyclic.insert(to.unicyclic.end(), from.unicyclic.begin(), from.unicyclic.end());
}

void run_hybrid_search(TightnessCase& out, const Router& target, const std::vector<AxiomId>& retained,
                       const SuiteCorpus& corpus, std::uint64_t seed, const TightnessOptions& options, SuiteFn suite) {
    for (const auto& inst : hybrid_patterns(corpus, options)) {
        const RoutingTree base = target.route(inst.graph, inst.destination);
        const SuiteCorpus local = pattern_neighbourhood(inst);
        for (auto& tree : enumerate_spanning_trees(inst.graph)) {
            if (out.hybrid_candidates == options.hybrid_candidates) return;
            std::sort(tree.begin(), tree.end());
            if (tree == base.edges()) continue;
            ++out.hybrid_candidates;
            DivergenceWitness pattern{inst.graph, inst.destination, base.edges(), tree};
            Router hybrid = make_hybrid_router(out.target, out.dropped, pattern);

            // Cheap screen on the pattern and its neighbourhood.
            TightnessAttempt screen;
            check_retained(screen, hybrid, retained, local, seed, options.check, suite);
            if (!screen.retained_hold) continue;

            SuiteCorpus full = corpus;
            append(full, local);
            TightnessAttempt attempt;
            attempt.alternative = hybrid.name;
            attempt.witness = pattern;
            check_retained(attempt, hybrid, retained, full, seed, options.check, suite);
            check_dropped(attempt, hybrid, out.dropped, full, seed, options.check, suite);
            if (attempt.retained_hold) {
                out.attempts.push_back(attempt);
                out.chosen = std::move(attempt);
                return;
            }
        }
    }
}

TightnessCase run_cell(AlgorithmId target, AxiomId dropped, const SuiteCorpus& corpus, std::uint64_t seed,
                       const TightnessOptions& options, SuiteFn suite) {
    TightnessCase out;
    out.target = target;
    out.dropped = canonical_drop(target, dropped);
    out.seed = seed;
    const Router target_router = make_router(target);
    const auto retained = retained_axioms(target, out.dropped);

    if (is_figure_dependent(target, out.dropped)) {
        out.alternative = std::string(kSearchedAlternative);
        out.status = TightnessStatus::FigureDependent;
        run_hybrid_search(out, target_router, retained, corpus, seed, options, suite);
        if (out.chosen && confirms(*out.chosen)) {
            out.status = TightnessStatus::Confirmed;
            out.witness = out.chosen->witness;
        }
        return out;
    }

    for (const Router& alt : named_alternatives(target, out.dropped)) {
        out.attempts.push_back(try_alternative(target_router, alt, out.dropped, retained, corpus, seed, options.check,
                                               suite));
        if (confirms(out.attempts.back())) break;
    }
    out.chosen = out.attempts.back();
    out.alternative = out.chosen->alternative;
    if (confirms(*out.chosen)) {
        out.status = TightnessStatus::Confirmed;
        out.witness = out.chosen->witness;
    } else {
        out.alternative = out.attempts.front().alternative;
        out.chosen = out.attempts.front();
    }
    return out;
}

}  // namespace

std::vector<AxiomId> characterizing_axioms(AlgorithmId target) {
    using A = AxiomId;
    switch (target) {
        case AlgorithmId::Mst: return {A::Robustness, A::ScaleInvariance, A::ShiftInvariance, A::Monotonicity, A::FirstHop};
        case AlgorithmId::ShortestPath:
            return {A::Robustness, A::ScaleInvariance, A::Monotonicity, A::PathCardinalInvariance};
        case AlgorithmId::WeakestLink:
            return {A::Robustness, A::ScaleInvariance, A::ShiftInvariance, A::InverseMonotonicity,
                    A::PathOrdinalInvariance};
        default:
            throw Error(ErrorKind::UnknownCase, std::string(to_string(target)) + " is not a characterized algorithm");
    }
}

std::vector<TightnessCell> tightness_grid() {
    std::vector<TightnessCell> out;
    for (AlgorithmId t : {AlgorithmId::Mst, AlgorithmId::ShortestPath, AlgorithmId::WeakestLink}) {
        for (AxiomId a : characterizing_axioms(t)) out.push_back({t, a});
    }
    return out;
}

bool is_figure_dependent(AlgorithmId target, AxiomId dropped) {
    const AxiomId a = canonical_drop(target, dropped);
    return a == AxiomId::Robustness || a == AxiomId::ScaleInvariance || a == AxiomId::ShiftInvariance;
}

std::vector<Router> named_alternatives(AlgorithmId target, AxiomId dropped) {
    const AxiomId a = canonical_drop(target, dropped);
    using P = PathTreeConstruction;
    using S = StrongestLinkReading;
    switch (a) {
        case AxiomId::Monotonicity:
            if (target == AlgorithmId::Mst) return {make_router(AlgorithmId::MaxSpanningTree)};
            return {make_router(AlgorithmId::LongestPath),
                    make_router(AlgorithmId::LongestPath, {S::MaxOfMax, P::FewestHops})};
        case AxiomId::InverseMonotonicity:
            return {make_router(AlgorithmId::StrongestLink), make_router(AlgorithmId::StrongestLink, {S::MinOfMin}),
                    make_router(AlgorithmId::StrongestLink, {S::MaxOfMax, P::FewestHops}),
                    make_router(AlgorithmId::StrongestLink, {S::MinOfMin, P::FewestHops})};
        case AxiomId::FirstHop: return {make_router(AlgorithmId::WeakestLink)};
        case AxiomId::PathCardinalInvariance:
        case AxiomId::PathOrdinalInvariance: return {make_router(AlgorithmId::Mst)};
        default: return {};
    }
}

std::optional<DivergenceWitness> search_divergence(const Router& a, const Router& b, const SuiteCorpus& corpus) {
    for (const auto* part : {&corpus.general, &corpus.unicyclic}) {
        for (const auto& inst : *part) {
            const WeightedGraph& g = inst.graph;
            if (!a.accepts(g) || !b.accepts(g)) continue;
            for (NodeId d = 0; d < g.node_count(); ++d) {
                RoutingTree ta = a.route(g, d);
                RoutingTree tb = b.route(g, d);
                if (!same_edges(ta, tb)) return DivergenceWitness{g, d, ta.edges(), tb.edges()};
            }
        }
    }
    return std::nullopt;
}

std::optional<DivergenceWitness> search_divergence(AlgorithmId a, AlgorithmId b, const SuiteCorpus& corpus) {
    return search_divergence(make_router(a), make_router(b), corpus);
}

bool replay_divergence(const Router& target, const Router& alternative, const DivergenceWitness& w) {
    if (w.target_tree == w.alternative_tree) return false;
    return target.route(w.graph, w.destination).edges() == w.target_tree &&
           alternative.route(w.graph, w.destination).edges() == w.alternative_tree;
}

Router make_hybrid_router(AlgorithmId target, AxiomId dropped, const DivergenceWitness& pattern) {
    const auto retained = retained_axioms(target, canonical_drop(target, dropped));
    const PatternClass cls{contains(retained, AxiomId::ScaleInvariance), contains(retained, AxiomId::ShiftInvariance)};
    Router base = make_router(target);
    Router r;
    r.name = "hybrid-" + base.name;
    r.accepts = base.accepts;
    r.route = [base, pattern, cls](const WeightedGraph& g, NodeId d) {
        if (matches(g, d, pattern, cls)) return RoutingTree(g, d, pattern.alternative_tree);
        return base.route(g, d);
    };
    return r;
}

SuiteCorpus standard_corpus(std::uint64_t seed) {
    CorpusSpec general;
    general.graph_count = 200;
    general.min_nodes = 2;
    general.max_nodes = 8;
    general.weights = WeightDistribution::uniform_rational(1, 100, 1000);
    general.distinct_weights = true;
    general.seed = seed;
    CorpusSpec cyclic = general;
    cyclic.graph_count = 100;
    cyclic.min_nodes = 3;
    cyclic.unicyclic = true;
    return {generate_corpus(general), generate_corpus(cyclic)};
}

TightnessCase run_tightness(AlgorithmId target, AxiomId dropped, const SuiteCorpus& corpus, std::uint64_t seed,
                            const TightnessOptions& options) {
    return run_cell(target, dropped, corpus, seed, options, &run_suite);
}

std::vector<TightnessCase> run_tightness_grid(const SuiteCorpus& corpus, std::uint64_t seed,
                                              const TightnessOptions& options) {
    const auto cells = tightness_grid();
    std::vector<TightnessCase> out(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            out[idx] = run_cell(cells[idx].target, cells[idx].dropped, corpus, seed, options, &run_suite);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::vector<TightnessCase> run_tightness_grid_serial(const SuiteCorpus& corpus, std::uint64_t seed,
                                                     const TightnessOptions& options) {
    std::vector<TightnessCase> out;
    for (const auto& cell : tightness_grid()) {
        out.push_back(run_cell(cell.target, cell.dropped, corpus, seed, options, &run_suite_serial));
    }
    return out;
}

}  // namespace routelab
