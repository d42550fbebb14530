#include "routelab/axioms.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "routelab/error.hpp"
#include "routelab/random.hpp"

namespace routelab {

std::string_view to_string(AxiomId id) {
    switch (id) {
        case AxiomId::Robustness: return "robustness";
        case AxiomId::ScaleInvariance: return "scale-invariance";
        case AxiomId::ShiftInvariance: return "shift-invariance";
        case AxiomId::Monotonicity: return "monotonicity";
        case AxiomId::InverseMonotonicity: return "inverse-monotonicity";
        case AxiomId::FirstHop: return "first-hop";
        case AxiomId::PathCardinalInvariance: return "path-cardinal-invariance";
        case AxiomId::PathOrdinalInvariance: return "path-ordinal-invariance";
    }
    return "unknown";
}

AxiomId parse_axiom(std::string_view token) {
    static constexpr std::pair<std::string_view, AxiomId> kShorthand[] = {
        {"1", AxiomId::Robustness},      {"2", AxiomId::ScaleInvariance},
        {"3", AxiomId::ShiftInvariance}, {"4", AxiomId::Monotonicity},
        {"4u", AxiomId::Monotonicity},   {"4d", AxiomId::InverseMonotonicity},
        {"5", AxiomId::FirstHop},        {"6", AxiomId::PathCardinalInvariance},
        {"7", AxiomId::PathOrdinalInvariance},
    };
    for (const auto& [name, id] : kShorthand) {
        if (token == name) return id;
    }
    for (AxiomId id : kAllAxioms) {
        if (to_string(id) == token) return id;
    }
    throw Error(ErrorKind::UnknownName, "unknown axiom '" + std::string(token) + "'");
}

bool needs_unicyclic(AxiomId id) {
    return id == AxiomId::PathCardinalInvariance || id == AxiomId::PathOrdinalInvariance;
}

void AxiomReport::record_skip(const std::string& reason, std::size_t count) {
    skipped += count;
    skip_reasons[reason] += count;
}

void AxiomReport::merge(const AxiomReport& other) {
    trials += other.trials;
    skipped += other.skipped;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& [reason, count] : other.skip_reasons) skip_reasons[reason] += count;
    if (note.empty()) note = other.note;
}

std::size_t total_violations(const std::vector<AxiomReport>& reports) {
    std::size_t total = 0;
    for (const auto& r : reports) total += r.violations.size();
    return total;
}

namespace {

using Verdict = Evaluation::Verdict;

Evaluation skip(std::string reason) {
    Evaluation e;
    e.verdict = Verdict::Skip;
    e.skip_reason = std::move(reason);
    return e;
}

Evaluation judge(bool violated, Outcome expected, Outcome actual) {
    Evaluation e;
    e.verdict = violated ? Verdict::Violation : Verdict::Pass;
    e.expected = std::move(expected);
    e.actual = std::move(actual);
    return e;
}

const char* const kOutsideDomain = "transformed graph outside algorithm domain";

// Neighbors of v whose tree path to the destination avoids v.
std::vector<NodeId> hop_candidates(const RoutingTree& t, NodeId v) {
    std::vector<NodeId> out;
    for (const auto& nb : t.graph().neighbors(v)) {
        if (!t.path_passes(nb.node, v)) out.push_back(nb.node);
    }
    return out;
}

Evaluation evaluate_first_hop(const Router& router, const WeightedGraph& g, NodeId d, const Transformation& t) {
    const NodeId v = t.vertex.value();
    if (v == d) return skip("vertex is the destination");
    const RoutingTree before = router.route(g, d);
    const std::vector<NodeId> candidates = hop_candidates(before, v);
    for (const auto& we : t.reweight) {
        for (NodeId c : candidates) {
            if (we.id == EdgeId(v, c)) return skip("transformation changes a candidate edge");
        }
    }
    const WeightedGraph changed = set_edge_weights(g, t.reweight);
    if (!router.accepts(changed)) return skip(kOutsideDomain);
    const RoutingTree after = router.route(changed, d);
    for (const auto& nb : g.neighbors(v)) {
        const bool in_c = std::find(candidates.begin(), candidates.end(), nb.node) != candidates.end();
        const bool avoids_v = !after.path_passes(nb.node, v);
        if (in_c != avoids_v) return skip("side conditions unsatisfied");
    }
    return judge(after.parent(v) != before.parent(v), tree_path(before, v), tree_path(after, v));
}

}  // namespace

Evaluation evaluate(const Router& router, const WeightedGraph& g, NodeId d, const Transformation& t) {
    if (!router.accepts(g)) return skip("input outside algorithm domain");
    switch (t.axiom) {
        case AxiomId::Robustness: {
            const EdgeId e = t.edges.at(0);
            const NodeId v = t.vertex.value();
            if (is_bridge(g, e)) return skip("bridge");
            const RoutingTree before = router.route(g, d);
            Path p = tree_path(before, v);
            if (p.contains(e)) return skip("path uses the removed edge");
            const WeightedGraph reduced = remove_edge(g, e);
            if (!router.accepts(reduced)) return skip(kOutsideDomain);
            Path q = tree_path(router.route(reduced, d), v);
            const bool violated = p != q;
            return judge(violated, std::move(p), std::move(q));
        }
        case AxiomId::ScaleInvariance:
        case AxiomId::ShiftInvariance: {
            const Weight& alpha = t.values.at(0);
            const WeightedGraph changed =
                t.axiom == AxiomId::ScaleInvariance ? scale_weights(g, alpha) : shift_weights(g, alpha);
            if (!router.accepts(changed)) return skip(kOutsideDomain);
            auto before = router.route(g, d).edges();
            auto after = router.route(changed, d).edges();
            const bool violated = before != after;
            return judge(violated, std::move(before), std::move(after));
        }
        case AxiomId::Monotonicity:
        case AxiomId::InverseMonotonicity: {
            const EdgeId e = t.edges.at(0);
            if (is_bridge(g, e)) return skip("bridge");
            const RoutingTree before = router.route(g, d);
            const bool up = t.axiom == AxiomId::Monotonicity;
            if (before.contains(e) == up) return skip("edge does not meet the hypothesis");
            const WeightedGraph base = t.reweight.empty() ? g : set_edge_weights(g, t.reweight);
            const WeightedGraph probe = set_edge_weight(base, e, t.values.at(0));
            if (!router.accepts(probe)) return skip(kOutsideDomain);
            auto after = router.route(probe, d).edges();
            const bool violated = std::binary_search(after.begin(), after.end(), e);
            return judge(violated, before.edges(), std::move(after));
        }
        case AxiomId::FirstHop:
            return evaluate_first_hop(router, g, d, t);
        case AxiomId::PathCardinalInvariance:
        case AxiomId::PathOrdinalInvariance: {
            if (!is_unicyclic(g)) throw Error(ErrorKind::NotUnicyclic, "graph does not have exactly one cycle");
            const NodeId v = t.vertex.value();
            std::vector<WeightedEdge> updates;
            if (t.axiom == AxiomId::PathCardinalInvariance) {
                for (EdgeId e : t.edges) updates.push_back({e, g.weight(e) + t.values.at(0)});
            } else {
                updates.push_back({t.edges.at(0), t.values.at(0)});
            }
            const WeightedGraph changed = set_edge_weights(g, updates);
            if (!router.accepts(changed)) return skip(kOutsideDomain);
            Path p = tree_path(router.route(g, d), v);
            Path q = tree_path(router.route(changed, d), v);
            const bool violated = p != q;
            return judge(violated, std::move(p), std::move(q));
        }
    }
    return skip("unknown axiom");
}

bool replay(const Router& router, const Witness& w) {
    Evaluation e = evaluate(router, w.graph, w.destination, w.transformation);
    return e.verdict == Verdict::Violation && e.expected == w.expected && e.actual == w.actual;
}

namespace {

AxiomReport new_report(AxiomId axiom, const Router& router, std::uint64_t seed) {
    AxiomReport r;
    r.axiom = axiom;
    r.algorithm = router.name;
    r.seed = seed;
    return r;
}

// Folds one evaluation into the report. Returns true on violation.
bool tally(AxiomReport& report, const WeightedGraph& g, NodeId d, const Transformation& t, Evaluation e) {
    ++report.trials;
    switch (e.verdict) {
        case Verdict::Pass: return false;
        case Verdict::Skip: report.record_skip(e.skip_reason); return false;
        case Verdict::Violation:
            report.violations.push_back({g, d, t, std::move(*e.expected), std::move(*e.actual)});
            return true;
    }
    return false;
}

Weight min_weight(const WeightedGraph& g) { return *std::min_element(g.weights().begin(), g.weights().end()); }
Weight max_weight(const WeightedGraph& g) { return *std::max_element(g.weights().begin(), g.weights().end()); }

// lo + (hi - lo) * k / steps for k uniform in [k_lo, steps - k_hi_margin].
Weight between(Rng& rng, const Weight& lo, const Weight& hi, std::int64_t k_lo, std::int64_t k_hi,
               std::int64_t steps) {
    return lo + (hi - lo) * Weight(static_cast<long>(rng.uniform_int(k_lo, k_hi)), static_cast<long>(steps));
}

Weight random_positive(Rng& rng) {
    Weight w(static_cast<long>(rng.uniform_int(1, 10000)), static_cast<long>(rng.uniform_int(1, 1000)));
    w.canonicalize();
    return w;
}

Weight random_signed(Rng& rng) {
    Weight w(static_cast<long>(rng.uniform_int(-10000, 10000)), static_cast<long>(rng.uniform_int(1, 1000)));
    w.canonicalize();
    return w;
}

// Fresh weights for `edges`, pairwise distinct and distinct from `taken`.
// Drawn from the graph's weight range widened by its span; kept positive
// when the graph is.
std::vector<WeightedEdge> random_reweight(Rng& rng, const WeightedGraph& g, const std::vector<EdgeId>& edges,
                                          std::set<Weight> taken) {
    const Weight lo_w = min_weight(g);
    const Weight hi_w = max_weight(g);
    const Weight span = hi_w - lo_w + 1;
    const Weight lo = all_positive(g) ? Weight(lo_w / 2) : Weight(lo_w - span);
    const Weight hi = hi_w + span;
    std::vector<WeightedEdge> out;
    for (EdgeId e : edges) {
        Weight w;
        do {
            w = between(rng, lo, hi, 0, 100000, 100000);
        } while (taken.count(w) || sgn(w) == 0);
        taken.insert(w);
        out.push_back({e, w});
    }
    return out;
}

Weight power_of_two(unsigned k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
    return Weight(p);
}

// Cycle node nearest to d (d itself when d lies on the cycle).
NodeId cycle_entry(const WeightedGraph& g, NodeId d, const std::vector<EdgeId>& cycle) {
    std::vector<bool> on_cycle(g.node_count(), false);
    for (EdgeId e : cycle) on_cycle[e.u] = on_cycle[e.v] = true;
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeId> frontier{d};
    seen[d] = true;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        NodeId x = frontier[i];
        if (on_cycle[x]) return x;
        for (const auto& nb : g.neighbors(x)) {
            if (!seen[nb.node]) {
                seen[nb.node] = true;
                frontier.push_back(nb.node);
            }
        }
    }
    throw Error(ErrorKind::NotUnicyclic, "no cycle reachable from destination");
}

// Both simple v -> d paths of a unicyclic graph (exactly two for a cycle node other than the entry).
std::vector<Path> two_paths(const WeightedGraph& g, NodeId v, NodeId d) {
    std::vector<Path> out;
    std::vector<bool> on_path(g.node_count(), false);
    Path prefix{v, d, {}};
    auto dfs = [&](auto& self, NodeId cur) -> void {
        if (cur == d) {
            out.push_back(prefix);
            return;
        }
        for (const auto& nb : g.neighbors(cur)) {
            if (on_path[nb.node]) continue;
            on_path[nb.node] = true;
            prefix.edges.emplace_back(cur, nb.node);
            self(self, nb.node);
            prefix.edges.pop_back();
            on_path[nb.node] = false;
        }
    };
    on_path[v] = true;
    dfs(dfs, v);
    return out;
}

struct CycleSetup {
    std::vector<NodeId> eligible;  // cycle nodes other than the entry
};

CycleSetup cycle_setup(const WeightedGraph& g, NodeId d) {
    const auto cycle = unique_cycle(g);  // throws NotUnicyclic
    const NodeId entry = cycle_entry(g, d, cycle);
    std::set<NodeId> nodes;
    for (EdgeId e : cycle) {
        nodes.insert(e.u);
        nodes.insert(e.v);
    }
    nodes.erase(entry);
    return {std::vector<NodeId>(nodes.begin(), nodes.end())};
}

std::vector<EdgeId> only_in(const Path& a, const Path& b) {
    std::vector<EdgeId> out;
    for (EdgeId e : a.edges) {
        if (!b.contains(e)) out.push_back(e);
    }
    return out;
}

}  // namespace

AxiomReport check_robustness(const Router& router, const WeightedGraph& g, NodeId d) {
    AxiomReport report = new_report(AxiomId::Robustness, router, 0);
    if (!router.accepts(g)) {
        report.trials = g.edge_count();
        report.record_skip("input outside algorithm domain", g.edge_count());
        return report;
    }
    for (EdgeId e : g.edges()) {
        if (is_bridge(g, e)) {
            ++report.trials;
            report.record_skip("bridge");
            continue;
        }
        // One trial per removed edge; the first node whose path moved is the witness.
        const WeightedGraph reduced = remove_edge(g, e);
        ++report.trials;
        if (!router.accepts(reduced)) {
            report.record_skip(kOutsideDomain);
            continue;
        }
        const RoutingTree before = router.route(g, d);
        const RoutingTree after = router.route(reduced, d);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const Path p = tree_path(before, v);
            if (p.contains(e) || p == tree_path(after, v)) continue;
            Transformation t{AxiomId::Robustness, v, {e}, {}, {}};
            Evaluation ev = evaluate(router, g, d, t);
            --report.trials;
            tally(report, g, d, t, std::move(ev));
            break;
        }
    }
    return report;
}

namespace {

AxiomReport check_global(AxiomId axiom, const Router& router, const WeightedGraph& g, NodeId d,
                         std::vector<Weight> probes, std::size_t samples, std::uint64_t seed) {
    AxiomReport report = new_report(axiom, router, seed);
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        probes.push_back(axiom == AxiomId::ScaleInvariance ? random_positive(rng) : random_signed(rng));
    }
    for (auto& alpha : probes) {
        Transformation t{axiom, std::nullopt, {}, {alpha}, {}};
        tally(report, g, d, t, evaluate(router, g, d, t));
    }
    return report;
}

}  // namespace

AxiomReport check_scale_invariance(const Router& router, const WeightedGraph& g, NodeId d, std::size_t samples,
                                   std::uint64_t seed) {
    return check_global(AxiomId::ScaleInvariance, router, g, d,
                        {Weight(1, 2), Weight(2), Weight(37, 10), Weight(1, 1000), Weight(1000)}, samples, seed);
}

AxiomReport check_shift_invariance(const Router& router, const WeightedGraph& g, NodeId d, std::size_t samples,
                                   std::uint64_t seed) {
    return check_global(AxiomId::ShiftInvariance, router, g, d, {Weight(-5), Weight(-1, 10), Weight(1), Weight(42)},
                        samples, seed);
}

AxiomReport check_monotonicity(const Router& router, const WeightedGraph& g, NodeId d, Direction direction,
                               std::uint64_t seed, std::size_t reweightings) {
    const AxiomId axiom = direction == Direction::Up ? AxiomId::Monotonicity : AxiomId::InverseMonotonicity;
    AxiomReport report = new_report(axiom, router, seed);
    report.note = "threshold searched over 2^0..2^40; re-weightings W' are sampled, not exhaustive";
    if (!router.accepts(g)) {
        report.trials = 1;
        report.record_skip("input outside algorithm domain");
        return report;
    }
    constexpr unsigned kMaxExponent = 40;
    const bool up = direction == Direction::Up;
    const RoutingTree tree = router.route(g, d);
    Rng rng(seed);

    for (EdgeId e : g.edges()) {
        if (is_bridge(g, e)) {
            ++report.trials;
            report.record_skip("bridge");
            continue;
        }
        if (tree.contains(e) == up) continue;  // hypothesis does not apply to this edge

        std::vector<EdgeId> others;
        for (EdgeId f : g.edges()) {
            if (f != e) others.push_back(f);
        }
        for (std::size_t r = 0; r <= reweightings; ++r) {
            Transformation t{axiom, std::nullopt, {e}, {Weight(0)}, {}};
            if (r > 0) t.reweight = random_reweight(rng, g, others, {});
            const WeightedGraph base = t.reweight.empty() ? g : set_edge_weights(g, t.reweight);
            const Weight magnitude = max_abs_weight(base);
            // Threshold candidates; positive-only domains get a positive descending ladder for DOWN.
            WeightedGraph probe_domain = set_edge_weight(base, e, up ? Weight(magnitude + 1) : Weight(-magnitude - 1));
            const bool positive_ladder = !up && !router.accepts(probe_domain);
            const Weight floor = positive_ladder ? min_weight(base) : Weight(0);
            auto threshold = [&](unsigned k) -> Weight {
                if (up) return magnitude + power_of_two(k);
                if (positive_ladder) return floor / power_of_two(k + 1);
                return -magnitude - power_of_two(k);
            };
            auto further = [&](const Weight& m) -> std::vector<Weight> {
                if (up) return {m + 17, 2 * m};
                if (positive_ladder) return {m / 2, m / 17};
                return {m - 17, 2 * m};
            };

            std::optional<Evaluation> outcome;
            for (unsigned k = 0; k <= kMaxExponent; ++k) {
                t.values = {threshold(k)};
                Evaluation ev = evaluate(router, g, d, t);
                if (ev.verdict == Verdict::Skip) {
                    outcome = std::move(ev);
                    break;
                }
                if (ev.verdict == Verdict::Pass) {
                    outcome = std::move(ev);
                    for (const Weight& above : further(threshold(k))) {
                        t.values = {above};
                        Evaluation check = evaluate(router, g, d, t);
                        if (check.verdict != Verdict::Pass) {
                            outcome = std::move(check);
                            break;
                        }
                    }
                    break;
                }
                if (k == kMaxExponent) outcome = std::move(ev);  // never excluded: violation at the last probe
            }
            tally(report, g, d, t, std::move(*outcome));
        }
    }
    return report;
}

AxiomReport check_first_hop(const Router& router, const WeightedGraph& g, NodeId d, std::size_t trials,
                            std::uint64_t seed) {
    AxiomReport report = new_report(AxiomId::FirstHop, router, seed);
    if (g.node_count() < 2 || !router.accepts(g)) {
        report.trials = trials;
        report.record_skip(g.node_count() < 2 ? "no vertex besides the destination" : "input outside algorithm domain",
                           trials);
        return report;
    }
    Rng rng(seed);
    const RoutingTree tree = router.route(g, d);
    for (std::size_t i = 0; i < trials; ++i) {
        auto v = static_cast<NodeId>(rng.index(g.node_count() - 1));
        if (v >= d) ++v;
        const auto candidates = hop_candidates(tree, v);
        std::set<Weight> kept;
        std::vector<EdgeId> free_edges;
        for (EdgeId e : g.edges()) {
            const bool fixed = e.touches(v) && std::find(candidates.begin(), candidates.end(), e.other(v)) != candidates.end();
            if (fixed) {
                kept.insert(g.weight(e));
            } else {
                free_edges.push_back(e);
            }
        }
        Transformation t{AxiomId::FirstHop, v, {}, {}, random_reweight(rng, g, free_edges, kept)};
        tally(report, g, d, t, evaluate(router, g, d, t));
    }
    return report;
}

AxiomReport check_path_cardinal_invariance(const Router& router, const WeightedGraph& g, NodeId d,
                                           std::size_t samples, std::uint64_t seed) {
    AxiomReport report = new_report(AxiomId::PathCardinalInvariance, router, seed);
    const CycleSetup setup = cycle_setup(g, d);
    Rng rng(seed);
    const Weight magnitude = max_abs_weight(g) + 1;
    for (std::size_t i = 0; i < samples; ++i) {
        const NodeId v = setup.eligible[rng.index(setup.eligible.size())];
        const auto paths = two_paths(g, v, d);
        const auto first_only = only_in(paths[0], paths[1]);
        const auto second_only = only_in(paths[1], paths[0]);
        const EdgeId e1 = first_only[rng.index(first_only.size())];
        const EdgeId e2 = second_only[rng.index(second_only.size())];
        Transformation t{AxiomId::PathCardinalInvariance, v, {e1, e2}, {}, {}};
        // Redraw alpha a few times if it leaves the algorithm's domain.
        Evaluation ev;
        for (int attempt = 0; attempt < 16; ++attempt) {
            t.values = {between(rng, -magnitude, 2 * magnitude, 0, 3000, 3000)};
            ev = evaluate(router, g, d, t);
            if (!(ev.verdict == Verdict::Skip && ev.skip_reason == kOutsideDomain)) break;
        }
        tally(report, g, d, t, std::move(ev));
    }
    return report;
}

AxiomReport check_path_ordinal_invariance(const Router& router, const WeightedGraph& g, NodeId d,
                                          std::size_t samples, std::uint64_t seed, OrdinalReading reading) {
    AxiomReport report = new_report(AxiomId::PathOrdinalInvariance, router, seed);
    const CycleSetup setup = cycle_setup(g, d);
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const NodeId v = setup.eligible[rng.index(setup.eligible.size())];
        const auto paths = two_paths(g, v, d);
        std::set<EdgeId> pool(paths[0].edges.begin(), paths[0].edges.end());
        pool.insert(paths[1].edges.begin(), paths[1].edges.end());

        Weight lo_all = g.weight(*pool.begin());
        Weight hi_all = lo_all;
        for (EdgeId e : pool) {
            lo_all = std::min(lo_all, g.weight(e));
            hi_all = std::max(hi_all, g.weight(e));
        }
        std::vector<EdgeId> eligible;
        for (EdgeId e : pool) {
            if (g.weight(e) > lo_all && g.weight(e) < hi_all) eligible.push_back(e);
        }
        if (eligible.empty()) {
            ++report.trials;
            report.record_skip("no edge that is neither maximal nor minimal");
            continue;
        }
        const EdgeId e = eligible[rng.index(eligible.size())];
        const Weight& w = g.weight(e);

        // Neighbouring weights among the edges the new value must stay ordered against.
        std::vector<EdgeId> against;
        if (reading == OrdinalReading::Conservative) {
            against.assign(pool.begin(), pool.end());
        } else {
            for (const Path& p : paths) {
                if (p.contains(e)) against.insert(against.end(), p.edges.begin(), p.edges.end());
            }
        }
        std::optional<Weight> below, above;
        bool tied = false;
        for (EdgeId f : against) {
            if (f == e) continue;
            const Weight& x = g.weight(f);
            if (x == w) tied = true;
            if (x < w && (!below || x > *below)) below = x;
            if (x > w && (!above || x < *above)) above = x;
        }
        if (tied && reading == OrdinalReading::Conservative) {
            ++report.trials;
            report.record_skip("tied weights leave no order-preserving slack");
            continue;
        }
        Weight lo = below.value_or(w - (hi_all - lo_all));
        Weight new_weight;
        if (reading == OrdinalReading::Conservative) {
            new_weight = between(rng, lo, *above, 1, 999, 1000);
        } else {
            // Only W'(e') >= W(e'') for the edges e' used to dominate.
            Weight hi = w + (hi_all - lo_all) + 1;
            new_weight = tied ? between(rng, w, hi, 0, 999, 1000) : between(rng, lo, hi, 1, 999, 1000);
        }
        Transformation t{AxiomId::PathOrdinalInvariance, v, {e}, {new_weight}, {}};
        tally(report, g, d, t, evaluate(router, g, d, t));
    }
    return report;
}

AxiomReport check_axiom(AxiomId axiom, const Router& router, const WeightedGraph& g, NodeId d, std::uint64_t seed,
                        const CheckOptions& options) {
    switch (axiom) {
        case AxiomId::Robustness: {
            AxiomReport r = check_robustness(router, g, d);
            r.seed = seed;
            return r;
        }
        case AxiomId::ScaleInvariance: return check_scale_invariance(router, g, d, options.samples, seed);
        case AxiomId::ShiftInvariance: return check_shift_invariance(router, g, d, options.samples, seed);
        case AxiomId::Monotonicity: return check_monotonicity(router, g, d, Direction::Up, seed, options.reweightings);
        case AxiomId::InverseMonotonicity:
            return check_monotonicity(router, g, d, Direction::Down, seed, options.reweightings);
        case AxiomId::FirstHop: return check_first_hop(router, g, d, options.trials, seed);
        case AxiomId::PathCardinalInvariance:
            return check_path_cardinal_invariance(router, g, d, options.samples, seed);
        case AxiomId::PathOrdinalInvariance:
            return check_path_ordinal_invariance(router, g, d, options.samples, seed, options.ordinal);
    }
    throw Error(ErrorKind::UnknownName, "unknown axiom");
}

namespace {

const GraphInstance& instance_at(const SuiteCorpus& corpus, AxiomId axiom, std::size_t i) {
    if (needs_unicyclic(axiom)) return corpus.unicyclic[i];
    return i < corpus.general.size() ? corpus.general[i] : corpus.unicyclic[i - corpus.general.size()];
}

std::size_t instance_count(const SuiteCorpus& corpus, AxiomId axiom) {
    return needs_unicyclic(axiom) ? corpus.unicyclic.size() : corpus.general.size() + corpus.unicyclic.size();
}

AxiomReport check_instance(AxiomId axiom, const Router& router, const GraphInstance& inst, std::uint64_t seed,
                           const CheckOptions& options) {
    try {
        return check_axiom(axiom, router, inst.graph, inst.destination, seed, options);
    } catch (const Error& e) {
        AxiomReport r = new_report(axiom, router, seed);
        r.trials = 1;
        r.record_skip(std::string(to_string(e.kind())));
        return r;
    }
}

AxiomReport finish(AxiomId axiom, const Router& router, std::uint64_t seed, const std::vector<AxiomReport>& parts) {
    AxiomReport total = new_report(axiom, router, seed);
    for (const auto& p : parts) total.merge(p);
    total.seed = seed;
    return total;
}

}  // namespace

std::vector<AxiomReport> run_suite(const Router& router, const std::vector<AxiomId>& axioms, const SuiteCorpus& corpus,
                                   std::uint64_t seed, const CheckOptions& options) {
    std::vector<AxiomReport> out;
    for (AxiomId axiom : axioms) {
        const std::size_t count = instance_count(corpus, axiom);
        std::vector<AxiomReport> parts(count);
        std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
            const auto idx = static_cast<std::size_t>(i);
            try {
                parts[idx] = check_instance(axiom, router, instance_at(corpus, axiom, idx),
                                            derive_seed(seed, idx, static_cast<std::uint64_t>(axiom)), options);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        out.push_back(finish(axiom, router, seed, parts));
    }
    return out;
}

std::vector<AxiomReport> run_suite_serial(const Router& router, const std::vector<AxiomId>& axioms,
                                          const SuiteCorpus& corpus, std::uint64_t seed, const CheckOptions& options) {
    std::vector<AxiomReport> out;
    for (AxiomId axiom : axioms) {
        const std::size_t count = instance_count(corpus, axiom);
        std::vector<AxiomReport> parts;
        parts.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            parts.push_back(check_instance(axiom, router, instance_at(corpus, axiom, i),
                                           derive_seed(seed, i, static_cast<std::uint64_t>(axiom)), options));
        }
        out.push_back(finish(axiom, router, seed, parts));
    }
    return out;
}

}  // namespace routelab
