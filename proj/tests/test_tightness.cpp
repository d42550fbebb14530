#include <doctest.h>

#include "fixtures.hpp"
#include "routelab/corpus.hpp"
#include "routelab/error.hpp"
#include "routelab/report_json.hpp"
#include "routelab/tightness.hpp"

using namespace routelab;
using namespace routelab::test;

namespace {

SuiteCorpus small_corpus(std::uint64_t seed) {
    CorpusSpec general;
    general.graph_count = 40;
    general.max_nodes = 6;
    general.weights = WeightDistribution::uniform_rational(1, 100, 1000);
    general.seed = seed;
    CorpusSpec cyclic = general;
    cyclic.graph_count = 25;
    cyclic.min_nodes = 3;
    cyclic.unicyclic = true;
    return {generate_corpus(general), generate_corpus(cyclic)};
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("grid layout") {
    const auto grid = tightness_grid();
    CHECK(grid.size() == 14);
    std::size_t figure = 0;
    for (const auto& cell : grid) figure += is_figure_dependent(cell.target, cell.dropped);
    CHECK(figure == 8);
    CHECK(named_alternatives(AlgorithmId::Mst, AxiomId::Monotonicity).front().name == "max-spanning-tree");
    CHECK(named_alternatives(AlgorithmId::Mst, AxiomId::FirstHop).front().name == "weakest-link");
    CHECK(named_alternatives(AlgorithmId::ShortestPath, AxiomId::InverseMonotonicity).front().name == "longest-path");
    CHECK(named_alternatives(AlgorithmId::WeakestLink, AxiomId::Monotonicity).front().name == "strongest-link");
    CHECK(named_alternatives(AlgorithmId::WeakestLink, AxiomId::PathOrdinalInvariance).front().name == "mst");
    CHECK(named_alternatives(AlgorithmId::Mst, AxiomId::Robustness).empty());
}

TEST_CASE("cells outside the grid") {
    const SuiteCorpus corpus = small_corpus(1);
    CHECK(kind_of([&] { run_tightness(AlgorithmId::ShortestPath, AxiomId::FirstHop, corpus, 1); }) ==
          ErrorKind::UnknownCase);
    CHECK(kind_of([&] { run_tightness(AlgorithmId::ShortestPath, AxiomId::ShiftInvariance, corpus, 1); }) ==
          ErrorKind::UnknownCase);
    CHECK(kind_of([&] { run_tightness(AlgorithmId::MaxSpanningTree, AxiomId::Robustness, corpus, 1); }) ==
          ErrorKind::UnknownCase);
}

TEST_CASE("divergence search") {
    SuiteCorpus tri{{{g_tri(), 2}}, {}};
    CHECK_FALSE(search_divergence(AlgorithmId::Mst, AlgorithmId::Mst, small_corpus(1)).has_value());
    CHECK_FALSE(search_divergence(AlgorithmId::Mst, AlgorithmId::ShortestPath, tri).has_value());

    SuiteCorpus wl{{{g_wl(), 2}, {g_tri(), 2}}, {}};
    auto w = search_divergence(AlgorithmId::Mst, AlgorithmId::WeakestLink, wl);
    REQUIRE(w.has_value());
    CHECK(w->graph == g_wl());
    CHECK(w->destination == 0);
    CHECK(w->target_tree == edges({{0, 2}, {1, 2}}));
    CHECK(w->alternative_tree == edges({{0, 1}, {0, 2}}));
    CHECK(replay_divergence(make_router(AlgorithmId::Mst), make_router(AlgorithmId::WeakestLink), *w));
    CHECK_FALSE(replay_divergence(make_router(AlgorithmId::Mst), make_router(AlgorithmId::Mst), *w));

    CorpusSpec spec;
    spec.graph_count = 200;
    spec.min_nodes = spec.max_nodes = 4;
    spec.edge_density = Weight(1);
    spec.weights = WeightDistribution::uniform_int(1, 50);
    CHECK(search_divergence(AlgorithmId::Mst, AlgorithmId::WeakestLink, {generate_corpus(spec), {}}).has_value());
}

TEST_CASE("divergence witness json round trip") {
    SuiteCorpus wl{{{g_wl(), 2}}, {}};
    auto w = search_divergence(AlgorithmId::Mst, AlgorithmId::WeakestLink, wl);
    REQUIRE(w.has_value());
    DivergenceWitness back = divergence_from_json(to_json(*w));
    CHECK(back.graph == w->graph);
    CHECK(back.target_tree == w->target_tree);
    CHECK(replay_divergence(make_router(AlgorithmId::Mst), make_router(AlgorithmId::WeakestLink), back));
    CHECK(kind_of([] { divergence_from_json(Json::object()); }) == ErrorKind::ParseError);
}

TEST_CASE("hybrid routers match their pattern class") {
    DivergenceWitness pattern{g_tri(), 2, edges({{0, 1}, {1, 2}}), edges({{0, 2}, {1, 2}})};
    // Dropping shift keeps scale: scaled copies are in the class, shifted ones are not.
    Router scale_only = make_hybrid_router(AlgorithmId::Mst, AxiomId::ShiftInvariance, pattern);
    CHECK(scale_only.name == "hybrid-mst");
    CHECK(scale_only.route(g_tri(), 2).edges() == pattern.alternative_tree);
    CHECK(scale_only.route(scale_weights(g_tri(), 3), 2).edges() == pattern.alternative_tree);
    CHECK(scale_only.route(shift_weights(g_tri(), 3), 2).edges() == pattern.target_tree);
    CHECK(scale_only.route(g_tri(), 1).edges() == mst_route(g_tri(), 1).edges());
    CHECK(scale_only.route(g_wl(), 2).edges() == mst_route(g_wl(), 2).edges());

    Router shift_only = make_hybrid_router(AlgorithmId::Mst, AxiomId::ScaleInvariance, pattern);
    CHECK(shift_only.route(shift_weights(g_tri(), -7), 2).edges() == pattern.alternative_tree);
    CHECK(shift_only.route(scale_weights(g_tri(), 3), 2).edges() == pattern.target_tree);

    Router affine = make_hybrid_router(AlgorithmId::Mst, AxiomId::Robustness, pattern);
    CHECK(affine.route(transform_weights(g_tri(), 5, -2), 2).edges() == pattern.alternative_tree);
    CHECK(affine.route(transform_weights(g_tri(), -1, 0), 2).edges() == mst_route(transform_weights(g_tri(), -1, 0), 2).edges());
}

TEST_CASE("named cells confirm with replayable witnesses") {
    const SuiteCorpus corpus = small_corpus(2);
    struct Expect {
        AlgorithmId target;
        AxiomId dropped;
        const char* alternative;
    };
    for (const auto& [target, dropped, alternative] :
         {Expect{AlgorithmId::Mst, AxiomId::Monotonicity, "max-spanning-tree"},
          Expect{AlgorithmId::Mst, AxiomId::FirstHop, "weakest-link"},
          Expect{AlgorithmId::ShortestPath, AxiomId::PathCardinalInvariance, "mst"}}) {
        TightnessCase c = run_tightness(target, dropped, corpus, 1);
        CAPTURE(to_string(target));
        CAPTURE(to_string(dropped));
        CHECK(c.status == TightnessStatus::Confirmed);
        CHECK(c.alternative == alternative);
        REQUIRE(c.witness.has_value());
        CHECK(replay_divergence(make_router(target), named_alternatives(target, dropped).front(), *c.witness));
        REQUIRE(c.chosen.has_value());
        CHECK(c.chosen->retained_hold);
    }

    TightnessCase mono = run_tightness(AlgorithmId::Mst, AxiomId::Monotonicity, corpus, 1);
    REQUIRE(mono.chosen.has_value());
    REQUIRE(mono.chosen->dropped.size() == 2);
    CHECK_FALSE(mono.chosen->dropped[0].violations.empty());
}

TEST_CASE("greedy longest path fails robustness, the fewest-hop tree does not") {
    const SuiteCorpus corpus = small_corpus(3);
    TightnessCase c = run_tightness(AlgorithmId::ShortestPath, AxiomId::Monotonicity, corpus, 1);
    REQUIRE(c.attempts.size() >= 1);
    CHECK(c.attempts.front().alternative == "longest-path");
    CHECK(c.status == TightnessStatus::Confirmed);
    CHECK(c.alternative == "longest-path/fewest-hops");
}

TEST_CASE("tightness json") {
    const SuiteCorpus corpus = small_corpus(4);
    TightnessCase c = run_tightness(AlgorithmId::Mst, AxiomId::FirstHop, corpus, 1);
    Json j = to_json(c);
    CHECK(j["target"] == "mst");
    CHECK(j["dropped"] == "first-hop");
    CHECK(j["alternative"] == "weakest-link");
    CHECK(j["status"] == "CONFIRMED");
    CHECK(j.contains("witness_graph"));
    CHECK(j["monotonicity_direction"] == "down");
    CHECK(j["suite_reports"].is_array());

    TightnessCase f = run_tightness(AlgorithmId::WeakestLink, AxiomId::ShiftInvariance, corpus, 1);
    Json fj = to_json(f);
    CHECK(fj["alternative"] == "SEARCHED");
    CHECK((fj["status"] == "FIGURE_DEPENDENT" || fj["status"] == "CONFIRMED"));
    CHECK(fj.contains("hybrid_candidates"));
}

TEST_CASE("grid: parallel matches serial") {
    const SuiteCorpus corpus = small_corpus(5);
    TightnessOptions options;
    options.hybrid_candidates = 10;
    const auto parallel = run_tightness_grid(corpus, 1, options);
    const auto serial = run_tightness_grid_serial(corpus, 1, options);
    CHECK(to_json(parallel).dump() == to_json(serial).dump());
    for (const auto& c : parallel) CHECK(c.status != TightnessStatus::Unconfirmed);
}
