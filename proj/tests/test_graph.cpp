#include <doctest.h>

#include "fixtures.hpp"
#include "routelab/error.hpp"
#include "routelab/graph_io.hpp"
#include "routelab/weight.hpp"

using namespace routelab;
using namespace routelab::test;

namespace {

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

TEST_CASE("weights parse exactly") {
    CHECK(parse_weight("3") == 3);
    CHECK(parse_weight("-7/14") == Weight(-1, 2));
    CHECK(parse_weight("0.1") == Weight(1, 10));
    CHECK(parse_weight("+2.50") == Weight(5, 2));
    CHECK(format_weight(parse_weight("6/4")) == "3/2");
    CHECK(format_weight(Weight(-4)) == "-4");
    CHECK(kind_of([] { parse_weight("1/0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_weight("abc"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_weight(""); }) == ErrorKind::ParseError);
}

TEST_CASE("edge ids are normalized") {
    EdgeId e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK(e == EdgeId(1, 3));
    CHECK(e.other(1) == 3);
    CHECK(e.touches(3));
    CHECK_FALSE(e.touches(2));
}

TEST_CASE("graph invariants") {
    CHECK(kind_of([] { WeightedGraph(0, {}); }) == ErrorKind::InvariantViolation);
    CHECK(kind_of([] { make_graph(2, {{0, 0, 1}}); }) == ErrorKind::InvariantViolation);
    CHECK(kind_of([] { make_graph(2, {{0, 2, 1}}); }) == ErrorKind::InvariantViolation);
    CHECK(kind_of([] { make_graph(2, {{0, 1, 1}, {1, 0, 2}}); }) == ErrorKind::InvariantViolation);
    CHECK(kind_of([] { make_graph(4, {{0, 1, 1}, {2, 3, 1}}); }) == ErrorKind::InvariantViolation);
    CHECK_NOTHROW(WeightedGraph(1, {}));

    WeightedGraph g = g_tri();
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.weight(EdgeId(2, 0)) == 3);
    CHECK(kind_of([&] { g.weight(EdgeId(0, 5)); }) == ErrorKind::UnknownEdge);
    CHECK(g.neighbors(0).size() == 2);
    CHECK(g.neighbors(0)[0].node == 1);
}

TEST_CASE("routing tree validation") {
    WeightedGraph g = g_tri();
    RoutingTree t(g, 2, edges({{1, 2}, {0, 1}}));
    CHECK(t.edges() == edges({{0, 1}, {1, 2}}));
    CHECK(t.parent(0) == NodeId{1});
    CHECK_FALSE(t.parent(2).has_value());
    CHECK(t.path_passes(0, 1));
    CHECK(t.total_weight() == 2);
    CHECK(tree_path(t, 0).edges == edges({{0, 1}, {1, 2}}));
    CHECK(tree_path(t, 0).nodes() == std::vector<NodeId>{0, 1, 2});
    CHECK(tree_path(t, 2).edges.empty());

    CHECK(kind_of([&] { RoutingTree(g, 2, edges({{0, 1}})); }) == ErrorKind::InvariantViolation);
    CHECK(kind_of([&] { RoutingTree(g, 3, edges({{0, 1}, {1, 2}})); }) == ErrorKind::InvariantViolation);
    WeightedGraph k4 = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}});
    CHECK(kind_of([&] { RoutingTree(k4, 0, edges({{0, 1}, {1, 2}, {0, 2}})); }) == ErrorKind::InvariantViolation);
}

TEST_CASE("edge removal and bridges") {
    WeightedGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}, {2, 3, 4}});
    CHECK(is_bridge(g, EdgeId(2, 3)));
    CHECK_FALSE(is_bridge(g, EdgeId(0, 1)));
    CHECK(kind_of([&] { remove_edge(g, EdgeId(2, 3)); }) == ErrorKind::BridgeRemoval);
    CHECK(remove_edge(g, EdgeId(0, 2)).edge_count() == 3);
    CHECK(kind_of([&] { is_bridge(g, EdgeId(0, 3)); }) == ErrorKind::UnknownEdge);
}

TEST_CASE("weight transforms") {
    WeightedGraph g = g_tri();
    CHECK(scale_weights(g, 2).weight(EdgeId(0, 2)) == 6);
    CHECK(shift_weights(g, Weight(-1, 2)).weight(EdgeId(0, 1)) == Weight(1, 2));
    CHECK(kind_of([&] { scale_weights(g, 0); }) == ErrorKind::NonPositiveScale);
    CHECK(kind_of([&] { scale_weights(g, -1); }) == ErrorKind::NonPositiveScale);
    CHECK(set_edge_weight(g, EdgeId(1, 2), 9).weight(EdgeId(1, 2)) == 9);
    CHECK(kind_of([&] { set_edge_weight(g, EdgeId(0, 4), 1); }) == ErrorKind::UnknownEdge);
    CHECK(scale_weights(g, 1) == g);
    CHECK(max_abs_weight(shift_weights(g, -10)) == 9);
}

TEST_CASE("cycle helpers") {
    WeightedGraph g = make_graph(5, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}, {2, 3, 4}, {3, 4, 5}});
    CHECK(is_unicyclic(g));
    CHECK(unique_cycle(g) == edges({{0, 1}, {0, 2}, {1, 2}}));
    WeightedGraph path = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(cyclomatic_number(path) == 0);
    CHECK(kind_of([&] { unique_cycle(path); }) == ErrorKind::NotUnicyclic);
    CHECK(distinct_weights(g));
    CHECK_FALSE(distinct_weights(path));
}

TEST_CASE("graph file round trip") {
    const char* text =
        "# comment\n"
        "p route 3 3 2\n"
        "\n"
        "e 0 2 3\n"
        "e 1 0 1\n"
        "e 1 2 1/2\n";
    GraphInstance inst = parse_graph(text);
    CHECK(inst.destination == 2);
    CHECK(inst.graph.weight(EdgeId(1, 2)) == Weight(1, 2));
    const std::string canonical = serialize_graph(inst.graph, inst.destination);
    CHECK(canonical == "p route 3 3 2\ne 0 1 1\ne 0 2 3\ne 1 2 1/2\n");
    GraphInstance again = parse_graph(canonical);
    CHECK(again.graph == inst.graph);
    CHECK(serialize_graph(again.graph, again.destination) == canonical);
}

TEST_CASE("graph file errors") {
    CHECK(kind_of([] { parse_graph("e 0 1 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_graph("p route 2 1 0\np route 2 1 0\ne 0 1 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_graph("p route 2 1 0\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_graph("p route 2 1 0\ne 0 1 1\ne 0 1 2\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_graph("p route 2 1 0\ne 0 1 x\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_graph("p route 2 1 0\ne 0 5 1\n"); }) == ErrorKind::InvariantViolation);
    CHECK(kind_of([] { parse_graph("p route 2 1 0\ne 1 1 1\n"); }) == ErrorKind::InvariantViolation);
    CHECK(kind_of([] { parse_graph("p route 4 2 0\ne 0 1 1\ne 2 3 1\n"); }) == ErrorKind::InvariantViolation);
    CHECK(kind_of([] { parse_graph("p route 2 1 7\ne 0 1 1\n"); }) == ErrorKind::InvariantViolation);
    try {
        parse_graph("p route 2 1 0\ne 0 1 x\n");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("dot export") {
    WeightedGraph g = g_tri();
    RoutingTree t(g, 2, edges({{0, 1}, {1, 2}}));
    const std::string dot = emit_dot(g, &t);
    CHECK(dot.rfind("graph routing {", 0) == 0);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("penwidth=3") != std::string::npos);
    RoutingTree foreign(g_wl(), 2, edges({{0, 1}, {1, 2}}));
    CHECK(kind_of([&] { emit_dot(g, &foreign); }) == ErrorKind::ForeignTree);
    CHECK(emit_dot(g, NodeId{2}).find("penwidth") == std::string::npos);
}
