#ifndef ROUTELAB_GRAPH_IO_HPP
#define ROUTELAB_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "routelab/graph.hpp"

namespace routelab {

struct GraphInstance {
    WeightedGraph graph;
    NodeId destination;
};

// Line-oriented text format:
//   # comment
//   p route <n> <m> <d>
//   e <u> <v> <w>        (exactly m of these; w decimal or num/den)
// Throws Error{ParseError} with a line number for malformed text and
// Error{InvariantViolation} for loops, parallel edges, disconnection or a
// destination out of range.
GraphInstance parse_graph(std::string_view text);

// Canonical form: header, then edges in lexicographic order.
std::string serialize_graph(const WeightedGraph& g, NodeId destination);

// Graphviz rendering. Tree edges are bold, the destination is double-circled.
// Throws Error{ForeignTree} if the tree was built over a different graph.
std::string emit_dot(const WeightedGraph& g, const RoutingTree* tree = nullptr);
std::string emit_dot(const WeightedGraph& g, NodeId destination);

}  // namespace routelab

#endif  // ROUTELAB_GRAPH_IO_HPP
