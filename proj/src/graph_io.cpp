#include "routelab/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "routelab/error.hpp"

namespace routelab {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& reason) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + reason);
}

std::size_t parse_count(std::string_view tok, std::size_t line_no, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        fail(line_no, std::string("bad ") + what + " '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

GraphInstance parse_graph(std::string_view text) {
    struct Header {
        std::size_t n, m, d;
    };
    std::optional<Header> header;
    std::vector<WeightedEdge> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;

        if (tokens[0] == "p") {
            if (header) fail(line_no, "duplicate header");
            if (tokens.size() != 5 || tokens[1] != "route") fail(line_no, "header must be 'p route <n> <m> <d>'");
            header = Header{parse_count(tokens[2], line_no, "node count"), parse_count(tokens[3], line_no, "edge count"),
                            parse_count(tokens[4], line_no, "destination")};
        } else if (tokens[0] == "e") {
            if (!header) fail(line_no, "edge before header");
            if (tokens.size() != 4) fail(line_no, "edge must be 'e <u> <v> <w>'");
            if (edges.size() == header->m) fail(line_no, "more than " + std::to_string(header->m) + " edge lines");
            auto u = parse_count(tokens[1], line_no, "node id");
            auto v = parse_count(tokens[2], line_no, "node id");
            Weight w;
            try {
                w = parse_weight(tokens[3]);
            } catch (const Error& e) {
                fail(line_no, e.what());
            }
            if (u >= header->n || v >= header->n) {
                throw Error(ErrorKind::InvariantViolation,
                            "line " + std::to_string(line_no) + ": endpoint out of range");
            }
            edges.push_back({EdgeId(static_cast<NodeId>(u), static_cast<NodeId>(v)), std::move(w)});
            if (u == v) {
                throw Error(ErrorKind::InvariantViolation, "line " + std::to_string(line_no) + ": self-loop");
            }
        } else {
            fail(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
        }
    }
    if (!header) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": missing header");
    if (edges.size() != header->m) {
        fail(line_no, "expected " + std::to_string(header->m) + " edge lines, found " + std::to_string(edges.size()));
    }
    if (header->d >= header->n) throw Error(ErrorKind::InvariantViolation, "destination out of range");
    return {WeightedGraph(header->n, std::move(edges)), static_cast<NodeId>(header->d)};
}

std::string serialize_graph(const WeightedGraph& g, NodeId destination) {
    std::ostringstream out;
    out << "p route " << g.node_count() << ' ' << g.edge_count() << ' ' << destination << '\n';
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        out << "e " << g.edges()[i].u << ' ' << g.edges()[i].v << ' ' << format_weight(g.weights()[i]) << '\n';
    }
    return out.str();
}

namespace {

std::string render_dot(const WeightedGraph& g, std::optional<NodeId> destination, const RoutingTree* tree) {
    std::ostringstream out;
    out << "graph routing {\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << "  " << v;
        if (destination && *destination == v) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        EdgeId e = g.edges()[i];
        out << "  " << e.u << " -- " << e.v << " [label=\"" << format_weight(g.weights()[i]) << '"';
        if (tree && tree->contains(e)) out << ", style=bold, penwidth=3";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string emit_dot(const WeightedGraph& g, const RoutingTree* tree) {
    if (!tree) return render_dot(g, std::nullopt, nullptr);
    if (!(tree->graph() == g)) throw Error(ErrorKind::ForeignTree, "tree belongs to a different graph");
    return render_dot(g, tree->destination(), tree);
}

std::string emit_dot(const WeightedGraph& g, NodeId destination) { return render_dot(g, destination, nullptr); }

}  // namespace routelab
