#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dgl/classifier.hpp"
#include "dgl/consensus.hpp"
#include "dgl/graph.hpp"
#include "dgl/multilayer.hpp"
#include "dgl/spectra.hpp"

namespace dgl::io {

using nlohmann::json;

// Graph text format, one directive per line, '#' starts a comment:
//
//   n 6
//   2 1 1.0            # tail head weight, 1-based; tail == head is a self-loop
//   provenance dcid 4  # optional: dcid <layers> | compose <|V1|>
//
// The JSON form carries the same fields:
//   {"n": 6, "edges": [[2, 1, 1.0], ...], "provenance": {"kind": "dcid", "m": 4}}

/// Throws ParseError (with line number) on malformed text and on invalid
/// edges.
Digraph parse_graph_text(std::string_view text);
Digraph parse_graph_json(std::string_view text);

/// JSON when the first non-blank character is '{', text otherwise.
Digraph parse_graph(std::string_view text);

/// Weights use the shortest decimal that parses back to the same double.
std::string to_graph_text(const Digraph& g);
json to_graph_json(const Digraph& g);

Digraph load_graph(const std::string& path);
void save_graph(const Digraph& g, const std::string& path);

/// Cross-edge file: an "e12" line opens V1 -> V2 edges, an "e21" line opens
/// V2 -> V1 edges; each edge line is "tail head weight" with tail/head
/// 1-based in their own component graphs.
struct CrossEdges {
    std::vector<CrossEdge> e12;
    std::vector<CrossEdge> e21;
};

CrossEdges parse_cross_edges(std::string_view text);

/// Whitespace/comma separated reals, '#' comments allowed.
std::vector<double> parse_vector(std::string_view text);

std::string read_file(const std::string& path);

json to_json(const SpectralReport& r);
json to_json(const BlockDecomposition& d);
json to_json(const ClassificationVerdict& v);
json to_json(const Outcome& o);

/// Header t,x1,...,xn,disagreement then one row per sample.
void write_trajectory_csv(const SimulationResult& r, std::ostream& out);

/// Shortest representation that parses back to the same double.
std::string format_real(double v);

}  // namespace dgl::io
