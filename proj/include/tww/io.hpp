#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

/// Input error; line is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

enum class GraphFormat { detect, edge_list, graph6 };

/// "n m" then m lines "u v"; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
/// Canonical form: header, then edges u < v in increasing order.
std::string write_edge_list(const Graph& g);

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);
/// One graph per non-empty line.
std::vector<Graph> parse_graph6_corpus(std::string_view text);

/// Detection: a ".g6" extension or a first line that is not two integers
/// means graph6.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::detect, std::string_view name = {});
Graph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::detect);
std::string read_text_file(const std::string& path);

/// {"version":1,"n":..,"width":..,"steps":[[u,v],...]} with schema checks.
ContractionSequence parse_sequence_json(std::string_view text);
std::string write_sequence_json(const ContractionSequence& seq);

}  // namespace tww
