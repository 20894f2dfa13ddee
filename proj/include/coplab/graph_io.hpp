#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coplab/graph.hpp"

namespace coplab {

// graph6, short form only (n <= 62). An optional ">>graph6<<" header is
// accepted. Throws ParseError carrying the byte offset of the first bad byte.
Graph parse_graph6(std::string_view text);
// Throws InputError for n > 62.
std::string encode_graph6(const Graph& g);

// Plain edge list: "n m" header line followed by m "u v" lines. Blank lines
// and lines starting with '#' are ignored. ParseError offsets are 1-based lines.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// One graph read from an input file. Exactly one of `graph` / `error` is set.
struct GraphRecord {
  std::string id;      // graph6 string, or "path:line" for edge-list input
  std::string source;  // "path:line"
  std::optional<Graph> graph;
  std::string error;
};

// A file whose first meaningful line is two integers is one edge-list graph;
// anything else is read as graph6, one graph per line. "-" reads stdin.
// Never throws: unreadable files and malformed lines come back as records
// with `error` set.
std::vector<GraphRecord> load_graphs(const std::string& path);
std::vector<GraphRecord> read_graphs(std::istream& in, const std::string& name);

}  // namespace coplab
