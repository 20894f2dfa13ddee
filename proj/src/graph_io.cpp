#include "coplab/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "coplab/errors.hpp"

namespace coplab {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kMaxShortOrder = 62;

std::size_t adjacency_bytes(int n) {
  auto bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  return (bits + 5) / 6;
}

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);

  auto byte_at = [&](std::size_t i) {
    int b = static_cast<unsigned char>(text[i]);
    if (b < 63 || b > 126) throw ParseError("graph6: byte out of range [63,126]", base + i);
    return b - 63;
  };

  int first = byte_at(0);
  if (first == 63) throw ParseError("graph6: long form (n > 62) is not supported", base);
  int n = first;
  std::size_t expected = 1 + adjacency_bytes(n);
  if (text.size() < expected) throw ParseError("graph6: truncated adjacency data", base + text.size());
  if (text.size() > expected) throw ParseError("graph6: trailing bytes after adjacency data", base + expected);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      int chunk = byte_at(1 + bit / 6);
      if (chunk & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  }
  // Padding bits in the final byte must be zero so encoding round-trips.
  if (bit % 6 != 0) {
    int chunk = byte_at(1 + bit / 6);
    if (chunk & ((1 << (6 - bit % 6)) - 1)) {
      throw ParseError("graph6: nonzero padding bits", base + 1 + bit / 6);
    }
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  if (n > kMaxShortOrder) throw InputError("graph6 short form supports at most 62 vertices");
  std::vector<int> bits(adjacency_bytes(n), 0);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) bits[bit / 6] |= 1 << (5 - bit % 6);
    }
  }
  std::string out(1, static_cast<char>(63 + n));
  for (int b : bits) out += static_cast<char>(63 + b);
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<long, long>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  auto read_pair = [&](const std::string& s) {
    std::istringstream fields(s);
    long a = 0, b = 0;
    std::string rest;
    if (!(fields >> a >> b) || (fields >> rest)) {
      throw ParseError("edge list: expected two integers", line_no);
    }
    return std::pair{a, b};
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    auto [a, b] = read_pair(s);
    if (!header) {
      if (a < 0 || b < 0) throw ParseError("edge list: negative header value", line_no);
      header = {a, b};
      continue;
    }
    auto n = header->first;
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError("edge list: endpoint out of range", line_no);
    if (a == b) throw ParseError("edge list: self-loop", line_no);
    Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second) throw ParseError("edge list: duplicate edge", line_no);
    edges.push_back(e);
  }
  if (!header) throw ParseError("edge list: missing \"n m\" header", line_no);
  if (static_cast<long>(edges.size()) != header->second) {
    throw ParseError("edge list: header announces " + std::to_string(header->second) +
                         " edges, found " + std::to_string(edges.size()),
                     line_no);
  }
  return Graph(static_cast<int>(header->first), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<GraphRecord> read_graphs(std::istream& in, const std::string& name) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  static const std::regex kTwoInts(R"(\s*\d+\s+\d+\s*)");
  std::vector<GraphRecord> records;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto s = trim(lines[i]);
    if (s.empty() || s.front() == '#') continue;
    if (std::regex_match(s, kTwoInts)) {
      // Whole file is a single edge-list graph.
      std::string all;
      for (const auto& l : lines) all += l + '\n';
      GraphRecord rec{name + ":" + std::to_string(i + 1), name + ":" + std::to_string(i + 1), {}, {}};
      try {
        rec.graph = parse_edge_list(all);
      } catch (const ParseError& e) {
        rec.source = name + ":" + std::to_string(e.offset());
        rec.error = e.what();
      } catch (const InputError& e) {
        rec.error = e.what();
      }
      return {std::move(rec)};
    }
    break;
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto s = trim(lines[i]);
    if (s.empty()) continue;
    std::string source = name + ":" + std::to_string(i + 1);
    std::string id = s.starts_with(kGraph6Header) ? s.substr(kGraph6Header.size()) : s;
    GraphRecord rec{id, source, {}, {}};
    try {
      rec.graph = parse_graph6(s);
    } catch (const InputError& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<GraphRecord> load_graphs(const std::string& path) {
  if (path == "-") return read_graphs(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) return {GraphRecord{path, path, {}, "cannot open " + path}};
  return read_graphs(in, path);
}

}  // namespace coplab
