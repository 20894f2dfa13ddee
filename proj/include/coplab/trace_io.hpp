#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "coplab/game.hpp"
#include "coplab/graph.hpp"

namespace coplab {

// One JSON object per line: a "header" line, one line per event tagged by
// "type" (cop_placement, robber_placement, cop_move, robber_move, capture),
// and a closing "outcome" line.
std::string to_jsonl(const Graph& g, const GameTrace& trace);

// Inverse of to_jsonl. Throws InputError on malformed input.
GameTrace trace_from_jsonl(std::string_view text);

// Graphviz rendering; each vertex lists the cop moves after which it held a
// cop and the rounds in which it held the robber.
std::string to_dot(const Graph& g, const GameTrace& trace);

struct ReplayReport {
  bool ok = false;
  std::string error;
  std::optional<int> capture_cop_moves;
};

// Parses a JSONL trace and re-checks it against `g` with validate_trace.
ReplayReport replay_jsonl(const Graph& g, std::string_view text);

nlohmann::ordered_json failure_to_json(const StrategyFailure& failure);

}  // namespace coplab
