#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coplab/graph.hpp"
#include "coplab/induced_paths.hpp"
#include "json.hpp"

namespace coplab {

enum class Side { kCops, kRobber };

// Perfect-information view handed to both strategies. `cop_moves_made`
// counts the initial placement as move 1.
struct GameState {
  std::vector<Vertex> cops;
  std::optional<Vertex> robber;
  Side side_to_move = Side::kCops;
  int cop_moves_made = 0;
};

// Raised by a cop strategy that cannot continue (reason "NOT_PT_FREE") or
// recorded by the engine when a strategy breaks the movement rules
// (reason "ILLEGAL_MOVE").
struct StrategyFailure {
  std::string reason;
  std::string detail;
  std::optional<InducedPathCertificate> certificate;
};

using CopDecision = std::variant<std::vector<Vertex>, StrategyFailure>;

class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Vertex> place(const Graph& g) = 0;
  // New position of every cop, indexed like GameState::cops.
  virtual CopDecision move(const Graph& g, const GameState& state) = 0;
  // Internal state recorded in the trace after each cop move.
  virtual nlohmann::ordered_json snapshot() const { return nullptr; }
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const Graph& g, std::span<const Vertex> cops) = 0;
  virtual Vertex move(const Graph& g, const GameState& state) = 0;
};

namespace event {

struct CopPlacement {
  std::vector<Vertex> positions;
};
struct RobberPlacement {
  Vertex vertex;
};
struct CopStep {
  int cop;
  Vertex from;
  Vertex to;
  friend bool operator==(const CopStep&, const CopStep&) = default;
};
struct CopMove {
  int move;
  std::vector<CopStep> steps;
  nlohmann::ordered_json snapshot;
};
struct RobberMove {
  Vertex from;
  Vertex to;
};
struct Capture {
  Vertex vertex;
  int cop_moves;
};

}  // namespace event

using GameEvent = std::variant<event::CopPlacement, event::RobberPlacement, event::CopMove,
                               event::RobberMove, event::Capture>;

enum class OutcomeKind { kCaptured, kRobberSurvived, kStrategyFailure };

struct Outcome {
  OutcomeKind kind = OutcomeKind::kRobberSurvived;
  int cop_moves = 0;
  std::optional<StrategyFailure> failure;
  // The rejected move, for ILLEGAL_MOVE failures. Not part of `events`.
  std::optional<GameEvent> offending_event;
};

struct GameTrace {
  std::optional<int> t;
  int cop_count = 0;
  std::string cop_strategy;
  std::string robber_strategy;
  int move_limit = 0;
  std::vector<GameEvent> events;
  Outcome outcome;
};

inline int default_move_limit(const Graph& g) { return 4 * g.order(); }

// Runs one game. Capture is declared the moment a cop and the robber share a
// vertex. Throws InputError for a disconnected graph or a non-positive limit.
GameTrace play(const Graph& g, CopStrategy& cops, RobberStrategy& robber, int move_limit);

// Replays a trace against the graph: every step is stay-or-edge, CAPTURE
// appears exactly when positions coincide, and the outcome's move count
// matches the events. Returns a description of the first problem found.
std::optional<std::string> validate_trace(const Graph& g, const GameTrace& trace);

std::string to_string(OutcomeKind kind);

}  // namespace coplab
