#include "coplab/game.hpp"

#include <algorithm>

#include "coplab/errors.hpp"

namespace coplab {

namespace {

bool legal_step(const Graph& g, Vertex from, Vertex to) {
  return g.contains(from) && g.contains(to) && (from == to || g.has_edge(from, to));
}

bool occupied(std::span<const Vertex> cops, Vertex v) {
  return std::find(cops.begin(), cops.end(), v) != cops.end();
}

StrategyFailure illegal(std::string detail) { return {"ILLEGAL_MOVE", std::move(detail), std::nullopt}; }

}  // namespace

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kCaptured:
      return "CAPTURED";
    case OutcomeKind::kRobberSurvived:
      return "ROBBER_SURVIVED";
    case OutcomeKind::kStrategyFailure:
      return "STRATEGY_FAILURE";
  }
  return "UNKNOWN";
}

GameTrace play(const Graph& g, CopStrategy& cops, RobberStrategy& robber, int move_limit) {
  if (!is_connected(g)) throw InputError("the game needs a connected graph");
  if (move_limit < 1) throw InputError("move limit must be positive");

  GameTrace trace;
  trace.cop_strategy = cops.name();
  trace.robber_strategy = robber.name();
  trace.move_limit = move_limit;
  GameState state;

  auto finish = [&](OutcomeKind kind, std::optional<StrategyFailure> failure = std::nullopt,
                    std::optional<GameEvent> offending = std::nullopt) {
    trace.outcome = Outcome{kind, state.cop_moves_made, std::move(failure), std::move(offending)};
    return trace;
  };
  auto capture = [&](Vertex at) {
    trace.events.push_back(event::Capture{at, state.cop_moves_made});
    return finish(OutcomeKind::kCaptured);
  };

  auto placement = cops.place(g);
  trace.cop_count = static_cast<int>(placement.size());
  if (placement.empty() ||
      std::any_of(placement.begin(), placement.end(), [&](Vertex v) { return !g.contains(v); })) {
    return finish(OutcomeKind::kStrategyFailure, illegal("cop placement outside the graph"),
                  event::CopPlacement{placement});
  }
  state.cops = placement;
  state.cop_moves_made = 1;
  trace.events.push_back(event::CopPlacement{placement});

  Vertex start = robber.place(g, state.cops);
  if (!g.contains(start)) {
    return finish(OutcomeKind::kStrategyFailure, illegal("robber placement outside the graph"),
                  event::RobberPlacement{start});
  }
  state.robber = start;
  trace.events.push_back(event::RobberPlacement{start});
  if (occupied(state.cops, start)) return capture(start);

  while (true) {
    if (state.cop_moves_made >= move_limit) return finish(OutcomeKind::kRobberSurvived);
    state.side_to_move = Side::kCops;
    auto decision = cops.move(g, state);
    if (auto* failure = std::get_if<StrategyFailure>(&decision)) {
      return finish(OutcomeKind::kStrategyFailure, std::move(*failure));
    }
    auto& targets = std::get<std::vector<Vertex>>(decision);
    event::CopMove move{state.cop_moves_made + 1, {}, nullptr};
    for (std::size_t c = 0; c < targets.size() && c < state.cops.size(); ++c) {
      move.steps.push_back({static_cast<int>(c), state.cops[c], targets[c]});
    }
    if (targets.size() != state.cops.size()) {
      return finish(OutcomeKind::kStrategyFailure, illegal("cop strategy moved the wrong number of cops"),
                    move);
    }
    for (const auto& step : move.steps) {
      if (!legal_step(g, step.from, step.to)) {
        return finish(OutcomeKind::kStrategyFailure,
                      illegal("cop " + std::to_string(step.cop) + " stepped " + std::to_string(step.from) +
                              " -> " + std::to_string(step.to)),
                      move);
      }
    }
    state.cops = targets;
    state.cop_moves_made = move.move;
    move.snapshot = cops.snapshot();
    trace.events.push_back(std::move(move));
    if (occupied(state.cops, *state.robber)) return capture(*state.robber);

    state.side_to_move = Side::kRobber;
    Vertex from = *state.robber;
    Vertex to = robber.move(g, state);
    if (!legal_step(g, from, to)) {
      return finish(OutcomeKind::kStrategyFailure,
                    illegal("robber stepped " + std::to_string(from) + " -> " + std::to_string(to)),
                    event::RobberMove{from, to});
    }
    state.robber = to;
    trace.events.push_back(event::RobberMove{from, to});
    if (occupied(state.cops, to)) return capture(to);
  }
}

std::optional<std::string> validate_trace(const Graph& g, const GameTrace& trace) {
  std::vector<Vertex> cops;
  std::optional<Vertex> robber;
  int cop_moves = 0;
  bool captured = false;
  auto co_located = [&] { return robber && occupied(cops, *robber); };

  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const auto& ev = trace.events[i];
    std::string where = "event " + std::to_string(i) + ": ";
    if (captured) return where + "event after capture";
    if (const auto* e = std::get_if<event::CopPlacement>(&ev)) {
      if (cop_moves != 0) return where + "second cop placement";
      for (Vertex v : e->positions) {
        if (!g.contains(v)) return where + "cop placed outside the graph";
      }
      cops = e->positions;
      cop_moves = 1;
    } else if (const auto* e = std::get_if<event::RobberPlacement>(&ev)) {
      if (cop_moves != 1 || robber) return where + "robber placed out of turn";
      if (!g.contains(e->vertex)) return where + "robber placed outside the graph";
      robber = e->vertex;
    } else if (const auto* e = std::get_if<event::CopMove>(&ev)) {
      if (!robber) return where + "cops moved before the robber was placed";
      if (co_located()) return where + "cops moved although the robber was already caught";
      if (e->steps.size() != cops.size()) return where + "wrong number of cop steps";
      for (const auto& step : e->steps) {
        if (step.cop < 0 || static_cast<std::size_t>(step.cop) >= cops.size()) return where + "bad cop index";
        if (cops[step.cop] != step.from) return where + "cop step starts at the wrong vertex";
        if (!legal_step(g, step.from, step.to)) return where + "illegal cop step";
      }
      for (const auto& step : e->steps) cops[step.cop] = step.to;
      if (e->move != ++cop_moves) return where + "cop move numbering is off";
    } else if (const auto* e = std::get_if<event::RobberMove>(&ev)) {
      if (!robber || *robber != e->from) return where + "robber step starts at the wrong vertex";
      if (co_located()) return where + "robber moved although already caught";
      if (!legal_step(g, e->from, e->to)) return where + "illegal robber step";
      robber = e->to;
    } else if (const auto* e = std::get_if<event::Capture>(&ev)) {
      if (!co_located() || *robber != e->vertex) return where + "capture without co-location";
      if (e->cop_moves != cop_moves) return where + "capture move count mismatch";
      captured = true;
    }
  }
  if (co_located() && !captured) return std::string("cops and robber co-located without a capture event");
  const auto& out = trace.outcome;
  if ((out.kind == OutcomeKind::kCaptured) != captured) return std::string("outcome disagrees with events");
  if (out.cop_moves != cop_moves) return std::string("outcome move count disagrees with events");
  return std::nullopt;
}

}  // namespace coplab
