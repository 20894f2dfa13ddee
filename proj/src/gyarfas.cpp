#include "coplab/gyarfas.hpp"

#include <algorithm>
#include <stdexcept>

#include "coplab/errors.hpp"
#include "coplab/induced_paths.hpp"

namespace coplab {

std::string to_string(Phase phase) {
  switch (phase) {
    case Phase::kPlacing:
      return "PLACING";
    case Phase::kAdvancing:
      return "ADVANCING";
    case Phase::kCapturing:
      return "CAPTURING";
  }
  return "UNKNOWN";
}

std::vector<Vertex> GyarfasState::positions() const {
  std::vector<Vertex> out;
  out.reserve(cop_at.size());
  for (int anchor : cop_at) out.push_back(path[anchor]);
  return out;
}

GyarfasPlacement initial_placement(const Graph& g, int t, AnchorRule rule) {
  if (t < 3) throw InputError("the path strategy needs t >= 3");
  if (!is_connected(g)) throw InputError("the path strategy needs a connected graph");
  Vertex v0 = 0;
  if (rule == AnchorRule::kHighestDegree) {
    for (Vertex v = 1; v < g.order(); ++v) {
      if (g.degree(v) > g.degree(v0)) v0 = v;
    }
  }
  GyarfasState state;
  state.t = t;
  state.path = {v0};
  state.territory = VertexSet::all(g.order());
  state.cop_at.assign(t - 2, 0);
  state.phase = t == 3 ? Phase::kCapturing : Phase::kAdvancing;
  return {state.positions(), std::move(state)};
}

std::variant<GyarfasTurn, StrategyFailure> cop_turn(const Graph& g, const GyarfasState& state, Vertex robber) {
  if (!g.contains(robber)) throw InputError("robber vertex out of range");
  auto positions = state.positions();

  for (std::size_t j = 0; j < state.path.size(); ++j) {
    Vertex anchor = state.path[j];
    if (anchor != robber && !g.has_edge(anchor, robber)) continue;
    auto cop = std::find(state.cop_at.begin(), state.cop_at.end(), static_cast<int>(j)) - state.cop_at.begin();
    positions[cop] = robber;
    return GyarfasTurn{std::move(positions), state};
  }

  if (!state.territory.contains(robber)) {
    throw std::logic_error("robber at " + std::to_string(robber) +
                           " left its territory without entering a guarded neighborhood");
  }

  Vertex tip = state.path.back();
  if (state.phase == Phase::kCapturing) {
    // Anchors plus a shortest route from the tip to the robber through the
    // territory form an induced path on at least t vertices.
    auto route = shortest_path_within(g, state.territory.with(tip), tip, robber);
    if (!route) throw std::logic_error("territory lost contact with the path tip");
    InducedPathCertificate cert{state.path};
    cert.vertices.insert(cert.vertices.end(), route->begin() + 1, route->end());
    cert.vertices.resize(static_cast<std::size_t>(state.t));
    if (!verify_induced_path(g, cert.vertices)) throw std::logic_error("escape certificate is not induced");
    return StrategyFailure{"NOT_PT_FREE",
                           "robber escaped all " + std::to_string(state.path.size()) +
                               " guarded neighborhoods; the graph has an induced P_" + std::to_string(state.t),
                           std::move(cert)};
  }

  auto remainder = state.territory.minus(closed_neighborhood(g, tip));
  VertexSet next_territory;
  for (auto& component : components_within(g, remainder)) {
    if (component.contains(robber)) {
      next_territory = std::move(component);
      break;
    }
  }
  Vertex next_anchor = -1;
  for (Vertex w : g.neighbors(tip)) {
    if (!state.territory.contains(w)) continue;
    auto nbrs = g.neighbors(w);
    if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex x) { return next_territory.contains(x); })) {
      next_anchor = w;
      break;
    }
  }
  if (next_anchor < 0) throw std::logic_error("no neighbor of the tip reaches the robber's component");

  GyarfasState next = state;
  int tip_index = static_cast<int>(state.path.size()) - 1;
  bool stationary_seen = false;
  for (int& anchor : next.cop_at) {
    if (anchor != tip_index) continue;
    if (!stationary_seen) {
      stationary_seen = true;
      continue;
    }
    anchor = tip_index + 1;
  }
  next.path.push_back(next_anchor);
  next.territory = std::move(next_territory);
  next.phase = static_cast<int>(next.path.size()) == state.t - 2 ? Phase::kCapturing : Phase::kAdvancing;
  auto targets = next.positions();
  return GyarfasTurn{std::move(targets), std::move(next)};
}

std::vector<Vertex> GyarfasCop::place(const Graph& g) {
  auto placement = initial_placement(g, t_, rule_);
  state_ = std::move(placement.state);
  return placement.positions;
}

CopDecision GyarfasCop::move(const Graph& g, const GameState& state) {
  auto result = cop_turn(g, state_, *state.robber);
  if (auto* failure = std::get_if<StrategyFailure>(&result)) return std::move(*failure);
  auto& turn = std::get<GyarfasTurn>(result);
  state_ = std::move(turn.state);
  return std::move(turn.targets);
}

nlohmann::ordered_json GyarfasCop::snapshot() const {
  return {{"phase", to_string(state_.phase)},
          {"path", state_.path},
          {"territory", std::vector<Vertex>(state_.territory.begin(), state_.territory.end())},
          {"cop_at", state_.cop_at}};
}

}  // namespace coplab
