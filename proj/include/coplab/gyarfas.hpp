#pragma once

#include <variant>
#include <vector>

#include "coplab/game.hpp"
#include "coplab/graph.hpp"

namespace coplab {

// How the first anchor is picked. Ties always go to the lowest index.
enum class AnchorRule { kLowestIndex, kHighestDegree };

enum class Phase { kPlacing, kAdvancing, kCapturing };

// Live state of the path strategy with t-2 cops.
//
// `path` is the induced path of anchors grown so far. `territory` is the
// connected vertex set holding the robber: the whole graph before the first
// advance, afterwards the component of the previous territory minus N[tip]
// that contained the robber. `cop_at[c]` is the anchor index cop c sits on.
// Cop j stays behind on anchor j for good; the rest travel with the tip.
struct GyarfasState {
  int t = 3;
  std::vector<Vertex> path;
  VertexSet territory;
  std::vector<int> cop_at;
  Phase phase = Phase::kPlacing;

  std::vector<Vertex> positions() const;
};

struct GyarfasPlacement {
  std::vector<Vertex> positions;
  GyarfasState state;
};

// All t-2 cops on v_0. Throws InputError for t < 3 or a disconnected graph.
GyarfasPlacement initial_placement(const Graph& g, int t, AnchorRule rule = AnchorRule::kLowestIndex);

struct GyarfasTurn {
  std::vector<Vertex> targets;
  GyarfasState state;
};

// One cop turn against the robber's current vertex:
//  - robber inside N[v_j] of some anchor: the lowest such anchor's cop steps on it;
//  - otherwise grow the path into the robber's component and shrink the territory;
//  - once all t-2 anchors exist, a robber outside every N[v_j] proves the graph
//    has an induced P_t, returned as a NOT_PT_FREE failure with certificate.
// Throws std::logic_error if the robber is found outside its territory.
std::variant<GyarfasTurn, StrategyFailure> cop_turn(const Graph& g, const GyarfasState& state, Vertex robber);

class GyarfasCop : public CopStrategy {
 public:
  explicit GyarfasCop(int t, AnchorRule rule = AnchorRule::kLowestIndex) : t_(t), rule_(rule) {}

  std::string name() const override { return "gyarfas"; }
  std::vector<Vertex> place(const Graph& g) override;
  CopDecision move(const Graph& g, const GameState& state) override;
  nlohmann::ordered_json snapshot() const override;

  const GyarfasState& state() const { return state_; }

 private:
  int t_;
  AnchorRule rule_;
  GyarfasState state_;
};

std::string to_string(Phase phase);

}  // namespace coplab
