#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "coplab/game.hpp"
#include "coplab/rng.hpp"
#include "coplab/solver.hpp"

namespace coplab {

struct RobberPolicy {
  enum class Kind { kOptimal, kGreedy, kRandom };
  Kind kind = Kind::kOptimal;
  std::optional<std::uint64_t> seed;  // set iff kind == kRandom

  static RobberPolicy optimal() { return {Kind::kOptimal, std::nullopt}; }
  static RobberPolicy greedy() { return {Kind::kGreedy, std::nullopt}; }
  static RobberPolicy random(std::uint64_t seed) { return {Kind::kRandom, seed}; }
};

// "optimal", "greedy" or "random:SEED". Throws InputError otherwise.
RobberPolicy parse_robber_policy(std::string_view text);
std::string to_string(const RobberPolicy& policy);

// Robber driven by a policy. OPTIMAL reads values from a SolverTable solved
// for the number of cops in play: it prefers robber-win successors, then the
// longest capture, ties to the lowest vertex. Against cops that do not play
// the table's moves this is still a strong heuristic, not a guarantee.
// GREEDY maximises the distance to the nearest cop. RANDOM draws uniformly
// from cop-free options with its own mt19937_64.
class PolicyRobber : public RobberStrategy {
 public:
  explicit PolicyRobber(RobberPolicy policy, std::shared_ptr<const SolverTable> table = nullptr);

  std::string name() const override { return to_string(policy_); }
  Vertex place(const Graph& g, std::span<const Vertex> cops) override;
  Vertex move(const Graph& g, const GameState& state) override;

 private:
  Vertex choose(const Graph& g, std::span<const Vertex> cops, std::span<const Vertex> candidates);

  RobberPolicy policy_;
  std::shared_ptr<const SolverTable> table_;
  Rng rng_;
};

}  // namespace coplab
