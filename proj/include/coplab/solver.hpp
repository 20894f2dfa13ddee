#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "coplab/game.hpp"
#include "coplab/graph.hpp"

namespace coplab {

// Game value in plies (single cop or robber turns) until capture under
// optimal play, or a robber win.
class GameValue {
 public:
  static GameValue robber_win() { return GameValue(-1); }
  static GameValue cop_win_in(int plies) { return GameValue(plies); }

  bool robber_wins() const { return plies_ < 0; }
  int plies() const { return plies_; }

  friend bool operator==(GameValue, GameValue) = default;

 private:
  explicit GameValue(int plies) : plies_(plies) {}
  int plies_;
};

// Converts a cops-to-move value after both placements into the capture
// time counted in cop moves, placement included.
inline int capture_cop_moves(int plies_after_placement) { return 1 + (plies_after_placement + 1) / 2; }

// Game values for every (cop multiset, robber vertex, side to move) of one
// graph and cop count. Cop multisets are ranked in colex order of their
// sorted tuples.
class SolverTable {
 public:
  int order() const { return n_; }
  int cops() const { return k_; }
  std::uint64_t tuple_count() const { return tuple_count_; }
  std::uint64_t state_count() const { return tuple_count_ * static_cast<std::uint64_t>(n_) * 2; }

  // `cops` may be in any order; its length must equal cops().
  GameValue value(std::span<const Vertex> cops, Vertex robber, Side side) const;
  GameValue value_at(std::uint64_t rank, Vertex robber, Side side) const;

  std::uint64_t rank(std::span<const Vertex> sorted_cops) const;
  std::vector<Vertex> tuple(std::uint64_t rank) const;

  // FNV-1a over all values; identical tables give identical digests.
  std::uint64_t digest() const;
  // One state per line: "c1,c2,... robber side value", value "R" for a robber win.
  void dump(std::ostream& out) const;

 private:
  friend class TableBuilder;

  int n_ = 0;
  int k_ = 0;
  std::uint64_t tuple_count_ = 0;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<std::uint16_t> cop_values_;
  std::vector<std::uint16_t> robber_values_;
};

struct SolveResult {
  bool cop_win = false;
  std::optional<int> optimal_capture_cop_moves;  // placement counts as move 1
  std::vector<Vertex> best_initial_placement;    // sorted; lexicographically first optimum
};

struct Solution {
  std::shared_ptr<const SolverTable> table;
  SolveResult result;
};

struct SolverOptions {
  // Caps both the number of game states and the largest intermediate
  // array of the cop-move propagation.
  std::uint64_t budget = 50'000'000;
};

// Retrograde analysis from the capture states. Throws InputError for a
// disconnected graph or k < 1 and ResourceError when over budget.
Solution solve(const Graph& g, int k, const SolverOptions& options = {});

// Smallest k <= k_max whose solve() is a cop win; nullopt means "> k_max".
std::optional<int> cop_number(const Graph& g, int k_max, const SolverOptions& options = {});

// Number of states solve() would allocate, and the largest intermediate it needs.
struct SolverCost {
  std::uint64_t states = 0;
  std::uint64_t working_set = 0;
};
SolverCost solver_cost(int n, int k);

// Calls `fn` with every joint cop move (each cop stays or steps along an
// edge) in lexicographic order of the per-cop choices.
void for_each_joint_move(const Graph& g, std::span<const Vertex> cops,
                         const std::function<void(std::span<const Vertex>)>& fn);

// Plays the table's minimax moves: best placement first, then the joint move
// with the smallest successor value (first in enumeration order on ties).
class OptimalCop : public CopStrategy {
 public:
  explicit OptimalCop(Solution solution) : solution_(std::move(solution)) {}

  std::string name() const override { return "optimal"; }
  std::vector<Vertex> place(const Graph& g) override;
  CopDecision move(const Graph& g, const GameState& state) override;

 private:
  Solution solution_;
};

}  // namespace coplab
