#pragma once

#include <cstdint>
#include <optional>

#include "coplab/game.hpp"
#include "coplab/gyarfas.hpp"
#include "coplab/solver.hpp"

namespace coplab {

// Cross-check of the path strategy against the exact solver on one graph,
// with t = max(L + 1, 3) for the longest induced path order L.
//  (a) t-2 cops win according to the solver;
//  (b) the path strategy captures the table-guided robber within t-1 cop
//      moves and the trace replays cleanly;
//  (c) the strategy is never faster than optimal play with t-2 cops.
struct TheoremReport {
  int longest_induced_path = 0;
  int t = 3;
  int cops = 1;
  std::optional<int> cop_number;  // absent when above t-2
  bool solver_cop_win = false;
  std::optional<int> solver_capture_moves;
  std::uint64_t table_digest = 0;
  GameTrace trace;
  std::optional<int> strategy_capture_moves;
  bool check_a = false;
  bool check_b = false;
  bool check_c = false;

  bool pass() const { return check_a && check_b && check_c; }
};

// Throws InputError for a disconnected graph, ResourceError when a solve is
// over budget.
TheoremReport verify_theorem_bound(const Graph& g, const SolverOptions& options = {},
                                   AnchorRule rule = AnchorRule::kLowestIndex);

}  // namespace coplab
