#include "coplab/theorem.hpp"

#include <algorithm>

#include "coplab/adversaries.hpp"
#include "coplab/errors.hpp"
#include "coplab/induced_paths.hpp"

namespace coplab {

TheoremReport verify_theorem_bound(const Graph& g, const SolverOptions& options, AnchorRule rule) {
  if (!is_connected(g)) throw InputError("theorem check needs a connected graph");
  TheoremReport report;
  report.longest_induced_path = longest_induced_path(g, kUnbounded).order;
  report.t = std::max(report.longest_induced_path + 1, 3);
  report.cops = report.t - 2;

  // Check the budget for the largest solve up front so nothing half-runs.
  auto cost = solver_cost(g.order(), report.cops);
  if (std::max(cost.states, cost.working_set) > options.budget) {
    throw ResourceError("theorem check: " + std::to_string(report.cops) + " cops on " +
                            std::to_string(g.order()) + " vertices need a budget of " +
                            std::to_string(std::max(cost.states, cost.working_set)),
                        std::max(cost.states, cost.working_set));
  }

  for (int k = 1; k < report.cops && !report.cop_number; ++k) {
    if (solve(g, k, options).result.cop_win) report.cop_number = k;
  }
  auto full = solve(g, report.cops, options);
  if (!report.cop_number && full.result.cop_win) report.cop_number = report.cops;
  report.solver_cop_win = full.result.cop_win;
  report.solver_capture_moves = full.result.optimal_capture_cop_moves;
  report.table_digest = full.table->digest();
  report.check_a = report.solver_cop_win;

  GyarfasCop cop(report.t, rule);
  PolicyRobber robber(RobberPolicy::optimal(), full.table);
  report.trace = play(g, cop, robber, default_move_limit(g));
  report.trace.t = report.t;
  const auto& outcome = report.trace.outcome;
  if (outcome.kind == OutcomeKind::kCaptured) report.strategy_capture_moves = outcome.cop_moves;
  report.check_b = report.strategy_capture_moves && *report.strategy_capture_moves <= report.t - 1 &&
                   !validate_trace(g, report.trace);
  report.check_c = report.strategy_capture_moves && report.solver_capture_moves &&
                   *report.strategy_capture_moves >= *report.solver_capture_moves;
  return report;
}

}  // namespace coplab
