#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coplab/gyarfas.hpp"
#include "coplab/solver.hpp"

// Command implementations behind the coplab executable. Every command writes
// JSONL (or DOT) to `out`, diagnostics to `err`, and returns the process exit
// code: 0 or 1 for the mathematical outcome, 2 for operational errors.
namespace coplab::lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

struct BatchOptions {
  std::vector<std::string> files;
  bool keep_going = false;  // continue past unreadable graphs
  unsigned jobs = 1;
};

struct CheckOptions {
  BatchOptions batch;
  int t = 5;
};
// Exit 0 when every graph is P_t-free, 1 when some graph is not.
int check(const CheckOptions& options, std::ostream& out, std::ostream& err);

struct LipOptions {
  BatchOptions batch;
  std::optional<int> cap;
};
int lip(const LipOptions& options, std::ostream& out, std::ostream& err);

struct SimulateOptions {
  std::string file;
  std::optional<int> t;  // default max(L + 1, 3)
  std::string robber = "optimal";
  std::uint64_t seed = 0;  // used by a bare "random" robber
  std::string format = "jsonl";
  std::string out_path;  // empty: write to `out`
  std::optional<int> move_limit;
  AnchorRule anchor = AnchorRule::kLowestIndex;
  std::uint64_t budget = SolverOptions{}.budget;
};
// Exit 0 when the path strategy captures within t-1 cop moves, 1 otherwise.
int simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

struct SolveOptions {
  BatchOptions batch;
  int cops = 1;
  std::string dump_table;  // path; only valid for a single graph
  std::uint64_t budget = SolverOptions{}.budget;
};
int solve(const SolveOptions& options, std::ostream& out, std::ostream& err);

struct CopNumberOptions {
  BatchOptions batch;
  int k_max = 3;
  std::uint64_t budget = SolverOptions{}.budget;
};
int copnumber(const CopNumberOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  BatchOptions batch;
  std::uint64_t budget = SolverOptions{}.budget;
  bool strict = false;  // over-budget graphs become errors
  AnchorRule anchor = AnchorRule::kLowestIndex;
};
// Exit 1 when any graph fails a theorem check.
int verify_theorem(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct ConjectureOptions {
  int t = 5;
  int n = 9;
  int samples = 200;
  std::uint64_t seed = 0;
  std::uint64_t budget = SolverOptions{}.budget;
  unsigned jobs = 1;
};
// Always exits 0 once arguments are valid.
int conjecture_search(const ConjectureOptions& options, std::ostream& out, std::ostream& err);

struct GenOptions {
  std::vector<std::string> kind;
  int count = 1;
  std::uint64_t seed = 0;  // graph i uses seed + i
  bool edge_list = false;
};
int gen(const GenOptions& options, std::ostream& out, std::ostream& err);

// Runs task(i) for i in [0, count) on `jobs` threads and hands the results to
// `emit` in index order. emit returns false to stop early.
void ordered_parallel(std::size_t count, unsigned jobs, const std::function<std::string(std::size_t)>& task,
                      const std::function<bool(std::size_t, const std::string&)>& emit);

}  // namespace coplab::lab
