#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "coplab/lab.hpp"

namespace {

const std::map<std::string, coplab::AnchorRule> kAnchors{{"lowest", coplab::AnchorRule::kLowestIndex},
                                                         {"degree", coplab::AnchorRule::kHighestDegree}};

void add_batch(CLI::App* cmd, coplab::lab::BatchOptions& batch) {
  cmd->add_option("files", batch.files, "graph6 or edge-list files ('-' for stdin)")->required();
  cmd->add_flag("--keep-going", batch.keep_going, "continue after unreadable graphs");
  cmd->add_option("--jobs", batch.jobs, "worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cops-and-robbers laboratory for P_t-free graphs"};
  app.require_subcommand(1);
  namespace lab = coplab::lab;

  lab::CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "P_t-freeness with certificates");
  add_batch(check_cmd, check.batch);
  check_cmd->add_option("--t", check.t, "path order")->required();

  lab::LipOptions lip;
  auto* lip_cmd = app.add_subcommand("lip", "longest induced path");
  add_batch(lip_cmd, lip.batch);
  lip_cmd->add_option("--cap", lip.cap, "stop once a path of this order is found");

  lab::SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "play the path strategy against a robber");
  sim_cmd->add_option("file", sim.file, "file holding one graph")->required();
  sim_cmd->add_option("--t", sim.t, "default: longest induced path order + 1");
  sim_cmd->add_option("--robber", sim.robber, "optimal | greedy | random[:SEED]");
  sim_cmd->add_option("--seed", sim.seed, "seed for a bare 'random' robber");
  sim_cmd->add_option("--format", sim.format)->check(CLI::IsMember({"jsonl", "dot"}));
  sim_cmd->add_option("--out", sim.out_path, "write the trace here instead of stdout");
  sim_cmd->add_option("--move-limit", sim.move_limit, "default 4n");
  sim_cmd->add_option("--anchor", sim.anchor, "first anchor: lowest | degree")
      ->transform(CLI::CheckedTransformer(kAnchors));
  sim_cmd->add_option("--budget", sim.budget, "solver state budget");

  lab::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "exact game values for k cops");
  add_batch(solve_cmd, solve.batch);
  solve_cmd->add_option("--cops", solve.cops)->required();
  solve_cmd->add_option("--dump-table", solve.dump_table, "write every state value to this file");
  solve_cmd->add_option("--budget", solve.budget);

  lab::CopNumberOptions cn;
  auto* cn_cmd = app.add_subcommand("copnumber", "smallest winning cop count up to --k-max");
  add_batch(cn_cmd, cn.batch);
  cn_cmd->add_option("--k-max", cn.k_max);
  cn_cmd->add_option("--budget", cn.budget);

  lab::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify-theorem", "strategy versus solver on every graph");
  add_batch(verify_cmd, verify.batch);
  verify_cmd->add_option("--budget", verify.budget);
  verify_cmd->add_flag("--strict", verify.strict, "treat over-budget graphs as errors");
  verify_cmd->add_option("--anchor", verify.anchor)->transform(CLI::CheckedTransformer(kAnchors));

  lab::ConjectureOptions conj;
  auto* conj_cmd = app.add_subcommand("conjecture-search", "look for P_t-free graphs needing more than t-3 cops");
  conj_cmd->add_option("--t", conj.t);
  conj_cmd->add_option("--n", conj.n);
  conj_cmd->add_option("--samples", conj.samples);
  conj_cmd->add_option("--seed", conj.seed, "sample i uses seed + i");
  conj_cmd->add_option("--budget", conj.budget);
  conj_cmd->add_option("--jobs", conj.jobs)->check(CLI::Range(1u, 256u));

  lab::GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate graphs as graph6 lines");
  gen_cmd->add_option("kind", gen.kind, "path N | cycle N | complete N | petersen | gnp N P | tree N | connected-ptfree N T")
      ->required();
  gen_cmd->add_option("--count", gen.count);
  gen_cmd->add_option("--seed", gen.seed, "graph i uses seed + i");
  gen_cmd->add_flag("--edge-list", gen.edge_list, "write an edge list instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : lab::kExitError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*check_cmd) return lab::check(check, out, err);
  if (*lip_cmd) return lab::lip(lip, out, err);
  if (*sim_cmd) return lab::simulate(sim, out, err);
  if (*solve_cmd) return lab::solve(solve, out, err);
  if (*cn_cmd) return lab::copnumber(cn, out, err);
  if (*verify_cmd) return lab::verify_theorem(verify, out, err);
  if (*conj_cmd) return lab::conjecture_search(conj, out, err);
  if (*gen_cmd) return lab::gen(gen, out, err);
  return lab::kExitError;
}
