#include "coplab/lab.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "coplab/adversaries.hpp"
#include "coplab/errors.hpp"
#include "coplab/generators.hpp"
#include "coplab/graph_io.hpp"
#include "coplab/induced_paths.hpp"
#include "coplab/theorem.hpp"
#include "coplab/trace_io.hpp"
#include "json.hpp"

namespace coplab::lab {

using nlohmann::ordered_json;

void ordered_parallel(std::size_t count, unsigned jobs, const std::function<std::string(std::size_t)>& task,
                      const std::function<bool(std::size_t, const std::string&)>& emit) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!emit(i, task(i))) return;
    }
    return;
  }
  std::vector<std::optional<std::string>> results(count);
  std::exception_ptr failure;
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (!stop) {
      std::size_t i = next++;
      if (i >= count) return;
      try {
        auto r = task(i);
        std::lock_guard lock(mu);
        results[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < std::min<std::size_t>(jobs, count); ++j) pool.emplace_back(worker);

  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value() || failure; });
    if (failure) break;
    std::string line = std::move(*results[i]);
    lock.unlock();
    if (!emit(i, line)) {
      stop = true;
      break;
    }
  }
  stop = true;
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

enum class Status { kOk, kNegative, kSkipped, kError };

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

ordered_json base_record(const GraphRecord& rec) {
  ordered_json j = {{"type", "record"}, {"id", rec.id}, {"source", rec.source}};
  if (rec.graph) {
    j["n"] = rec.graph->order();
    j["m"] = rec.graph->size();
  }
  return j;
}

ordered_json error_record(const GraphRecord& rec, const std::string& error) {
  auto j = base_record(rec);
  j["error"] = error;
  return j;
}

std::vector<GraphRecord> load_all(const std::vector<std::string>& files) {
  std::vector<GraphRecord> all;
  for (const auto& f : files) {
    auto recs = load_graphs(f);
    std::move(recs.begin(), recs.end(), std::back_inserter(all));
  }
  return all;
}

// Shared driver for the per-graph batch commands. `fn` fills a record for
// one parsed graph and reports its status.
int run_batch(const BatchOptions& batch, std::ostream& out, std::ostream& err,
              const std::function<ordered_json(const GraphRecord&, Status&)>& fn,
              const std::function<void(ordered_json&)>& summarize = nullptr) {
  if (batch.files.empty()) {
    err << "no input files\n";
    return kExitError;
  }
  auto records = load_all(batch.files);
  std::vector<Status> status(records.size(), Status::kOk);
  std::vector<std::string> messages(records.size());
  auto task = [&](std::size_t i) {
    const auto& rec = records[i];
    if (!rec.graph) {
      status[i] = Status::kError;
      messages[i] = rec.error;
      return error_record(rec, rec.error).dump();
    }
    try {
      return fn(rec, status[i]).dump();
    } catch (const ResourceError& e) {
      status[i] = Status::kError;
      messages[i] = e.what();
      auto j = error_record(rec, e.what());
      j["required_budget"] = e.required();
      return j.dump();
    } catch (const std::exception& e) {
      status[i] = Status::kError;
      messages[i] = e.what();
      return error_record(rec, e.what()).dump();
    }
  };
  bool any_negative = false, any_error = false;
  std::size_t emitted = 0;
  ordered_parallel(records.size(), batch.jobs, task, [&](std::size_t i, const std::string& line) {
    out << line << '\n';
    ++emitted;
    if (status[i] == Status::kNegative) any_negative = true;
    if (status[i] == Status::kError) {
      any_error = true;
      err << records[i].source << ": " << messages[i] << '\n';
      return batch.keep_going;
    }
    return true;
  });
  if (summarize) {
    ordered_json summary = {{"type", "summary"}, {"graphs", emitted}};
    summarize(summary);
    out << summary.dump() << '\n';
  }
  if (any_error) return kExitError;
  return any_negative ? kExitNegative : kExitOk;
}

ordered_json optional_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(); }

}  // namespace

int check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  if (options.t < 1) {
    err << "--t must be at least 1\n";
    return kExitError;
  }
  std::atomic<int> free_count{0}, not_free{0};
  return run_batch(
      options.batch, out, err,
      [&](const GraphRecord& rec, Status& status) {
        auto result = is_pt_free(*rec.graph, options.t);
        auto j = base_record(rec);
        j["t"] = options.t;
        j["free"] = result.free;
        j["certificate"] = result.certificate ? ordered_json(result.certificate->vertices) : ordered_json();
        if (result.free) {
          ++free_count;
        } else {
          ++not_free;
          status = Status::kNegative;
        }
        return j;
      },
      [&](ordered_json& s) {
        s["free"] = free_count.load();
        s["not_free"] = not_free.load();
      });
}

int lip(const LipOptions& options, std::ostream& out, std::ostream& err) {
  if (options.cap && *options.cap < 1) {
    err << "--cap must be positive\n";
    return kExitError;
  }
  return run_batch(options.batch, out, err, [&](const GraphRecord& rec, Status&) {
    auto j = base_record(rec);
    if (rec.graph->order() == 0) throw InputError("empty graph");
    auto result = longest_induced_path(*rec.graph, options.cap ? static_cast<std::size_t>(*options.cap) : kUnbounded);
    j["cap"] = optional_int(options.cap);
    j["longest_induced_path_order"] = result.order;
    j["witness"] = result.witness.vertices;
    return j;
  });
}

int simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  try {
    auto records = load_graphs(options.file);
    if (records.size() != 1) throw InputError(options.file + ": expected exactly one graph, found " + std::to_string(records.size()));
    if (!records[0].graph) throw InputError(records[0].source + ": " + records[0].error);
    const Graph& g = *records[0].graph;
    if (!is_connected(g)) throw InputError("simulate needs a connected graph");
    if (options.format != "jsonl" && options.format != "dot") throw InputError("unknown format " + options.format);

    int t = options.t ? *options.t : std::max<int>(static_cast<int>(longest_induced_path(g).order) + 1, 3);
    if (t < 3) throw InputError("--t must be at least 3");
    int limit = options.move_limit.value_or(default_move_limit(g));
    if (limit < 1) throw InputError("--move-limit must be positive");

    auto policy = options.robber == "random" ? RobberPolicy::random(options.seed) : parse_robber_policy(options.robber);
    std::shared_ptr<const SolverTable> table;
    if (policy.kind == RobberPolicy::Kind::kOptimal) table = coplab::solve(g, t - 2, {options.budget}).table;

    GyarfasCop cop(t, options.anchor);
    PolicyRobber robber(policy, table);
    auto trace = play(g, cop, robber, limit);
    trace.t = t;
    auto text = options.format == "dot" ? to_dot(g, trace) : to_jsonl(g, trace);

    if (options.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(options.out_path, std::ios::binary);
      if (!file || !(file << text)) throw InputError("cannot write " + options.out_path);
    }
    bool within = trace.outcome.kind == OutcomeKind::kCaptured && trace.outcome.cop_moves <= t - 1;
    if (!within) err << "outcome: " << to_string(trace.outcome.kind) << " after " << trace.outcome.cop_moves << " cop moves\n";
    return within ? kExitOk : kExitNegative;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitError;
  }
}

int solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  if (options.cops < 1) {
    err << "--cops must be positive\n";
    return kExitError;
  }
  std::unique_ptr<std::ofstream> dump;
  if (!options.dump_table.empty()) {
    dump = std::make_unique<std::ofstream>(options.dump_table);
    if (!*dump) {
      err << "cannot write " << options.dump_table << '\n';
      return kExitError;
    }
  }
  std::mutex dump_mu;
  return run_batch(options.batch, out, err, [&](const GraphRecord& rec, Status&) {
    auto solution = coplab::solve(*rec.graph, options.cops, {options.budget});
    const auto& r = solution.result;
    auto j = base_record(rec);
    j["cops"] = options.cops;
    j["cop_win"] = r.cop_win;
    j["optimal_capture_cop_moves"] = optional_int(r.optimal_capture_cop_moves);
    j["best_initial_placement"] = r.best_initial_placement;
    j["states"] = solution.table->state_count();
    j["table_digest"] = hex64(solution.table->digest());
    if (dump) {
      std::lock_guard lock(dump_mu);
      *dump << "# " << rec.id << " cops=" << options.cops << '\n';
      solution.table->dump(*dump);
    }
    return j;
  });
}

int copnumber(const CopNumberOptions& options, std::ostream& out, std::ostream& err) {
  if (options.k_max < 1) {
    err << "--k-max must be positive\n";
    return kExitError;
  }
  return run_batch(options.batch, out, err, [&](const GraphRecord& rec, Status&) {
    auto c = cop_number(*rec.graph, options.k_max, {options.budget});
    auto j = base_record(rec);
    j["k_max"] = options.k_max;
    j["cop_number"] = optional_int(c);
    j["cop_number_bound"] = c ? ordered_json() : ordered_json("> " + std::to_string(options.k_max));
    return j;
  });
}

int verify_theorem(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  std::atomic<int> passed{0}, failed{0}, unknown{0};
  std::atomic<int> holds{0}, violated{0};
  auto body = [&](const GraphRecord& rec, Status& status) {
    const Graph& g = *rec.graph;
    auto j = base_record(rec);
    if (!is_connected(g)) throw InputError("graph is not connected");
    int lip_order = static_cast<int>(longest_induced_path(g).order);
    int t = std::max(lip_order + 1, 3);
    j["longest_induced_path_order"] = lip_order;
    j["t"] = t;
    j["cops"] = t - 2;
    TheoremReport report;
    try {
      report = verify_theorem_bound(g, {options.budget}, options.anchor);
    } catch (const ResourceError& e) {
      if (options.strict) throw;
      ++unknown;
      status = Status::kSkipped;
      j["cop_number"] = nullptr;
      j["strategy_capture_moves"] = nullptr;
      j["solver_capture_moves"] = nullptr;
      j["theorem_pass"] = nullptr;
      j["conjecture_status"] = "UNKNOWN";
      j["skipped"] = e.what();
      j["required_budget"] = e.required();
      return j;
    }
    j["cop_number"] = optional_int(report.cop_number);
    j["cop_number_bound"] = report.cop_number ? ordered_json() : ordered_json("> " + std::to_string(report.cops));
    j["strategy_capture_moves"] = optional_int(report.strategy_capture_moves);
    j["solver_capture_moves"] = optional_int(report.solver_capture_moves);
    j["strategy_outcome"] = to_string(report.trace.outcome.kind);
    j["checks"] = {{"solver_cop_win", report.check_a},
                   {"strategy_within_bound", report.check_b},
                   {"strategy_not_faster_than_optimal", report.check_c}};
    j["theorem_pass"] = report.pass();
    // The conjecture speaks about the least t >= 5 for which g is P_t-free.
    int t_conj = std::max(lip_order + 1, 5);
    std::string conj = "UNKNOWN";
    if (report.cop_number) conj = *report.cop_number <= t_conj - 3 ? "HOLDS" : "VIOLATED";
    j["conjecture_status"] = conj;
    if (conj == "HOLDS") ++holds;
    if (conj == "VIOLATED") ++violated;
    j["table_digest"] = hex64(report.table_digest);
    if (report.pass()) {
      ++passed;
    } else {
      ++failed;
      status = Status::kNegative;
    }
    return j;
  };
  return run_batch(options.batch, out, err, body, [&](ordered_json& s) {
    s["passed"] = passed.load();
    s["failed"] = failed.load();
    s["unknown"] = unknown.load();
    s["conjecture_holds"] = holds.load();
    s["conjecture_violated"] = violated.load();
  });
}

int conjecture_search(const ConjectureOptions& options, std::ostream& out, std::ostream& err) {
  if (options.t < 5 || options.n < 1 || options.samples < 0) {
    err << "conjecture-search needs --t >= 5, --n >= 1 and --samples >= 0\n";
    return kExitError;
  }
  const int k_max = options.t - 3;
  std::vector<std::string> status(options.samples);
  auto task = [&](std::size_t i) {
    std::uint64_t seed = options.seed + i;
    ordered_json j = {{"type", "record"}, {"sample", i}, {"seed", seed}};
    Graph g;
    try {
      g = connected_ptfree(options.n, options.t, seed);
    } catch (const GenerationError& e) {
      j["conjecture_status"] = status[i] = "SKIPPED";
      j["error"] = e.what();
      return j.dump();
    }
    j["id"] = encode_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["longest_induced_path_order"] = longest_induced_path(g).order;
    j["t"] = options.t;
    j["k_max"] = k_max;
    ordered_json solves = ordered_json::array();
    std::optional<int> found;
    try {
      for (int k = 1; k <= k_max && !found; ++k) {
        auto s = coplab::solve(g, k, {options.budget});
        solves.push_back({{"cops", k},
                          {"cop_win", s.result.cop_win},
                          {"optimal_capture_cop_moves", optional_int(s.result.optimal_capture_cop_moves)},
                          {"states", s.table->state_count()},
                          {"table_digest", hex64(s.table->digest())}});
        if (s.result.cop_win) found = k;
      }
    } catch (const ResourceError& e) {
      j["cop_number"] = nullptr;
      j["conjecture_status"] = status[i] = "UNKNOWN";
      j["skipped"] = e.what();
      j["required_budget"] = e.required();
      return j.dump();
    }
    j["cop_number"] = optional_int(found);
    j["cop_number_bound"] = found ? ordered_json() : ordered_json("> " + std::to_string(k_max));
    j["conjecture_status"] = status[i] = found ? "HOLDS" : "VIOLATED";
    if (found) {
      j["solves"] = std::move(solves);
    } else {
      // A counterexample candidate: the solves can be rerun from the graph6 id.
      j["evidence"] = {{"solves", std::move(solves)},
                       {"replay", "coplab solve --cops " + std::to_string(k_max) + " <graph6 file>"}};
    }
    return j.dump();
  };
  std::map<std::string, int> counts{{"HOLDS", 0}, {"VIOLATED", 0}, {"UNKNOWN", 0}, {"SKIPPED", 0}};
  ordered_parallel(status.size(), options.jobs, task, [&](std::size_t i, const std::string& line) {
    out << line << '\n';
    ++counts[status[i]];
    if (status[i] == "VIOLATED") err << "counterexample candidate at sample " << i << '\n';
    return true;
  });
  ordered_json summary = {{"type", "summary"},      {"t", options.t},
                          {"n", options.n},         {"samples", options.samples},
                          {"seed", options.seed},   {"holds", counts["HOLDS"]},
                          {"violated", counts["VIOLATED"]}, {"unknown", counts["UNKNOWN"]},
                          {"skipped", counts["SKIPPED"]}};
  out << summary.dump() << '\n';
  return kExitOk;
}

int gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.count < 1) throw InputError("--count must be positive");
    if (options.edge_list && options.count != 1) throw InputError("--edge-list writes a single graph; use --count 1");
    for (int i = 0; i < options.count; ++i) {
      auto g = generate(parse_graph_kind(options.kind, options.seed + static_cast<std::uint64_t>(i)));
      out << (options.edge_list ? write_edge_list(g) : encode_graph6(g) + "\n");
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace coplab::lab
