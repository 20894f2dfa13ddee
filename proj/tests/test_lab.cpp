#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coplab/generators.hpp"
#include "coplab/graph_io.hpp"
#include "coplab/induced_paths.hpp"
#include "coplab/lab.hpp"
#include "coplab/trace_io.hpp"
#include "json.hpp"

using namespace coplab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class LabTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("coplab_lab_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::string g6(const std::vector<Graph>& graphs) {
    std::string out;
    for (auto& g : graphs) out += encode_graph6(g) + "\n";
    return out;
  }

  fs::path dir_;
};

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

int run_cli(const std::string& args, std::string* stdout_text = nullptr) {
  auto out = fs::temp_directory_path() / ("coplab_cli_" + std::to_string(::getpid()) + ".out");
  std::string cmd = std::string(COPLAB_BIN) + " " + args + " > " + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  if (stdout_text) {
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    *stdout_text = ss.str();
  }
  fs::remove(out);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_F(LabTest, CheckExitCodes) {
  auto free = write("c5.g6", g6({cycle_graph(5), cycle_graph(5)}));
  std::ostringstream out, err;
  lab::CheckOptions opt;
  opt.batch.files = {free};
  EXPECT_EQ(lab::check(opt, out, err), 0);
  auto recs = lines(out.str());
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_TRUE(recs[0]["free"].get<bool>());
  EXPECT_EQ(recs[2]["type"], "summary");

  auto mixed = write("mixed.g6", g6({cycle_graph(5), path_graph(6)}));
  out.str("");
  opt.batch.files = {mixed};
  EXPECT_EQ(lab::check(opt, out, err), 1);
  recs = lines(out.str());
  auto cert = recs[1]["certificate"].get<std::vector<int>>();
  EXPECT_EQ(cert.size(), 5u);
  EXPECT_TRUE(verify_induced_path(path_graph(6), cert));

  auto bad = write("bad.g6", "Dhc\nD?\nDhc\n");
  out.str("");
  opt.batch.files = {bad};
  EXPECT_EQ(lab::check(opt, out, err), 2);
  recs = lines(out.str());
  EXPECT_EQ(recs.size(), 3u);  // stops after the bad line, then the summary
  EXPECT_TRUE(recs[1].contains("error"));
  EXPECT_EQ(recs[1]["source"], bad + ":2");

  out.str("");
  opt.batch.keep_going = true;
  EXPECT_EQ(lab::check(opt, out, err), 2);
  EXPECT_EQ(lines(out.str()).size(), 4u);
}

TEST_F(LabTest, EdgeListInput) {
  auto path = write("p4.txt", "# P_4\n4 3\n0 1\n1 2\n2 3\n");
  std::ostringstream out, err;
  lab::LipOptions opt;
  opt.batch.files = {path};
  EXPECT_EQ(lab::lip(opt, out, err), 0);
  auto rec = lines(out.str())[0];
  EXPECT_EQ(rec["longest_induced_path_order"], 4);
  EXPECT_EQ(rec["id"], path + ":2");
}

TEST_F(LabTest, SimulateOutcomes) {
  std::ostringstream out, err;
  lab::SimulateOptions opt;
  opt.file = write("c5.g6", g6({cycle_graph(5)}));
  EXPECT_EQ(lab::simulate(opt, out, err), 0);
  auto report = replay_jsonl(cycle_graph(5), out.str());
  EXPECT_TRUE(report.ok) << report.error;
  ASSERT_TRUE(report.capture_cop_moves);
  EXPECT_LE(*report.capture_cop_moves, 4);

  out.str("");
  opt.file = write("p6.g6", g6({path_graph(6)}));
  opt.t = 5;
  EXPECT_EQ(lab::simulate(opt, out, err), 1);
  auto last = lines(out.str()).back();
  EXPECT_EQ(last["failure"]["reason"], "NOT_PT_FREE");
  EXPECT_TRUE(verify_induced_path(path_graph(6), last["failure"]["certificate"].get<std::vector<int>>()));

  out.str("");
  opt.file = write("split.g6", g6({Graph(3)}));
  EXPECT_EQ(lab::simulate(opt, out, err), 2);

  // a random robber is reproducible; DOT goes to a file
  opt.file = write("pet.g6", g6({petersen_graph()}));
  opt.t.reset();
  opt.robber = "random:42";
  opt.format = "dot";
  opt.out_path = (dir_ / "a.dot").string();
  EXPECT_EQ(lab::simulate(opt, out, err), 0);
  opt.out_path = (dir_ / "b.dot").string();
  EXPECT_EQ(lab::simulate(opt, out, err), 0);
  std::ifstream a(dir_ / "a.dot"), b(dir_ / "b.dot");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_NE(sa.str().find("graph trace"), std::string::npos);
}

TEST_F(LabTest, SolveAndCopNumber) {
  auto file = write("g.g6", g6({cycle_graph(4), petersen_graph()}));
  std::ostringstream out, err;
  lab::SolveOptions sopt;
  sopt.batch.files = {file};
  sopt.cops = 2;
  sopt.dump_table = (dir_ / "table.txt").string();
  EXPECT_EQ(lab::solve(sopt, out, err), 0);
  auto recs = lines(out.str());
  EXPECT_TRUE(recs[0]["cop_win"].get<bool>());
  EXPECT_FALSE(recs[1]["cop_win"].get<bool>());
  EXPECT_TRUE(recs[1]["optimal_capture_cop_moves"].is_null());
  EXPECT_TRUE(fs::file_size(sopt.dump_table) > 0);

  out.str("");
  sopt.budget = 10;
  sopt.dump_table.clear();
  EXPECT_EQ(lab::solve(sopt, out, err), 2);
  EXPECT_TRUE(lines(out.str())[0].contains("required_budget"));

  out.str("");
  lab::CopNumberOptions copt;
  copt.batch.files = {file};
  copt.k_max = 2;
  EXPECT_EQ(lab::copnumber(copt, out, err), 0);
  recs = lines(out.str());
  EXPECT_EQ(recs[0]["cop_number"], 2);
  EXPECT_TRUE(recs[1]["cop_number"].is_null());
  EXPECT_EQ(recs[1]["cop_number_bound"], "> 2");
}

TEST_F(LabTest, VerifyTheoremRecords) {
  std::vector<Graph> graphs{complete_graph(4), cycle_graph(4), cycle_graph(5), petersen_graph()};
  auto file = write("corpus.g6", g6(graphs));
  std::ostringstream out, err;
  lab::VerifyOptions opt;
  opt.batch.files = {file};
  EXPECT_EQ(lab::verify_theorem(opt, out, err), 0);
  auto recs = lines(out.str());
  ASSERT_EQ(recs.size(), 5u);
  EXPECT_EQ(recs[0]["t"], 3);
  EXPECT_EQ(recs[0]["cop_number"], 1);
  EXPECT_LE(recs[0]["strategy_capture_moves"].get<int>(), 2);
  EXPECT_EQ(recs[1]["t"], 4);
  EXPECT_EQ(recs[1]["cop_number"], 2);
  EXPECT_LE(recs[1]["strategy_capture_moves"].get<int>(), 3);
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(recs[i]["theorem_pass"].get<bool>());
    EXPECT_EQ(recs[i]["conjecture_status"], "HOLDS");
  }
  EXPECT_EQ(recs[4]["passed"], 4);

  // over budget: UNKNOWN and exit 0, unless --strict
  out.str("");
  opt.batch.files = {write("p12.g6", g6({path_graph(12)}))};
  opt.budget = 1000;
  EXPECT_EQ(lab::verify_theorem(opt, out, err), 0);
  recs = lines(out.str());
  EXPECT_EQ(recs[0]["conjecture_status"], "UNKNOWN");
  EXPECT_TRUE(recs[0]["theorem_pass"].is_null());
  opt.strict = true;
  EXPECT_EQ(lab::verify_theorem(opt, out, err), 2);
}

TEST_F(LabTest, ParallelOutputMatchesSerial) {
  std::vector<Graph> graphs;
  for (int i = 0; i < 12; ++i) graphs.push_back(connected_ptfree(7, 5, i));
  auto file = write("many.g6", g6(graphs));
  lab::VerifyOptions opt;
  opt.batch.files = {file};
  std::ostringstream serial, parallel, err;
  EXPECT_EQ(lab::verify_theorem(opt, serial, err), 0);
  opt.batch.jobs = 3;
  EXPECT_EQ(lab::verify_theorem(opt, parallel, err), 0);
  EXPECT_EQ(serial.str(), parallel.str());
}

TEST_F(LabTest, ConjectureSearch) {
  std::ostringstream out, err;
  lab::ConjectureOptions opt;
  opt.n = 7;
  opt.samples = 10;
  opt.seed = 3;
  EXPECT_EQ(lab::conjecture_search(opt, out, err), 0);
  auto recs = lines(out.str());
  ASSERT_EQ(recs.size(), 11u);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(recs[i]["seed"], 3 + i);
    auto g = parse_graph6(recs[i]["id"].get<std::string>());
    EXPECT_TRUE(is_pt_free(g, 5).free);
  }
  EXPECT_EQ(recs[10]["holds"].get<int>() + recs[10]["violated"].get<int>() + recs[10]["unknown"].get<int>() +
                recs[10]["skipped"].get<int>(),
            10);

  out.str("");
  opt.budget = 5;
  EXPECT_EQ(lab::conjecture_search(opt, out, err), 0);
  EXPECT_EQ(lines(out.str())[0]["conjecture_status"], "UNKNOWN");

  opt.t = 4;
  EXPECT_EQ(lab::conjecture_search(opt, out, err), 2);
}

TEST_F(LabTest, Gen) {
  std::ostringstream out, err;
  lab::GenOptions opt;
  opt.kind = {"gnp", "8", "0.4"};
  opt.count = 3;
  opt.seed = 10;
  EXPECT_EQ(lab::gen(opt, out, err), 0);
  auto text = out.str();
  std::istringstream in(text);
  std::string line;
  for (int i = 0; i < 3; ++i) {
    std::getline(in, line);
    EXPECT_EQ(parse_graph6(line), gnp(8, 0.4, 10 + i));
  }
  opt.edge_list = true;
  EXPECT_EQ(lab::gen(opt, out, err), 2);
  opt.kind = {"triangle"};
  opt.edge_list = false;
  EXPECT_EQ(lab::gen(opt, out, err), 2);
}

TEST_F(LabTest, BinaryExitCodes) {
  auto c5 = write("c5.g6", g6({cycle_graph(5)}));
  auto p6 = write("p6.g6", g6({path_graph(6)}));
  EXPECT_EQ(run_cli("check --t 5 " + c5), 0);
  EXPECT_EQ(run_cli("check --t 5 " + p6), 1);
  EXPECT_EQ(run_cli("check --t 5 " + (dir_ / "missing.g6").string()), 2);
  EXPECT_EQ(run_cli("simulate " + c5 + " --robber optimal"), 0);
  EXPECT_EQ(run_cli("simulate " + p6 + " --t 5"), 1);
  EXPECT_EQ(run_cli("simulate " + c5 + " --robber sneaky"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("--help"), 0);

  std::string first, second;
  EXPECT_EQ(run_cli("simulate " + c5 + " --robber random:42", &first), 0);
  EXPECT_EQ(run_cli("simulate " + c5 + " --robber random:42", &second), 0);
  EXPECT_EQ(first, second);

  std::string graphs;
  EXPECT_EQ(run_cli("gen petersen", &graphs), 0);
  EXPECT_EQ(graphs, encode_graph6(petersen_graph()) + "\n");
}
