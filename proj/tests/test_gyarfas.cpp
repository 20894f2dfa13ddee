#include <gtest/gtest.h>

#include <functional>

#include "coplab/adversaries.hpp"
#include "coplab/errors.hpp"
#include "coplab/generators.hpp"
#include "coplab/graph_io.hpp"
#include "coplab/gyarfas.hpp"
#include "coplab/induced_paths.hpp"
#include "corpus.hpp"

using namespace coplab;

namespace {

int theorem_t(const Graph& g) { return std::max(static_cast<int>(longest_induced_path(g).order) + 1, 3); }

bool occupied(const std::vector<Vertex>& cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

struct Tally {
  long captures = 0;
  long failures = 0;
  int slowest = 0;
  std::string problem;
};

void check_state(const Graph& g, const GyarfasState& before, const GyarfasState& after, Vertex robber, Tally& tally) {
  if (!verify_induced_path(g, after.path)) tally.problem = "path not induced";
  if (after.path.size() > before.path.size()) {
    Vertex tip = after.path.back();
    if (after.territory.contains(tip)) tally.problem = "tip inside territory";
    if (!after.territory.is_subset_of(before.territory)) tally.problem = "territory grew";
    if (components_within(g, after.territory).size() != 1) tally.problem = "territory disconnected";
    bool touches = false;
    for (auto w : g.neighbors(tip)) touches |= after.territory.contains(w);
    if (!touches) tally.problem = "tip has no neighbour in territory";
    if (!after.territory.contains(robber)) tally.problem = "robber left behind";
    // one cop stays on every anchor, the rest ride the tip
    int movers = 0;
    for (int a : after.cop_at) movers += a == static_cast<int>(after.path.size()) - 1;
    if (movers != after.t - 2 - static_cast<int>(after.path.size()) + 1) tally.problem = "wrong mover count";
  }
}

// Plays the path strategy against every possible robber behaviour.
Tally exhaust(const Graph& g, int t, AnchorRule rule = AnchorRule::kLowestIndex) {
  Tally tally;
  auto start = initial_placement(g, t, rule);
  std::function<void(const GyarfasState&, Vertex, int)> cop_to_move = [&](const GyarfasState& state, Vertex robber,
                                                                           int moves) {
    if (!tally.problem.empty()) return;
    if (moves >= t - 1) {
      tally.problem = "no capture by move " + std::to_string(t - 1);
      return;
    }
    auto turn = cop_turn(g, state, robber);
    if (auto* failure = std::get_if<StrategyFailure>(&turn)) {
      ++tally.failures;
      if (failure->reason != "NOT_PT_FREE" || !failure->certificate ||
          static_cast<int>(failure->certificate->order()) != t ||
          !verify_induced_path(g, failure->certificate->vertices)) {
        tally.problem = "bad failure";
      }
      return;
    }
    auto& next = std::get<GyarfasTurn>(turn);
    for (std::size_t c = 0; c < next.targets.size(); ++c) {
      auto from = state.positions()[c];
      if (from != next.targets[c] && !g.has_edge(from, next.targets[c])) tally.problem = "illegal cop step";
    }
    check_state(g, state, next.state, robber, tally);
    int now = moves + 1;
    if (occupied(next.targets, robber)) {
      ++tally.captures;
      tally.slowest = std::max(tally.slowest, now);
      return;
    }
    for (Vertex r : closed_neighborhood(g, robber)) {
      if (occupied(next.targets, r)) {
        ++tally.captures;
        tally.slowest = std::max(tally.slowest, now);
      } else {
        cop_to_move(next.state, r, now);
      }
    }
  };
  for (Vertex r = 0; r < g.order(); ++r) {
    if (occupied(start.positions, r)) {
      ++tally.captures;
      tally.slowest = std::max(tally.slowest, 1);
    } else {
      cop_to_move(start.state, r, 1);
    }
  }
  return tally;
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1) edges.push_back(pairs[b]);
    }
    Graph g(n, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST(InitialPlacement, Examples) {
  auto c5 = initial_placement(cycle_graph(5), 5);
  EXPECT_EQ(c5.positions, (std::vector<Vertex>{0, 0, 0}));
  EXPECT_EQ(c5.state.phase, Phase::kAdvancing);
  EXPECT_EQ(c5.state.path, (std::vector<Vertex>{0}));
  EXPECT_EQ(initial_placement(complete_graph(4), 3).positions, (std::vector<Vertex>{0}));
  EXPECT_EQ(initial_placement(path_graph(4), 4).positions, (std::vector<Vertex>{0, 0}));
  // vertex 2 has the largest degree
  std::vector<Edge> edges{{0, 2}, {1, 2}, {2, 3}, {3, 4}};
  EXPECT_EQ(initial_placement(Graph(5, edges), 4, AnchorRule::kHighestDegree).positions, (std::vector<Vertex>{2, 2}));
  EXPECT_THROW(initial_placement(cycle_graph(5), 2), InputError);
  EXPECT_THROW(initial_placement(Graph(3), 4), InputError);
}

TEST(CopTurn, AdvanceOnFiveCycle) {
  auto g = cycle_graph(5);
  auto start = initial_placement(g, 5);
  // robber at 2 is outside N[0] = {0,1,4}; territory {2,3}; v1 = 1
  auto turn = std::get<GyarfasTurn>(cop_turn(g, start.state, 2));
  EXPECT_EQ(turn.targets, (std::vector<Vertex>{0, 1, 1}));
  EXPECT_EQ(turn.state.path, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(turn.state.territory, VertexSet(5, {2, 3}));
  // robber in N[v_1] is captured by the anchor's cop
  auto capture = std::get<GyarfasTurn>(cop_turn(g, turn.state, 2));
  EXPECT_EQ(capture.targets, (std::vector<Vertex>{0, 2, 1}));
}

TEST(CopTurn, CompleteGraphCapturesOnMoveTwo) {
  for (int n = 2; n <= 7; ++n) {
    auto g = complete_graph(n);
    auto t = exhaust(g, 3);
    EXPECT_TRUE(t.problem.empty()) << t.problem;
    EXPECT_EQ(t.failures, 0);
    EXPECT_LE(t.slowest, 2);
  }
}

TEST(CopTurn, NotPtFreePathGivesCertificate) {
  auto g = path_graph(6);
  GyarfasCop cop(5);
  PolicyRobber robber(RobberPolicy::greedy());
  auto trace = play(g, cop, robber, 24);
  ASSERT_EQ(trace.outcome.kind, OutcomeKind::kStrategyFailure);
  const auto& failure = *trace.outcome.failure;
  EXPECT_EQ(failure.reason, "NOT_PT_FREE");
  ASSERT_TRUE(failure.certificate);
  EXPECT_EQ(failure.certificate->order(), 5u);
  EXPECT_TRUE(verify_induced_path(g, failure.certificate->vertices));
}

TEST(CopTurn, RobberOutsideTerritoryIsAnInternalError) {
  auto p = path_graph(7);
  auto s = initial_placement(p, 6);
  auto adv = std::get<GyarfasTurn>(cop_turn(p, s.state, 4));
  EXPECT_EQ(adv.state.territory, VertexSet(7, {2, 3, 4, 5, 6}));
  auto adv2 = std::get<GyarfasTurn>(cop_turn(p, adv.state, 5));
  EXPECT_EQ(adv2.state.path, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(adv2.state.territory, VertexSet(7, {3, 4, 5, 6}));
  auto broken = adv2.state;
  broken.territory = VertexSet(7, {5, 6});
  EXPECT_THROW(cop_turn(p, broken, 4), std::logic_error);
}

TEST(GyarfasExhaustive, AllSmallConnectedGraphs) {
  int graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    for (auto& g : all_connected_graphs(n)) {
      int t = theorem_t(g);
      for (auto rule : {AnchorRule::kLowestIndex, AnchorRule::kHighestDegree}) {
        auto tally = exhaust(g, t, rule);
        ASSERT_TRUE(tally.problem.empty()) << encode_graph6(g) << ": " << tally.problem;
        EXPECT_EQ(tally.failures, 0) << encode_graph6(g);
        EXPECT_GE(tally.captures, g.order());
        EXPECT_LE(tally.slowest, t - 1);
      }
      ++graphs;
    }
  }
  EXPECT_EQ(graphs, 1 + 1 + 4 + 38 + 728);  // labelled connected graphs
}

TEST(GyarfasExhaustive, TreesAndRandomGraphs) {
  for (auto& tree : corpus::trees(8)) {
    auto tally = exhaust(tree.graph, theorem_t(tree.graph));
    ASSERT_TRUE(tally.problem.empty()) << tree.name << ": " << tally.problem;
    EXPECT_EQ(tally.failures, 0);
  }
  for (auto& named : corpus::random_graphs(70, 555)) {
    if (named.graph.order() > 8) continue;
    int t = theorem_t(named.graph);
    auto tally = exhaust(named.graph, t);
    ASSERT_TRUE(tally.problem.empty()) << named.name << ": " << tally.problem;
    EXPECT_EQ(tally.failures, 0);
    EXPECT_LE(tally.slowest, t - 1);
  }
}

TEST(GyarfasExhaustive, SmallerTCapturesOrCertifies) {
  for (auto& named : corpus::random_graphs(60, 808)) {
    if (named.graph.order() > 8) continue;
    int lip = static_cast<int>(longest_induced_path(named.graph).order);
    for (int t = 3; t <= lip; ++t) {
      auto tally = exhaust(named.graph, t);
      ASSERT_TRUE(tally.problem.empty()) << named.name << " t=" << t << ": " << tally.problem;
    }
  }
}

TEST(GyarfasCopStrategy, SnapshotTracksState) {
  auto g = cycle_graph(7);
  GyarfasCop cop(7);  // C_7 has an induced P_6
  PolicyRobber robber(RobberPolicy::greedy());
  auto trace = play(g, cop, robber, 28);
  ASSERT_EQ(trace.outcome.kind, OutcomeKind::kCaptured);
  EXPECT_LE(trace.outcome.cop_moves, 6);
  for (auto& ev : trace.events) {
    if (auto* m = std::get_if<event::CopMove>(&ev)) {
      ASSERT_TRUE(m->snapshot.is_object());
      EXPECT_TRUE(m->snapshot.contains("path"));
      EXPECT_TRUE(m->snapshot.contains("territory"));
      EXPECT_TRUE(m->snapshot.contains("cop_at"));
    }
  }
}
