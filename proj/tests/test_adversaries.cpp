#include <gtest/gtest.h>

#include "coplab/adversaries.hpp"
#include "coplab/errors.hpp"
#include "coplab/generators.hpp"

using namespace coplab;

namespace {

GameState robber_turn(std::vector<Vertex> cops, Vertex robber) {
  GameState s;
  s.cops = std::move(cops);
  s.robber = robber;
  s.side_to_move = Side::kRobber;
  s.cop_moves_made = 2;
  return s;
}

}  // namespace

TEST(RobberPolicy, ParseAndPrint) {
  EXPECT_EQ(parse_robber_policy("optimal").kind, RobberPolicy::Kind::kOptimal);
  EXPECT_EQ(parse_robber_policy("greedy").kind, RobberPolicy::Kind::kGreedy);
  auto r = parse_robber_policy("random:42");
  EXPECT_EQ(r.kind, RobberPolicy::Kind::kRandom);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_EQ(to_string(r), "random:42");
  EXPECT_THROW(parse_robber_policy("random"), InputError);
  EXPECT_THROW(parse_robber_policy("random:x"), InputError);
  EXPECT_THROW(parse_robber_policy("lazy"), InputError);
  EXPECT_THROW(PolicyRobber(RobberPolicy::optimal()), InputError);
}

TEST(Greedy, Placement) {
  PolicyRobber greedy(RobberPolicy::greedy());
  std::vector<Vertex> cop{0};
  EXPECT_EQ(greedy.place(path_graph(5), cop), 4);
  EXPECT_EQ(greedy.place(complete_graph(4), cop), 1);
}

TEST(Greedy, Moves) {
  PolicyRobber greedy(RobberPolicy::greedy());
  EXPECT_EQ(greedy.move(path_graph(3), robber_turn({0}, 2)), 2);
  // robber at 1 between cops on 0 and 2: every option is a cop or the robber's
  // own vertex, stays put
  EXPECT_EQ(greedy.move(path_graph(3), robber_turn({0, 2}, 1)), 1);
}

TEST(RandomRobber, AvoidsCopsUnlessForced) {
  auto k2 = complete_graph(2);
  PolicyRobber random(RobberPolicy::random(1));
  // both vertices hold cops: forced onto one
  std::vector<Vertex> both{0, 1};
  auto v = random.place(k2, both);
  EXPECT_TRUE(v == 0 || v == 1);
  auto star = Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  for (int i = 0; i < 50; ++i) {
    auto step = random.move(star, robber_turn({0}, 2));
    EXPECT_EQ(step, 2);
  }
}

TEST(RandomRobber, SeededAndReproducible) {
  auto g = cycle_graph(9);
  auto run = [&](std::uint64_t seed) {
    PolicyRobber r(RobberPolicy::random(seed));
    std::vector<Vertex> out;
    for (int i = 0; i < 30; ++i) out.push_back(r.move(g, robber_turn({0}, 4)));
    return out;
  };
  EXPECT_EQ(run(42), run(42));
  EXPECT_NE(run(42), run(43));
}

TEST(Optimal, CycleFourEscapesOneCop) {
  auto c4 = cycle_graph(4);
  auto sol = solve(c4, 1);
  PolicyRobber optimal(RobberPolicy::optimal(), sol.table);
  std::vector<Vertex> cop{0};
  auto start = optimal.place(c4, cop);
  EXPECT_EQ(start, 2);  // the only vertex off N[0]
  EXPECT_TRUE(sol.table->value(cop, start, Side::kCops).robber_wins());
}

TEST(Optimal, CycleFiveSurvivesOneCop) {
  auto c5 = cycle_graph(5);
  auto sol = solve(c5, 1);
  OptimalCop cop(sol);
  PolicyRobber robber(RobberPolicy::optimal(), sol.table);
  auto trace = play(c5, cop, robber, 20);
  EXPECT_EQ(trace.outcome.kind, OutcomeKind::kRobberSurvived);
}

TEST(Optimal, TableMustMatchCopCount) {
  auto g = cycle_graph(5);
  PolicyRobber robber(RobberPolicy::optimal(), solve(g, 2).table);
  std::vector<Vertex> one{0};
  EXPECT_THROW(robber.place(g, one), InputError);
}
