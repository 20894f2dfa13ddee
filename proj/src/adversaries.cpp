#include "coplab/adversaries.hpp"

#include <algorithm>
#include <charconv>
#include <climits>

#include "coplab/errors.hpp"

namespace coplab {

RobberPolicy parse_robber_policy(std::string_view text) {
  if (text == "optimal") return RobberPolicy::optimal();
  if (text == "greedy") return RobberPolicy::greedy();
  constexpr std::string_view prefix = "random:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    std::uint64_t seed = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
      return RobberPolicy::random(seed);
    }
  }
  throw InputError("unknown robber policy '" + std::string(text) + "' (expected optimal, greedy or random:SEED)");
}

std::string to_string(const RobberPolicy& policy) {
  switch (policy.kind) {
    case RobberPolicy::Kind::kOptimal:
      return "optimal";
    case RobberPolicy::Kind::kGreedy:
      return "greedy";
    case RobberPolicy::Kind::kRandom:
      return "random:" + std::to_string(policy.seed.value_or(0));
  }
  return "?";
}

PolicyRobber::PolicyRobber(RobberPolicy policy, std::shared_ptr<const SolverTable> table)
    : policy_(policy), table_(std::move(table)), rng_(policy.seed.value_or(0)) {
  if (policy_.kind == RobberPolicy::Kind::kRandom && !policy_.seed) throw InputError("random robber needs a seed");
  if (policy_.kind == RobberPolicy::Kind::kOptimal && !table_) throw InputError("optimal robber needs a solver table");
}

Vertex PolicyRobber::place(const Graph& g, std::span<const Vertex> cops) {
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return choose(g, cops, all);
}

Vertex PolicyRobber::move(const Graph& g, const GameState& state) {
  auto options = closed_neighborhood(g, *state.robber);
  std::vector<Vertex> candidates(options.begin(), options.end());
  return choose(g, state.cops, candidates);
}

Vertex PolicyRobber::choose(const Graph& g, std::span<const Vertex> cops, std::span<const Vertex> candidates) {
  auto on_cop = [&](Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); };

  if (policy_.kind == RobberPolicy::Kind::kRandom) {
    std::vector<Vertex> free;
    for (Vertex v : candidates) {
      if (!on_cop(v)) free.push_back(v);
    }
    // forced onto a cop
    const auto& pool = free.empty() ? std::vector<Vertex>(candidates.begin(), candidates.end()) : free;
    return pool[uniform_index(rng_, pool.size())];
  }

  std::vector<long> score(candidates.size());
  if (policy_.kind == RobberPolicy::Kind::kGreedy) {
    auto dist = distances_from(g, cops);
    for (std::size_t i = 0; i < candidates.size(); ++i) score[i] = dist[candidates[i]] < 0 ? LONG_MAX : dist[candidates[i]];
  } else {
    if (table_->order() != g.order() || table_->cops() != static_cast<int>(cops.size())) {
      throw InputError("solver table does not match the game (" + std::to_string(table_->cops()) + " cops, " +
                       std::to_string(cops.size()) + " in play)");
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      Vertex v = candidates[i];
      if (on_cop(v)) {
        score[i] = -1;
        continue;
      }
      auto value = table_->value(cops, v, Side::kCops);
      score[i] = value.robber_wins() ? LONG_MAX : value.plies();
    }
  }
  auto best = std::max_element(score.begin(), score.end());  // first maximum
  return candidates[best - score.begin()];
}

}  // namespace coplab
