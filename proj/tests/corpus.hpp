#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coplab/generators.hpp"
#include "coplab/graph.hpp"
#include "coplab/graph_io.hpp"

namespace corpus {

struct Named {
  std::string name;
  coplab::Graph graph;
};

// Connected G(n, p) draw: seeds base, base+1, ... until one is connected.
inline coplab::Graph random_connected(int n, double p, std::uint64_t base) {
  for (std::uint64_t s = base;; ++s) {
    auto g = coplab::gnp(n, p, s);
    if (coplab::is_connected(g)) return g;
  }
}

// `count` connected graphs with 4 <= n <= 10 over a spread of densities.
inline std::vector<Named> random_graphs(int count, std::uint64_t seed) {
  static const double kDensity[] = {0.25, 0.35, 0.5, 0.7};
  std::vector<Named> out;
  for (int i = 0; i < count; ++i) {
    int n = 4 + i % 7;
    auto g = random_connected(n, kDensity[(i / 7) % 4], seed + 1000ull * static_cast<std::uint64_t>(i));
    out.push_back({"random#" + std::to_string(i) + " " + coplab::encode_graph6(g), std::move(g)});
  }
  return out;
}

inline std::vector<Named> trees(int max_n) {
  std::vector<Named> out;
  for (int n = 1; n <= max_n; ++n) {
    int k = 0;
    for (auto& t : coplab::all_trees(n)) out.push_back({"tree" + std::to_string(n) + "#" + std::to_string(k++), t});
  }
  return out;
}

// Trees on <= 9 vertices, C_4..C_12, K_2..K_8, Petersen and `random` graphs.
inline std::vector<Named> theorem_corpus(int random = 200) {
  auto out = trees(9);
  for (int n = 4; n <= 12; ++n) out.push_back({"C" + std::to_string(n), coplab::cycle_graph(n)});
  for (int n = 2; n <= 8; ++n) out.push_back({"K" + std::to_string(n), coplab::complete_graph(n)});
  out.push_back({"petersen", coplab::petersen_graph()});
  for (auto& g : random_graphs(random, 17)) out.push_back(std::move(g));
  return out;
}

}  // namespace corpus
