#include "coplab/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "coplab/errors.hpp"
#include "coplab/induced_paths.hpp"
#include "coplab/rng.hpp"

namespace coplab {

namespace {

void require_order(int n, int min, const char* what) {
  if (n < min) {
    throw InputError(std::string(what) + " needs n >= " + std::to_string(min) + ", got " +
                     std::to_string(n));
  }
}

Graph gnp_draw(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform01(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// AHU encoding of the tree rooted at `root`.
std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex root, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : adj[root]) {
    if (w != parent) children.push_back(rooted_code(adj, w, root));
  }
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  return code + ")";
}

std::string tree_code(const Graph& tree) {
  int n = tree.order();
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = tree.neighbors(v);
    adj[v].assign(nbrs.begin(), nbrs.end());
    degree[v] = tree.degree(v);
  }
  // Peel leaves to find the one or two centers.
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : adj[leaf]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    auto code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

Graph path_graph(int n) {
  require_order(n, 1, "path");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require_order(n, 3, "cycle");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require_order(n, 1, "complete graph");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require_order(n, 1, "gnp");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("gnp: p must lie in [0, 1]");
  Rng rng(seed);
  return gnp_draw(n, p, rng);
}

Graph random_tree(int n, std::uint64_t seed) {
  require_order(n, 1, "tree");
  if (n <= 2) return path_graph(n);
  Rng rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(uniform_index(rng, static_cast<std::size_t>(n)));
  std::vector<int> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<Edge> edges;
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (Vertex c : code) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return Graph(n, edges);
}

std::vector<Graph> all_trees(int n) {
  require_order(n, 1, "all_trees");
  // Every unlabelled tree arises from attaching vertex i to some parent < i.
  std::vector<Graph> trees;
  std::set<std::string> seen;
  std::vector<Edge> edges;
  std::function<void(Vertex)> attach = [&](Vertex i) {
    if (i == n) {
      Graph tree(n, edges);
      if (seen.insert(tree_code(tree)).second) trees.push_back(std::move(tree));
      return;
    }
    for (Vertex parent = 0; parent < i; ++parent) {
      edges.emplace_back(parent, i);
      attach(i + 1);
      edges.pop_back();
    }
  };
  attach(1);
  return trees;
}

Graph connected_ptfree(int n, int t, std::uint64_t seed, int max_attempts) {
  require_order(n, 1, "connected_ptfree");
  if (t < 3) throw InputError("connected_ptfree needs t >= 3");
  Rng rng(seed);
  double p = std::min(1.0, 1.5 / n);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = gnp_draw(n, p, rng);
    if (!is_connected(g)) {
      p = std::min(1.0, 2.0 * p);
    } else if (!is_pt_free(g, t).free) {
      p += (1.0 - p) / 2.0;
    } else {
      return g;
    }
  }
  throw GenerationError("connected_ptfree: no connected P_" + std::to_string(t) + "-free graph on " +
                        std::to_string(n) + " vertices after " + std::to_string(max_attempts) +
                        " attempts; try a larger t or a smaller n");
}

Graph generate(const GraphKind& kind) {
  struct Visitor {
    Graph operator()(const PathKind& k) const { return path_graph(k.n); }
    Graph operator()(const CycleKind& k) const { return cycle_graph(k.n); }
    Graph operator()(const CompleteKind& k) const { return complete_graph(k.n); }
    Graph operator()(const PetersenKind&) const { return petersen_graph(); }
    Graph operator()(const GnpKind& k) const { return gnp(k.n, k.p, k.seed); }
    Graph operator()(const TreeKind& k) const { return random_tree(k.n, k.seed); }
    Graph operator()(const ConnectedPtFreeKind& k) const { return connected_ptfree(k.n, k.t, k.seed); }
  };
  return std::visit(Visitor{}, kind);
}

GraphKind parse_graph_kind(const std::vector<std::string>& words, std::uint64_t seed) {
  if (words.empty()) throw InputError("missing generator kind");
  const auto& name = words[0];
  auto expect = [&](std::size_t count) {
    if (words.size() != count + 1) {
      throw InputError("generator '" + name + "' takes " + std::to_string(count) + " argument(s)");
    }
  };
  auto integer = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      int value = std::stoi(words[i], &used);
      if (used != words[i].size()) throw InputError("");
      return value;
    } catch (const std::exception&) {
      throw InputError("generator '" + name + "': '" + words[i] + "' is not an integer");
    }
  };
  auto real = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      double value = std::stod(words[i], &used);
      if (used != words[i].size()) throw InputError("");
      return value;
    } catch (const std::exception&) {
      throw InputError("generator '" + name + "': '" + words[i] + "' is not a number");
    }
  };

  if (name == "path") {
    expect(1);
    return PathKind{integer(1)};
  }
  if (name == "cycle") {
    expect(1);
    return CycleKind{integer(1)};
  }
  if (name == "complete") {
    expect(1);
    return CompleteKind{integer(1)};
  }
  if (name == "petersen") {
    expect(0);
    return PetersenKind{};
  }
  if (name == "gnp") {
    expect(2);
    double p = real(2);
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("gnp: p must lie in [0, 1]");
    return GnpKind{integer(1), p, seed};
  }
  if (name == "tree") {
    expect(1);
    return TreeKind{integer(1), seed};
  }
  if (name == "connected-ptfree" || name == "connected_ptfree") {
    expect(2);
    return ConnectedPtFreeKind{integer(1), integer(2), seed};
  }
  throw InputError("unknown generator kind '" + name + "'");
}

}  // namespace coplab
