#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace coplab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built;
// neighbor lists are kept sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InputError on self-loops or out-of-range endpoints. Repeated edges collapse.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Sorted, duplicate-free set of vertices of a graph with `universe` vertices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int universe, std::vector<Vertex> members);

  static VertexSet all(int universe);

  int universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex front() const { return members_.front(); }

  VertexSet minus(const VertexSet& other) const;
  VertexSet with(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<Vertex> members_;
};

// N[v]: v together with its neighbors.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// Connected components of the subgraph induced on `region`, ordered by their
// smallest vertex.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& region);

// Minimum-length path from `from` to `to` using only vertices of `region`;
// among shortest paths the lexicographically smallest vertex sequence.
std::optional<std::vector<Vertex>> shortest_path_within(const Graph& g, const VertexSet& region,
                                                        Vertex from, Vertex to);

bool is_connected(const Graph& g);

// Multi-source BFS distances; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, std::span<const Vertex> sources);

}  // namespace coplab
