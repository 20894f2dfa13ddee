#include "coplab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "coplab/errors.hpp"

namespace coplab {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.order()) + ")");
  }
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint out of range");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet::VertexSet(int universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= universe_)) {
    throw InputError("vertex set member out of range [0, " + std::to_string(universe_) + ")");
  }
}

VertexSet VertexSet::all(int universe) {
  std::vector<Vertex> members(static_cast<std::size_t>(universe));
  for (Vertex v = 0; v < universe; ++v) members[v] = v;
  return VertexSet(universe, std::move(members));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return VertexSet(universe_, std::move(out));
}

VertexSet VertexSet::with(Vertex v) const {
  auto members = members_;
  members.push_back(v);
  return VertexSet(universe_, std::move(members));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  require_vertex(g, v);
  auto nbrs = g.neighbors(v);
  std::vector<Vertex> members(nbrs.begin(), nbrs.end());
  members.push_back(v);
  return VertexSet(g.order(), std::move(members));
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& region) {
  if (region.universe() != g.order()) throw InputError("region belongs to a different graph");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<VertexSet> components;
  for (Vertex start : region) {
    if (seen[start]) continue;
    std::vector<Vertex> members{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (!seen[w] && region.contains(w)) {
          seen[w] = 1;
          members.push_back(w);
        }
      }
    }
    components.emplace_back(g.order(), std::move(members));
  }
  return components;
}

std::optional<std::vector<Vertex>> shortest_path_within(const Graph& g, const VertexSet& region,
                                                        Vertex from, Vertex to) {
  if (!region.contains(from) || !region.contains(to)) {
    throw InputError("path endpoints must lie in the region");
  }
  // Distances measured from `to`, so walking greedily from `from` with the
  // lowest qualifying neighbor yields the lexicographically smallest path.
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0 && region.contains(w)) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  if (dist[from] < 0) return std::nullopt;
  std::vector<Vertex> path{from};
  while (path.back() != to) {
    Vertex u = path.back();
    int want = dist[u] - 1;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == want) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  Vertex root = 0;
  auto dist = distances_from(g, std::span<const Vertex>(&root, 1));
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> distances_from(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    require_vertex(g, s);
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace coplab
