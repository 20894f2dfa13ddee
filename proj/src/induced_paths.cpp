#include "coplab/induced_paths.hpp"

#include <algorithm>

#include "coplab/errors.hpp"

namespace coplab {

bool verify_induced_path(const Graph& g, std::span<const Vertex> vs) {
  if (vs.empty()) return false;
  for (Vertex v : vs) {
    if (!g.contains(v)) return false;
  }
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.has_edge(vs[i], vs[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

namespace {

// Grows induced paths from every start vertex in ascending order, always
// extending at the tip with the lowest admissible neighbor first. A vertex is
// admissible while it is off the path and has no neighbor among the non-tip
// path vertices.
class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, std::size_t cap)
      : g_(g), cap_(cap), on_path_(g.order(), 0), blocked_(g.order(), 0) {}

  LongestInducedPath run() {
    for (Vertex s = 0; s < g_.order() && !done_; ++s) {
      available_ = g_.order();
      push(s);
      extend();
      pop();
    }
    return LongestInducedPath{best_.size(), InducedPathCertificate{best_}};
  }

 private:
  void push(Vertex v) {
    on_path_[v] = 1;
    if (blocked_[v] == 0) --available_;
    path_.push_back(v);
  }

  void pop() {
    Vertex v = path_.back();
    path_.pop_back();
    on_path_[v] = 0;
    if (blocked_[v] == 0) ++available_;
  }

  void block_around(Vertex v, int delta) {
    for (Vertex w : g_.neighbors(v)) {
      bool was_free = blocked_[w] == 0;
      blocked_[w] += delta;
      bool now_free = blocked_[w] == 0;
      if (!on_path_[w] && was_free != now_free) available_ += now_free ? 1 : -1;
    }
  }

  void extend() {
    if (path_.size() > best_.size()) {
      best_ = path_;
      if (best_.size() >= cap_) {
        done_ = true;
        return;
      }
    }
    if (path_.size() + static_cast<std::size_t>(available_) <= best_.size()) return;
    Vertex tip = path_.back();
    for (Vertex w : g_.neighbors(tip)) {
      if (on_path_[w] || blocked_[w] != 0) continue;
      block_around(tip, +1);
      push(w);
      extend();
      pop();
      block_around(tip, -1);
      if (done_) return;
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<char> on_path_;
  std::vector<int> blocked_;
  int available_ = 0;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
  bool done_ = false;
};

}  // namespace

LongestInducedPath longest_induced_path(const Graph& g, std::size_t cap) {
  if (cap == 0) throw InputError("longest induced path: cap must be positive");
  return InducedPathSearch(g, cap).run();
}

PtFreeness is_pt_free(const Graph& g, int t) {
  if (t < 1) throw InputError("P_t-freeness needs t >= 1");
  if (g.order() == 0) return {};
  auto found = longest_induced_path(g, static_cast<std::size_t>(t));
  if (found.order < static_cast<std::size_t>(t)) return {};
  return PtFreeness{false, found.witness};
}

}  // namespace coplab
