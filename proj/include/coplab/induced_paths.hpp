#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "coplab/graph.hpp"

namespace coplab {

// Ordered vertex list in which exactly the consecutive pairs are adjacent.
struct InducedPathCertificate {
  std::vector<Vertex> vertices;

  std::size_t order() const { return vertices.size(); }
  friend bool operator==(const InducedPathCertificate&, const InducedPathCertificate&) = default;
};

bool verify_induced_path(const Graph& g, std::span<const Vertex> vs);

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct LongestInducedPath {
  std::size_t order = 0;
  InducedPathCertificate witness;
};

// Exact search. The result is truncated at `cap`: as soon as an induced path
// on `cap` vertices is found it is returned. The witness is the
// lexicographically smallest vertex sequence of the reported order.
LongestInducedPath longest_induced_path(const Graph& g, std::size_t cap = kUnbounded);

struct PtFreeness {
  bool free = true;
  std::optional<InducedPathCertificate> certificate;  // exactly t vertices when !free
};

PtFreeness is_pt_free(const Graph& g, int t);

}  // namespace coplab
