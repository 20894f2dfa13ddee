#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "coplab/graph.hpp"

namespace coplab {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
Graph petersen_graph();

// G(n, p): pairs (u, v), u < v, visited u-major; the edge is present when the
// next uniform01 draw of an mt19937_64 seeded with `seed` is below p.
Graph gnp(int n, double p, std::uint64_t seed);

// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

// Every unlabelled tree on n vertices, one labelled representative each.
std::vector<Graph> all_trees(int n);

inline constexpr int kDefaultPtFreeAttempts = 10'000;

// Rejection-samples G(n, p) until the draw is connected and P_t-free. A
// single mt19937_64 seeded with `seed` drives all attempts. p starts at
// min(1, 1.5/n); a disconnected draw doubles p, a connected draw holding an
// induced P_t halves the gap 1 - p. Throws GenerationError when the attempts
// run out.
Graph connected_ptfree(int n, int t, std::uint64_t seed, int max_attempts = kDefaultPtFreeAttempts);

struct PathKind { int n; };
struct CycleKind { int n; };
struct CompleteKind { int n; };
struct PetersenKind {};
struct GnpKind { int n; double p; std::uint64_t seed; };
struct TreeKind { int n; std::uint64_t seed; };
struct ConnectedPtFreeKind { int n; int t; std::uint64_t seed; };

using GraphKind = std::variant<PathKind, CycleKind, CompleteKind, PetersenKind, GnpKind, TreeKind,
                               ConnectedPtFreeKind>;

Graph generate(const GraphKind& kind);

// Parses "path 5", "gnp 10 0.3", "connected-ptfree 9 5", ... with `seed`
// filling the random kinds. Throws InputError on unknown kinds or arguments.
GraphKind parse_graph_kind(const std::vector<std::string>& words, std::uint64_t seed);

}  // namespace coplab
