#include "coplab/solver.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <string>

#include "coplab/errors.hpp"

namespace coplab {

namespace {

constexpr std::uint16_t kUnresolved = 0xFFFF;
constexpr std::uint64_t kSaturated = UINT64_MAX;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

// binom[a][b] = C(a, b) for a <= rows, b <= cols, saturating.
std::vector<std::vector<std::uint64_t>> binomials(int rows, int cols) {
  std::vector<std::vector<std::uint64_t>> c(rows + 1, std::vector<std::uint64_t>(cols + 1, 0));
  for (int a = 0; a <= rows; ++a) {
    c[a][0] = 1;
    for (int b = 1; b <= std::min(a, cols); ++b) c[a][b] = sat_add(c[a - 1][b - 1], a - 1 >= b ? c[a - 1][b] : 0);
  }
  return c;
}

// Number of multisets of size s over n vertices.
std::uint64_t multiset_count(const std::vector<std::vector<std::uint64_t>>& binom, int n, int s) {
  return s == 0 ? 1 : binom[n + s - 1][s];
}

std::uint64_t colex_rank(const std::vector<std::vector<std::uint64_t>>& binom, std::span<const Vertex> sorted) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binom[sorted[i] + i][i + 1];
  return r;
}

// Visits every sorted tuple of size s over [0, n) in lexicographic order.
template <typename Fn>
void for_each_sorted_tuple(int n, int s, Fn&& fn) {
  std::vector<Vertex> tuple(s, 0);
  if (s == 0) {
    fn(std::span<const Vertex>(tuple));
    return;
  }
  while (true) {
    fn(std::span<const Vertex>(tuple));
    int i = s - 1;
    while (i >= 0 && tuple[i] == n - 1) --i;
    if (i < 0) return;
    ++tuple[i];
    for (int j = i + 1; j < s; ++j) tuple[j] = tuple[i];
  }
}

}  // namespace

SolverCost solver_cost(int n, int k) {
  auto binom = binomials(n + k, k);
  SolverCost cost;
  auto tuples = multiset_count(binom, n, k);
  cost.states = sat_mul(sat_mul(tuples, static_cast<std::uint64_t>(n)), 2);
  for (int j = 0; j <= k; ++j) {
    cost.working_set = std::max(cost.working_set, sat_mul(multiset_count(binom, n, j), multiset_count(binom, n, k - j)));
  }
  return cost;
}

// Builds a SolverTable by level-synchronous retrograde analysis.
//
// Level L settles the cops-to-move states worth 2L-1 plies and then the
// robber-to-move states worth 2L plies. A robber-to-move state settles once
// every robber option (stay or step) is a settled cops-to-move state; a
// cops-to-move state settles as soon as one joint move reaches the previous
// level's robber-to-move frontier.
//
// States are grouped per cop multiset with a bitmask over robber vertices.
// "Some joint move reaches the frontier" is computed without enumerating
// joint moves: the cops are released one at a time. Stage j holds, for a
// multiset A of j original cop positions and a multiset B of k-j final
// positions, whether some way of moving A's cops lands (with B) in the
// frontier. Stage 0 is the frontier itself, stage k the answer.
class TableBuilder {
 public:
  TableBuilder(const Graph& g, int k) : g_(g), n_(g.order()), k_(k) {
    binom_ = binomials(n_ + k_, k_);
    count_.resize(k_ + 1);
    for (int s = 0; s <= k_; ++s) count_[s] = multiset_count(binom_, n_, s);
    tuples_.resize(k_ + 1);
    top_.resize(k_ + 1);
    drop_.resize(k_ + 1);
    grow_.resize(k_ + 1);
    for (int s = 0; s <= k_; ++s) {
      tuples_[s].resize(count_[s] * s);
      if (s > 0) {
        top_[s].resize(count_[s]);
        drop_[s].resize(count_[s]);
      }
      if (s < k_) grow_[s].resize(count_[s] * n_);
      std::vector<Vertex> scratch;
      for_each_sorted_tuple(n_, s, [&](std::span<const Vertex> tuple) {
        auto r = colex_rank(binom_, tuple);
        std::copy(tuple.begin(), tuple.end(), tuples_[s].begin() + static_cast<std::ptrdiff_t>(r * s));
        if (s > 0) {
          top_[s][r] = tuple.back();
          drop_[s][r] = static_cast<std::uint32_t>(colex_rank(binom_, tuple.first(s - 1)));
        }
        if (s < k_) {
          for (Vertex d = 0; d < n_; ++d) {
            scratch.assign(tuple.begin(), tuple.end());
            scratch.insert(std::upper_bound(scratch.begin(), scratch.end(), d), d);
            grow_[s][r * n_ + d] = static_cast<std::uint32_t>(colex_rank(binom_, scratch));
          }
        }
      });
    }
    closed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      auto nbrs = g.neighbors(v);
      closed_[v].assign(nbrs.begin(), nbrs.end());
      closed_[v].insert(std::upper_bound(closed_[v].begin(), closed_[v].end(), v), v);
    }
  }

  std::shared_ptr<SolverTable> build() {
    auto table = std::make_shared<SolverTable>();
    table->n_ = n_;
    table->k_ = k_;
    table->tuple_count_ = count_[k_];
    table->binom_ = binom_;
    table->cop_values_.assign(count_[k_] * n_, kUnresolved);
    table->robber_values_.assign(count_[k_] * n_, kUnresolved);
    if (n_ <= 16) {
      propagate<std::uint16_t>(*table);
    } else if (n_ <= 32) {
      propagate<std::uint32_t>(*table);
    } else {
      propagate<std::uint64_t>(*table);
    }
    return table;
  }

  SolveResult result(const SolverTable& table) const {
    SolveResult best;
    int best_moves = INT_MAX;
    for_each_sorted_tuple(n_, k_, [&](std::span<const Vertex> placement) {
      auto r = colex_rank(binom_, placement);
      int worst = 0;
      for (Vertex robber = 0; robber < n_ && worst < INT_MAX; ++robber) {
        int moves;
        if (std::binary_search(placement.begin(), placement.end(), robber)) {
          moves = 1;
        } else {
          auto v = table.value_at(r, robber, Side::kCops);
          moves = v.robber_wins() ? INT_MAX : capture_cop_moves(v.plies());
        }
        worst = std::max(worst, moves);
      }
      if (worst < best_moves || best.best_initial_placement.empty()) {
        best_moves = worst;
        best.best_initial_placement.assign(placement.begin(), placement.end());
      }
    });
    best.cop_win = best_moves < INT_MAX;
    if (best.cop_win) best.optimal_capture_cop_moves = best_moves;
    return best;
  }

 private:
  template <typename Word>
  void propagate(SolverTable& table) {
    constexpr int kBits = static_cast<int>(sizeof(Word) * 8);
    const std::size_t words = static_cast<std::size_t>((n_ + kBits - 1) / kBits);
    const std::uint64_t tuples = count_[k_];
    auto bit = [](Vertex v) { return static_cast<Word>(Word{1} << (v % kBits)); };

    std::vector<Word> closed_mask(n_ * words, 0);
    for (Vertex r = 0; r < n_; ++r) {
      for (Vertex x : closed_[r]) closed_mask[r * words + x / kBits] |= bit(x);
    }

    std::vector<Word> cop_settled(tuples * words, 0);
    std::vector<Word> robber_settled(tuples * words, 0);
    for (std::uint64_t c = 0; c < tuples; ++c) {
      for (int i = 0; i < k_; ++i) {
        Vertex v = tuples_[k_][c * k_ + i];
        table.cop_values_[c * n_ + v] = 0;
        table.robber_values_[c * n_ + v] = 0;
        cop_settled[c * words + v / kBits] |= bit(v);
        robber_settled[c * words + v / kBits] |= bit(v);
      }
    }
    std::vector<Word> frontier = robber_settled;
    std::vector<Word> reach;
    std::vector<char> changed(tuples, 0);

    for (int level = 1;; ++level) {
      if (2 * level >= kUnresolved) throw ResourceError("solver: game values exceed the table range", 0);
      dilate<Word>(frontier, words, reach);

      bool any_cop = false;
      std::fill(changed.begin(), changed.end(), 0);
      for (std::uint64_t c = 0; c < tuples; ++c) {
        for (std::size_t w = 0; w < words; ++w) {
          Word fresh = static_cast<Word>(reach[c * words + w] & ~cop_settled[c * words + w]);
          if (!fresh) continue;
          any_cop = true;
          changed[c] = 1;
          cop_settled[c * words + w] |= fresh;
          for (int b = 0; b < kBits; ++b) {
            if (fresh & (Word{1} << b)) {
              table.cop_values_[c * n_ + w * kBits + b] = static_cast<std::uint16_t>(2 * level - 1);
            }
          }
        }
      }
      if (!any_cop) break;

      bool any_robber = false;
      std::fill(frontier.begin(), frontier.end(), 0);
      for (std::uint64_t c = 0; c < tuples; ++c) {
        if (!changed[c]) continue;
        const Word* settled = &cop_settled[c * words];
        for (Vertex r = 0; r < n_; ++r) {
          if (robber_settled[c * words + r / kBits] & bit(r)) continue;
          const Word* options = &closed_mask[r * words];
          bool trapped = true;
          for (std::size_t w = 0; w < words && trapped; ++w) trapped = (options[w] & ~settled[w]) == 0;
          if (!trapped) continue;
          any_robber = true;
          table.robber_values_[c * n_ + r] = static_cast<std::uint16_t>(2 * level);
          robber_settled[c * words + r / kBits] |= bit(r);
          frontier[c * words + r / kBits] |= bit(r);
        }
      }
      if (!any_robber) break;
    }
  }

  // out[C] = union over joint moves C -> D of frontier[D].
  template <typename Word>
  void dilate(const std::vector<Word>& frontier, std::size_t words, std::vector<Word>& out) const {
    std::vector<Word> prev = frontier;
    std::vector<Word> cur;
    std::vector<char> live;
    for (int j = 1; j <= k_; ++j) {
      const std::uint64_t rows = count_[j];
      const std::uint64_t cols = count_[k_ - j];
      const std::uint64_t prev_rows = count_[j - 1];
      const std::uint64_t prev_cols = count_[k_ - j + 1];
      live.assign(prev_rows, 0);
      for (std::uint64_t r = 0; r < prev_rows; ++r) {
        const Word* row = &prev[r * prev_cols * words];
        live[r] = std::any_of(row, row + prev_cols * words, [](Word x) { return x != 0; });
      }
      cur.assign(rows * cols * words, 0);
      const auto& grow = grow_[k_ - j];
      for (std::uint64_t a = 0; a < rows; ++a) {
        std::uint64_t src = drop_[j][a];
        if (!live[src]) continue;
        const Word* prow = &prev[src * prev_cols * words];
        Word* crow = &cur[a * cols * words];
        const auto& moves = closed_[top_[j][a]];
        for (std::uint64_t b = 0; b < cols; ++b) {
          const std::uint32_t* g = &grow[b * n_];
          Word* dst = crow + b * words;
          if (words == 1) {
            Word acc = 0;
            for (Vertex d : moves) acc |= prow[g[d]];
            *dst = acc;
          } else {
            for (Vertex d : moves) {
              const Word* s = prow + static_cast<std::size_t>(g[d]) * words;
              for (std::size_t w = 0; w < words; ++w) dst[w] |= s[w];
            }
          }
        }
      }
      std::swap(prev, cur);
    }
    out = std::move(prev);
  }

  const Graph& g_;
  int n_;
  int k_;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<std::uint64_t> count_;
  std::vector<std::vector<Vertex>> tuples_;
  std::vector<std::vector<Vertex>> top_;
  std::vector<std::vector<std::uint32_t>> drop_;
  std::vector<std::vector<std::uint32_t>> grow_;
  std::vector<std::vector<Vertex>> closed_;
};

GameValue SolverTable::value(std::span<const Vertex> cops, Vertex robber, Side side) const {
  if (static_cast<int>(cops.size()) != k_) {
    throw InputError("table solved for " + std::to_string(k_) + " cops, asked about " + std::to_string(cops.size()));
  }
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) {
    if (v < 0 || v >= n_) throw InputError("cop vertex out of range");
  }
  if (robber < 0 || robber >= n_) throw InputError("robber vertex out of range");
  return value_at(rank(sorted), robber, side);
}

GameValue SolverTable::value_at(std::uint64_t r, Vertex robber, Side side) const {
  const auto& values = side == Side::kCops ? cop_values_ : robber_values_;
  auto v = values[r * n_ + robber];
  return v == kUnresolved ? GameValue::robber_win() : GameValue::cop_win_in(v);
}

std::uint64_t SolverTable::rank(std::span<const Vertex> sorted_cops) const { return colex_rank(binom_, sorted_cops); }

std::vector<Vertex> SolverTable::tuple(std::uint64_t r) const {
  std::vector<Vertex> out(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    // Largest d with C(d, i+1) <= r.
    int d = i;
    while (d + 1 <= n_ - 1 + i && binom_[d + 1][i + 1] <= r) ++d;
    r -= binom_[d][i + 1];
    out[i] = d - i;
  }
  return out;
}

std::uint64_t SolverTable::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      h ^= (x >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_), 4);
  mix(static_cast<std::uint64_t>(k_), 4);
  for (auto v : cop_values_) mix(v, 2);
  for (auto v : robber_values_) mix(v, 2);
  return h;
}

void SolverTable::dump(std::ostream& out) const {
  for (std::uint64_t r = 0; r < tuple_count_; ++r) {
    auto cops = tuple(r);
    std::string key;
    for (std::size_t i = 0; i < cops.size(); ++i) key += (i ? "," : "") + std::to_string(cops[i]);
    for (Vertex robber = 0; robber < n_; ++robber) {
      for (Side side : {Side::kCops, Side::kRobber}) {
        auto v = value_at(r, robber, side);
        out << key << ' ' << robber << ' ' << (side == Side::kCops ? "C" : "R") << ' ';
        if (v.robber_wins()) {
          out << "R\n";
        } else {
          out << v.plies() << '\n';
        }
      }
    }
  }
}

Solution solve(const Graph& g, int k, const SolverOptions& options) {
  if (k < 1) throw InputError("solver needs at least one cop");
  if (!is_connected(g)) throw InputError("solver needs a connected graph");
  auto cost = solver_cost(g.order(), k);
  auto required = std::max(cost.states, cost.working_set);
  if (required > options.budget) {
    throw ResourceError("solver: " + std::to_string(k) + " cops on " + std::to_string(g.order()) +
                            " vertices need a budget of " + std::to_string(required) + " (have " +
                            std::to_string(options.budget) + ")",
                        required);
  }
  TableBuilder builder(g, k);
  auto table = builder.build();
  auto result = builder.result(*table);
  return Solution{std::move(table), std::move(result)};
}

std::optional<int> cop_number(const Graph& g, int k_max, const SolverOptions& options) {
  for (int k = 1; k <= k_max; ++k) {
    if (solve(g, k, options).result.cop_win) return k;
  }
  return std::nullopt;
}

void for_each_joint_move(const Graph& g, std::span<const Vertex> cops,
                         const std::function<void(std::span<const Vertex>)>& fn) {
  std::vector<std::vector<Vertex>> options;
  for (Vertex c : cops) {
    auto nbrs = g.neighbors(c);
    std::vector<Vertex> opts(nbrs.begin(), nbrs.end());
    opts.insert(std::upper_bound(opts.begin(), opts.end(), c), c);
    options.push_back(std::move(opts));
  }
  std::vector<std::size_t> idx(cops.size(), 0);
  std::vector<Vertex> targets(cops.size());
  while (true) {
    for (std::size_t i = 0; i < cops.size(); ++i) targets[i] = options[i][idx[i]];
    fn(targets);
    std::size_t i = cops.size();
    while (i > 0 && ++idx[i - 1] == options[i - 1].size()) idx[--i] = 0;
    if (i == 0) return;
  }
}

std::vector<Vertex> OptimalCop::place(const Graph& g) {
  if (g.order() != solution_.table->order()) throw InputError("table was solved for a different graph");
  return solution_.result.best_initial_placement;
}

CopDecision OptimalCop::move(const Graph& g, const GameState& state) {
  std::vector<Vertex> best;
  long best_plies = LONG_MAX;
  for_each_joint_move(g, state.cops, [&](std::span<const Vertex> targets) {
    auto v = solution_.table->value(targets, *state.robber, Side::kRobber);
    long plies = v.robber_wins() ? LONG_MAX - 1 : v.plies();
    if (plies < best_plies) {
      best_plies = plies;
      best.assign(targets.begin(), targets.end());
    }
  });
  return best;
}

}  // namespace coplab
