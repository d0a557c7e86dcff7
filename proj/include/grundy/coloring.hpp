// Copyright 2026 The grundy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grundy/error.hpp"
#include "grundy/graph.hpp"

namespace grundy {

using Color = unsigned;
using VertexOrder = std::vector<Vertex>;

/// Vertex colouring with 1-based colours. colors[v] == 0 means uncoloured.
struct Coloring {
  std::vector<Color> colors;

  Color k() const {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  }

  /// Colour classes S_1..S_k; classes()[i] holds the vertices coloured i + 1.
  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out(k(), VertexSet(colors.size()));
    for (Vertex v = 0; v < colors.size(); ++v)
      if (colors[v] > 0) out[colors[v] - 1].insert(v);
    return out;
  }

  /// Every colour in [1, k] is used at least once and nothing is uncoloured.
  bool is_compact() const {
    std::vector<bool> used(k() + 1, false);
    for (Color c : colors) {
      if (c == 0) return false;
      used[c] = true;
    }
    return std::all_of(used.begin() + 1, used.end(), [](bool b) { return b; });
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct GrundyResult {
  unsigned value = 0;
  VertexOrder witness;
};

inline bool is_permutation_of(std::span<const Vertex> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// First-fit: each vertex, in order, takes the smallest colour missing from
/// its already coloured neighbours.
inline Coloring greedy_color(const Graph& g, std::span<const Vertex> order) {
  if (!is_permutation_of(order, g.order()))
    throw Error(ErrorCode::kNotAPermutation, "order is not a permutation of the vertex set");
  Coloring c{std::vector<Color>(g.order(), 0)};
  std::vector<bool> taken(g.max_degree() + 2, false);
  for (Vertex v : order) {
    std::fill(taken.begin(), taken.end(), false);
    for (Vertex u : g.neighbors(v))
      if (c.colors[u] < taken.size()) taken[c.colors[u]] = true;
    Color col = 1;
    while (taken[col]) ++col;
    c.colors[v] = col;
  }
  return c;
}

inline bool is_proper(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

/// True iff c is proper and every vertex coloured j sees all colours below j.
inline bool is_greedy_witness(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return false;
  std::vector<bool> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    Color cv = c.colors[v];
    if (cv == 0) return false;
    seen.assign(cv, false);
    std::size_t found = 0;
    for (Vertex u : g.neighbors(v)) {
      Color cu = c.colors[u];
      if (cu < cv && !seen[cu]) {
        seen[cu] = true;
        ++found;
      }
    }
    if (found != cv - 1) return false;
  }
  return true;
}

struct OracleLimits {
  /// Soft limit; exceeding it raises SizeLimitExceeded unless overridden.
  std::size_t max_vertices = 16;
  bool allow_oversize = false;
};

namespace detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kOracleHardLimit = 40;

struct MaskGraph {
  std::vector<Mask> adj;

  explicit MaskGraph(const Graph& g) : adj(g.order(), 0) {
    for (auto [u, v] : g.edges()) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
  }

  unsigned max_degree_in(Mask u) const {
    unsigned d = 0;
    for (Mask r = u; r; r &= r - 1)
      d = std::max(d, static_cast<unsigned>(std::popcount(adj[std::countr_zero(r)] & u)));
    return d;
  }

  /// Calls fn(I) for every maximal independent set I of G[within].
  /// Bron-Kerbosch with pivoting on the complement graph; fn returns false
  /// to stop the enumeration early.
  template <typename Fn>
  bool for_each_maximal_independent(Mask within, Fn&& fn) const {
    return expand(0, within, 0, within, fn);
  }

 private:
  template <typename Fn>
  bool expand(Mask chosen, Mask candidates, Mask excluded, Mask within, Fn& fn) const {
    if (candidates == 0) {
      if (excluded == 0) return fn(chosen);
      return true;
    }
    // Pivot: vertex of candidates|excluded with most non-neighbours in candidates.
    Mask pool = candidates | excluded;
    Vertex pivot = static_cast<Vertex>(std::countr_zero(pool));
    int best = -1;
    for (Mask r = pool; r; r &= r - 1) {
      auto v = static_cast<Vertex>(std::countr_zero(r));
      int score = std::popcount(candidates & ~adj[v] & ~(Mask{1} << v));
      if (score > best) {
        best = score;
        pivot = v;
      }
    }
    // Branch on candidates that are adjacent to the pivot (or the pivot itself).
    Mask branch = candidates & (adj[pivot] | (Mask{1} << pivot));
    for (Mask r = branch; r; r &= r - 1) {
      auto v = static_cast<Vertex>(std::countr_zero(r));
      Mask bit = Mask{1} << v;
      Mask keep = ~(adj[v] | bit);
      if (!expand(chosen | bit, candidates & keep, excluded & keep, within, fn)) return false;
      candidates &= ~bit;
      excluded |= bit;
    }
    return true;
  }
};

template <typename Value>
class SubsetMemo {
 public:
  explicit SubsetMemo(std::size_t n) {
    if (n <= 22) dense_.assign(std::size_t{1} << n, kUnknown);
  }
  bool lookup(Mask m, Value& out) const {
    if (!dense_.empty()) {
      if (dense_[m] == kUnknown) return false;
      out = dense_[m];
      return true;
    }
    auto it = sparse_.find(m);
    if (it == sparse_.end()) return false;
    out = it->second;
    return true;
  }
  void store(Mask m, Value v) {
    if (!dense_.empty())
      dense_[m] = v;
    else
      sparse_[m] = v;
  }

 private:
  static constexpr Value kUnknown = static_cast<Value>(~Value{0});
  std::vector<Value> dense_;
  std::unordered_map<Mask, Value> sparse_;
};

class GrundyOracle {
 public:
  explicit GrundyOracle(const Graph& g) : mg_(g), memo_(g.order()) {}

  /// Grundy number of G[u]. Peels a maximal independent set as colour class
  /// S_1; what remains must carry a greedy colouring with one colour fewer.
  std::uint8_t solve(Mask u) {
    if (u == 0) return 0;
    std::uint8_t cached;
    if (memo_.lookup(u, cached)) return cached;
    const unsigned bound = std::min<unsigned>(mg_.max_degree_in(u) + 1,
                                              static_cast<unsigned>(std::popcount(u)));
    unsigned best = 1;
    mg_.for_each_maximal_independent(u, [&](Mask ind) {
      best = std::max(best, 1U + solve(u & ~ind));
      return best < bound;
    });
    memo_.store(u, static_cast<std::uint8_t>(best));
    return static_cast<std::uint8_t>(best);
  }

  VertexOrder witness(Mask u) {
    VertexOrder order;
    while (u != 0) {
      const unsigned target = solve(u);
      Mask pick = 0;
      mg_.for_each_maximal_independent(u, [&](Mask ind) {
        if (1U + solve(u & ~ind) == target) {
          pick = ind;
          return false;
        }
        return true;
      });
      for (Mask r = pick; r; r &= r - 1) order.push_back(static_cast<Vertex>(std::countr_zero(r)));
      u &= ~pick;
    }
    return order;
  }

 private:
  MaskGraph mg_;
  SubsetMemo<std::uint8_t> memo_;
};

class ChromaticOracle {
 public:
  explicit ChromaticOracle(const Graph& g) : mg_(g), memo_(g.order()) {}

  /// Any optimal colouring can grow its first class into a maximal
  /// independent set, so peeling maximal independent sets is exhaustive.
  std::uint8_t solve(Mask u) {
    if (u == 0) return 0;
    std::uint8_t cached;
    if (memo_.lookup(u, cached)) return cached;
    unsigned best = static_cast<unsigned>(std::popcount(u));
    const unsigned floor = has_edge(u) ? 2U : 1U;
    mg_.for_each_maximal_independent(u, [&](Mask ind) {
      best = std::min(best, 1U + solve(u & ~ind));
      return best > floor;
    });
    memo_.store(u, static_cast<std::uint8_t>(best));
    return static_cast<std::uint8_t>(best);
  }

 private:
  bool has_edge(Mask u) const {
    for (Mask r = u; r; r &= r - 1)
      if (mg_.adj[std::countr_zero(r)] & u) return true;
    return false;
  }

  MaskGraph mg_;
  SubsetMemo<std::uint8_t> memo_;
};

inline void check_oracle_size(const Graph& g, const OracleLimits& limits, const char* what) {
  if (g.order() > kOracleHardLimit ||
      (g.order() > limits.max_vertices && !limits.allow_oversize))
    throw Error(ErrorCode::kSizeLimitExceeded,
                std::string(what) + " on " + std::to_string(g.order()) +
                    " vertices exceeds limit " + std::to_string(limits.max_vertices));
}

inline Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace detail

/// Exact Grundy number with a witness order. Exponential; intended as a
/// ground-truth oracle for small graphs.
inline GrundyResult grundy_exact(const Graph& g, const OracleLimits& limits = {}) {
  detail::check_oracle_size(g, limits, "grundy_exact");
  detail::GrundyOracle oracle(g);
  const detail::Mask all = detail::full_mask(g.order());
  return {oracle.solve(all), oracle.witness(all)};
}

inline unsigned chromatic_exact(const Graph& g, const OracleLimits& limits = {}) {
  detail::check_oracle_size(g, limits, "chromatic_exact");
  detail::ChromaticOracle oracle(g);
  return oracle.solve(detail::full_mask(g.order()));
}

}  // namespace grundy
