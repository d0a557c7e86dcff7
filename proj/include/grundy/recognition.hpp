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
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grundy/error.hpp"
#include "grundy/graph.hpp"
#include "grundy/modular_decomposition.hpp"

namespace grundy {

// ---------------------------------------------------------------------------
// Split and pseudo-split graphs

struct SplitPartition {
  VertexSet stable;
  VertexSet clique;
};

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!(s - g.neighbors(v)).is_subset_of(VertexSet(s.universe(), {v}))) return false;
  return true;
}

inline bool is_stable(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

inline bool is_valid_split_partition(const Graph& g, const SplitPartition& p) {
  return !p.stable.intersects(p.clique) && (p.stable | p.clique) == g.vertices() &&
         is_clique(g, p.clique) && is_stable(g, p.stable);
}

/// Split recognition from the degree sequence (Hammer-Simeone). The clique
/// side is grown to a maximal clique, so a stable vertex seeing the whole
/// clique is moved across.
inline std::optional<SplitPartition> is_split(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(by_degree[i]) + 1 >= i + 1) m = i + 1;
  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(by_degree[i]);
  if (head != m * (m - (m > 0 ? 1 : 0)) + tail) return std::nullopt;

  SplitPartition p{VertexSet(n), VertexSet(n)};
  for (std::size_t i = 0; i < n; ++i) (i < m ? p.clique : p.stable).insert(by_degree[i]);
  for (Vertex s : p.stable) {
    if (p.clique.is_subset_of(g.neighbors(s))) {
      p.stable.erase(s);
      p.clique.insert(s);
      break;
    }
  }
  if (!is_valid_split_partition(g, p)) return std::nullopt;
  return p;
}

/// Finds an induced C4 or 2K2 by scanning pairs of disjoint edges.
inline std::optional<std::array<Vertex, 4>> find_c4_or_2k2(const Graph& g) {
  const std::vector<Edge> e = g.edges();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      auto [a, b] = e[i];
      auto [c, d] = e[j];
      if (a == c || a == d || b == c || b == d) continue;
      const bool ac = g.adjacent(a, c), ad = g.adjacent(a, d);
      const bool bc = g.adjacent(b, c), bd = g.adjacent(b, d);
      const int cross = ac + ad + bc + bd;
      if (cross == 0) return std::array<Vertex, 4>{a, b, c, d};
      if (cross == 2 && ((ac && bd) || (ad && bc))) return std::array<Vertex, 4>{a, b, c, d};
    }
  }
  return std::nullopt;
}

/// {C4, 2K2}-free.
inline bool is_pseudo_split(const Graph& g) { return !find_c4_or_2k2(g).has_value(); }

// ---------------------------------------------------------------------------
// Spiders

enum class SpiderFlavor { kThin, kFat };

constexpr std::string_view to_string(SpiderFlavor f) {
  return f == SpiderFlavor::kThin ? "thin" : "fat";
}

/// legs[i] is matched with body[i]: thin spiders join them, fat spiders
/// join legs[i] to every body vertex except body[i].
struct SpiderPartition {
  std::vector<Vertex> legs;  // S
  std::vector<Vertex> body;  // K
  VertexSet head;            // R
  SpiderFlavor flavor = SpiderFlavor::kThin;

  VertexSet legs_set(std::size_t n) const { return VertexSet(n, std::span<const Vertex>(legs)); }
  VertexSet body_set(std::size_t n) const { return VertexSet(n, std::span<const Vertex>(body)); }
};

inline bool is_valid_spider_partition(const Graph& g, const SpiderPartition& p) {
  const std::size_t n = g.order();
  const std::size_t k = p.legs.size();
  if (k < 2 || p.body.size() != k) return false;
  const VertexSet s = p.legs_set(n), kk = p.body_set(n);
  if (s.size() != k || kk.size() != k || s.intersects(kk) || p.head.intersects(s | kk)) return false;
  if (!((s | kk | p.head) == g.vertices())) return false;
  if (!is_stable(g, s) || !is_clique(g, kk)) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const bool want = p.flavor == SpiderFlavor::kThin ? i == j : i != j;
      if (g.adjacent(p.legs[i], p.body[j]) != want) return false;
    }
  for (Vertex r : p.head)
    if (!kk.is_subset_of(g.neighbors(r)) || g.neighbors(r).intersects(s)) return false;
  return true;
}

namespace detail {

inline std::optional<SpiderPartition> thin_spider(const Graph& g) {
  SpiderPartition p;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) {
      p.legs.push_back(v);
      p.body.push_back(g.neighbors(v).front());
    }
  if (p.legs.size() < 2) return std::nullopt;
  VertexSet rest = g.vertices() - p.legs_set(g.order()) - p.body_set(g.order());
  p.head = rest;
  if (!is_valid_spider_partition(g, p)) return std::nullopt;
  return p;
}

}  // namespace detail

/// Thin spiders are read off their degree-one legs; a fat spider is a graph
/// whose complement is a thin spider with legs and body exchanged.
inline std::optional<SpiderPartition> is_spider(const Graph& g) {
  if (auto thin = detail::thin_spider(g)) return thin;
  const Graph co = complement(g);
  if (auto t = detail::thin_spider(co)) {
    SpiderPartition p;
    p.legs = t->body;
    p.body = t->legs;
    p.head = t->head;
    p.flavor = SpiderFlavor::kFat;
    if (is_valid_spider_partition(g, p)) return p;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Definition-based oracle

inline bool induces_p4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  const std::array<Vertex, 4> q{a, b, c, d};
  std::array<int, 4> deg{};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.adjacent(q[i], q[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  if (edges != 3) return false;
  std::sort(deg.begin(), deg.end());
  return deg == std::array<int, 4>{1, 1, 2, 2};
}

struct DefinitionLimits {
  std::size_t max_vertices = 25;
  bool allow_oversize = false;
};

/// Checks the defining property directly: every induced subgraph on at most
/// six vertices with more than two induced P4s is pseudo-split.
/// Returns the offending vertex set through `witness` when it fails.
inline bool extended_p4_laden_by_definition(const Graph& g, std::vector<Vertex>* witness = nullptr,
                                            const DefinitionLimits& limits = {}) {
  const std::size_t n = g.order();
  if (n > limits.max_vertices && !limits.allow_oversize)
    throw Error(ErrorCode::kSizeLimitExceeded,
                "definition check on " + std::to_string(n) + " vertices");
  if (n < 5) return true;

  std::size_t total = 0;
  for (Vertex a = 0; a < n && total < 3; ++a)
    for (Vertex b = a + 1; b < n && total < 3; ++b)
      for (Vertex c = b + 1; c < n && total < 3; ++c)
        for (Vertex d = c + 1; d < n && total < 3; ++d)
          if (induces_p4(g, a, b, c, d)) ++total;
  if (total < 3) return true;

  std::vector<Vertex> chosen;
  auto count_p4s = [&]() {
    // Four-vertex subsets: drop one member of a 5-set or two of a 6-set.
    const std::size_t k = chosen.size();
    std::size_t count = 0;
    auto test_without = [&](std::size_t x, std::size_t y) {
      std::array<Vertex, 4> q{};
      std::size_t w = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (i != x && i != y) q[w++] = chosen[i];
      if (induces_p4(g, q[0], q[1], q[2], q[3])) ++count;
    };
    for (std::size_t x = 0; x < k; ++x) {
      if (k == 5) test_without(x, x);
      for (std::size_t y = x + 1; k == 6 && y < k; ++y) test_without(x, y);
    }
    return count;
  };
  auto check = [&]() {
    if (count_p4s() <= 2) return true;
    if (is_pseudo_split(induced_subgraph(g, chosen).graph)) return true;
    if (witness) *witness = chosen;
    return false;
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          for (Vertex e = d + 1; e < n; ++e) {
            chosen = {a, b, c, d, e};
            if (!check()) return false;
            for (Vertex f = e + 1; f < n; ++f) {
              chosen = {a, b, c, d, e, f};
              if (!check()) return false;
            }
          }
  return true;
}

// ---------------------------------------------------------------------------
// Neighborhood node classification

enum class P5Shape { kP5, kC5, kP5Complement };

constexpr std::string_view to_string(P5Shape s) {
  switch (s) {
    case P5Shape::kP5: return "P5";
    case P5Shape::kC5: return "C5";
    case P5Shape::kP5Complement: return "P5-complement";
  }
  return "unknown";
}

/// Canonical labelled shapes: P5 is the path 0-1-2-3-4, C5 the cycle
/// 0-1-2-3-4-0, and the P5 complement is the complement of that path.
inline Graph canonical_shape(P5Shape s) {
  Graph p5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  switch (s) {
    case P5Shape::kP5: return p5;
    case P5Shape::kC5: return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    case P5Shape::kP5Complement: return complement(p5);
  }
  return p5;
}

struct ShapeMatch {
  P5Shape shape;
  /// position[i] is the vertex of the matched graph playing canonical vertex i.
  std::array<Vertex, 5> position;
};

/// Exhaustive search over all 120 labellings.
inline std::optional<ShapeMatch> match_p5_like(const Graph& g) {
  if (g.order() != 5) return std::nullopt;
  for (P5Shape shape : {P5Shape::kP5, P5Shape::kC5, P5Shape::kP5Complement}) {
    const Graph canon = canonical_shape(shape);
    if (canon.edge_count() != g.edge_count()) continue;
    std::array<Vertex, 5> perm{0, 1, 2, 3, 4};
    do {
      bool ok = true;
      for (Vertex i = 0; i < 5 && ok; ++i)
        for (Vertex j = i + 1; j < 5 && ok; ++j)
          if (canon.adjacent(i, j) != g.adjacent(perm[i], perm[j])) ok = false;
      if (ok) return ShapeMatch{shape, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

enum class NeighborhoodTag { kP5Like, kSpider, kSplitQuotient, kNotInClass };

constexpr std::string_view to_string(NeighborhoodTag t) {
  switch (t) {
    case NeighborhoodTag::kP5Like: return "p5like";
    case NeighborhoodTag::kSpider: return "spider";
    case NeighborhoodTag::kSplitQuotient: return "split-quotient";
    case NeighborhoodTag::kNotInClass: return "not-in-class";
  }
  return "unknown";
}

/// Which modules a P5, C5 or P5-complement quotient tolerates: singletons
/// only (extended P4-laden) or arbitrary in-class graphs (fat-extended).
enum class ClassRules { kExtended, kFatExtended };

struct ChildInfo {
  std::size_t size = 1;
  bool is_clique = true;
  bool is_stable = true;
};

inline ChildInfo child_info(const Graph& g, const MDNode& child) {
  return {child.module.size(), is_clique(g, child.module), is_stable(g, child.module)};
}

/// Split quotient refined into S(H), K(H) and R(H), as quotient vertex
/// lists. R(H) holds clique vertices with no stable neighbour.
struct SplitQuotientParts {
  std::vector<Vertex> stable;
  std::vector<Vertex> clique;
  std::vector<Vertex> rest;
};

inline SplitQuotientParts refine_split(const Graph& h, const SplitPartition& p) {
  SplitQuotientParts out;
  out.stable = p.stable.to_vector();
  for (Vertex k : p.clique)
    (h.neighbors(k).intersects(p.stable) ? out.clique : out.rest).push_back(k);
  return out;
}

struct NeighborhoodKind {
  NeighborhoodTag tag = NeighborhoodTag::kNotInClass;
  std::optional<ShapeMatch> shape;
  std::optional<SpiderPartition> spider;
  std::optional<SplitQuotientParts> split;
  std::string reason;  // why the node was rejected, when it was
};

namespace detail {

inline bool spider_modules_ok(const SpiderPartition& sp, std::span<const ChildInfo> children,
                              std::string& reason) {
  std::size_t doubled = 0;
  auto check = [&](Vertex q) {
    if (children[q].size == 1) return true;
    if (children[q].size == 2 && doubled++ == 0) return true;
    reason = "spider module at quotient vertex " + std::to_string(q) + " has size " +
             std::to_string(children[q].size);
    return false;
  };
  for (Vertex q : sp.legs)
    if (!check(q)) return false;
  for (Vertex q : sp.body)
    if (!check(q)) return false;
  return true;
}

inline bool split_modules_ok(const SplitQuotientParts& sp, std::span<const ChildInfo> children,
                             std::string& reason) {
  for (Vertex q : sp.stable)
    if (!children[q].is_stable) {
      reason = "split quotient: module at stable vertex " + std::to_string(q) + " is not independent";
      return false;
    }
  for (Vertex q : sp.clique)
    if (!children[q].is_clique) {
      reason = "split quotient: module at clique vertex " + std::to_string(q) + " is not a clique";
      return false;
    }
  return true;
}

}  // namespace detail

/// Classifies a neighborhood node by its quotient and child modules.
/// Cases are tried in the order P5-like, spider, split quotient; the first
/// that fits is reported.
inline NeighborhoodKind classify_neighborhood_node(const MDNode& node,
                                                   std::span<const ChildInfo> children,
                                                   ClassRules rules = ClassRules::kFatExtended) {
  if (node.kind != NodeKind::kNeighborhood)
    throw Error(ErrorCode::kNotNeighborhoodNode, std::string("node kind is ") +
                                                     std::string(to_string(node.kind)));
  if (children.size() != node.quotient.order())
    throw Error(ErrorCode::kArityMismatch, "child info count differs from quotient order");
  const Graph& h = node.quotient;
  NeighborhoodKind out;
  std::string why;

  if (auto m = match_p5_like(h)) {
    const bool singletons = std::all_of(children.begin(), children.end(),
                                        [](const ChildInfo& c) { return c.size == 1; });
    if (rules == ClassRules::kFatExtended || singletons) {
      out.tag = NeighborhoodTag::kP5Like;
      out.shape = m;
      return out;
    }
    why = std::string(to_string(m->shape)) + " quotient with a non-singleton module";
  }
  if (auto sp = is_spider(h)) {
    if (detail::spider_modules_ok(*sp, children, why)) {
      out.tag = NeighborhoodTag::kSpider;
      out.spider = sp;
      return out;
    }
  }
  if (auto split = is_split(h)) {
    SplitQuotientParts parts = refine_split(h, *split);
    if (detail::split_modules_ok(parts, children, why)) {
      out.tag = NeighborhoodTag::kSplitQuotient;
      out.split = std::move(parts);
      return out;
    }
  }
  out.reason = why.empty() ? "quotient on " + std::to_string(h.order()) +
                                 " vertices is not P5-like, a spider or split"
                           : why;
  return out;
}

// ---------------------------------------------------------------------------
// Whole-graph report

struct NodeClassification {
  VertexSet module;
  NeighborhoodKind fat;       // under fat-extended rules
  bool extended_ok = false;   // also accepted under extended rules
};

struct ClassReport {
  bool split = false;
  bool pseudo_split = false;
  bool spider = false;
  bool extended_p4_laden = false;
  bool fat_extended_p4_laden = false;
  std::vector<NodeClassification> nodes;  // neighborhood nodes, postorder
};

inline std::vector<ChildInfo> child_infos(const Graph& g, const MDNode& node) {
  std::vector<ChildInfo> out;
  out.reserve(node.children.size());
  for (const MDNode& c : node.children) out.push_back(child_info(g, c));
  return out;
}

inline ClassReport recognize(const Graph& g) {
  ClassReport r;
  r.split = is_split(g).has_value();
  r.pseudo_split = is_pseudo_split(g);
  r.spider = is_spider(g).has_value();
  if (g.order() == 0) {
    r.extended_p4_laden = r.fat_extended_p4_laden = true;
    return r;
  }
  const MDTree tree = decompose(g);
  r.fat_extended_p4_laden = true;
  r.extended_p4_laden = true;
  for_each_postorder(tree.root, [&](const MDNode& node) {
    if (node.kind != NodeKind::kNeighborhood) return;
    const std::vector<ChildInfo> infos = child_infos(g, node);
    NodeClassification nc{node.module,
                          classify_neighborhood_node(node, infos, ClassRules::kFatExtended), false};
    nc.extended_ok =
        classify_neighborhood_node(node, infos, ClassRules::kExtended).tag != NeighborhoodTag::kNotInClass;
    if (nc.fat.tag == NeighborhoodTag::kNotInClass) r.fat_extended_p4_laden = false;
    if (!nc.extended_ok) r.extended_p4_laden = false;
    r.nodes.push_back(std::move(nc));
  });
  return r;
}

}  // namespace grundy
