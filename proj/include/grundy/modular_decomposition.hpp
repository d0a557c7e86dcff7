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
#include <deque>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grundy/error.hpp"
#include "grundy/graph.hpp"

namespace grundy {

enum class NodeKind { kLeaf, kParallel, kSeries, kNeighborhood };

constexpr std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kLeaf: return "leaf";
    case NodeKind::kParallel: return "parallel";
    case NodeKind::kSeries: return "series";
    case NodeKind::kNeighborhood: return "neighborhood";
  }
  return "unknown";
}

/// One node of the modular decomposition tree. `module` is a vertex set of
/// the host graph; `quotient` is only populated for neighborhood (prime)
/// nodes and has one vertex per child, in child order.
struct MDNode {
  NodeKind kind = NodeKind::kLeaf;
  VertexSet module;
  std::vector<MDNode> children;
  Graph quotient;

  bool is_leaf() const { return kind == NodeKind::kLeaf; }
  Vertex representative() const { return module.front(); }
};

struct MDTree {
  MDNode root;
  Graph host;
};

/// Every vertex outside s sees all of s or none of it.
inline bool is_module(const Graph& g, const VertexSet& s, const VertexSet& within) {
  if (s.empty()) return true;
  const std::size_t k = s.size();
  for (Vertex v : within - s) {
    std::size_t hit = g.neighbors(v).intersection_size(s);
    if (hit != 0 && hit != k) return false;
  }
  return true;
}

inline bool is_module(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (v >= g.order()) throw Error(ErrorCode::kIndexOutOfRange, "vertex outside graph");
  if (s.universe() != g.order()) {
    VertexSet resized(g.order());
    for (Vertex v : s) resized.insert(v);
    return is_module(g, resized, g.vertices());
  }
  return is_module(g, s, g.vertices());
}

namespace detail {

/// Smallest module of G[within] containing `seed` (which must be nonempty).
/// Stops early once the closure covers `within`.
inline VertexSet module_closure(const Graph& g, const VertexSet& within, const VertexSet& seed) {
  VertexSet closure(g.order());
  Vertex first = seed.front();
  closure.insert(first);
  VertexSet sees_all = (g.neighbors(first) & within);
  sees_all.erase(first);
  VertexSet sees_none = within - g.neighbors(first);
  sees_none.erase(first);

  std::vector<Vertex> pending;
  for (Vertex u : seed)
    if (u != first) pending.push_back(u);
  const std::size_t target = within.size();
  while (!pending.empty()) {
    Vertex y = pending.back();
    pending.pop_back();
    if (closure.contains(y)) continue;
    closure.insert(y);
    sees_all.erase(y);
    sees_none.erase(y);
    const VertexSet& ny = g.neighbors(y);
    VertexSet splitters = (sees_all - ny) | (sees_none & ny);
    sees_all &= ny;
    sees_none -= ny;
    for (Vertex u : splitters) {
      sees_all.erase(u);
      sees_none.erase(u);
      pending.push_back(u);
    }
    if (closure.size() == target) break;
  }
  return closure;
}

/// Partition of within \ {v} into the maximal modules of G[within] that
/// avoid v, by vertex-splitter refinement.
inline std::vector<VertexSet> modules_avoiding(const Graph& g, const VertexSet& within, Vertex v) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Vertex> elems;
  elems.reserve(within.size());
  for (Vertex u : within)
    if (u != v) elems.push_back(u);
  if (elems.empty()) return {};

  struct Part {
    std::size_t begin, end;
  };
  std::vector<Part> parts{{0, elems.size()}};
  std::vector<std::size_t> pos(g.order(), kNone), part_of(g.order(), kNone);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    pos[elems[i]] = i;
    part_of[elems[i]] = 0;
  }

  std::deque<Vertex> queue;
  std::vector<bool> queued(g.order(), false);
  auto enqueue = [&](Vertex u) {
    if (!queued[u]) {
      queued[u] = true;
      queue.push_back(u);
    }
  };
  enqueue(v);
  for (Vertex u : elems) enqueue(u);

  std::vector<std::size_t> marked;  // per part: size of the front (adjacent) block
  std::vector<std::size_t> touched;
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop_front();
    queued[w] = false;
    marked.resize(parts.size(), 0);
    touched.clear();
    for (Vertex u : g.neighbors(w) & within) {
      std::size_t p = part_of[u];
      if (p == kNone || p == part_of[w]) continue;
      if (marked[p] == 0) touched.push_back(p);
      std::size_t slot = parts[p].begin + marked[p]++;
      Vertex other = elems[slot];
      std::swap(elems[slot], elems[pos[u]]);
      pos[other] = pos[u];
      pos[u] = slot;
    }
    for (std::size_t p : touched) {
      const std::size_t split = parts[p].begin + marked[p];
      marked[p] = 0;
      if (split == parts[p].end) continue;
      const std::size_t q = parts.size();
      parts.push_back({parts[p].begin, split});
      marked.push_back(0);
      parts[p].begin = split;
      for (std::size_t i = parts[q].begin; i < parts[q].end; ++i) part_of[elems[i]] = q;
      for (std::size_t i = parts[q].begin; i < parts[p].end; ++i) enqueue(elems[i]);
    }
  }

  std::vector<VertexSet> out;
  out.reserve(parts.size());
  for (const Part& p : parts) {
    VertexSet s(g.order());
    for (std::size_t i = p.begin; i < p.end; ++i) s.insert(elems[i]);
    out.push_back(std::move(s));
  }
  return out;
}

/// Maximal strong modules of G[within] when G[within] and its complement
/// are both connected: the modules avoiding a pivot, except those that
/// merge with the pivot into a proper module.
inline std::vector<VertexSet> maximal_strong_modules_prime(const Graph& g, const VertexSet& within) {
  const Vertex v = within.front();
  std::vector<VertexSet> avoiding = modules_avoiding(g, within, v);
  VertexSet with_pivot(g.order());
  with_pivot.insert(v);
  std::vector<VertexSet> out;
  for (VertexSet& part : avoiding) {
    VertexSet seed(g.order(), {v, part.front()});
    if (module_closure(g, within, seed).size() != within.size())
      with_pivot |= part;
    else
      out.push_back(std::move(part));
  }
  out.push_back(std::move(with_pivot));
  std::sort(out.begin(), out.end());
  return out;
}

inline MDNode decompose_within(const Graph& g, const VertexSet& within) {
  MDNode node;
  node.module = within;
  if (within.size() == 1) return node;

  std::vector<VertexSet> parts = connected_components(g, within);
  if (parts.size() > 1) {
    node.kind = NodeKind::kParallel;
  } else {
    parts = co_components(g, within);
    if (parts.size() > 1) {
      node.kind = NodeKind::kSeries;
    } else {
      node.kind = NodeKind::kNeighborhood;
      parts = maximal_strong_modules_prime(g, within);
      std::vector<Vertex> reps;
      for (const VertexSet& p : parts) reps.push_back(p.front());
      node.quotient = induced_subgraph(g, reps).graph;
    }
  }
  std::sort(parts.begin(), parts.end());
  node.children.reserve(parts.size());
  for (const VertexSet& p : parts) node.children.push_back(decompose_within(g, p));
  return node;
}

}  // namespace detail

/// Maximal strong modules of a graph that is connected with a connected
/// complement, sorted by smallest member.
inline std::vector<VertexSet> maximal_strong_modules(const Graph& g) {
  if (g.order() < 2)
    throw Error(ErrorCode::kNotPrimeContext, "need at least two vertices");
  const VertexSet all = g.vertices();
  if (connected_components(g, all).size() != 1)
    throw Error(ErrorCode::kNotPrimeContext, "graph is disconnected");
  if (co_components(g, all).size() != 1)
    throw Error(ErrorCode::kNotPrimeContext, "complement is disconnected");
  return detail::maximal_strong_modules_prime(g, all);
}

/// A graph is prime when all of its modules are trivial.
inline bool is_prime(const Graph& g) {
  if (g.order() <= 2) return true;
  const VertexSet all = g.vertices();
  if (connected_components(g, all).size() != 1 || co_components(g, all).size() != 1) return false;
  return detail::maximal_strong_modules_prime(g, all).size() == g.order();
}

inline MDTree decompose(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, "cannot decompose the empty graph");
  return {detail::decompose_within(g, g.vertices()), g};
}

/// Graph with one vertex per part; parts adjacent iff their members are.
inline Graph quotient_of(const Graph& g, std::span<const VertexSet> parts) {
  VertexSet seen(g.order());
  std::size_t total = 0;
  for (const VertexSet& p : parts) {
    if (p.empty()) throw Error(ErrorCode::kNotAPartition, "empty part");
    for (Vertex v : p) {
      if (v >= g.order()) throw Error(ErrorCode::kIndexOutOfRange, "vertex outside graph");
      if (seen.contains(v))
        throw Error(ErrorCode::kNotAPartition, "vertex " + std::to_string(v) + " in two parts");
      seen.insert(v);
      ++total;
    }
  }
  if (total != g.order()) throw Error(ErrorCode::kNotAPartition, "parts do not cover the graph");
  std::vector<Vertex> reps;
  for (const VertexSet& p : parts) {
    VertexSet s(g.order());
    for (Vertex v : p) s.insert(v);
    if (!is_module(g, s, g.vertices()))
      throw Error(ErrorCode::kNotAModule, "part starting at " + std::to_string(p.front()) +
                                              " is not a module");
    reps.push_back(p.front());
  }
  return induced_subgraph(g, reps).graph;
}

/// Checks every structural invariant of the tree against g. Returns a list
/// of human-readable violations; empty means valid.
inline std::vector<std::string> validate_tree(const Graph& g, const MDTree& t) {
  std::vector<std::string> out;
  if (!(t.host == g)) out.emplace_back("tree host differs from graph");
  VertexSet leaves(g.order());

  std::function<void(const MDNode&)> visit = [&](const MDNode& node) {
    const std::string where = "node at " + std::to_string(node.module.empty() ? 0 : node.module.front());
    if (node.module.universe() != g.order()) {
      out.push_back(where + ": module universe mismatch");
      return;
    }
    if (node.module.empty()) {
      out.push_back(where + ": empty module");
      return;
    }
    if (node.kind == NodeKind::kLeaf) {
      if (node.module.size() != 1) out.push_back(where + ": leaf with non-singleton module");
      if (!node.children.empty()) out.push_back(where + ": leaf with children");
      if (leaves.contains(node.module.front()))
        out.push_back(where + ": vertex appears in two leaves");
      leaves.insert(node.module.front());
      return;
    }
    if (node.children.size() < 2) out.push_back(where + ": internal node with fewer than two children");

    VertexSet cover(g.order());
    bool partition = true;
    for (const MDNode& c : node.children) {
      if (c.module.universe() != g.order() || c.module.intersects(cover)) partition = false;
      if (c.module.universe() == g.order()) cover |= c.module;
    }
    if (!partition || !(cover == node.module)) out.push_back(where + ": not a partition");
    for (std::size_t i = 0; i + 1 < node.children.size(); ++i)
      if (!(node.children[i].module < node.children[i + 1].module))
        out.push_back(where + ": children not ordered by smallest vertex");
    for (const MDNode& c : node.children)
      if (c.module.universe() == g.order() && !is_module(g, c.module, g.vertices()))
        out.push_back(where + ": child at " + std::to_string(c.module.front()) + " is not a module");

    const bool connected = connected_components(g, node.module).size() == 1;
    const bool co_connected = co_components(g, node.module).size() == 1;
    switch (node.kind) {
      case NodeKind::kParallel: {
        if (connected) out.push_back(where + ": parallel node on connected module");
        for (const MDNode& c : node.children)
          if (c.module.universe() == g.order() && connected_components(g, c.module).size() != 1)
            out.push_back(where + ": parallel child is not a component");
        break;
      }
      case NodeKind::kSeries: {
        if (co_connected) out.push_back(where + ": series node with connected complement");
        for (const MDNode& c : node.children)
          if (c.module.universe() == g.order() && co_components(g, c.module).size() != 1)
            out.push_back(where + ": series child is not a co-component");
        break;
      }
      case NodeKind::kNeighborhood: {
        if (!connected || !co_connected)
          out.push_back(where + ": neighborhood node on disconnected module or complement");
        if (node.quotient.order() != node.children.size()) {
          out.push_back(where + ": quotient order differs from child count");
        } else {
          for (std::size_t i = 0; i < node.children.size(); ++i)
            for (std::size_t j = i + 1; j < node.children.size(); ++j)
              if (node.quotient.adjacent(i, j) !=
                  g.adjacent(node.children[i].representative(), node.children[j].representative()))
                out.push_back(where + ": quotient edge mismatch");
          if (!is_prime(node.quotient)) out.push_back(where + ": quotient not prime");
        }
        break;
      }
      case NodeKind::kLeaf: break;
    }
    if (node.kind != NodeKind::kNeighborhood && node.quotient.order() != 0)
      out.push_back(where + ": quotient on a non-neighborhood node");
    for (const MDNode& c : node.children) visit(c);
  };

  visit(t.root);
  if (!(t.root.module == g.vertices())) out.emplace_back("root module is not the vertex set");
  if (!(leaves == g.vertices())) out.emplace_back("leaf set differs from vertex set");
  return out;
}

/// Rebuilds the host graph from the tree alone: leaves are K1, parallel
/// nodes are disjoint unions, series nodes joins, and neighborhood nodes
/// substitute their children into the quotient.
inline Graph reconstruct(const MDTree& t) {
  // Returns the subgraph for `node` with vertex i standing for labels[i].
  std::function<std::pair<Graph, std::vector<Vertex>>(const MDNode&)> build =
      [&](const MDNode& node) -> std::pair<Graph, std::vector<Vertex>> {
    if (node.kind == NodeKind::kLeaf) return {Graph(1), {node.module.front()}};
    std::vector<Graph> parts;
    std::vector<Vertex> labels;
    for (const MDNode& c : node.children) {
      auto [sub, lab] = build(c);
      parts.push_back(std::move(sub));
      labels.insert(labels.end(), lab.begin(), lab.end());
    }
    Graph shape(parts.size());
    if (node.kind == NodeKind::kSeries) {
      GraphBuilder b(parts.size());
      b.make_clique(VertexSet::full(parts.size()));
      shape = std::move(b).build();
    } else if (node.kind == NodeKind::kNeighborhood) {
      shape = node.quotient;
    }
    return {substitute(shape, parts), std::move(labels)};
  };
  auto [g, labels] = build(t.root);
  return relabel(g, labels);
}

/// Visits nodes children-first, left to right.
template <typename Fn>
void for_each_postorder(const MDNode& node, Fn&& fn) {
  for (const MDNode& c : node.children) for_each_postorder(c, fn);
  fn(node);
}

}  // namespace grundy
