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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grundy/error.hpp"

namespace grundy {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// A set of vertex indices over a fixed universe [0, universe).
///
/// Stored as a packed bit set so that neighbourhood intersections and
/// complements cost O(n / 64). Iteration yields members in increasing order.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, Vertex pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(Vertex v) {
    check(v);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    check(v);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Smallest member >= from, or universe() when there is none.
  Vertex next(Vertex from) const {
    if (from >= universe_) return universe_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return universe_;
      w = words_[wi];
    }
  }
  Vertex front() const { return next(0); }

  iterator begin() const { return iterator(this, next(0)); }
  iterator end() const { return iterator(this, universe_); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  std::size_t intersection_size(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement relative to the universe.
  VertexSet operator~() const {
    VertexSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Orders by smallest member first (lexicographic on sorted member lists).
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
      if (*ia != *ib) return *ia < *ib;
    return ia == a.end() && ib != b.end();
  }

 private:
  void check(Vertex v) const {
    if (v >= universe_)
      throw Error(ErrorCode::kIndexOutOfRange,
                  "vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(universe_));
  }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse into one.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = adj_[u].next(u + 1); v < n_; v = adj_[u].next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Mutable staging area for a Graph; consumed by build().
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}

  std::size_t order() const { return g_.n_; }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u >= g_.n_ || v >= g_.n_)
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") on graph of order " + std::to_string(g_.n_));
    if (u == v)
      throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    if (!g_.adj_[u].contains(v)) {
      g_.adj_[u].insert(v);
      g_.adj_[v].insert(u);
      ++g_.m_;
    }
    return *this;
  }
  bool has_edge(Vertex u, Vertex v) const { return g_.adj_.at(u).contains(v); }

  /// Joins every vertex of a to every vertex of b (a and b disjoint).
  GraphBuilder& join(const VertexSet& a, const VertexSet& b) {
    for (Vertex u : a)
      for (Vertex v : b) add_edge(u, v);
    return *this;
  }
  GraphBuilder& make_clique(const VertexSet& s) {
    for (Vertex u : s)
      for (Vertex v = s.next(u + 1); v < s.universe(); v = s.next(v + 1)) add_edge(u, v);
    return *this;
  }

  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Graph g_;
};

inline Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

/// Checks the simple-graph invariants (symmetry, no loops, in-range
/// neighbours). Returns a description of the first violation, or empty.
inline std::string validate_graph(const Graph& g) {
  std::size_t twice_m = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet& nv = g.neighbors(v);
    if (nv.universe() != g.order()) return "neighbourhood universe mismatch";
    if (nv.contains(v)) return "self-loop at " + std::to_string(v);
    for (Vertex u : nv) {
      if (!g.neighbors(u).contains(v))
        return "asymmetric edge " + std::to_string(v) + "->" + std::to_string(u);
      ++twice_m;
    }
  }
  if (twice_m != 2 * g.edge_count()) return "edge count mismatch";
  return {};
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

struct InducedSubgraph {
  Graph graph;
  /// index_map[i] is the host vertex behind subgraph vertex i.
  std::vector<Vertex> index_map;
};

/// G[S]: vertices renumbered 0..|S|-1 in increasing host order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> members = s.to_vector();
  for (Vertex v : members)
    if (v >= g.order())
      throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
  GraphBuilder b(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) b.add_edge(i, j);
  return {std::move(b).build(), std::move(members)};
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
  VertexSet s(g.order());
  for (Vertex v : members) {
    if (v >= g.order())
      throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
    s.insert(v);
  }
  return induced_subgraph(g, s);
}

/// Replaces quotient vertex i by modules[i]. Module i occupies a contiguous
/// index block, blocks laid out in quotient order.
inline Graph substitute(const Graph& quotient, std::span<const Graph> modules) {
  if (modules.size() != quotient.order())
    throw Error(ErrorCode::kArityMismatch,
                std::to_string(modules.size()) + " modules for quotient of order " +
                    std::to_string(quotient.order()));
  std::vector<std::size_t> offset(modules.size() + 1, 0);
  for (std::size_t i = 0; i < modules.size(); ++i) {
    if (modules[i].order() == 0)
      throw Error(ErrorCode::kEmptyModule, "module " + std::to_string(i) + " is empty");
    offset[i + 1] = offset[i] + modules[i].order();
  }
  GraphBuilder b(offset.back());
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (auto [u, v] : modules[i].edges()) b.add_edge(offset[i] + u, offset[i] + v);
  for (auto [i, j] : quotient.edges())
    for (std::size_t u = offset[i]; u < offset[i + 1]; ++u)
      for (std::size_t v = offset[j]; v < offset[j + 1]; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph substitute(const Graph& quotient, std::initializer_list<Graph> modules) {
  return substitute(quotient, std::span<const Graph>(modules.begin(), modules.size()));
}

/// Components of G[within], each as a vertex set over the host universe,
/// ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> parts;
  VertexSet unseen = within;
  std::vector<Vertex> stack;
  while (!unseen.empty()) {
    Vertex root = unseen.front();
    VertexSet comp(g.order());
    comp.insert(root);
    unseen.erase(root);
    stack.assign(1, root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      VertexSet fresh = g.neighbors(v) & unseen;
      for (Vertex u : fresh) {
        comp.insert(u);
        stack.push_back(u);
      }
      unseen -= fresh;
    }
    parts.push_back(std::move(comp));
  }
  return parts;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

/// Components of the complement of G[within], without materialising it.
inline std::vector<VertexSet> co_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> parts;
  VertexSet unseen = within;
  std::vector<Vertex> stack;
  while (!unseen.empty()) {
    Vertex root = unseen.front();
    VertexSet comp(g.order());
    comp.insert(root);
    unseen.erase(root);
    stack.assign(1, root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      VertexSet fresh = unseen - g.neighbors(v);
      for (Vertex u : fresh) {
        comp.insert(u);
        stack.push_back(u);
      }
      unseen -= fresh;
    }
    parts.push_back(std::move(comp));
  }
  return parts;
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

/// Applies a relabelling: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order())
    throw Error(ErrorCode::kArityMismatch, "permutation length differs from graph order");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

/// Disjoint union; b's vertices follow a's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return std::move(out).build();
}

/// Join: disjoint union plus every edge between a and b.
inline Graph join(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  return std::move(out).build();
}

}  // namespace grundy
