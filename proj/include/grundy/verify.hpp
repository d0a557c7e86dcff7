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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph.hpp"
#include "grundy/grundy.hpp"
#include "grundy/io.hpp"
#include "grundy/modular_decomposition.hpp"
#include "grundy/recognition.hpp"

namespace grundy {

/// Calls fn(g) for each of the 2^(n choose 2) labelled graphs on n vertices.
template <typename Fn>
void for_each_labeled_graph(std::size_t n, Fn&& fn) {
  std::vector<Edge> slots;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) slots.push_back({u, v});
  const std::uint64_t count = std::uint64_t{1} << slots.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1U) edges.push_back(slots[i]);
    fn(Graph::from_edges(n, edges));
  }
}

struct VerifySummary {
  std::size_t graphs = 0;
  std::size_t in_class = 0;
  std::size_t tree_violations = 0;
  std::vector<std::string> mismatches;  // graph6 plus both values

  bool ok() const { return mismatches.empty() && tree_violations == 0; }

  void merge(const VerifySummary& o) {
    graphs += o.graphs;
    in_class += o.in_class;
    tree_violations += o.tree_violations;
    mismatches.insert(mismatches.end(), o.mismatches.begin(), o.mismatches.end());
  }
};

/// Validates the decomposition of g and, when g is in the class, compares
/// the polynomial value with the exact oracle.
inline void verify_one(const Graph& g, VerifySummary& out) {
  ++out.graphs;
  if (g.order() == 0) return;
  if (!validate_tree(g, decompose(g)).empty()) ++out.tree_violations;
  if (!recognize(g).fat_extended_p4_laden) return;
  ++out.in_class;
  const unsigned poly = grundy_number(g);
  const unsigned exact = grundy_exact(g, {40, true}).value;
  if (poly != exact)
    out.mismatches.push_back(encode_graph6(g) + " poly=" + std::to_string(poly) +
                             " exact=" + std::to_string(exact));
}

inline VerifySummary verify_exhaustive(std::size_t max_n) {
  if (max_n > 7) throw Error(ErrorCode::kSizeLimitExceeded, "exhaustive verification is limited to n <= 7");
  VerifySummary s;
  for (std::size_t n = 1; n <= max_n; ++n) for_each_labeled_graph(n, [&](const Graph& g) { verify_one(g, s); });
  return s;
}

/// Sample i uses seed + i and cycles through G(n, p) at several densities,
/// random split graphs, random cographs and random in-class graphs.
inline Graph random_mixed_graph(std::size_t n, std::uint64_t seed) {
  switch (seed % 6) {
    case 0: return random_graph(n, 0.3, seed);
    case 1: return random_graph(n, 0.5, seed);
    case 2: return random_graph(n, 0.7, seed);
    case 3: return random_split_graph(n, seed);
    case 4: return random_cograph(n, seed);
    default: return random_fat_extended(n, seed);
  }
}

inline VerifySummary verify_random(std::size_t n, std::size_t samples, std::uint64_t seed) {
  if (n > 16) throw Error(ErrorCode::kSizeLimitExceeded, "random verification is limited to n <= 16");
  VerifySummary s;
  for (std::size_t i = 0; i < samples; ++i) verify_one(random_mixed_graph(n, seed + i), s);
  return s;
}

}  // namespace grundy
