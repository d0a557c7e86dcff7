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
#include <bit>
#include <cstddef>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph.hpp"
#include "grundy/grundy.hpp"
#include "grundy/recognition.hpp"

namespace grundy {

/// Every P5-like weighting with entries in [1, max_gamma], with the exact
/// Grundy number of the matching clique substitution.
struct DerivationSample {
  std::array<unsigned, 5> gammas;
  unsigned oracle;
};

inline std::vector<DerivationSample> derivation_samples(P5Shape shape, unsigned max_gamma) {
  const Graph h = canonical_shape(shape);
  std::vector<DerivationSample> out;
  std::array<unsigned, 5> g;
  g.fill(1);
  while (true) {
    std::vector<Graph> modules;
    for (unsigned x : g) modules.push_back(complete_graph(x));
    out.push_back({g, grundy_exact(substitute(h, modules), {40, true}).value});
    int i = 0;
    while (i < 5 && g[i] == max_gamma) g[i++] = 1;
    if (i == 5) break;
    ++g[i];
  }
  return out;
}

/// Candidate expressions: the sum over a connected set of quotient
/// vertices, optionally plus the minimum of two vertices outside it.
inline std::vector<CaseTerm> candidate_terms(const Graph& h) {
  std::vector<CaseTerm> out;
  for (unsigned mask = 1; mask < 32; ++mask) {
    VertexSet s(5);
    for (Vertex v = 0; v < 5; ++v)
      if (mask >> v & 1U) s.insert(v);
    if (connected_components(h, s).size() != 1) continue;
    out.push_back({static_cast<std::uint8_t>(mask)});
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        if (!(mask >> a & 1U) && !(mask >> b & 1U))
          out.push_back({static_cast<std::uint8_t>(mask), static_cast<std::int8_t>(a),
                         static_cast<std::int8_t>(b)});
  }
  return out;
}

/// Greedy minimal cover: keep only candidates that never exceed the oracle,
/// then repeatedly take the one matching the oracle on the most samples not
/// yet explained. Ties go to the candidate with fewer summands, then to the
/// smaller term. Returns nullopt if the candidates cannot explain every
/// sample.
inline std::optional<CaseTable> derive_case_table(P5Shape shape, unsigned max_gamma) {
  const std::vector<DerivationSample> samples = derivation_samples(shape, max_gamma);
  std::vector<CaseTerm> sound;
  for (const CaseTerm& t : candidate_terms(canonical_shape(shape))) {
    const bool ok = std::all_of(samples.begin(), samples.end(), [&](const DerivationSample& s) {
      return t.evaluate(s.gammas) <= s.oracle;
    });
    if (ok) sound.push_back(t);
  }
  auto weight = [](const CaseTerm& t) { return std::popcount(t.sum_mask) + (t.min_a >= 0 ? 1 : 0); };

  CaseTable table{shape, {}};
  std::vector<bool> explained(samples.size(), false);
  std::size_t remaining = samples.size();
  while (remaining > 0) {
    const CaseTerm* best = nullptr;
    std::size_t best_hits = 0;
    for (const CaseTerm& t : sound) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < samples.size(); ++i)
        if (!explained[i] && t.evaluate(samples[i].gammas) == samples[i].oracle) ++hits;
      if (hits == 0) continue;
      if (!best || hits > best_hits ||
          (hits == best_hits && (weight(t) < weight(*best) || (weight(t) == weight(*best) && t < *best)))) {
        best = &t;
        best_hits = hits;
      }
    }
    if (!best) return std::nullopt;
    table.terms.push_back(*best);
    for (std::size_t i = 0; i < samples.size(); ++i)
      if (!explained[i] && best->evaluate(samples[i].gammas) == samples[i].oracle) {
        explained[i] = true;
        --remaining;
      }
  }
  return table;
}

}  // namespace grundy
