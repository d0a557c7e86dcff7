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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grundy/coloring.hpp"
#include "grundy/error.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph.hpp"
#include "grundy/io.hpp"
#include "grundy/modular_decomposition.hpp"
#include "grundy/recognition.hpp"

namespace grundy {

// ---------------------------------------------------------------------------
// Parallel and series nodes

inline unsigned combine_parallel(std::span<const unsigned> child_gammas) {
  if (child_gammas.empty()) throw Error(ErrorCode::kEmptyChildren, "parallel node without children");
  return *std::max_element(child_gammas.begin(), child_gammas.end());
}

inline unsigned combine_series(std::span<const unsigned> child_gammas) {
  if (child_gammas.empty()) throw Error(ErrorCode::kEmptyChildren, "series node without children");
  return std::accumulate(child_gammas.begin(), child_gammas.end(), 0U);
}

// ---------------------------------------------------------------------------
// P5, C5 and P5-complement quotients

/// One candidate expression: the sum of the gammas at the positions in
/// `sum_mask`, plus min(gamma[min_a], gamma[min_b]) when min_a >= 0.
struct CaseTerm {
  std::uint8_t sum_mask = 0;
  std::int8_t min_a = -1;
  std::int8_t min_b = -1;

  unsigned evaluate(std::span<const unsigned, 5> gamma) const {
    unsigned total = 0;
    for (int i = 0; i < 5; ++i)
      if (sum_mask >> i & 1U) total += gamma[i];
    if (min_a >= 0) total += std::min(gamma[min_a], gamma[min_b]);
    return total;
  }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < 5; ++i)
      if (sum_mask >> i & 1U) out += (out.empty() ? "g" : " + g") + std::to_string(i);
    if (min_a >= 0)
      out += " + min(g" + std::to_string(min_a) + ", g" + std::to_string(min_b) + ")";
    return out;
  }

  friend bool operator==(const CaseTerm&, const CaseTerm&) = default;
  friend auto operator<=>(const CaseTerm&, const CaseTerm&) = default;
};

/// The value of a substitution into a P5-like quotient is the maximum of
/// its terms. Positions follow the canonical labelling of canonical_shape().
struct CaseTable {
  P5Shape shape;
  std::vector<CaseTerm> terms;

  unsigned evaluate(std::span<const unsigned, 5> gamma) const {
    unsigned best = 0;
    for (const CaseTerm& t : terms) best = std::max(best, t.evaluate(gamma));
    return best;
  }
};

namespace detail {

constexpr std::uint8_t bits(std::initializer_list<int> positions) {
  std::uint8_t m = 0;
  for (int p : positions) m |= static_cast<std::uint8_t>(1U << p);
  return m;
}

}  // namespace detail

/// Frozen tables, regenerated by tools/derive_case_tables. Each term is either
/// a maximal clique of the quotient or an induced path x-u-v-y contributing
/// gamma[u] + gamma[v] + min(gamma[x], gamma[y]).
inline const CaseTable& case_table(P5Shape shape) {
  using detail::bits;
  static const CaseTable p5{P5Shape::kP5,
                            {{bits({0, 1})},
                             {bits({3, 4})},
                             {bits({1, 2}), 0, 3},
                             {bits({2, 3}), 1, 4}}};
  static const CaseTable c5{P5Shape::kC5,
                            {{bits({0, 1}), 2, 4},
                             {bits({1, 2}), 0, 3},
                             {bits({2, 3}), 1, 4},
                             {bits({3, 4}), 0, 2},
                             {bits({0, 4}), 1, 3}}};
  static const CaseTable p5c{P5Shape::kP5Complement,
                             {{bits({0, 2, 4})},
                              {bits({1, 3})},
                              {bits({0, 3}), 1, 2},
                              {bits({1, 4}), 2, 3}}};
  switch (shape) {
    case P5Shape::kP5: return p5;
    case P5Shape::kC5: return c5;
    case P5Shape::kP5Complement: return p5c;
  }
  throw Error(ErrorCode::kBadShape, "unknown quotient shape " + std::to_string(static_cast<int>(shape)));
}

/// gammas are given in canonical position order.
inline unsigned grundy_p5_like(P5Shape shape, std::span<const unsigned> gammas) {
  const CaseTable& table = case_table(shape);
  if (gammas.size() != 5)
    throw Error(ErrorCode::kWrongArity, "P5-like quotient needs 5 child values, got " +
                                            std::to_string(gammas.size()));
  return table.evaluate(std::span<const unsigned, 5>(gammas.data(), 5));
}

/// child_gammas indexed by quotient vertex; the match maps them to canonical
/// positions.
inline unsigned grundy_p5_like(const ShapeMatch& match, std::span<const unsigned> child_gammas) {
  if (child_gammas.size() != 5)
    throw Error(ErrorCode::kWrongArity, "P5-like quotient needs 5 child values, got " +
                                            std::to_string(child_gammas.size()));
  std::array<unsigned, 5> canon{};
  for (int i = 0; i < 5; ++i) canon[i] = child_gammas[match.position[i]];
  return grundy_p5_like(match.shape, canon);
}

// ---------------------------------------------------------------------------
// Spider and split quotients

/// Grundy numbers of the modules placed on a spider quotient.
struct SpiderNodeData {
  std::vector<unsigned> leg_gammas;   // S side
  std::vector<unsigned> body_gammas;  // K side
  std::optional<unsigned> head_gamma; // R, when present
};

/// The body modules are pairwise joined and joined to R, so they contribute
/// their full sum. On top of that the best of the head and a single colour
/// reached through the legs.
inline unsigned grundy_spider_node(const SpiderNodeData& d) {
  if (d.body_gammas.size() < 2 || d.leg_gammas.size() != d.body_gammas.size())
    throw Error(ErrorCode::kNotSpiderNode,
                "spider needs k >= 2 legs and as many body modules (got " +
                    std::to_string(d.leg_gammas.size()) + " and " +
                    std::to_string(d.body_gammas.size()) + ")");
  const unsigned body = std::accumulate(d.body_gammas.begin(), d.body_gammas.end(), 0U);
  return body + d.head_gamma.value_or(1U);
}

inline unsigned grundy_spider_node(const NeighborhoodKind& kind, std::span<const unsigned> child_gammas) {
  if (kind.tag != NeighborhoodTag::kSpider || !kind.spider)
    throw Error(ErrorCode::kNotSpiderNode, "node is classified " + std::string(to_string(kind.tag)));
  const SpiderPartition& sp = *kind.spider;
  if (sp.head.size() > 1)
    throw Error(ErrorCode::kNotSpiderNode, "spider head spans several quotient vertices");
  SpiderNodeData d;
  for (Vertex q : sp.legs) d.leg_gammas.push_back(child_gammas[q]);
  for (Vertex q : sp.body) d.body_gammas.push_back(child_gammas[q]);
  if (!sp.head.empty()) d.head_gamma = child_gammas[sp.head.front()];
  return grundy_spider_node(d);
}

/// Grundy numbers of the modules placed on a split quotient, grouped by the
/// stable side, the clique vertices with a stable neighbour, and the clique
/// vertex without one.
struct SplitNodeData {
  std::vector<unsigned> stable_gammas;
  std::vector<unsigned> clique_gammas;
  std::optional<unsigned> rest_gamma;
};

inline unsigned grundy_split_node(const SplitNodeData& d) {
  if (d.stable_gammas.empty() && d.clique_gammas.empty() && !d.rest_gamma)
    throw Error(ErrorCode::kNotSplitNode, "split quotient without vertices");
  const unsigned clique = std::accumulate(d.clique_gammas.begin(), d.clique_gammas.end(), 0U);
  const unsigned stable_top = d.stable_gammas.empty() ? 0U : 1U;
  return clique + std::max(stable_top, d.rest_gamma.value_or(0U));
}

inline unsigned grundy_split_node(const NeighborhoodKind& kind, std::span<const unsigned> child_gammas) {
  if (kind.tag != NeighborhoodTag::kSplitQuotient || !kind.split)
    throw Error(ErrorCode::kNotSplitNode, "node is classified " + std::string(to_string(kind.tag)));
  const SplitQuotientParts& sp = *kind.split;
  if (sp.rest.size() > 1)
    throw Error(ErrorCode::kNotSplitNode, "split quotient has several clique vertices without stable neighbours");
  SplitNodeData d;
  for (Vertex q : sp.stable) d.stable_gammas.push_back(child_gammas[q]);
  for (Vertex q : sp.clique) d.clique_gammas.push_back(child_gammas[q]);
  if (!sp.rest.empty()) d.rest_gamma = child_gammas[sp.rest.front()];
  return grundy_split_node(d);
}

// ---------------------------------------------------------------------------
// Whole-graph algorithm

enum class Rule { kLeaf, kParallel, kSeries, kP5Like, kSpider, kSplitQuotient };

constexpr std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::kLeaf: return "leaf";
    case Rule::kParallel: return "parallel-max";
    case Rule::kSeries: return "series-sum";
    case Rule::kP5Like: return "p5-like";
    case Rule::kSpider: return "spider";
    case Rule::kSplitQuotient: return "split-quotient";
  }
  return "unknown";
}

/// One evaluated tree node, in postorder.
struct TraceStep {
  VertexSet module;
  Rule rule = Rule::kLeaf;
  unsigned gamma = 1;
  std::vector<unsigned> child_gammas;
  std::string detail;
};

struct PolyResult {
  unsigned value = 0;
  std::vector<TraceStep> trace;
};

class NotInClassError : public Error {
 public:
  NotInClassError(VertexSet module, const std::string& reason)
      : Error(ErrorCode::kNotInClass, "module " + describe(module) + ": " + reason),
        module_(std::move(module)),
        reason_(reason) {}

  const VertexSet& module() const noexcept { return module_; }
  const std::string& reason() const noexcept { return reason_; }

  static std::string describe(const VertexSet& s) {
    std::string out = "{";
    for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
  }

 private:
  VertexSet module_;
  std::string reason_;
};

namespace detail {

inline unsigned evaluate_node(const Graph& g, const MDNode& node, std::vector<TraceStep>* trace) {
  if (node.kind == NodeKind::kLeaf) {
    if (trace) trace->push_back({node.module, Rule::kLeaf, 1, {}, {}});
    return 1;
  }
  std::vector<unsigned> gammas;
  gammas.reserve(node.children.size());
  for (const MDNode& c : node.children) gammas.push_back(evaluate_node(g, c, trace));

  TraceStep step{node.module, Rule::kParallel, 0, gammas, {}};
  switch (node.kind) {
    case NodeKind::kParallel:
      step.gamma = combine_parallel(gammas);
      break;
    case NodeKind::kSeries:
      step.rule = Rule::kSeries;
      step.gamma = combine_series(gammas);
      break;
    default: {
      const NeighborhoodKind kind =
          classify_neighborhood_node(node, child_infos(g, node), ClassRules::kFatExtended);
      switch (kind.tag) {
        case NeighborhoodTag::kP5Like:
          step.rule = Rule::kP5Like;
          step.gamma = grundy_p5_like(*kind.shape, gammas);
          step.detail = std::string(to_string(kind.shape->shape));
          break;
        case NeighborhoodTag::kSpider:
          step.rule = Rule::kSpider;
          step.gamma = grundy_spider_node(kind, gammas);
          step.detail = std::string(to_string(kind.spider->flavor)) + " k=" +
                        std::to_string(kind.spider->legs.size()) +
                        (kind.spider->head.empty() ? "" : " with head");
          break;
        case NeighborhoodTag::kSplitQuotient:
          step.rule = Rule::kSplitQuotient;
          step.gamma = grundy_split_node(kind, gammas);
          step.detail = "|S|=" + std::to_string(kind.split->stable.size()) +
                        " |K|=" + std::to_string(kind.split->clique.size()) +
                        " |R|=" + std::to_string(kind.split->rest.size());
          break;
        case NeighborhoodTag::kNotInClass:
          throw NotInClassError(node.module, kind.reason);
      }
    }
  }
  const unsigned gamma = step.gamma;
  if (trace) trace->push_back(std::move(step));
  return gamma;
}

}  // namespace detail

/// Grundy number of a fat-extended P4-laden graph in polynomial time, with
/// the rule applied at every node of the modular decomposition tree.
inline PolyResult grundy_poly(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  PolyResult out;
  const MDTree tree = decompose(g);
  out.value = detail::evaluate_node(g, tree.root, &out.trace);
  return out;
}

inline unsigned grundy_number(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  const MDTree tree = decompose(g);
  return detail::evaluate_node(g, tree.root, nullptr);
}

// ---------------------------------------------------------------------------
// Case table audit

struct AuditMismatch {
  P5Shape shape;
  std::array<unsigned, 5> gammas;
  unsigned table = 0;
  unsigned oracle = 0;
  std::string graph6;  // the substituted graph
};

struct AuditReport {
  std::size_t clique_instances = 0;
  std::size_t random_instances = 0;
  std::vector<AuditMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

struct AuditOptions {
  unsigned max_gamma = 3;
  std::size_t max_module_size = 3;
  std::size_t random_instances = 200;
  std::uint64_t seed = 1;
};

/// Compares the frozen tables with the exact oracle on every clique
/// substitution with module sizes up to max_gamma, then on random in-class
/// modules of up to max_module_size vertices with at least one non-clique.
inline AuditReport case_table_audit(const AuditOptions& opt = {}) {
  constexpr std::size_t kMaxTotal = 24;
  if (opt.max_gamma == 0 || opt.max_module_size == 0)
    throw Error(ErrorCode::kInvalidParam, "audit bounds must be positive");
  if (5 * opt.max_gamma > kMaxTotal || 5 * opt.max_module_size > kMaxTotal)
    throw Error(ErrorCode::kSizeLimitExceeded,
                "audit substitutions would exceed " + std::to_string(kMaxTotal) + " vertices");
  const OracleLimits limits{kMaxTotal, true};
  AuditReport report;
  const std::array<P5Shape, 3> shapes{P5Shape::kP5, P5Shape::kC5, P5Shape::kP5Complement};

  auto check = [&](P5Shape shape, const std::array<unsigned, 5>& gammas, const Graph& g) {
    const unsigned table = grundy_p5_like(shape, gammas);
    const unsigned oracle = grundy_exact(g, limits).value;
    if (table != oracle) report.mismatches.push_back({shape, gammas, table, oracle, encode_graph6(g)});
  };

  for (P5Shape shape : shapes) {
    const Graph h = canonical_shape(shape);
    std::array<unsigned, 5> gammas;
    gammas.fill(1);
    while (true) {
      std::vector<Graph> modules;
      for (unsigned x : gammas) modules.push_back(complete_graph(x));
      check(shape, gammas, substitute(h, modules));
      ++report.clique_instances;
      int i = 0;
      while (i < 5 && gammas[i] == opt.max_gamma) gammas[i++] = 1;
      if (i == 5) break;
      ++gammas[i];
    }
  }

  Rng rng(opt.seed);
  while (report.random_instances < opt.random_instances) {
    const P5Shape shape = shapes[detail::uniform(rng, 0, 2)];
    std::vector<Graph> modules;
    std::array<unsigned, 5> gammas{};
    bool non_clique = false;
    for (int i = 0; i < 5; ++i) {
      const std::size_t size = detail::uniform(rng, 1, opt.max_module_size);
      Graph m = random_fat_extended(size, rng());
      non_clique |= m.edge_count() * 2 != size * (size - 1);
      gammas[i] = grundy_number(m);
      modules.push_back(std::move(m));
    }
    if (!non_clique) continue;
    check(shape, gammas, substitute(canonical_shape(shape), modules));
    ++report.random_instances;
  }
  return report;
}

}  // namespace grundy
