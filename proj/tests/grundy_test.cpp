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

#include "grundy/grundy.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "grundy/generators.hpp"
#include "grundy/verify.hpp"

namespace grundy {
namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidParam;
}

unsigned exact(const Graph& g) { return grundy_exact(g, {40, true}).value; }

TEST(GrundyNumber, Examples) {
  EXPECT_EQ(grundy_number(complete_graph(4)), 4u);
  EXPECT_EQ(grundy_number(path_graph(4)), 3u);
  EXPECT_EQ(grundy_number(generate("spider:thin:3", 0)), 4u);
  EXPECT_EQ(grundy_number(Graph(1)), 1u);
  EXPECT_EQ(grundy_number(empty_graph(6)), 1u);
}

TEST(GrundyNumber, Errors) {
  EXPECT_EQ(code_of([] { grundy_number(Graph(0)); }), ErrorCode::kEmptyGraph);
  EXPECT_EQ(code_of([] { grundy_poly(Graph(0)); }), ErrorCode::kEmptyGraph);
  // C6 inside a join: the failing module is the C6, not the whole graph.
  const Graph g = join(cycle_graph(6), complete_graph(2));
  try {
    grundy_number(g);
    FAIL();
  } catch (const NotInClassError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInClass);
    EXPECT_EQ(e.module().to_vector(), (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
    EXPECT_NE(std::string(e.what()).find("{0,1,2,3,4,5}"), std::string::npos);
  }
}

TEST(CombineParallel, Examples) {
  EXPECT_EQ(combine_parallel(std::vector<unsigned>{3, 1, 2}), 3u);
  EXPECT_EQ(combine_parallel(std::vector<unsigned>{1}), 1u);
  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(combine_parallel(std::vector<unsigned>{2, 2}), exact(two_k2));
  EXPECT_EQ(code_of([] { combine_parallel({}); }), ErrorCode::kEmptyChildren);
}

TEST(CombineSeries, Examples) {
  EXPECT_EQ(combine_series(std::vector<unsigned>{1, 1, 1}), 3u);
  EXPECT_EQ(combine_series(std::vector<unsigned>{3, 3}), exact(join(path_graph(4), path_graph(4))));
  EXPECT_EQ(combine_series(std::vector<unsigned>{5}), 5u);
  EXPECT_EQ(code_of([] { combine_series({}); }), ErrorCode::kEmptyChildren);
}

TEST(CombineRules, Monotonicity) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<unsigned> v(2 + rng() % 5);
    for (unsigned& x : v) x = 1 + rng() % 9;
    const unsigned s = combine_series(v);
    for (unsigned x : v) EXPECT_GT(s, x);
    EXPECT_NE(std::find(v.begin(), v.end(), combine_parallel(v)), v.end());
  }
}

TEST(GrundyP5Like, Examples) {
  const std::array<unsigned, 5> ones{1, 1, 1, 1, 1};
  EXPECT_EQ(grundy_p5_like(P5Shape::kP5, ones), 3u);
  EXPECT_EQ(grundy_p5_like(P5Shape::kP5, ones), exact(path_graph(5)));
  EXPECT_EQ(grundy_p5_like(P5Shape::kC5, ones), 3u);
  EXPECT_EQ(grundy_p5_like(P5Shape::kC5, ones), exact(cycle_graph(5)));

  const std::array<unsigned, 5> first_doubled{2, 1, 1, 1, 1};
  const Graph six = substitute(path_graph(5), {complete_graph(2), Graph(1), Graph(1), Graph(1), Graph(1)});
  EXPECT_EQ(grundy_p5_like(P5Shape::kP5, first_doubled), 3u);
  EXPECT_EQ(exact(six), 3u);
}

TEST(GrundyP5Like, EndPairsAreInTheTable) {
  const auto& terms = case_table(P5Shape::kP5).terms;
  auto has = [&](std::uint8_t mask) {
    return std::any_of(terms.begin(), terms.end(),
                       [&](const CaseTerm& t) { return t.sum_mask == mask && t.min_a < 0; });
  };
  EXPECT_TRUE(has(0b00011));
  EXPECT_TRUE(has(0b11000));
  // The end-pair term dominates when the first module is large.
  const std::array<unsigned, 5> big_end{6, 2, 1, 1, 1};
  EXPECT_EQ(grundy_p5_like(P5Shape::kP5, big_end), 8u);
}

TEST(GrundyP5Like, Errors) {
  const std::array<unsigned, 5> ones{1, 1, 1, 1, 1};
  EXPECT_EQ(code_of([&] { grundy_p5_like(static_cast<P5Shape>(7), ones); }), ErrorCode::kBadShape);
  const std::array<unsigned, 4> four{1, 1, 1, 1};
  EXPECT_EQ(code_of([&] { grundy_p5_like(P5Shape::kC5, four); }), ErrorCode::kWrongArity);
}

TEST(GrundyP5Like, MatchUsesCanonicalPositions) {
  // The P5 relabelled so that path order is 2-4-0-3-1.
  const std::vector<Vertex> perm{2, 4, 0, 3, 1};
  const Graph h = relabel(path_graph(5), perm);
  const auto m = match_p5_like(h);
  ASSERT_TRUE(m);
  std::array<unsigned, 5> by_vertex{};
  const std::array<unsigned, 5> canon{4, 1, 1, 1, 1};
  for (int i = 0; i < 5; ++i) by_vertex[m->position[i]] = canon[i];
  EXPECT_EQ(grundy_p5_like(*m, by_vertex), grundy_p5_like(m->shape, canon));
}

TEST(GrundySpiderNode, Examples) {
  EXPECT_EQ(grundy_spider_node(SpiderNodeData{{1, 1}, {1, 1}, std::nullopt}), 3u);
  EXPECT_EQ(grundy_spider_node(SpiderNodeData{{1, 1, 1}, {1, 1, 1}, std::nullopt}), 4u);
  EXPECT_EQ(exact(spider_graph(3, true)), 4u);

  const Graph with_head = spider_graph(3, false, complete_graph(2));
  EXPECT_EQ(grundy_spider_node(SpiderNodeData{{1, 1, 1}, {1, 1, 1}, 2u}), exact(with_head));
  EXPECT_EQ(grundy_number(with_head), exact(with_head));
}

TEST(GrundySpiderNode, TwoVertexModuleOnTheLegs) {
  // P4 with one end doubled into K2: the doubled end adds nothing.
  const Graph g = substitute(path_graph(4), {complete_graph(2), Graph(1), Graph(1), Graph(1)});
  EXPECT_EQ(exact(g), 3u);
  EXPECT_EQ(grundy_spider_node(SpiderNodeData{{2, 1}, {1, 1}, std::nullopt}), 3u);
  EXPECT_EQ(grundy_number(g), 3u);
}

TEST(GrundySpiderNode, Errors) {
  EXPECT_EQ(code_of([] { grundy_spider_node(SpiderNodeData{{1}, {1}, std::nullopt}); }),
            ErrorCode::kNotSpiderNode);
  EXPECT_EQ(code_of([] { grundy_spider_node(SpiderNodeData{{1, 1}, {1, 1, 1}, std::nullopt}); }),
            ErrorCode::kNotSpiderNode);
  NeighborhoodKind p5;
  p5.tag = NeighborhoodTag::kP5Like;
  EXPECT_EQ(code_of([&] { grundy_spider_node(p5, std::vector<unsigned>(5, 1)); }), ErrorCode::kNotSpiderNode);
}

TEST(GrundySplitNode, Examples) {
  // Stable pair joined to an edge.
  const Graph g = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(exact(g), 3u);
  EXPECT_EQ(grundy_split_node(SplitNodeData{{1}, {2}, std::nullopt}), 3u);
  EXPECT_EQ(grundy_split_node(SplitNodeData{{1, 1}, {1, 1}, std::nullopt}), 3u);
  EXPECT_EQ(grundy_split_node(SplitNodeData{{}, {2, 3}, std::nullopt}), 5u);
  EXPECT_EQ(grundy_split_node(SplitNodeData{{1, 1}, {1, 2}, 4u}), 7u);
}

TEST(GrundySplitNode, Errors) {
  EXPECT_EQ(code_of([] { grundy_split_node(SplitNodeData{}); }), ErrorCode::kNotSplitNode);
  NeighborhoodKind spider;
  spider.tag = NeighborhoodTag::kSpider;
  EXPECT_EQ(code_of([&] { grundy_split_node(spider, std::vector<unsigned>(4, 1)); }), ErrorCode::kNotSplitNode);
}

TEST(GrundySplitNode, PrimeSplitQuotientsMatchOracle) {
  std::size_t seen = 0;
  for (std::uint64_t seed = 0; seen < 150 && seed < 5000; ++seed) {
    const Graph g = random_fat_extended(8 + seed % 7, seed, 4);
    const PolyResult r = grundy_poly(g);
    if (std::none_of(r.trace.begin(), r.trace.end(),
                     [](const TraceStep& s) { return s.rule == Rule::kSplitQuotient; }))
      continue;
    ++seen;
    EXPECT_EQ(r.value, exact(g)) << encode_graph6(g);
  }
  EXPECT_EQ(seen, 150u);
}

TEST(GrundyPoly, TraceIsPostorderAndDeterministic) {
  const Graph g = random_fat_extended(30, 17);
  const PolyResult a = grundy_poly(g);
  const PolyResult b = grundy_poly(g);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].module, b.trace[i].module);
    EXPECT_EQ(a.trace[i].rule, b.trace[i].rule);
    EXPECT_EQ(a.trace[i].gamma, b.trace[i].gamma);
  }
  EXPECT_EQ(a.trace.back().module, g.vertices());
  EXPECT_EQ(a.trace.back().gamma, a.value);
  EXPECT_EQ(a.value, grundy_number(g));
  std::size_t leaves = 0;
  for (const TraceStep& s : a.trace) leaves += s.rule == Rule::kLeaf;
  EXPECT_EQ(leaves, g.order());
}

TEST(GrundyNumber, BetweenChromaticAndMaxDegree) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = random_fat_extended(1 + seed % 12, seed);
    const unsigned gamma = grundy_number(g);
    EXPECT_LE(chromatic_exact(g), gamma);
    EXPECT_LE(gamma, g.max_degree() + 1);
  }
}

TEST(GrundyNumber, MatchesOracleOnRandomInClassGraphs) {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const Graph g = random_fat_extended(1 + seed % 16, seed);
    EXPECT_EQ(grundy_number(g), exact(g)) << encode_graph6(g);
  }
}

TEST(CaseTableAudit, CliquesOnly) {
  const AuditReport two = case_table_audit({2, 1, 0, 1});
  EXPECT_EQ(two.clique_instances, 3u * 32u);
  EXPECT_TRUE(two.ok());
  const AuditReport three = case_table_audit({3, 1, 0, 1});
  EXPECT_EQ(three.clique_instances, 3u * 243u);
  EXPECT_TRUE(three.ok());
}

TEST(CaseTableAudit, RandomModules) {
  const AuditReport r = case_table_audit({1, 3, 200, 42});
  EXPECT_EQ(r.random_instances, 200u);
  EXPECT_TRUE(r.ok());
}

TEST(CaseTableAudit, Limits) {
  EXPECT_EQ(code_of([] { case_table_audit({5, 3, 0, 1}); }), ErrorCode::kSizeLimitExceeded);
  EXPECT_EQ(code_of([] { case_table_audit({0, 3, 0, 1}); }), ErrorCode::kInvalidParam);
}

TEST(Substitution, ColoursInsideAModuleNeverExceedItsGrundyNumber) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph q = random_fat_extended(2 + rng() % 4, rng());
    std::vector<Graph> modules;
    for (Vertex v = 0; v < q.order(); ++v) modules.push_back(random_graph(1 + rng() % 4, 0.5, rng()));
    const Graph g = substitute(q, modules);
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    const Coloring c = greedy_color(g, order);
    std::size_t offset = 0;
    for (const Graph& m : modules) {
      std::vector<Color> inside(c.colors.begin() + offset, c.colors.begin() + offset + m.order());
      std::sort(inside.begin(), inside.end());
      const auto distinct = std::unique(inside.begin(), inside.end()) - inside.begin();
      EXPECT_LE(static_cast<unsigned>(distinct), exact(m));
      offset += m.order();
    }
  }
}

}  // namespace
}  // namespace grundy
