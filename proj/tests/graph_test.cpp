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

#include "grundy/graph.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "grundy/generators.hpp"

namespace grundy {
namespace {

Graph p4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}); }

TEST(VertexSet, BasicOperations) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(65));
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 64, 129}));
  s.erase(64);
  EXPECT_EQ(s.front(), 0u);
  EXPECT_EQ(s.next(1), 129u);

  const VertexSet all = VertexSet::full(130);
  EXPECT_EQ(all.size(), 130u);
  EXPECT_EQ((~s).size(), 128u);
  EXPECT_TRUE(s.is_subset_of(all));
  EXPECT_EQ((all - s).size(), 128u);
  EXPECT_EQ(s.intersection_size(all), 2u);
}

TEST(VertexSet, RejectsOutOfRange) {
  VertexSet s(4);
  EXPECT_THROW(s.insert(4), Error);
}

TEST(GraphFromEdges, PathOnFourVertices) {
  const Graph g = p4();
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(GraphFromEdges, EmptyEdgeList) {
  const Graph g = Graph::from_edges(3, {});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(GraphFromEdges, DuplicatesCollapse) {
  const Graph g = Graph::from_edges(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(GraphFromEdges, Errors) {
  try {
    Graph::from_edges(3, {{0, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
  try {
    Graph::from_edges(3, {{1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSelfLoop);
  }
}

TEST(GraphFromEdges, ZeroVertices) {
  const Graph g(0);
  EXPECT_EQ(g.order(), 0u);
  EXPECT_TRUE(validate_graph(g).empty());
  EXPECT_EQ(complement(g).order(), 0u);
  EXPECT_TRUE(connected_components(g).empty());
}

TEST(Complement, Examples) {
  const Graph c4 = cycle_graph(4);
  const Graph co = complement(c4);
  EXPECT_EQ(co.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(complement(complete_graph(3)).edge_count(), 0u);
  EXPECT_EQ(complement(cycle_graph(5)).edge_count(), 5u);
}

TEST(Complement, IsAnInvolution) {
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const Graph g = random_graph(1 + seed % 20, 0.4, seed);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_TRUE(validate_graph(complement(g)).empty());
  }
}

TEST(InducedSubgraph, Examples) {
  const InducedSubgraph a = induced_subgraph(p4(), VertexSet(4, {0, 1, 2}));
  EXPECT_EQ(a.graph, path_graph(3));
  EXPECT_EQ(a.index_map, (std::vector<Vertex>{0, 1, 2}));

  EXPECT_EQ(induced_subgraph(p4(), VertexSet(4)).graph.order(), 0u);

  const InducedSubgraph c = induced_subgraph(cycle_graph(5), VertexSet(5, {0, 1, 3}));
  EXPECT_EQ(c.graph.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(c.index_map, (std::vector<Vertex>{0, 1, 3}));
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(12, 0.5, seed);
    EXPECT_EQ(induced_subgraph(g, g.vertices()).graph, g);
  }
}

TEST(InducedSubgraph, RejectsForeignVertices) {
  const std::vector<Vertex> bad{0, 7};
  EXPECT_THROW(induced_subgraph(p4(), std::span<const Vertex>(bad)), Error);
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(complete_graph(2), {complete_graph(2), complete_graph(2)}), complete_graph(4));
  const Graph two_k2 = substitute(empty_graph(2), {complete_graph(2), complete_graph(2)});
  EXPECT_EQ(two_k2.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
  const Graph p5 = path_graph(5);
  EXPECT_EQ(substitute(p5, std::vector<Graph>(5, Graph(1))), p5);
}

TEST(Substitute, Errors) {
  try {
    substitute(path_graph(3), {Graph(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArityMismatch);
  }
  try {
    substitute(path_graph(2), {Graph(1), Graph(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyModule);
  }
}

TEST(Substitute, SingletonModulesReproduceQuotient) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph q = random_graph(1 + seed % 10, 0.5, seed);
    EXPECT_EQ(substitute(q, std::vector<Graph>(q.order(), Graph(1))), q);
  }
}

TEST(ConnectedComponents, Examples) {
  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const auto parts = connected_components(two_k2);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].size(), 2u);
  EXPECT_EQ(parts[1].size(), 2u);
  EXPECT_EQ(connected_components(path_graph(5)).size(), 1u);
  const auto iso = connected_components(empty_graph(3));
  ASSERT_EQ(iso.size(), 3u);
  for (const VertexSet& s : iso) EXPECT_EQ(s.size(), 1u);
}

TEST(ConnectedComponents, PartitionWithoutCrossEdges) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(15, 0.12, seed);
    VertexSet seen(g.order());
    const auto parts = connected_components(g);
    for (const VertexSet& p : parts) {
      EXPECT_FALSE(p.intersects(seen));
      seen |= p;
      for (Vertex v : p) EXPECT_TRUE(g.neighbors(v).is_subset_of(p));
    }
    EXPECT_EQ(seen, g.vertices());
  }
}

TEST(Relabel, UnionAndJoin) {
  const Graph a = path_graph(3);
  const Graph b = complete_graph(2);
  const Graph u = disjoint_union(a, b);
  EXPECT_EQ(u.order(), 5u);
  EXPECT_EQ(u.edge_count(), 3u);
  const Graph j = join(a, b);
  EXPECT_EQ(j.edge_count(), 3u + 6u);
  const std::vector<Vertex> perm{2, 0, 1};
  const Graph r = relabel(a, perm);
  EXPECT_EQ(r.edge_count(), 2u);
  EXPECT_TRUE(r.adjacent(2, 0));
  EXPECT_TRUE(r.adjacent(0, 1));
}

TEST(Builder, JoinAndClique) {
  GraphBuilder b(5);
  b.make_clique(VertexSet(5, {0, 1, 2}));
  b.join(VertexSet(5, {3}), VertexSet(5, {0, 4}));
  const Graph g = std::move(b).build();
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_TRUE(validate_graph(g).empty());
}

}  // namespace
}  // namespace grundy
