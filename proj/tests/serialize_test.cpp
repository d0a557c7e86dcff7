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

#include "grundy/serialize.hpp"

#include <gtest/gtest.h>

#include "grundy/generators.hpp"

namespace grundy {
namespace {

TEST(TreeJson, P4) {
  const Json j = to_json(decompose(path_graph(4)));
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["root"]["kind"], "neighborhood");
  EXPECT_EQ(j["root"]["module"], Json({0, 1, 2, 3}));
  EXPECT_EQ(j["root"]["quotient"]["edges"], Json::parse("[[0,1],[1,2],[2,3]]"));
  ASSERT_EQ(j["postorder"].size(), 5u);
  EXPECT_EQ(j["postorder"][4]["kind"], "neighborhood");
  EXPECT_EQ(j["postorder"][4]["children"], Json({0, 1, 2, 3}));
}

TEST(TreeJson, TwoK2AndK1) {
  const Json j = to_json(decompose(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_EQ(j["root"]["kind"], "parallel");
  ASSERT_EQ(j["root"]["children"].size(), 2u);
  EXPECT_EQ(j["root"]["children"][0]["kind"], "series");
  EXPECT_FALSE(j["root"].contains("quotient"));
  const Json k1 = to_json(decompose(Graph(1)));
  EXPECT_EQ(k1["root"]["kind"], "leaf");
  EXPECT_EQ(k1["postorder"].size(), 1u);
}

TEST(TreeJson, RoundTrips) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_fat_extended(1 + seed, seed);
    const MDTree t = decompose(g);
    const Json j = to_json(t);
    const MDTree back = tree_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.host, g);
    EXPECT_TRUE(validate_tree(g, back).empty());
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(TreeJson, RejectsMalformedInput) {
  EXPECT_THROW(tree_from_json(Json::parse(R"({"order": 2})")), Error);
  EXPECT_THROW(tree_from_json(Json::parse(R"({"order": 1, "root": {"kind": "blob", "module": [0], "children": []}})")),
               Error);
  EXPECT_THROW(tree_from_json(Json::parse(R"({"order": 1, "root": {"kind": "leaf", "module": [3], "children": []}})")),
               Error);
}

TEST(TreeDot, MentionsEveryNode) {
  const std::string dot = to_dot(decompose(path_graph(4)));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("neighborhood"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n4"), std::string::npos);
  EXPECT_NE(dot.find("quotient: 0-1 1-2 2-3"), std::string::npos);
}

TEST(ReportJson, Flags) {
  const Json p5 = to_json(recognize(path_graph(5)), 5);
  EXPECT_EQ(p5["extended_p4_laden"], true);
  EXPECT_EQ(p5["fat_extended_p4_laden"], true);
  ASSERT_EQ(p5["nodes"].size(), 1u);
  EXPECT_EQ(p5["nodes"][0]["tag"], "p5like");
  EXPECT_EQ(p5["nodes"][0]["shape"], "P5");

  const Json c6 = to_json(recognize(cycle_graph(6)), 6);
  EXPECT_EQ(c6["fat_extended_p4_laden"], false);
  EXPECT_EQ(c6["nodes"][0]["tag"], "not-in-class");
  EXPECT_TRUE(c6["nodes"][0].contains("reason"));
}

TEST(PolyJson, TraceEntries) {
  const Json j = to_json(grundy_poly(path_graph(4)));
  EXPECT_EQ(j["value"], 3);
  ASSERT_EQ(j["trace"].size(), 5u);
  EXPECT_EQ(j["trace"][4]["rule"], "spider");
  EXPECT_EQ(j["trace"][4]["children"], Json({1, 1, 1, 1}));
}

}  // namespace
}  // namespace grundy
