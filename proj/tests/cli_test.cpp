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

#include "grundy/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "grundy/io.hpp"
#include "grundy/serialize.hpp"

namespace grundy::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GRUNDY_TEST_DATA) + "/" + name; }

TEST(Compute, PolyOnP4) {
  const CliRun r = run_cli({"compute", "--algo", "poly", data("p4.g6")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("value 3"), std::string::npos);
  EXPECT_NE(r.out.find("spider"), std::string::npos);
}

TEST(Compute, ExactWithWitnessOnK4) {
  const CliRun r = run_cli({"compute", "--algo", "exact", "--order-out", "--format", "json", data("k4.g6")});
  ASSERT_EQ(r.code, kOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["value"], 4);
  EXPECT_EQ(j["witness"].size(), 4u);
  EXPECT_TRUE(j.contains("time_ms"));
}

TEST(Compute, NotInClassExitCode) {
  const CliRun r = run_cli({"compute", "--algo", "poly", data("c6.g6")});
  EXPECT_EQ(r.code, kNotInClass);
  EXPECT_NE(r.err.find("NotInClass"), std::string::npos);
  EXPECT_NE(r.err.find("{0,1,2,3,4,5}"), std::string::npos);
}

TEST(Compute, GreedyWithOrder) {
  const CliRun r = run_cli({"compute", "--algo", "greedy", "--order", "0,3,1,2", "--gen", "path:4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("value 3"), std::string::npos);
  const CliRun bad = run_cli({"compute", "--algo", "greedy", "--order", "0,1", "--gen", "path:4"});
  EXPECT_EQ(bad.code, kInputError);
}

TEST(Compute, PolyAndExactAgree) {
  for (int seed = 0; seed < 20; ++seed) {
    const std::string s = std::to_string(seed);
    const CliRun a = run_cli({"compute", "--algo", "poly", "--format", "json", "--gen", "random-fat:11", "--seed", s});
    const CliRun b = run_cli({"compute", "--algo", "exact", "--format", "json", "--gen", "random-fat:11", "--seed", s});
    ASSERT_EQ(a.code, kOk);
    ASSERT_EQ(b.code, kOk);
    EXPECT_EQ(Json::parse(a.out)["value"], Json::parse(b.out)["value"]);
  }
}

TEST(Compute, InputErrors) {
  EXPECT_EQ(run_cli({"compute", data("missing.g6")}).code, kInputError);
  EXPECT_EQ(run_cli({"compute"}).code, kInputError);
  EXPECT_EQ(run_cli({"compute", "--gen", "spider:thin:1"}).code, kInputError);
  EXPECT_EQ(run_cli({"compute", "--algo", "magic", "--gen", "path:3"}).code, kInputError);
  EXPECT_EQ(run_cli({"compute", "--algo", "exact", "--gen", "empty:17"}).code, kInputError);
  EXPECT_EQ(run_cli({"compute", "--gen", "empty:0"}).code, kInputError);
  EXPECT_EQ(run_cli({}).code, kInputError);
}

TEST(Compute, EdgeListInput) {
  const CliRun r = run_cli({"compute", data("p5.el")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("value 3"), std::string::npos);
  EXPECT_NE(r.out.find("p5-like"), std::string::npos);
}

TEST(Recognize, Reports) {
  const CliRun p5 = run_cli({"recognize", "--gen", "path:5"});
  ASSERT_EQ(p5.code, kOk);
  const Json j = Json::parse(p5.out);
  EXPECT_EQ(j["extended_p4_laden"], true);
  EXPECT_EQ(j["fat_extended_p4_laden"], true);

  const CliRun c6 = run_cli({"recognize", data("c6.g6")});
  EXPECT_EQ(c6.code, kOk);
  EXPECT_EQ(Json::parse(c6.out)["fat_extended_p4_laden"], false);

  const CliRun co = run_cli({"recognize", "--gen", "random-cograph:30", "--seed", "5"});
  EXPECT_EQ(Json::parse(co.out)["fat_extended_p4_laden"], true);
}

TEST(Decompose, JsonAndDot) {
  const CliRun two_k2 = run_cli({"decompose", "--gen", "random-cograph:1"});
  EXPECT_EQ(Json::parse(two_k2.out)["root"]["kind"], "leaf");

  const CliRun p4 = run_cli({"decompose", data("p4.g6")});
  ASSERT_EQ(p4.code, kOk);
  const Json j = Json::parse(p4.out);
  EXPECT_EQ(j["root"]["kind"], "neighborhood");
  EXPECT_EQ(j["root"]["quotient"]["edges"].size(), 3u);

  const CliRun dot = run_cli({"decompose", "--format", "dot", data("p4.g6")});
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
}

TEST(Generate, Formats) {
  const CliRun g6 = run_cli({"generate", "--gen", "path:4"});
  EXPECT_EQ(g6.out, "Ch\n");
  const CliRun el = run_cli({"generate", "--gen", "path:3", "--format", "edges"});
  EXPECT_EQ(el.out, "3 2\n0 1\n1 2\n");
}

TEST(Verify, SmallRuns) {
  const CliRun ex = run_cli({"verify", "--exhaustive", "4"});
  EXPECT_EQ(ex.code, kOk);
  EXPECT_EQ(Json::parse(ex.out)["exhaustive"]["graphs"], 1 + 2 + 8 + 64);

  const CliRun rnd = run_cli({"verify", "--random", "7", "--samples", "200", "--seed", "3"});
  EXPECT_EQ(rnd.code, kOk);
  EXPECT_EQ(Json::parse(rnd.out)["ok"], true);

  const CliRun audit = run_cli({"verify", "--audit", "--max-gamma", "2"});
  EXPECT_EQ(audit.code, kOk);
  EXPECT_EQ(Json::parse(audit.out)["audit"]["clique_instances"], 96);

  EXPECT_EQ(run_cli({"verify"}).code, kInputError);
  EXPECT_EQ(run_cli({"verify", "--exhaustive", "9"}).code, kInputError);
}

TEST(Verify, Deterministic) {
  const CliRun a = run_cli({"verify", "--random", "8", "--samples", "100", "--seed", "9"});
  const CliRun b = run_cli({"verify", "--random", "8", "--samples", "100", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace grundy::cli
