// Copyright 2026 The CPG Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpg/cli.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace cpg::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("cpg_cli_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir_);
    game_ = Write("g.cpg", "cpg 1\n3\n2 3 5\n");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  Outcome Call(std::vector<std::string> args, Environment env = {}) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::Run(args, out, err, env);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path dir_;
  std::string game_;
};

TEST_F(CliTest, Value) {
  EXPECT_EQ(Call({"value", game_, "--coalition", "1,2,3"}).out, "30\n");
  EXPECT_EQ(Call({"value", game_, "--coalition", ""}).out, "0\n");
  EXPECT_EQ(Call({"value", game_, "--coalition="}).out, "0\n");
  EXPECT_EQ(Call({"value", game_, "--coalition", "2"}).out, "3\n");
  EXPECT_EQ(Call({"value", game_, "--coalition", "4"}).code, kUsageError);
  EXPECT_EQ(Call({"value", game_}).code, kUsageError);
}

TEST_F(CliTest, ImputationAndPermutation) {
  const Outcome identity = Call({"imputation", game_});
  EXPECT_EQ(identity.code, kSuccess);
  EXPECT_EQ(identity.out, "2 4 24\n");
  EXPECT_EQ(Call({"imputation", game_, "--permutation", "3,2,1"}).out,
            "15 10 5\n");
  EXPECT_EQ(Call({"imputation", game_, "--permutation", "3,2"}).code,
            kUsageError);
}

TEST_F(CliTest, CoreCheck) {
  const Outcome in = Call({"core-check", game_, "--inline", "2 4 24"});
  EXPECT_EQ(in.code, kSuccess);
  EXPECT_EQ(in.out, "in-core\n");
  const Outcome blocked = Call({"core-check", game_, "--inline", "28 1 1"});
  EXPECT_EQ(blocked.code, kViolated);
  EXPECT_EQ(blocked.out, "blocked coalition={2} excess=2\n");
  const std::string file = Write("imp.txt", "10 10\n10\n");
  EXPECT_EQ(Call({"core-check", game_, "--imputation", file}).code, kSuccess);
  const Outcome inefficient = Call({"core-check", game_, "--inline", "1 1 1"});
  EXPECT_EQ(inefficient.code, kUsageError);
  EXPECT_NE(inefficient.err.find("30"), std::string::npos);
  EXPECT_TRUE(inefficient.out.empty());
  EXPECT_EQ(Call({"core-check", game_}).code, kUsageError);
  EXPECT_EQ(Call({"core-check", game_, "--inline", "2 4 24", "--imputation",
                  file})
                .code,
            kUsageError);
  EXPECT_EQ(Call({"core-check", game_, "--inline", "2 4 24", "--limit", "2"})
                .code,
            kLimitExceeded);
}

TEST_F(CliTest, Excess) {
  EXPECT_EQ(Call({"excess", game_, "--inline", "10 10 10", "--coalition",
                  "2,3"})
                .out,
            "-5\n");
  EXPECT_EQ(Call({"excess", game_, "--inline", "28 1 1", "--coalition", ""})
                .out,
            "0\n");
}

TEST_F(CliTest, ValuesAndMixtures) {
  EXPECT_EQ(Call({"shapley", game_}).out, "7 10 13\n");
  EXPECT_EQ(Call({"banzhaf", game_}).out, "25/4 37/4 49/4\n");
  EXPECT_EQ(Call({"weber", game_, "--mix", "1,2,3@1/2;3,2,1@1/2"}).out,
            "17/2 7 29/2\n");
  EXPECT_EQ(Call({"weber", game_, "--mix", "1,2,3@1/2"}).code, kUsageError);
  EXPECT_EQ(Call({"shapley", game_, "--limit", "2"}).code, kLimitExceeded);
}

TEST_F(CliTest, VerifyGameAndTable) {
  const Outcome convex = Call({"verify", game_, "--properties", "convex"});
  EXPECT_EQ(convex.code, kSuccess);
  EXPECT_EQ(convex.out, "convex: pass\n");
  EXPECT_EQ(Call({"verify", game_}).out,
            "monotone: pass\nsuperadditive: pass\nconvex: pass\ndummies: pass\n");

  const std::string table = Write("t.tug", "tug 1\n2\n0 0\n1 1\n2 1\n3 1\n");
  const Outcome bad = Call({"verify", table, "--properties", "convex,monotone"});
  EXPECT_EQ(bad.code, kViolated);
  EXPECT_EQ(bad.out, "convex: fail A={1} B={2}\nmonotone: pass\n");

  const std::string dummy = Write("d.tug", "tug 1\n2\n0 0\n1 3\n2 0\n3 3\n");
  EXPECT_EQ(Call({"verify", dummy, "--properties", "dummies"}).out,
            "dummies: fail players={2}\n");
  const std::string drop = Write("m.tug", "tug 1\n2\n0 0\n1 2\n2 1\n3 1\n");
  EXPECT_EQ(Call({"verify", drop, "--properties", "monotone"}).out,
            "monotone: fail C'={1} C={1,2}\n");

  EXPECT_EQ(Call({"verify", game_, "--properties", "pretty"}).code,
            kUsageError);
  EXPECT_EQ(Call({"verify", game_, "--limit", "2"}).code, kLimitExceeded);
}

TEST_F(CliTest, LimitEnvironment) {
  Environment tight;
  tight.cpg_limit = "2";
  EXPECT_EQ(Call({"shapley", game_}, tight).code, kLimitExceeded);
  EXPECT_EQ(Call({"shapley", game_, "--limit", "3"}, tight).code, kSuccess);
  Environment junk;
  junk.cpg_limit = "lots";
  EXPECT_EQ(Call({"shapley", game_}, junk).code, kUsageError);
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  const std::string weight_one = Write("w1.cpg", "cpg 1\n2\n1 1\n");
  const Outcome rejected = Call({"imputation", weight_one});
  EXPECT_EQ(rejected.code, kUsageError);
  EXPECT_NE(rejected.err.find("line 3"), std::string::npos);
  EXPECT_EQ(Call({"imputation", Write("c.cpg", "cpg 1\n3\n2 3\n")}).code,
            kUsageError);
  EXPECT_EQ(Call({"imputation", (dir_ / "missing.cpg").string()}).code,
            kUsageError);
  EXPECT_EQ(Call({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(Call({}).code, kUsageError);
  EXPECT_EQ(Call({"--format", "xml", "shapley", game_}).code, kUsageError);
}

TEST_F(CliTest, JsonReportsHaveStableKeyOrder) {
  const Outcome blocked =
      Call({"core-check", game_, "--inline", "28 1 1", "--format", "json"});
  EXPECT_EQ(blocked.code, kViolated);
  EXPECT_EQ(blocked.out,
            "{\"command\":\"core-check\",\"n\":3,\"weights\":[\"2\",\"3\",\"5\"],"
            "\"imputation\":[\"28\",\"1\",\"1\"],\"outcome\":\"blocked\","
            "\"witness\":[2],\"excess\":\"2\"}\n");
  const Outcome empty =
      Call({"--format", "json", "value", game_, "--coalition", ""});
  const auto j = nlohmann::json::parse(empty.out);
  EXPECT_TRUE(j["coalition"].is_array());
  EXPECT_TRUE(j["coalition"].empty());
  EXPECT_EQ(j["value"], "0");
  const auto verify = nlohmann::json::parse(
      Call({"verify", game_, "--format", "json", "--properties", "dummies"}).out);
  EXPECT_EQ(verify["results"][0]["property"], "dummies");
  EXPECT_EQ(verify["results"][0]["holds"], true);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"shapley", game_, "--format", "json"},
           {"verify", game_, "--format", "json"},
           {"weber", game_, "--mix", "2,1,3@1/3;3,1,2@2/3"}}) {
    const Outcome a = Call(args);
    const Outcome b = Call(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST_F(CliTest, HelpExitsZero) {
  const Outcome help = Call({"--help"});
  EXPECT_EQ(help.code, kSuccess);
  EXPECT_NE(help.out.find("core-check"), std::string::npos);
}

}  // namespace
}  // namespace cpg::cli
