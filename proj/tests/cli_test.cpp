// Copyright 2026 The wlamr Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/corpus.hpp"
#include "wlamr/dataset.hpp"

namespace wlamr {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wlamr_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    std::ofstream data(path("data.jsonl"));
    write_dataset(data, testing::polarity_corpus(12, 3, "c"));
    std::ofstream amr(path("g.amr"));
    amr << "# ::id 1\n(c / cat)\n\n(d / drink-01 :ARG0 (c / cat) :arg1 (m / milk))\n";
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Exit status of the CLI; stdout goes to out.txt and stderr to err.txt.
  int run(const std::string& args) const {
    const std::string cmd = std::string(WLAMR_CLI_PATH) + " " + args + " > " + path("out.txt") +
                            " 2> " + path("err.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(Cli, ParseRoundTrips) {
  ASSERT_EQ(run("parse " + path("g.amr")), 0);
  EXPECT_EQ(slurp("out.txt"), "(c / cat)\n(d / drink-01 :arg0 (c / cat) :arg1 (m / milk))\n");
  ASSERT_EQ(run("parse --triples " + path("g.amr")), 0);
  EXPECT_NE(slurp("out.txt").find("d\t:arg0\tc"), std::string::npos);
}

TEST_F(Cli, ScoreWritesOneLinePerRecord) {
  ASSERT_EQ(run("score --data " + path("data.jsonl")), 0);
  const std::string out = slurp("out.txt");
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 12);
  EXPECT_EQ(out.rfind("c0\t", 0), 0u);
  ASSERT_EQ(run("--k 1 --direction 2ways score --metric wwlk --data " + path("data.jsonl") +
                " -o " + path("s.tsv")),
            0);
  EXPECT_FALSE(slurp("s.tsv").empty());
}

TEST_F(Cli, EvalReport) {
  ASSERT_EQ(run("eval --metric wlk --data " + path("data.jsonl") + " --csv " + path("r.csv")), 0);
  EXPECT_NE(slurp("out.txt").find("| main-polarity | 12 |"), std::string::npos);
  EXPECT_EQ(slurp("r.csv").rfind("metric,partition,n,pearson_x100,error\n", 0), 0u);
}

TEST_F(Cli, TrainThenScoreWithTheta) {
  ASSERT_EQ(run("train --epochs 1 --train " + path("data.jsonl") + " --dev " + path("data.jsonl") +
                " --out " + path("theta.txt") + " --trace " + path("trace.jsonl")),
            0);
  EXPECT_NE(slurp("theta.txt").find(":polarity"), std::string::npos);
  EXPECT_NE(slurp("trace.jsonl").find("\"summary\":true"), std::string::npos);
  EXPECT_EQ(run("--edge-params " + path("theta.txt") + " score --metric wwlk-theta --data " +
                path("data.jsonl")),
            0);
}

TEST_F(Cli, TransformStats) {
  ASSERT_EQ(run("transform reify --data " + path("data.jsonl") + " -o " + path("t.jsonl") +
                " --stats " + path("stats.txt")),
            0);
  EXPECT_EQ(slurp("stats.txt").rfind("Reify-OPS\tgraphs=24", 0), 0u);
  ASSERT_EQ(run("transform arg --data " + path("data.jsonl")), 0);
  EXPECT_NE(slurp("err.txt").find("Arg-OPS"), std::string::npos);
}

TEST_F(Cli, AlignJsonl) {
  ASSERT_EQ(run("align --data " + path("data.jsonl")), 0);
  EXPECT_NE(slurp("out.txt").find("\"pair_id\":\"c0\""), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("score --data " + path("missing.jsonl")), 1);
  EXPECT_NE(slurp("err.txt").find("data error"), std::string::npos);
  {
    std::ofstream bad(path("bad.jsonl"));
    bad << R"j({"id": "x", "amr_a": "(c / cat", "amr_b": "(d / dog)", "score": 1})j" << "\n";
  }
  EXPECT_EQ(run("score --data " + path("bad.jsonl")), 1);
  EXPECT_EQ(run("--direction sideways score --data " + path("data.jsonl")), 2);
  EXPECT_EQ(run("score --metric nope --data " + path("data.jsonl")), 2);
  EXPECT_EQ(run("score --metric wwlk-theta --data " + path("data.jsonl")), 2);
  EXPECT_EQ(run("score"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("eval --data " + path("data.jsonl")), 2);
}

}  // namespace
}  // namespace wlamr
