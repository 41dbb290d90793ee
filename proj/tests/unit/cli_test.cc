// Copyright 2026 The sgnn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
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
#include <string>

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sgnn_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int sgnn(const std::string& args) {
    const std::string cmd = std::string(SGNN_CLI_PATH) + " " + args + " >" +
                            (dir_ / "stdout.txt").string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Model, shares, graph and offline material for one client.
  void provision(int inferences) {
    ASSERT_EQ(sgnn("random-gin --features 3 --hidden 8 --classes 2 --nodes 12 --edges 20 "
                   "--seed 5 --out " + path("model.plm")), 0);
    ASSERT_EQ(sgnn("random-graph --nodes 12 --features 3 --edges 20 --seed 6 --out " +
                   path("graph.txt")), 0);
    ASSERT_EQ(sgnn("split-model --parties 3 --model " + path("model.plm") + " --out " +
                   path("shares")), 0);
    ASSERT_EQ(sgnn("offline --parties 3 --model-dir " + path("shares") +
                   " --n-max 16 --max-edges 32 --inferences " + std::to_string(inferences) +
                   " --out " + path("offline")), 0);
  }
  std::string infer_args(int nonce) const {
    return "--parties 3 --batches 4 --model-dir " + path("shares") + " --offline-dir " +
           path("offline") + " --graph " + path("graph.txt") + " --nonce " +
           std::to_string(nonce);
  }

  fs::path dir_;
};

TEST_F(CliTest, VerifySucceedsWithinTolerance) {
  provision(1);
  EXPECT_EQ(sgnn("verify " + infer_args(1) + " --plain-model " + path("model.plm")), 0);
}

TEST_F(CliTest, VerifyOutsideToleranceExitsFour) {
  provision(1);
  EXPECT_EQ(sgnn("verify " + infer_args(1) + " --plain-model " + path("model.plm") +
                 " --tolerance 0"),
            4);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  EXPECT_EQ(sgnn("infer --parties 3"), 2);
  EXPECT_EQ(sgnn("split-model --parties 1 --model x --out y"), 2);
  EXPECT_EQ(sgnn("split-model --parties 3 --model " + path("missing.plm") + " --out " +
                 path("s")), 2);
  EXPECT_EQ(sgnn("no-such-command"), 2);
}

TEST_F(CliTest, ExhaustedOfflineMaterialAborts) {
  provision(1);
  EXPECT_EQ(sgnn("infer " + infer_args(1)), 0);
  EXPECT_EQ(sgnn("infer " + infer_args(2)), 3);
}

TEST_F(CliTest, ReportReconcilesRun) {
  provision(1);
  ASSERT_EQ(sgnn("infer " + infer_args(1) + " --out " + path("run.json")), 0);
  EXPECT_EQ(sgnn("report --run " + path("run.json")), 0);
  EXPECT_EQ(sgnn("report --parties 3 --model-dir " + path("shares") + " --nodes 12 --edges 20"),
            0);
}

}  // namespace
