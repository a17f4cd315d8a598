// Copyright 2026 The biodenoise Authors
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


#include "biodenoise/cli.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "biodenoise/dataset.h"
#include "biodenoise/file_util.h"
#include "biodenoise/pubtator.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "testing/synthetic_corpus.h"

namespace biodenoise {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunTool(std::vector<std::string> args) {
  args.insert(args.begin(), "biodenoise");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    const std::vector<AnnotatedDocument> docs =
        testing::MakeSyntheticCorpus({.documents = 30, .seed = 4});
    ASSERT_TRUE(WriteFileAtomic(Path("corpus.txt"), FormatPubtator(docs)).ok());
  }
  void TearDown() override { unsetenv(kConfigEnvVar); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunTool({}).code, kExitUsage);
  EXPECT_EQ(RunTool({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunTool({"catalog", "--corpus", Path("corpus.txt"), "--out", Path("c.json"),
                 "--bogus"}).code,
            kExitUsage);
  // --seed is required.
  EXPECT_EQ(RunTool({"gen-denoise", "--corpus", Path("corpus.txt"), "--out", Path("d.json")})
                .code,
            kExitUsage);
  EXPECT_EQ(RunTool({"gen-denoise", "--corpus", Path("corpus.txt"), "--out", Path("d.json"),
                 "--seed", "1", "--task", "essay"})
                .code,
            kExitUsage);
  EXPECT_EQ(RunTool({"--help"}).code, kExitOk);
}

TEST_F(CliTest, MissingInputIsIoError) {
  const Result r = RunTool({"catalog", "--corpus", Path("absent.txt"), "--out", Path("c.json")});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, BadDataIsDataError) {
  ASSERT_TRUE(WriteFileAtomic(Path("bad.json"), "{\"questions\": 3}").ok());
  EXPECT_EQ(RunTool({"convert", "--format", "bioasq", "--input", Path("bad.json"), "--out",
                 Path("o.json")})
                .code,
            kExitData);
  ASSERT_TRUE(WriteFileAtomic(Path("ds.json"), "{}").ok());
  EXPECT_EQ(RunTool({"validate", "--dataset", Path("ds.json")}).code, kExitData);
}

TEST_F(CliTest, PipelineAndRunHeader) {
  ASSERT_EQ(RunTool({"catalog", "--corpus", Path("corpus.txt"), "--out", Path("cat.json")}).code,
            kExitOk);
  const Result gen = RunTool({"gen-denoise", "--corpus", Path("corpus.txt"), "--catalog",
                          Path("cat.json"), "--out", Path("d.json"), "--seed", "3",
                          "--min-context-chars", "0", "--task", "all"});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  EXPECT_NE(gen.err.find("[biodenoise] command=gen-denoise seed=3"), std::string::npos);
  absl::StatusOr<DatasetFile> ds = ReadDataset(Path("d.json"));
  ASSERT_TRUE(ds.ok()) << ds.status();
  EXPECT_GT(ds->examples.size(), 30u);
  EXPECT_EQ(ds->run["command"], "gen-denoise");
  EXPECT_TRUE(ds->run.contains("config_sha256"));
  EXPECT_EQ(ds->run.dump().find(dir_.string()), std::string::npos);
  EXPECT_EQ(RunTool({"validate", "--dataset", Path("d.json"), "--corpus", Path("corpus.txt")})
                .code,
            kExitOk);
}

TEST_F(CliTest, ConfigFileAndPrecedence) {
  ASSERT_TRUE(WriteFileAtomic(Path("cfg.toml"),
                              "[gen-cloze]\nseed = 7\nmax-examples-per-doc = 2\n")
                  .ok());
  ASSERT_EQ(RunTool({"gen-cloze", "--config", Path("cfg.toml"), "--corpus", Path("corpus.txt"),
                 "--out", Path("a.json")})
                .code,
            kExitOk);
  ASSERT_EQ(RunTool({"gen-cloze", "--corpus", Path("corpus.txt"), "--out", Path("b.json"),
                 "--seed", "7", "--max-examples-per-doc", "2"})
                .code,
            kExitOk);
  // Command-line values win over the file.
  ASSERT_EQ(RunTool({"gen-cloze", "--config", Path("cfg.toml"), "--corpus", Path("corpus.txt"),
                 "--out", Path("c.json"), "--seed", "8"})
                .code,
            kExitOk);
  setenv(kConfigEnvVar, Path("cfg.toml").c_str(), 1);
  ASSERT_EQ(RunTool({"gen-cloze", "--corpus", Path("corpus.txt"), "--out", Path("e.json")}).code,
            kExitOk);
  absl::StatusOr<DatasetFile> a = ReadDataset(Path("a.json"));
  absl::StatusOr<DatasetFile> b = ReadDataset(Path("b.json"));
  absl::StatusOr<DatasetFile> c = ReadDataset(Path("c.json"));
  absl::StatusOr<DatasetFile> e = ReadDataset(Path("e.json"));
  ASSERT_TRUE(a.ok() && b.ok() && c.ok() && e.ok());
  EXPECT_EQ(a->examples, b->examples);
  EXPECT_EQ(a->examples, e->examples);
  EXPECT_EQ(c->run["config"]["seed"], 8);
  EXPECT_EQ(a->run["config"]["max_examples_per_doc"], 2);
}

TEST(ExitCodeTest, Mapping) {
  EXPECT_EQ(ExitCodeFor(absl::OkStatus()), kExitOk);
  EXPECT_EQ(ExitCodeFor(absl::NotFoundError("x")), kExitIo);
  EXPECT_EQ(ExitCodeFor(absl::PermissionDeniedError("x")), kExitIo);
  EXPECT_EQ(ExitCodeFor(absl::InvalidArgumentError("x")), kExitData);
  EXPECT_EQ(ExitCodeFor(absl::FailedPreconditionError("x")), kExitData);
}

}  // namespace
}  // namespace biodenoise
