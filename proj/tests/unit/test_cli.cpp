// Copyright 2026 The rumourlab Authors.
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

#include <filesystem>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "rumourlab/cli.hpp"
#include "rumourlab/text_io.hpp"
#include "synthetic.hpp"

namespace rumourlab::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = dispatch(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::set<fs::path> files_under(const fs::path& root) {
  std::set<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) files.insert(entry.path());
  }
  return files;
}

bool inside(const fs::path& file, const fs::path& dir) {
  const auto rel = fs::relative(file, dir);
  return !rel.empty() && *rel.begin() != "..";
}

TEST(Dispatch, UsageErrors) {
  const Outcome none = run({});
  EXPECT_EQ(none.code, kValidationError);
  EXPECT_NE(none.err.find("Usage"), std::string::npos) << none.err;
  EXPECT_TRUE(none.out.empty());

  const Outcome unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, kValidationError);
  EXPECT_FALSE(unknown.err.empty());
  EXPECT_TRUE(unknown.out.empty());

  EXPECT_EQ(run({"stats", "--no-such-flag"}).code, kValidationError);
  EXPECT_EQ(run({"predict", "--data", "x.jsonl"}).code, kValidationError);  // --model-dir is required

  const Outcome help = run({"--help"});
  EXPECT_EQ(help.code, kSuccess);
  for (const char* sub : {"ingest", "stats", "build-trees", "train", "evaluate", "predict", "analyze", "selftest"}) {
    EXPECT_NE(help.out.find(sub), std::string::npos) << sub;
  }
}

TEST(Dispatch, ValidationFailuresExitOne) {
  testing::TempDir dir;
  const Outcome missing = run({"stats", "--data", (dir / "absent.jsonl").string()});
  EXPECT_EQ(missing.code, kValidationError);
  EXPECT_EQ(missing.err.rfind("error: ", 0), 0u) << missing.err;

  io::write_file(dir / "bad.cfg", "learning_rate = 3\n");
  EXPECT_EQ(run({"train", "--config", (dir / "bad.cfg").string()}).code, kValidationError);
  EXPECT_EQ(run({"train", "--set", "train.lr=-1", "--data", (dir / "absent.jsonl").string()}).code, kValidationError);
}

TEST(Dispatch, Selftest) {
  const Outcome o = run({"selftest"});
  EXPECT_EQ(o.code, kSuccess) << o.out;
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("PASS grad lstm"), std::string::npos);
  EXPECT_NE(o.out.find("PASS grad bigcn"), std::string::npos);
  EXPECT_NE(o.out.find("selftest passed"), std::string::npos);
}

class Pipeline : public ::testing::Test {
 protected:
  void SetUp() override {
    testing::CorpusOptions options;
    options.threads = 40;
    options.unlabeled = 5;
    ingest::save_tweets(corpus(), testing::planted_corpus(options));
    io::write_file(config(),
                   "bigcn.hidden_dim = 8\nbigcn.out_dim = 8\ntrain.max_epochs = 3\n"
                   "lstm.embed_dim = 8\nlstm.hidden_dim = 8\nlstm.perceptron_dim = 4\nlstm.max_len = 24\n");
  }

  fs::path corpus() const { return dir_ / "corpus.jsonl"; }
  fs::path config() const { return dir_ / "small.cfg"; }
  std::string out(const std::string& name) const { return (dir_ / "out" / name).string(); }

  testing::TempDir dir_;
};

TEST_F(Pipeline, IngestAndStats) {
  const Outcome ingest = run({"ingest", "--data", corpus().string()});
  EXPECT_EQ(ingest.code, kSuccess) << ingest.err;
  const Outcome stats = run({"stats", "--data", corpus().string()});
  EXPECT_EQ(stats.code, kSuccess) << stats.err;
  EXPECT_NE(stats.out.find("threads\t40\n"), std::string::npos) << stats.out;
  EXPECT_NE(stats.out.find("unlabeled\t5\n"), std::string::npos) << stats.out;
}

TEST_F(Pipeline, BuildTreesWritesCorpusFile) {
  const Outcome o = run({"build-trees", "--data", corpus().string(), "--out", out("trees")});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const std::string trees = testing::read_text(fs::path(out("trees")) / "trees.txt");
  EXPECT_FALSE(trees.empty());
  EXPECT_TRUE(fs::exists(fs::path(out("trees")) / "vocab.txt"));
}

TEST_F(Pipeline, TrainTwiceGivesIdenticalCheckpoints) {
  for (const char* model : {"bigcn", "lstm", "rf"}) {
    const fs::path dir = out(model);
    const std::vector<std::string> args{"train", "--model", model, "--config", config().string(),
                                        "--data", corpus().string(), "--seed", "7", "--out", dir.string()};
    ASSERT_EQ(run(args).code, kSuccess) << model;
    std::map<fs::path, std::string> first;
    for (const auto& file : files_under(dir)) first[file] = testing::read_text(file);
    ASSERT_FALSE(first.empty());
    fs::remove_all(dir);
    ASSERT_EQ(run(args).code, kSuccess) << model;
    const auto again = files_under(dir);
    ASSERT_EQ(again.size(), first.size());
    for (const auto& [file, text] : first) EXPECT_EQ(testing::read_text(file), text) << file;
  }
}

TEST_F(Pipeline, PredictOnOneThreadPrintsOneLine) {
  ASSERT_EQ(run({"train", "--data", corpus().string(), "--out", out("model")}).code, kSuccess);
  testing::CorpusOptions options;
  options.threads = 1;
  options.seed = 99;
  ingest::save_tweets(dir_ / "one.jsonl", testing::planted_corpus(options));
  const Outcome o = run({"predict", "--model-dir", out("model"), "--data", (dir_ / "one.jsonl").string()});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const std::regex line(R"([^\t\n]+\t(rumour|nonrumour)\t[0-9.eE+-]+\n)");
  EXPECT_TRUE(std::regex_match(o.out, line)) << o.out;
}

TEST_F(Pipeline, OutputsStayInsideTheOutputDirectory) {
  const auto before = files_under(dir_.path());
  const fs::path model = out("model");
  ASSERT_EQ(run({"train", "--data", corpus().string(), "--out", model.string()}).code, kSuccess);
  const Outcome eval = run({"evaluate", "--model-dir", model.string(), "--out", out("eval")});
  ASSERT_EQ(eval.code, kSuccess) << eval.err;
  EXPECT_TRUE(fs::exists(fs::path(out("eval")) / "report.txt"));
  const Outcome predict = run({"predict", "--model-dir", model.string(), "--data", corpus().string()});
  ASSERT_EQ(predict.code, kSuccess);
  io::write_file(dir_ / "predictions.tsv", predict.out);
  for (const char* analysis : {"attributes", "topics", "emotion", "sentiment"}) {
    const Outcome o = run({"analyze", analysis, "--data", corpus().string(), "--predictions",
                           (dir_ / "predictions.tsv").string(), "--out", out("analysis")});
    EXPECT_EQ(o.code, kSuccess) << analysis << ": " << o.err;
  }
  for (const char* file : {"attributes.csv", "topics.csv", "emotion_series.csv", "emotion_summary.csv",
                           "sentiment_series.csv", "sentiment_summary.csv"}) {
    EXPECT_TRUE(fs::exists(fs::path(out("analysis")) / file)) << file;
  }
  const Outcome experiment = run({"evaluate", "--data", corpus().string(), "--out", out("runs")});
  EXPECT_EQ(experiment.code, kSuccess) << experiment.err;

  for (const auto& file : files_under(dir_.path())) {
    if (before.contains(file) || file == dir_ / "predictions.tsv") continue;
    EXPECT_TRUE(inside(file, dir_ / "out")) << file;
  }
}

TEST_F(Pipeline, AnalyzeUsesThreadLabelsWithoutPredictions) {
  const Outcome o = run({"analyze", "topics", "--data", corpus().string(), "--out", out("topics")});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const std::string csv = testing::read_text(fs::path(out("topics")) / "topics.csv");
  EXPECT_EQ(csv.rfind("month,class,rank,term,freq\n", 0), 0u);
  // The planted marker occurs only in rumour sources.
  EXPECT_TRUE(std::regex_search(csv, std::regex(",rumour,[0-9]+,hoaxalert,"))) << csv;
  EXPECT_FALSE(std::regex_search(csv, std::regex(",nonrumour,[0-9]+,hoaxalert,"))) << csv;
}

}  // namespace
}  // namespace rumourlab::cli
