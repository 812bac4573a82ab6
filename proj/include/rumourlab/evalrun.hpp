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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rumourlab/features.hpp"
#include "rumourlab/grad/tensor.hpp"
#include "rumourlab/ingest.hpp"
#include "rumourlab/models.hpp"

namespace rumourlab::eval {

// ---------------------------------------------------------------- metrics

struct ClassCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  bool operator==(const ClassCounts&) const = default;
};

struct ConfusionCounts {
  ClassCounts rumour;     // rumour as the positive class
  ClassCounts nonrumour;  // nonrumour as the positive class
  std::size_t total = 0;

  bool operator==(const ConfusionCounts&) const = default;
};

struct ClassRow {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct Report {
  double accuracy = 0.0;
  ClassRow rumour;
  ClassRow nonrumour;
  ConfusionCounts counts;
  std::string model;
  std::string config_digest;
  std::vector<std::uint64_t> seeds;
};

double precision(const ClassCounts& c);
double recall(const ClassCounts& c);
// Harmonic mean; 0 when both inputs are 0.
double f1_score(double precision, double recall);

ConfusionCounts count_confusion(std::span<const Label> predictions, std::span<const Label> truth);
Report compute_report(std::span<const Label> predictions, std::span<const Label> truth);

// Per position, the label most runs agree on; ties go to nonrumour.
std::vector<Label> majority_vote(std::span<const std::vector<Label>> runs);

// Human-readable table with Acc., Prec., Rec., F1 and support columns.
std::string format_report(const Report& report);
// Flat `key=value` lines.
std::string format_metrics(const Report& report);

// ------------------------------------------------------------ run config

// Flat `key = value` configuration. Every key has a documented default;
// unknown keys are rejected. `#` starts a comment.
class RunConfig {
 public:
  RunConfig();

  static RunConfig parse(std::string_view text, const std::string& source = "<config>");
  static RunConfig load(const std::filesystem::path& path);

  // Overrides one key; throws ValidationError for unknown keys.
  void set(const std::string& key, const std::string& value);
  const std::string& get(const std::string& key) const;
  bool is_set(const std::string& key) const;

  // Throws ValidationError describing the first bad value; checks that the
  // dataset path exists when `require_data` is set.
  void validate(bool require_data = true) const;

  // Every key with its effective value, sorted, one `key = value` per line.
  std::string canonical() const;
  // 16 hex digits of FNV-1a over canonical().
  std::string digest() const;

  std::filesystem::path data_path() const;
  std::filesystem::path out_dir() const;
  std::string model() const;
  std::vector<std::uint64_t> seeds() const;
  ingest::SplitRatios split_ratios() const;
  std::uint64_t split_seed() const;
  std::size_t tfidf_top_k() const;
  bool keep_reply_links() const;
  models::LstmConfig lstm() const;
  models::BiGcnConfig bigcn(std::size_t input_dim) const;
  models::TrainConfig train(std::uint64_t seed) const;
  models::ClassicOptions classic(std::uint64_t seed) const;
  std::vector<std::string> classic_features() const;
  std::size_t classic_max_len() const;
  std::vector<std::string> analyze_keywords() const;
  std::size_t analyze_top_n() const;

  static const std::map<std::string, std::string>& defaults();

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> explicit_;
};

bool is_deep_model(std::string_view kind);

// -------------------------------------------------------------- pipeline

// Everything needed to score new threads.
struct TrainedModel {
  std::string kind;
  RunConfig config;
  std::uint64_t seed = 0;
  features::TfidfModel tfidf;      // bigcn and classic tfidf features
  features::Vocabulary sequence_vocab;  // lstm and classic id features
  grad::ParameterSet params;       // lstm, bigcn
  models::ClassicModel classic;    // logreg, svm, rf
  std::vector<models::EpochRecord> history;
};

struct ThreadPrediction {
  std::string thread_id;
  Label label = Label::nonrumour;
  double score = 0.0;
};

TrainedModel train_model(const RunConfig& config, std::span<const ingest::Thread> train,
                         std::span<const ingest::Thread> dev, std::uint64_t seed);
std::vector<ThreadPrediction> predict_threads(const TrainedModel& model, std::span<const ingest::Thread> threads);

// Classic feature row for one thread.
features::FeatureRow classic_row(const TrainedModel& model, const ingest::Thread& thread);

// Writes model.ckpt plus the vocabulary, idf, classic and history files the
// model kind needs.
void save_model(const std::filesystem::path& dir, const TrainedModel& model);
TrainedModel load_model(const std::filesystem::path& dir);

std::string format_history(std::span<const models::EpochRecord> history);
std::string format_predictions(std::span<const ThreadPrediction> predictions);

// ------------------------------------------------------------ experiment

struct ExperimentResult {
  Report report;
  std::filesystem::path run_dir;
};

// ingest, split, train one model per seed, vote on the test split and write
// report.txt, metrics.txt, config.cfg, predictions.tsv and per-seed model
// directories under <out>/run-<digest>/.
ExperimentResult run_experiment(const RunConfig& config);

}  // namespace rumourlab::eval
