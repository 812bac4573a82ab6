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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rumourlab/features.hpp"
#include "rumourlab/grad/optimizer.hpp"
#include "rumourlab/grad/tape.hpp"
#include "rumourlab/ingest.hpp"
#include "rumourlab/proptree.hpp"
#include "rumourlab/random.hpp"

namespace rumourlab::models {

// Uniform in +-sqrt(6 / (fan_in + fan_out)).
grad::Tensor glorot_uniform(grad::Shape shape, std::size_t fan_in, std::size_t fan_out, Rng& rng);

// Inverted dropout on x; identity when rate is 0.
grad::Var dropout(grad::Var x, double rate, Rng& rng);

// ---------------------------------------------------------------- LSTM

struct LstmConfig {
  std::size_t vocab_cap = 20000;  // including the three reserved ids
  std::size_t embed_dim = 64;
  std::size_t hidden_dim = 128;
  std::size_t perceptron_dim = 64;
  std::size_t max_len = 128;
  std::size_t layers = 1;
  double dropout = 0.0;

  void validate() const;
};

// Token ids [batch x length] and a 0/1 mask of the same shape whose ones
// form a prefix of every row.
struct SequenceBatch {
  std::size_t batch = 0;
  std::size_t length = 0;
  std::vector<std::int32_t> ids;
  std::vector<double> mask;
};

// Source then replies in time order, each normalized and tokenized.
std::vector<std::string> thread_tokens(const ingest::Thread& thread);
std::vector<std::int32_t> encode_sequence(std::span<const std::string> tokens, const features::Vocabulary& vocab,
                                          std::size_t max_len);
// Pads to the longest member; `extra_padding` appends that many more pad columns.
SequenceBatch make_sequence_batch(std::span<const std::vector<std::int32_t>> sequences,
                                  std::size_t extra_padding = 0);

grad::ParameterSet init_lstm(const LstmConfig& config, std::size_t vocab_size, std::uint64_t seed);
// Rumour probabilities [batch x 1]. `rng` drives dropout and may be null
// outside training.
grad::Var lstm_forward(grad::Tape& tape, const grad::ParameterSet& params, const LstmConfig& config,
                       const SequenceBatch& batch, Rng* rng = nullptr);

// --------------------------------------------------------------- Bi-GCN

struct BiGcnConfig {
  std::size_t input_dim = features::kDefaultTopTerms;
  std::size_t hidden_dim = 64;
  std::size_t out_dim = 64;
  double drop_edge_rate = 0.2;
  double dropout = 0.0;

  void validate() const;
};

grad::ParameterSet init_bigcn(const BiGcnConfig& config, std::uint64_t seed);
// Class probabilities [graphs x 2]; column 0 is rumour, column 1 nonrumour.
grad::Var bigcn_forward(grad::Tape& tape, const grad::ParameterSet& params, const BiGcnConfig& config,
                        const tree::GraphBatch& batch, Rng* rng = nullptr);

// -------------------------------------------------------------- training

struct TrainConfig {
  grad::OptimizerKind optimizer = grad::OptimizerKind::adam;
  double lr = 1e-3;
  double weight_decay = 0.0;
  double epsilon = 1e-8;
  std::size_t batch_size = 16;
  std::size_t max_epochs = 30;
  std::size_t patience = 3;
  bool class_weights = false;
  std::uint64_t seed = 0;

  void validate() const;
  grad::AdamConfig adam() const;
};

enum class DataPart { train, dev };

// A model plus its data, as seen by fit().
class TrainingTask {
 public:
  virtual ~TrainingTask() = default;

  virtual grad::ParameterSet initial_parameters(std::uint64_t seed) const = 0;
  virtual std::size_t size(DataPart part) const = 0;
  virtual Label label(DataPart part, std::size_t index) const = 0;
  // Weighted mean loss over the listed examples. A non-null rng means
  // training mode (dropout, DropEdge).
  virtual grad::Var loss(grad::Tape& tape, const grad::ParameterSet& params, DataPart part,
                         std::span<const std::size_t> examples, const features::ClassWeights& weights,
                         Rng* rng) const = 0;
  // Rumour probability per listed example.
  virtual std::vector<double> scores(const grad::ParameterSet& params, DataPart part,
                                     std::span<const std::size_t> examples) const = 0;
};

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based
  double train_loss = 0.0;
  double dev_loss = 0.0;
  double train_accuracy = 0.0;
  double dev_accuracy = 0.0;

  bool operator==(const EpochRecord&) const = default;
};

struct FitResult {
  grad::ParameterSet params;  // from the epoch with the lowest dev loss
  std::vector<EpochRecord> history;
  std::size_t best_epoch = 0;
  bool stopped_early = false;
};

// Mini-batch training with early stopping on (unweighted) dev loss. Throws
// DivergenceError naming epoch and batch when a loss is not finite.
FitResult fit(const TrainingTask& task, const TrainConfig& config);

// Accuracy of thresholded scores against the task labels.
double accuracy(const TrainingTask& task, const grad::ParameterSet& params, DataPart part);

class LstmTask : public TrainingTask {
 public:
  LstmTask(LstmConfig config, std::size_t vocab_size, std::vector<std::vector<std::int32_t>> train,
           std::vector<Label> train_labels, std::vector<std::vector<std::int32_t>> dev, std::vector<Label> dev_labels);

  grad::ParameterSet initial_parameters(std::uint64_t seed) const override;
  std::size_t size(DataPart part) const override;
  Label label(DataPart part, std::size_t index) const override;
  grad::Var loss(grad::Tape& tape, const grad::ParameterSet& params, DataPart part,
                 std::span<const std::size_t> examples, const features::ClassWeights& weights,
                 Rng* rng) const override;
  std::vector<double> scores(const grad::ParameterSet& params, DataPart part,
                             std::span<const std::size_t> examples) const override;

 private:
  const std::vector<std::vector<std::int32_t>>& data(DataPart part) const;

  LstmConfig config_;
  std::size_t vocab_size_;
  std::vector<std::vector<std::int32_t>> train_, dev_;
  std::vector<Label> train_labels_, dev_labels_;
};

class BiGcnTask : public TrainingTask {
 public:
  BiGcnTask(BiGcnConfig config, std::vector<tree::PropTree> train, std::vector<tree::PropTree> dev);

  grad::ParameterSet initial_parameters(std::uint64_t seed) const override;
  std::size_t size(DataPart part) const override;
  Label label(DataPart part, std::size_t index) const override;
  grad::Var loss(grad::Tape& tape, const grad::ParameterSet& params, DataPart part,
                 std::span<const std::size_t> examples, const features::ClassWeights& weights,
                 Rng* rng) const override;
  std::vector<double> scores(const grad::ParameterSet& params, DataPart part,
                             std::span<const std::size_t> examples) const override;

 private:
  const std::vector<tree::PropTree>& data(DataPart part) const;
  tree::GraphBatch batch_of(DataPart part, std::span<const std::size_t> examples) const;

  BiGcnConfig config_;
  std::vector<tree::PropTree> train_, dev_;
};

// Rumour probabilities for unlabeled inputs, evaluated in chunks.
std::vector<double> lstm_scores(const grad::ParameterSet& params, const LstmConfig& config,
                                std::span<const std::vector<std::int32_t>> sequences);
std::vector<double> bigcn_scores(const grad::ParameterSet& params, const BiGcnConfig& config,
                                 std::span<const tree::PropTree> trees);

// ------------------------------------------------------------- classics

enum class ClassicKind { logreg, svm, rf };

std::string_view to_string(ClassicKind kind);
ClassicKind parse_classic_kind(std::string_view text);

struct ForestOptions {
  std::size_t n_trees = 100;
  std::optional<std::size_t> max_depth;  // unlimited when absent; 0 is a single leaf
  std::size_t max_features = 0;          // 0 means round(sqrt(d))
  std::size_t min_samples_split = 2;
};

// Flat CART tree. Internal nodes have feature >= 0 and route x[feature] <=
// threshold to `left`; leaves carry weighted class counts.
struct ForestNode {
  std::int32_t feature = -1;
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  double rumour = 0.0;
  double nonrumour = 0.0;

  bool operator==(const ForestNode&) const = default;
};

struct Forest {
  std::size_t dimension = 0;
  std::vector<std::vector<ForestNode>> trees;

  // Fraction of trees voting rumour.
  double rumour_vote(std::span<const double> row) const;

  std::string serialize() const;
  static Forest parse(std::string_view text, const std::string& source = "<forest>");
  bool operator==(const Forest&) const = default;
};

Forest fit_forest(std::span<const features::FeatureRow> rows, std::span<const Label> labels,
                  std::span<const double> sample_weights, const ForestOptions& options, std::uint64_t seed);

struct LinearOptions {
  double l2 = 0.0;         // logreg
  double lambda = 1e-4;    // svm
  double lr = 0.1;
  std::size_t iterations = 500;
};

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;

  double decision(std::span<const double> row) const;
};

LinearModel fit_logreg(std::span<const features::FeatureRow> rows, std::span<const Label> labels,
                       std::span<const double> sample_weights, const LinearOptions& options);
LinearModel fit_svm(std::span<const features::FeatureRow> rows, std::span<const Label> labels,
                    std::span<const double> sample_weights, const LinearOptions& options);
// Mean hinge loss of the model on the data, with targets +1 for rumour.
double hinge_loss(const LinearModel& model, std::span<const features::FeatureRow> rows, std::span<const Label> labels);

struct ClassicOptions {
  bool class_weights = false;
  bool smote = false;
  std::size_t smote_k = features::kDefaultSmoteNeighbors;
  bool standardize = true;
  ForestOptions forest;
  LinearOptions linear;
  std::uint64_t seed = 0;
};

struct ClassicModel {
  ClassicKind kind = ClassicKind::logreg;
  std::size_t dimension = 0;
  features::Standardizer standardizer;  // empty when standardization is off
  LinearModel linear;
  Forest forest;
};

struct Prediction {
  Label label = Label::nonrumour;
  // Rumour probability for logreg and rf, signed margin for svm.
  double score = 0.0;
};

ClassicModel train_classic(ClassicKind kind, std::span<const features::FeatureRow> rows, std::span<const Label> labels,
                           const ClassicOptions& options);
Prediction predict(const ClassicModel& model, std::span<const double> row);

void save_classic(const std::filesystem::path& dir, const ClassicModel& model);
ClassicModel load_classic(const std::filesystem::path& dir);

}  // namespace rumourlab::models
