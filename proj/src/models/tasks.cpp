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

#include "rumourlab/error.hpp"
#include "rumourlab/grad/ops.hpp"
#include "rumourlab/models.hpp"

namespace rumourlab::models {

namespace {

constexpr std::size_t kChunk = 64;

template <typename T>
std::vector<T> pick(const std::vector<T>& items, std::span<const std::size_t> indices) {
  std::vector<T> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(items.at(i));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- LSTM

LstmTask::LstmTask(LstmConfig config, std::size_t vocab_size, std::vector<std::vector<std::int32_t>> train,
                   std::vector<Label> train_labels, std::vector<std::vector<std::int32_t>> dev,
                   std::vector<Label> dev_labels)
    : config_(config),
      vocab_size_(vocab_size),
      train_(std::move(train)),
      dev_(std::move(dev)),
      train_labels_(std::move(train_labels)),
      dev_labels_(std::move(dev_labels)) {
  config_.validate();
  if (train_.size() != train_labels_.size() || dev_.size() != dev_labels_.size()) {
    throw ValidationError("lstm task: sequence and label counts differ");
  }
}

grad::ParameterSet LstmTask::initial_parameters(std::uint64_t seed) const {
  return init_lstm(config_, vocab_size_, seed);
}

const std::vector<std::vector<std::int32_t>>& LstmTask::data(DataPart part) const {
  return part == DataPart::train ? train_ : dev_;
}

std::size_t LstmTask::size(DataPart part) const { return data(part).size(); }

Label LstmTask::label(DataPart part, std::size_t index) const {
  return (part == DataPart::train ? train_labels_ : dev_labels_).at(index);
}

grad::Var LstmTask::loss(grad::Tape& tape, const grad::ParameterSet& params, DataPart part,
                         std::span<const std::size_t> examples, const features::ClassWeights& weights,
                         Rng* rng) const {
  const auto sequences = pick(data(part), examples);
  const SequenceBatch batch = make_sequence_batch(sequences);
  std::vector<double> targets, sample_weights;
  for (std::size_t i : examples) {
    const Label y = label(part, i);
    targets.push_back(y == Label::rumour ? 1.0 : 0.0);
    sample_weights.push_back(weights[y]);
  }
  return grad::bce_loss(lstm_forward(tape, params, config_, batch, rng), targets, sample_weights);
}

std::vector<double> LstmTask::scores(const grad::ParameterSet& params, DataPart part,
                                     std::span<const std::size_t> examples) const {
  return lstm_scores(params, config_, pick(data(part), examples));
}

std::vector<double> lstm_scores(const grad::ParameterSet& params, const LstmConfig& config,
                                std::span<const std::vector<std::int32_t>> sequences) {
  std::vector<double> out;
  out.reserve(sequences.size());
  for (std::size_t start = 0; start < sequences.size(); start += kChunk) {
    const auto chunk = sequences.subspan(start, std::min(kChunk, sequences.size() - start));
    grad::Tape tape;
    const grad::Var probs = lstm_forward(tape, params, config, make_sequence_batch(chunk));
    for (double p : probs.value().values()) out.push_back(p);
  }
  return out;
}

// --------------------------------------------------------------- Bi-GCN

BiGcnTask::BiGcnTask(BiGcnConfig config, std::vector<tree::PropTree> train, std::vector<tree::PropTree> dev)
    : config_(config), train_(std::move(train)), dev_(std::move(dev)) {
  config_.validate();
  for (const auto* trees : {&train_, &dev_}) {
    for (const tree::PropTree& t : *trees) {
      if (!t.label) throw ValidationError("bigcn task: tree " + t.thread_id + " has no label");
    }
  }
}

grad::ParameterSet BiGcnTask::initial_parameters(std::uint64_t seed) const { return init_bigcn(config_, seed); }

const std::vector<tree::PropTree>& BiGcnTask::data(DataPart part) const {
  return part == DataPart::train ? train_ : dev_;
}

std::size_t BiGcnTask::size(DataPart part) const { return data(part).size(); }

Label BiGcnTask::label(DataPart part, std::size_t index) const { return *data(part).at(index).label; }

tree::GraphBatch BiGcnTask::batch_of(DataPart part, std::span<const std::size_t> examples) const {
  return tree::to_graph_batch(pick(data(part), examples), config_.input_dim);
}

grad::Var BiGcnTask::loss(grad::Tape& tape, const grad::ParameterSet& params, DataPart part,
                          std::span<const std::size_t> examples, const features::ClassWeights& weights,
                          Rng* rng) const {
  tree::GraphBatch batch = batch_of(part, examples);
  if (rng && config_.drop_edge_rate > 0.0) batch = tree::drop_edge(batch, config_.drop_edge_rate, rng->next());
  std::vector<std::size_t> targets;
  for (std::size_t i : examples) targets.push_back(label(part, i) == Label::rumour ? 0 : 1);
  const double class_weights[] = {weights.rumour, weights.nonrumour};
  return grad::weighted_ce_loss(bigcn_forward(tape, params, config_, batch, rng), targets, class_weights);
}

std::vector<double> BiGcnTask::scores(const grad::ParameterSet& params, DataPart part,
                                      std::span<const std::size_t> examples) const {
  return bigcn_scores(params, config_, pick(data(part), examples));
}

std::vector<double> bigcn_scores(const grad::ParameterSet& params, const BiGcnConfig& config,
                                 std::span<const tree::PropTree> trees) {
  std::vector<double> out;
  out.reserve(trees.size());
  for (std::size_t start = 0; start < trees.size(); start += kChunk) {
    const auto chunk = trees.subspan(start, std::min(kChunk, trees.size() - start));
    const tree::GraphBatch batch = tree::to_graph_batch(chunk, config.input_dim);
    grad::Tape tape;
    const grad::Var probs = bigcn_forward(tape, params, config, batch);
    for (std::size_t g = 0; g < chunk.size(); ++g) out.push_back(probs.value().at(g, 0));
  }
  return out;
}

}  // namespace rumourlab::models
