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

#include <cmath>
#include <numeric>

#include "rumourlab/error.hpp"
#include "rumourlab/grad/optimizer.hpp"
#include "rumourlab/models.hpp"

namespace rumourlab::models {

namespace {

constexpr std::size_t kScoreChunk = 64;

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), 0);
  return indices;
}

double mean_loss(const TrainingTask& task, const grad::ParameterSet& params, DataPart part, std::size_t batch_size) {
  const auto indices = all_indices(task.size(part));
  const features::ClassWeights unit;
  double total = 0.0;
  for (std::size_t start = 0; start < indices.size(); start += batch_size) {
    const std::size_t count = std::min(batch_size, indices.size() - start);
    grad::Tape tape;
    const double loss = task.loss(tape, params, part, std::span(indices).subspan(start, count), unit, nullptr)
                            .value()
                            .item();
    total += loss * static_cast<double>(count);
  }
  return total / static_cast<double>(indices.size());
}

}  // namespace

void TrainConfig::validate() const {
  if (!(lr > 0.0)) throw ValidationError("train: lr must be positive");
  if (batch_size == 0) throw ValidationError("train: batch_size must be at least 1");
  if (patience == 0) throw ValidationError("train: patience must be at least 1");
  if (max_epochs == 0) throw ValidationError("train: max_epochs must be at least 1");
  if (weight_decay < 0.0 || !(epsilon > 0.0)) throw ValidationError("train: weight_decay >= 0 and epsilon > 0 required");
}

grad::AdamConfig TrainConfig::adam() const {
  grad::AdamConfig adam;
  adam.kind = optimizer;
  adam.lr = lr;
  adam.eps = epsilon;
  adam.weight_decay = weight_decay;
  return adam;
}

double accuracy(const TrainingTask& task, const grad::ParameterSet& params, DataPart part) {
  const auto indices = all_indices(task.size(part));
  if (indices.empty()) return 0.0;
  std::size_t correct = 0;
  for (std::size_t start = 0; start < indices.size(); start += kScoreChunk) {
    const auto chunk = std::span(indices).subspan(start, std::min(kScoreChunk, indices.size() - start));
    const auto scores = task.scores(params, part, chunk);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const Label predicted = scores[i] >= 0.5 ? Label::rumour : Label::nonrumour;
      if (predicted == task.label(part, chunk[i])) ++correct;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(indices.size());
}

FitResult fit(const TrainingTask& task, const TrainConfig& config) {
  config.validate();
  const std::size_t n_train = task.size(DataPart::train);
  if (n_train == 0 || task.size(DataPart::dev) == 0) throw ValidationError("fit: train and dev sets must be non-empty");

  Rng master(config.seed);
  Rng order_rng = master.derive(2);
  Rng noise_rng = master.derive(3);
  grad::ParameterSet params = task.initial_parameters(master.derive(1).next());

  features::ClassWeights weights;
  if (config.class_weights) {
    std::vector<Label> labels(n_train);
    for (std::size_t i = 0; i < n_train; ++i) labels[i] = task.label(DataPart::train, i);
    weights = features::compute_class_weights(labels);
  }

  const grad::AdamConfig adam = config.adam();
  grad::OptimizerState state;
  FitResult result;
  result.params = params;
  double best = INFINITY;
  std::size_t bad_epochs = 0;
  auto order = all_indices(n_train);

  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    order_rng.shuffle(std::span(order));
    double train_total = 0.0;
    std::size_t batch_number = 0;
    for (std::size_t start = 0; start < n_train; start += config.batch_size, ++batch_number) {
      const auto batch = std::span(order).subspan(start, std::min(config.batch_size, n_train - start));
      grad::Gradients grads;
      {
        grad::Tape tape;
        grad::Var loss = task.loss(tape, params, DataPart::train, batch, weights, &noise_rng);
        const double value = loss.value().item();
        if (!std::isfinite(value)) {
          throw DivergenceError("training diverged: non-finite loss at epoch " + std::to_string(epoch) + ", batch " +
                                std::to_string(batch_number + 1));
        }
        train_total += value * static_cast<double>(batch.size());
        grads = tape.backward(loss, params);
      }
      grad::optimizer_step(adam, state, params, grads);
    }

    EpochRecord record;
    record.epoch = epoch;
    record.train_loss = train_total / static_cast<double>(n_train);
    record.dev_loss = mean_loss(task, params, DataPart::dev, config.batch_size);
    if (!std::isfinite(record.dev_loss)) {
      throw DivergenceError("training diverged: non-finite dev loss at epoch " + std::to_string(epoch));
    }
    record.train_accuracy = accuracy(task, params, DataPart::train);
    record.dev_accuracy = accuracy(task, params, DataPart::dev);
    result.history.push_back(record);

    if (record.dev_loss < best) {
      best = record.dev_loss;
      result.params = params;
      result.best_epoch = epoch;
      bad_epochs = 0;
    } else if (++bad_epochs >= config.patience) {
      result.stopped_early = true;
      break;
    }
  }
  return result;
}

}  // namespace rumourlab::models
