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

#include "rumourlab/error.hpp"
#include "rumourlab/grad/ops.hpp"
#include "rumourlab/grad/optimizer.hpp"
#include "rumourlab/models.hpp"

namespace rumourlab::models {

namespace {

struct Design {
  grad::Tensor x;
  std::size_t n = 0;
  std::size_t d = 0;
};

Design make_design(std::span<const features::FeatureRow> rows, std::span<const Label> labels,
                   std::span<const double> sample_weights) {
  if (rows.empty() || rows.size() != labels.size()) throw ValidationError("linear: need one label per row");
  if (!sample_weights.empty() && sample_weights.size() != rows.size()) {
    throw ValidationError("linear: need one sample weight per row");
  }
  Design design;
  design.n = rows.size();
  design.d = rows[0].size();
  design.x = grad::Tensor(grad::Shape{design.n, design.d});
  for (std::size_t i = 0; i < design.n; ++i) {
    if (rows[i].size() != design.d) throw ValidationError("linear: rows have different dimensions");
    std::copy(rows[i].begin(), rows[i].end(), design.x.data() + i * design.d);
  }
  return design;
}

LinearModel to_model(const grad::ParameterSet& params) {
  LinearModel model;
  const auto w = params.at("w").values();
  model.weights.assign(w.begin(), w.end());
  model.bias = params.at("b")[0];
  return model;
}

}  // namespace

double LinearModel::decision(std::span<const double> row) const {
  if (row.size() != weights.size()) {
    throw ValidationError("linear model expects " + std::to_string(weights.size()) + " features, got " +
                          std::to_string(row.size()));
  }
  double s = bias;
  for (std::size_t j = 0; j < row.size(); ++j) s += weights[j] * row[j];
  return s;
}

LinearModel fit_logreg(std::span<const features::FeatureRow> rows, std::span<const Label> labels,
                       std::span<const double> sample_weights, const LinearOptions& options) {
  const Design design = make_design(rows, labels, sample_weights);
  std::vector<double> targets(design.n);
  for (std::size_t i = 0; i < design.n; ++i) targets[i] = labels[i] == Label::rumour ? 1.0 : 0.0;

  grad::ParameterSet params{{"w", grad::Tensor(grad::Shape{design.d, 1}, 0.0)},
                            {"b", grad::Tensor(grad::Shape{1}, 0.0)}};
  grad::AdamConfig adam;
  adam.kind = grad::OptimizerKind::adam;
  adam.lr = options.lr;
  grad::OptimizerState state;
  for (std::size_t it = 0; it < options.iterations; ++it) {
    grad::Gradients grads;
    {
      grad::Tape tape;
      grad::Var w = tape.parameter("w", params.at("w"));
      grad::Var logits = grad::add_bias(grad::matmul(tape.constant_ref(design.x), w), tape.parameter("b", params.at("b")));
      grad::Var loss = grad::bce_loss(grad::sigmoid(logits), targets, sample_weights);
      if (options.l2 > 0.0) loss = grad::add(loss, grad::scale(grad::squared_norm(w), options.l2));
      if (!std::isfinite(loss.value().item())) throw DivergenceError("logreg diverged at iteration " + std::to_string(it + 1));
      grads = tape.backward(loss, params);
    }
    grad::optimizer_step(adam, state, params, grads);
  }
  return to_model(params);
}

LinearModel fit_svm(std::span<const features::FeatureRow> rows, std::span<const Label> labels,
                    std::span<const double> sample_weights, const LinearOptions& options) {
  const Design design = make_design(rows, labels, sample_weights);
  std::vector<double> targets(design.n);
  for (std::size_t i = 0; i < design.n; ++i) targets[i] = labels[i] == Label::rumour ? 1.0 : -1.0;

  grad::ParameterSet params{{"w", grad::Tensor(grad::Shape{design.d, 1}, 0.0)},
                            {"b", grad::Tensor(grad::Shape{1}, 0.0)}};
  grad::ParameterSet best = params;
  double best_objective = INFINITY;
  for (std::size_t it = 1; it <= options.iterations; ++it) {
    grad::Gradients grads;
    {
      grad::Tape tape;
      grad::Var w = tape.parameter("w", params.at("w"));
      grad::Var scores = grad::add_bias(grad::matmul(tape.constant_ref(design.x), w), tape.parameter("b", params.at("b")));
      grad::Var objective = grad::hinge_loss(scores, targets, w, options.lambda, sample_weights);
      const double value = objective.value().item();
      if (value < best_objective) {
        best_objective = value;
        best = params;
      }
      grads = tape.backward(objective, params);
    }
    // Plain subgradient step with a 1/sqrt(t) schedule.
    const double step = options.lr / std::sqrt(static_cast<double>(it));
    for (auto& [name, tensor] : params) {
      const grad::Tensor& g = grads.at(name);
      for (std::size_t i = 0; i < tensor.size(); ++i) tensor[i] -= step * g[i];
    }
  }
  return to_model(best);
}

double hinge_loss(const LinearModel& model, std::span<const features::FeatureRow> rows, std::span<const Label> labels) {
  if (rows.empty() || rows.size() != labels.size()) throw ValidationError("hinge_loss: need one label per row");
  double total = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double y = labels[i] == Label::rumour ? 1.0 : -1.0;
    total += std::max(0.0, 1.0 - y * model.decision(rows[i]));
  }
  return total / static_cast<double>(rows.size());
}

}  // namespace rumourlab::models
