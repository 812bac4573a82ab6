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
#include "rumourlab/grad/checkpoint.hpp"
#include "rumourlab/models.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::models {

std::string_view to_string(ClassicKind kind) {
  switch (kind) {
    case ClassicKind::logreg: return "logreg";
    case ClassicKind::svm: return "svm";
    case ClassicKind::rf: return "rf";
  }
  return "unknown";
}

ClassicKind parse_classic_kind(std::string_view text) {
  if (text == "logreg") return ClassicKind::logreg;
  if (text == "svm") return ClassicKind::svm;
  if (text == "rf") return ClassicKind::rf;
  throw ValidationError("unknown classic model '" + std::string(text) + "' (expected logreg, svm or rf)");
}

ClassicModel train_classic(ClassicKind kind, std::span<const features::FeatureRow> rows, std::span<const Label> labels,
                           const ClassicOptions& options) {
  if (rows.size() < 2 || rows.size() != labels.size()) {
    throw ValidationError("train_classic: need at least two rows with one label each");
  }
  const bool has_rumour = std::find(labels.begin(), labels.end(), Label::rumour) != labels.end();
  const bool has_nonrumour = std::find(labels.begin(), labels.end(), Label::nonrumour) != labels.end();
  if (!has_rumour || !has_nonrumour) throw ValidationError("train_classic: both classes must be present");

  std::vector<features::FeatureRow> x(rows.begin(), rows.end());
  std::vector<Label> y(labels.begin(), labels.end());
  ClassicModel model;
  model.kind = kind;
  model.dimension = x[0].size();
  for (const auto& row : x) {
    if (row.size() != model.dimension) throw ValidationError("train_classic: rows have different dimensions");
  }

  if (options.smote) features::smote_balance(x, y, options.smote_k, options.seed);
  if (options.standardize) {
    model.standardizer = features::Standardizer::fit(x);
    model.standardizer.transform_in_place(x);
  }
  std::vector<double> weights;
  if (options.class_weights) {
    const features::ClassWeights cw = features::compute_class_weights(y);
    for (Label label : y) weights.push_back(cw[label]);
  }

  switch (kind) {
    case ClassicKind::logreg: model.linear = fit_logreg(x, y, weights, options.linear); break;
    case ClassicKind::svm: model.linear = fit_svm(x, y, weights, options.linear); break;
    case ClassicKind::rf: model.forest = fit_forest(x, y, weights, options.forest, options.seed); break;
  }
  return model;
}

Prediction predict(const ClassicModel& model, std::span<const double> row) {
  if (row.size() != model.dimension) {
    throw ValidationError(std::string(to_string(model.kind)) + " expects " + std::to_string(model.dimension) +
                          " features, got " + std::to_string(row.size()));
  }
  features::FeatureRow x(row.begin(), row.end());
  if (model.standardizer.dimension() != 0) x = model.standardizer.transform(x);

  Prediction p;
  switch (model.kind) {
    case ClassicKind::logreg:
      p.score = 1.0 / (1.0 + std::exp(-model.linear.decision(x)));
      p.label = p.score >= 0.5 ? Label::rumour : Label::nonrumour;
      break;
    case ClassicKind::svm:
      p.score = model.linear.decision(x);
      p.label = p.score >= 0.0 ? Label::rumour : Label::nonrumour;
      break;
    case ClassicKind::rf:
      p.score = model.forest.rumour_vote(x);
      p.label = p.score >= 0.5 ? Label::rumour : Label::nonrumour;
      break;
  }
  return p;
}

void save_classic(const std::filesystem::path& dir, const ClassicModel& model) {
  grad::Checkpoint ckpt;
  ckpt.meta["kind"] = std::string(to_string(model.kind));
  ckpt.meta["dimension"] = std::to_string(model.dimension);
  if (model.standardizer.dimension() != 0) {
    ckpt.params["standardizer.mean"] = grad::Tensor::vector(model.standardizer.mean());
    ckpt.params["standardizer.scale"] = grad::Tensor::vector(model.standardizer.scale());
  }
  if (model.kind == ClassicKind::rf) {
    io::write_file(dir / "forest.txt", model.forest.serialize());
  } else {
    ckpt.params["linear.w"] = grad::Tensor::vector(model.linear.weights);
    ckpt.params["linear.b"] = grad::Tensor::scalar(model.linear.bias);
  }
  grad::save_checkpoint(dir / "classic.ckpt", ckpt);
}

ClassicModel load_classic(const std::filesystem::path& dir) {
  const grad::Checkpoint ckpt = grad::load_checkpoint(dir / "classic.ckpt");
  auto meta = [&](const std::string& key) -> const std::string& {
    auto it = ckpt.meta.find(key);
    if (it == ckpt.meta.end()) throw ValidationError((dir / "classic.ckpt").string() + ": missing meta '" + key + "'");
    return it->second;
  };
  auto tensor = [&](const std::string& name) -> const grad::Tensor& {
    auto it = ckpt.params.find(name);
    if (it == ckpt.params.end()) throw ValidationError((dir / "classic.ckpt").string() + ": missing '" + name + "'");
    return it->second;
  };
  ClassicModel model;
  model.kind = parse_classic_kind(meta("kind"));
  model.dimension = io::parse_uint(meta("dimension"), "dimension");
  if (ckpt.params.contains("standardizer.mean")) {
    const auto mean = tensor("standardizer.mean").values();
    const auto scale = tensor("standardizer.scale").values();
    model.standardizer = features::Standardizer({mean.begin(), mean.end()}, {scale.begin(), scale.end()});
  }
  if (model.kind == ClassicKind::rf) {
    model.forest = Forest::parse(io::read_file(dir / "forest.txt"), (dir / "forest.txt").string());
  } else {
    const auto w = tensor("linear.w").values();
    model.linear.weights.assign(w.begin(), w.end());
    model.linear.bias = tensor("linear.b").item();
  }
  return model;
}

}  // namespace rumourlab::models
