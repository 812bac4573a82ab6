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
#include "rumourlab/evalrun.hpp"

namespace rumourlab::eval {

double precision(const ClassCounts& c) {
  const std::size_t denom = c.tp + c.fp;
  return denom == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(denom);
}

double recall(const ClassCounts& c) {
  const std::size_t denom = c.tp + c.fn;
  return denom == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(denom);
}

double f1_score(double p, double r) {
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

ConfusionCounts count_confusion(std::span<const Label> predictions, std::span<const Label> truth) {
  if (predictions.size() != truth.size()) {
    throw ValidationError("compute_report: " + std::to_string(predictions.size()) + " predictions for " +
                          std::to_string(truth.size()) + " labels");
  }
  ConfusionCounts counts;
  counts.total = truth.size();
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool predicted_rumour = predictions[i] == Label::rumour;
    const bool is_rumour = truth[i] == Label::rumour;
    if (predicted_rumour && is_rumour) {
      ++counts.rumour.tp;
      ++counts.nonrumour.tn;
    } else if (predicted_rumour) {
      ++counts.rumour.fp;
      ++counts.nonrumour.fn;
    } else if (is_rumour) {
      ++counts.rumour.fn;
      ++counts.nonrumour.fp;
    } else {
      ++counts.rumour.tn;
      ++counts.nonrumour.tp;
    }
  }
  return counts;
}

namespace {

ClassRow make_row(const ClassCounts& c) {
  ClassRow row;
  row.precision = precision(c);
  row.recall = recall(c);
  row.f1 = f1_score(row.precision, row.recall);
  row.support = c.tp + c.fn;
  return row;
}

}  // namespace

Report compute_report(std::span<const Label> predictions, std::span<const Label> truth) {
  if (truth.empty()) throw ValidationError("compute_report: no examples");
  Report report;
  report.counts = count_confusion(predictions, truth);
  report.rumour = make_row(report.counts.rumour);
  report.nonrumour = make_row(report.counts.nonrumour);
  report.accuracy = static_cast<double>(report.counts.rumour.tp + report.counts.rumour.tn) /
                    static_cast<double>(report.counts.total);
  return report;
}

std::vector<Label> majority_vote(std::span<const std::vector<Label>> runs) {
  if (runs.empty()) throw ValidationError("majority_vote: no runs");
  const std::size_t n = runs[0].size();
  for (const auto& run : runs) {
    if (run.size() != n) throw ValidationError("majority_vote: runs have different lengths");
  }
  std::vector<Label> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rumour_votes = 0;
    for (const auto& run : runs) rumour_votes += run[i] == Label::rumour ? 1 : 0;
    out[i] = 2 * rumour_votes > runs.size() ? Label::rumour : Label::nonrumour;
  }
  return out;
}

}  // namespace rumourlab::eval
