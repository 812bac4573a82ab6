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
#include "rumourlab/features.hpp"

namespace rumourlab::features {

ClassWeights compute_class_weights(std::span<const Label> labels) {
  std::size_t rumours = 0;
  for (Label label : labels) rumours += label == Label::rumour ? 1 : 0;
  const std::size_t others = labels.size() - rumours;
  if (rumours == 0 || others == 0) {
    throw ValidationError("class weights: both classes must be present");
  }
  const double n = static_cast<double>(labels.size());
  return {n / (2.0 * static_cast<double>(rumours)), n / (2.0 * static_cast<double>(others))};
}

Standardizer::Standardizer(std::vector<double> mean, std::vector<double> scale)
    : mean_(std::move(mean)), scale_(std::move(scale)) {
  if (mean_.size() != scale_.size()) throw ValidationError("standardizer: mean/scale size mismatch");
}

Standardizer Standardizer::fit(std::span<const FeatureRow> rows) {
  if (rows.empty()) throw ValidationError("standardizer: no rows");
  const std::size_t dim = rows.front().size();
  std::vector<double> mean(dim, 0.0);
  std::vector<double> scale(dim, 0.0);
  for (const FeatureRow& row : rows) {
    for (std::size_t d = 0; d < dim; ++d) mean[d] += row[d];
  }
  const double n = static_cast<double>(rows.size());
  for (double& m : mean) m /= n;
  for (const FeatureRow& row : rows) {
    for (std::size_t d = 0; d < dim; ++d) scale[d] += (row[d] - mean[d]) * (row[d] - mean[d]);
  }
  for (double& s : scale) {
    s = std::sqrt(s / n);
    if (s < 1e-12) s = 1.0;
  }
  return Standardizer(std::move(mean), std::move(scale));
}

FeatureRow Standardizer::transform(std::span<const double> row) const {
  if (row.size() != mean_.size()) {
    throw ValidationError("standardizer: expected dimension " + std::to_string(mean_.size()) +
                          ", got " + std::to_string(row.size()));
  }
  FeatureRow out(row.size());
  for (std::size_t d = 0; d < row.size(); ++d) out[d] = (row[d] - mean_[d]) / scale_[d];
  return out;
}

void Standardizer::transform_in_place(std::vector<FeatureRow>& rows) const {
  for (FeatureRow& row : rows) row = transform(row);
}

}  // namespace rumourlab::features
