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

#include <algorithm>
#include <numeric>

#include "rumourlab/error.hpp"
#include "rumourlab/features.hpp"
#include "rumourlab/random.hpp"

namespace rumourlab::features {

namespace {

double squared_distance(const FeatureRow& a, const FeatureRow& b) {
  double sum = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return sum;
}

// k nearest neighbours of every point, excluding itself; distance ties break
// by index.
std::vector<std::vector<std::size_t>> nearest_neighbours(std::span<const FeatureRow> points,
                                                         std::size_t k) {
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> result(n);
  std::vector<std::pair<double, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    candidates.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) candidates.emplace_back(squared_distance(points[i], points[j]), j);
    }
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                      candidates.end());
    for (std::size_t m = 0; m < k; ++m) result[i].push_back(candidates[m].second);
  }
  return result;
}

}  // namespace

std::vector<FeatureRow> smote_oversample(std::span<const FeatureRow> minority, std::size_t k,
                                         std::size_t n_new, std::uint64_t seed) {
  if (minority.size() < 2) throw ValidationError("smote: at least 2 minority points are required");
  if (k < 1 || k > minority.size() - 1) {
    throw ValidationError("smote: k must be in [1, " + std::to_string(minority.size() - 1) + "]");
  }
  const std::size_t dim = minority.front().size();
  for (const FeatureRow& row : minority) {
    if (row.size() != dim) throw ValidationError("smote: rows have differing dimensions");
  }
  std::vector<FeatureRow> synthetic;
  if (n_new == 0) return synthetic;

  const auto neighbours = nearest_neighbours(minority, k);
  Rng rng(seed);
  synthetic.reserve(n_new);
  for (std::size_t s = 0; s < n_new; ++s) {
    const std::size_t i = rng.below(minority.size());
    const FeatureRow& base = minority[i];
    const FeatureRow& other = minority[neighbours[i][rng.below(k)]];
    const double u = rng.uniform();
    FeatureRow point(dim);
    for (std::size_t d = 0; d < dim; ++d) point[d] = base[d] + u * (other[d] - base[d]);
    synthetic.push_back(std::move(point));
  }
  return synthetic;
}

void smote_balance(std::vector<FeatureRow>& rows, std::vector<Label>& labels, std::size_t k,
                   std::uint64_t seed) {
  if (rows.size() != labels.size()) throw ValidationError("smote: rows and labels differ in length");
  const auto rumours = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), Label::rumour));
  const std::size_t others = labels.size() - rumours;
  if (rumours == others) return;
  const Label minority_label = rumours < others ? Label::rumour : Label::nonrumour;
  std::vector<FeatureRow> minority;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (labels[i] == minority_label) minority.push_back(rows[i]);
  }
  const std::size_t n_new = std::max(rumours, others) - minority.size();
  const std::size_t effective_k = minority.size() < 2 ? 1 : std::min(k, minority.size() - 1);
  for (FeatureRow& row : smote_oversample(minority, effective_k, n_new, seed)) {
    rows.push_back(std::move(row));
    labels.push_back(minority_label);
  }
}

}  // namespace rumourlab::features
