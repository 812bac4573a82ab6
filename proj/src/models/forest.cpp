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
#include <cmath>
#include <numeric>

#include "rumourlab/error.hpp"
#include "rumourlab/models.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::models {

namespace {

constexpr std::string_view kForestHeader = "# rumourlab-forest v1";

double gini(double rumour, double nonrumour) {
  const double total = rumour + nonrumour;
  if (total <= 0.0) return 0.0;
  const double p = rumour / total;
  return 2.0 * p * (1.0 - p);
}

struct TreeBuilder {
  std::span<const features::FeatureRow> rows;
  std::span<const Label> labels;
  std::span<const double> weights;
  const ForestOptions& options;
  std::size_t dimension;
  std::size_t max_features;
  Rng& rng;
  std::vector<ForestNode> nodes;
  std::vector<std::size_t> feature_pool;
  std::vector<std::pair<double, std::size_t>> scratch;

  double weight(std::size_t i) const { return weights.empty() ? 1.0 : weights[i]; }

  std::int32_t build(std::vector<std::size_t>& members, std::size_t depth) {
    ForestNode node;
    for (std::size_t i : members) (labels[i] == Label::rumour ? node.rumour : node.nonrumour) += weight(i);
    const auto index = static_cast<std::int32_t>(nodes.size());
    nodes.push_back(node);

    const bool pure = node.rumour == 0.0 || node.nonrumour == 0.0;
    const bool depth_capped = options.max_depth && depth >= *options.max_depth;
    if (pure || depth_capped || members.size() < options.min_samples_split) return index;

    const double parent_impurity = gini(node.rumour, node.nonrumour);
    const double total = node.rumour + node.nonrumour;
    double best_gain = 0.0;
    std::int32_t best_feature = -1;
    double best_threshold = 0.0;

    // Partial Fisher-Yates draws max_features distinct candidates.
    for (std::size_t k = 0; k < max_features; ++k) {
      std::swap(feature_pool[k], feature_pool[k + rng.below(dimension - k)]);
      const std::size_t f = feature_pool[k];
      scratch.clear();
      for (std::size_t i : members) scratch.emplace_back(rows[i][f], i);
      std::sort(scratch.begin(), scratch.end());
      double left_r = 0.0, left_n = 0.0;
      for (std::size_t s = 0; s + 1 < scratch.size(); ++s) {
        const std::size_t i = scratch[s].second;
        (labels[i] == Label::rumour ? left_r : left_n) += weight(i);
        if (scratch[s].first == scratch[s + 1].first) continue;
        const double left = left_r + left_n;
        const double right = total - left;
        const double impurity =
            (left * gini(left_r, left_n) + right * gini(node.rumour - left_r, node.nonrumour - left_n)) / total;
        const double gain = parent_impurity - impurity;
        if (gain > best_gain + 1e-15) {
          best_gain = gain;
          best_feature = static_cast<std::int32_t>(f);
          best_threshold = 0.5 * (scratch[s].first + scratch[s + 1].first);
        }
      }
    }
    if (best_feature < 0) return index;

    std::vector<std::size_t> left_members, right_members;
    for (std::size_t i : members) {
      (rows[i][static_cast<std::size_t>(best_feature)] <= best_threshold ? left_members : right_members).push_back(i);
    }
    members.clear();
    members.shrink_to_fit();
    const std::int32_t left = build(left_members, depth + 1);
    const std::int32_t right = build(right_members, depth + 1);
    nodes[static_cast<std::size_t>(index)].feature = best_feature;
    nodes[static_cast<std::size_t>(index)].threshold = best_threshold;
    nodes[static_cast<std::size_t>(index)].left = left;
    nodes[static_cast<std::size_t>(index)].right = right;
    return index;
  }
};

bool tree_votes_rumour(const std::vector<ForestNode>& tree, std::span<const double> row) {
  std::size_t at = 0;
  while (tree[at].feature >= 0) {
    at = static_cast<std::size_t>(row[static_cast<std::size_t>(tree[at].feature)] <= tree[at].threshold ? tree[at].left
                                                                                                          : tree[at].right);
  }
  return tree[at].rumour > tree[at].nonrumour;
}

}  // namespace

Forest fit_forest(std::span<const features::FeatureRow> rows, std::span<const Label> labels,
                  std::span<const double> sample_weights, const ForestOptions& options, std::uint64_t seed) {
  if (rows.empty() || rows.size() != labels.size()) throw ValidationError("rf: need one label per row");
  if (options.n_trees == 0) throw ValidationError("rf: n_trees must be positive");
  const std::size_t d = rows[0].size();
  if (d == 0) throw ValidationError("rf: rows have no features");
  for (const auto& row : rows) {
    if (row.size() != d) throw ValidationError("rf: rows have different dimensions");
  }
  const std::size_t max_features =
      options.max_features ? std::min(options.max_features, d)
                           : std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(std::sqrt(double(d)))));

  Forest forest;
  forest.dimension = d;
  const Rng master(seed);
  for (std::size_t t = 0; t < options.n_trees; ++t) {
    Rng rng = master.derive(t + 1);
    std::vector<std::size_t> members(rows.size());
    for (std::size_t& m : members) m = rng.below(rows.size());
    TreeBuilder builder{rows, labels, sample_weights, options, d, max_features, rng, {}, {}, {}};
    builder.feature_pool.resize(d);
    std::iota(builder.feature_pool.begin(), builder.feature_pool.end(), 0);
    builder.build(members, 0);
    forest.trees.push_back(std::move(builder.nodes));
  }
  return forest;
}

double Forest::rumour_vote(std::span<const double> row) const {
  if (row.size() != dimension) {
    throw ValidationError("rf expects " + std::to_string(dimension) + " features, got " + std::to_string(row.size()));
  }
  if (trees.empty()) throw ValidationError("rf: forest has no trees");
  std::size_t votes = 0;
  for (const auto& tree : trees) votes += tree_votes_rumour(tree, row) ? 1 : 0;
  return static_cast<double>(votes) / static_cast<double>(trees.size());
}

std::string Forest::serialize() const {
  std::string out(kForestHeader);
  out += "\n# dimension " + std::to_string(dimension) + "\n# trees " + std::to_string(trees.size()) + "\n";
  for (std::size_t t = 0; t < trees.size(); ++t) {
    out += "tree " + std::to_string(t) + " " + std::to_string(trees[t].size()) + "\n";
    for (const ForestNode& n : trees[t]) {
      out += std::to_string(n.feature) + ' ' + io::format_double(n.threshold) + ' ' + std::to_string(n.left) + ' ' +
             std::to_string(n.right) + ' ' + io::format_double(n.rumour) + ' ' + io::format_double(n.nonrumour) + '\n';
    }
  }
  return out;
}

Forest Forest::parse(std::string_view text, const std::string& source) {
  const auto lines = io::split_lines(text);
  auto fail = [&](std::size_t line, const std::string& what) -> ParseError {
    return ParseError(source + ":" + std::to_string(line + 1) + ": " + what);
  };
  if (lines.size() < 3 || lines[0] != kForestHeader) throw fail(0, "missing forest header");
  if (!lines[1].starts_with("# dimension ") || !lines[2].starts_with("# trees ")) throw fail(1, "missing forest metadata");
  Forest forest;
  forest.dimension = io::parse_uint(std::string_view(lines[1]).substr(12), "dimension");
  const std::size_t n_trees = io::parse_uint(std::string_view(lines[2]).substr(8), "tree count");
  std::size_t at = 3;
  for (std::size_t t = 0; t < n_trees; ++t) {
    if (at >= lines.size()) throw fail(at, "truncated forest");
    const auto head = io::split(lines[at], ' ');
    if (head.size() != 3 || head[0] != "tree") throw fail(at, "expected 'tree <k> <nodes>'");
    const std::size_t count = io::parse_uint(head[2], "node count");
    ++at;
    std::vector<ForestNode> nodes;
    for (std::size_t k = 0; k < count; ++k, ++at) {
      if (at >= lines.size()) throw fail(at, "truncated tree");
      const auto f = io::split(lines[at], ' ');
      if (f.size() != 6) throw fail(at, "expected 6 fields per node");
      ForestNode node;
      node.feature = static_cast<std::int32_t>(io::parse_int(f[0], "feature"));
      node.threshold = io::parse_double(f[1], "threshold");
      node.left = static_cast<std::int32_t>(io::parse_int(f[2], "left child"));
      node.right = static_cast<std::int32_t>(io::parse_int(f[3], "right child"));
      node.rumour = io::parse_double(f[4], "rumour count");
      node.nonrumour = io::parse_double(f[5], "nonrumour count");
      if (node.feature >= static_cast<std::int64_t>(forest.dimension)) throw fail(at, "feature index out of range");
      if (node.feature >= 0 && (node.left <= static_cast<std::int32_t>(k) || node.right <= static_cast<std::int32_t>(k) ||
                                node.left >= static_cast<std::int32_t>(count) ||
                                node.right >= static_cast<std::int32_t>(count))) {
        throw fail(at, "child offsets must point forward inside the tree");
      }
      nodes.push_back(node);
    }
    if (nodes.empty()) throw fail(at, "empty tree");
    forest.trees.push_back(std::move(nodes));
  }
  return forest;
}

}  // namespace rumourlab::models
