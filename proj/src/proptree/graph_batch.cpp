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
#include "rumourlab/proptree.hpp"
#include "rumourlab/random.hpp"

namespace rumourlab::tree {

std::pair<grad::SparseMatrix, grad::SparseMatrix> normalized_adjacency(
    std::size_t num_nodes, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<double> degree(num_nodes, 1.0);
  for (const auto& [parent, child] : edges) {
    if (parent >= num_nodes || child >= num_nodes) throw ValidationError("edge endpoint outside the batch");
    degree[parent] += 1.0;
    degree[child] += 1.0;
  }
  std::vector<double> inv_sqrt(num_nodes);
  for (std::size_t i = 0; i < num_nodes; ++i) inv_sqrt[i] = 1.0 / std::sqrt(degree[i]);

  std::vector<grad::Triplet> td;
  td.reserve(num_nodes + edges.size());
  for (std::size_t i = 0; i < num_nodes; ++i) td.push_back({i, i, inv_sqrt[i] * inv_sqrt[i]});
  for (const auto& [parent, child] : edges) td.push_back({child, parent, inv_sqrt[child] * inv_sqrt[parent]});
  grad::SparseMatrix top_down(num_nodes, num_nodes, std::move(td));
  grad::SparseMatrix bottom_up = top_down.transpose();
  return {std::move(top_down), std::move(bottom_up)};
}

GraphBatch to_graph_batch(std::span<const PropTree> trees, std::size_t vocab_size) {
  GraphBatch batch;
  batch.num_graphs = trees.size();
  batch.vocab_size = vocab_size;
  std::vector<grad::Triplet> feature_entries;
  for (std::size_t g = 0; g < trees.size(); ++g) {
    const PropTree& tree = trees[g];
    const std::size_t offset = batch.num_nodes;
    batch.offsets.push_back(offset);
    batch.roots.push_back(offset);
    for (const PropNode& node : tree.nodes) {
      const std::size_t row = offset + node.index - 1;
      batch.membership.push_back(g);
      if (node.parent) batch.edges.emplace_back(offset + *node.parent - 1, row);
      for (const features::SparseEntry& e : node.features.entries) {
        if (e.index >= vocab_size) {
          throw ValidationError("tree " + tree.thread_id + ": feature index " + std::to_string(e.index) +
                                " outside vocabulary of " + std::to_string(vocab_size));
        }
        feature_entries.push_back({row, e.index, e.value});
      }
    }
    batch.num_nodes += tree.nodes.size();
  }
  batch.features = grad::SparseMatrix(batch.num_nodes, vocab_size, std::move(feature_entries));
  std::tie(batch.td, batch.bu) = normalized_adjacency(batch.num_nodes, batch.edges);
  return batch;
}

GraphBatch drop_edge(const GraphBatch& batch, double rate, std::uint64_t seed) {
  if (!(rate >= 0.0 && rate < 1.0)) throw ValidationError("drop_edge: rate must lie in [0, 1)");
  GraphBatch out = batch;
  if (rate == 0.0) return out;
  Rng rng(seed);
  out.edges.clear();
  for (const auto& edge : batch.edges) {
    if (!rng.bernoulli(rate)) out.edges.push_back(edge);
  }
  std::tie(out.td, out.bu) = normalized_adjacency(out.num_nodes, out.edges);
  return out;
}

}  // namespace rumourlab::tree
