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
#include <utility>
#include <vector>

#include "rumourlab/features.hpp"
#include "rumourlab/grad/sparse.hpp"
#include "rumourlab/ingest.hpp"

namespace rumourlab::tree {

struct PropNode {
  std::optional<std::size_t> parent;  // 1-based; absent for the source
  std::size_t index = 1;              // 1-based
  features::SparseVector features;

  bool operator==(const PropNode&) const = default;
};

// Node 1 is the source; nodes 2..n are the replies in time order.
struct PropTree {
  std::string thread_id;
  std::optional<Label> label;  // written as "unknown" when absent
  std::vector<PropNode> nodes;

  std::size_t size() const { return nodes.size(); }
  bool operator==(const PropTree&) const = default;
};

struct TreeOptions {
  // By default every reply hangs off the source. With this set, a reply whose
  // parent is an earlier tweet of the same thread keeps that link.
  bool keep_reply_links = false;
  features::TermWeighting weighting = features::TermWeighting::tfidf;
};

PropTree build_tree(const ingest::Thread& thread, const features::TfidfModel& model,
                    const TreeOptions& options = {});

// Header `<thread_id>\t<label>` followed by `<parent|None>\t<index>\t<i:v ...>`
// per node, values at 12 significant digits. Ends with a newline.
std::string serialize_tree(const PropTree& tree);
// `first_line` is the line number of the block's header inside `source`,
// used in error messages.
PropTree parse_tree(std::string_view block, const std::string& source = "<tree>", std::size_t first_line = 1);

// Corpus files: `# rumourlab-tree v1`, then tree blocks separated by blank lines.
std::string serialize_corpus(std::span<const PropTree> trees);
std::vector<PropTree> parse_corpus(std::string_view text, const std::string& source = "<trees>");
void save_corpus(const std::filesystem::path& path, std::span<const PropTree> trees);
std::vector<PropTree> load_corpus(const std::filesystem::path& path);

// Node features and the two propagation operators of a batch of trees.
// Operators are laid out so that row r aggregates messages received by node
// r: td holds entry [child][parent] for every edge and bu is its transpose.
// Both add self-loops and scale by D^-1/2 on each side, with D the degree of
// the undirected support A + A^T + I, so bu equals td transposed exactly.
struct GraphBatch {
  std::size_t num_graphs = 0;
  std::size_t num_nodes = 0;
  std::size_t vocab_size = 0;
  grad::SparseMatrix features;  // num_nodes x vocab_size
  grad::SparseMatrix td;
  grad::SparseMatrix bu;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (parent, child), batch indices
  std::vector<std::size_t> membership;                      // node -> graph
  std::vector<std::size_t> roots;                           // graph -> node of its source
  std::vector<std::size_t> offsets;                         // graph -> first node
};

GraphBatch to_graph_batch(std::span<const PropTree> trees, std::size_t vocab_size);

// Normalized td and bu operators for `num_nodes` nodes and the given
// (parent, child) edges.
std::pair<grad::SparseMatrix, grad::SparseMatrix> normalized_adjacency(
    std::size_t num_nodes, std::span<const std::pair<std::size_t, std::size_t>> edges);

// Removes each edge with probability `rate` (one draw per edge, shared by td
// and bu) and renormalizes. Self-loops always survive.
GraphBatch drop_edge(const GraphBatch& batch, double rate, std::uint64_t seed);

}  // namespace rumourlab::tree
