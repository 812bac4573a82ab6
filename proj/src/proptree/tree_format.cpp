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

#include <sstream>

#include "rumourlab/error.hpp"
#include "rumourlab/proptree.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::tree {

namespace {

constexpr std::string_view kCorpusHeader = "# rumourlab-tree v1";

std::string location(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line) + ": ";
}

std::size_t parse_index(std::string_view text, const std::string& where, const char* what) {
  try {
    return static_cast<std::size_t>(io::parse_uint(text, what));
  } catch (const ParseError& e) {
    throw ParseError(where + e.what());
  }
}

features::SparseVector parse_pairs(std::string_view field, const std::string& where) {
  features::SparseVector vector;
  if (field.empty()) return vector;
  for (std::string_view pair : io::split(field, ' ')) {
    const auto colon = pair.find(':');
    if (colon == std::string_view::npos) throw ParseError(where + "expected index:value, got '" + std::string(pair) + "'");
    features::SparseEntry entry;
    try {
      entry.index = static_cast<std::uint32_t>(io::parse_uint(pair.substr(0, colon), "feature index"));
      entry.value = io::parse_double(pair.substr(colon + 1), "feature value");
    } catch (const ParseError&) {
      throw ParseError(where + "bad feature pair '" + std::string(pair) + "'");
    }
    if (!vector.entries.empty() && vector.entries.back().index >= entry.index) {
      throw ParseError(where + "feature indices must be strictly ascending");
    }
    vector.entries.push_back(entry);
  }
  return vector;
}

}  // namespace

std::string serialize_tree(const PropTree& tree) {
  std::string out = tree.thread_id;
  out += '\t';
  out += tree.label ? std::string(to_string(*tree.label)) : "unknown";
  out += '\n';
  for (const PropNode& node : tree.nodes) {
    out += node.parent ? std::to_string(*node.parent) : "None";
    out += '\t';
    out += std::to_string(node.index);
    out += '\t';
    bool first = true;
    for (const features::SparseEntry& e : node.features.entries) {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(e.index);
      out += ':';
      out += io::format_double(e.value, 12);
    }
    out += '\n';
  }
  return out;
}

PropTree parse_tree(std::string_view block, const std::string& source, std::size_t first_line) {
  const auto lines = io::split_lines(block);
  if (lines.empty()) throw ParseError(location(source, first_line) + "empty tree block");

  PropTree tree;
  {
    const auto header = io::split(lines[0], '\t');
    if (header.size() != 2 || header[0].empty()) {
      throw ParseError(location(source, first_line) + "expected '<thread_id>\\t<label>'");
    }
    tree.thread_id = std::string(header[0]);
    if (header[1] != "unknown") {
      tree.label = parse_label(header[1]);
      if (!tree.label) {
        throw ParseError(location(source, first_line) + "unknown label '" + std::string(header[1]) + "'");
      }
    }
  }
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::string where = location(source, first_line + n);
    const auto fields = io::split(lines[n], '\t');
    if (fields.size() != 3) throw ParseError(where + "expected 3 tab-separated fields");
    PropNode node;
    if (fields[0] != "None") node.parent = parse_index(fields[0], where, "parent index");
    node.index = parse_index(fields[1], where, "node index");
    node.features = parse_pairs(fields[2], where);

    const std::size_t expected = tree.nodes.size() + 1;
    if (node.index != expected) {
      throw ValidationError(where + "node index " + std::to_string(node.index) + " where " +
                            std::to_string(expected) + " was expected");
    }
    if (node.index == 1 && node.parent) throw ValidationError(where + "the source node cannot have a parent");
    if (node.index > 1 && !node.parent) throw ValidationError(where + "only the source node may have parent None");
    if (node.parent && (*node.parent < 1 || *node.parent >= node.index)) {
      throw ValidationError(where + "parent " + std::to_string(*node.parent) + " must precede node " +
                            std::to_string(node.index));
    }
    tree.nodes.push_back(std::move(node));
  }
  if (tree.nodes.empty()) throw ValidationError(location(source, first_line) + "tree has no nodes");
  return tree;
}

std::string serialize_corpus(std::span<const PropTree> trees) {
  std::string out(kCorpusHeader);
  out += '\n';
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i) out += '\n';
    out += serialize_tree(trees[i]);
  }
  return out;
}

std::vector<PropTree> parse_corpus(std::string_view text, const std::string& source) {
  const auto lines = io::split_lines(text);
  if (lines.empty() || lines[0] != kCorpusHeader) {
    throw ParseError(location(source, 1) + "missing '" + std::string(kCorpusHeader) + "' header");
  }
  std::vector<PropTree> trees;
  std::size_t n = 1;
  while (n < lines.size()) {
    if (lines[n].empty()) {
      ++n;
      continue;
    }
    const std::size_t start = n;
    std::string block;
    while (n < lines.size() && !lines[n].empty()) {
      block += lines[n];
      block += '\n';
      ++n;
    }
    trees.push_back(parse_tree(block, source, start + 1));
  }
  return trees;
}

void save_corpus(const std::filesystem::path& path, std::span<const PropTree> trees) {
  io::write_file(path, serialize_corpus(trees));
}

std::vector<PropTree> load_corpus(const std::filesystem::path& path) {
  return parse_corpus(io::read_file(path), path.string());
}

}  // namespace rumourlab::tree
