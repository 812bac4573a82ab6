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
#include <unordered_map>

#include "rumourlab/error.hpp"
#include "rumourlab/ingest.hpp"

namespace rumourlab::ingest {

namespace {

constexpr std::size_t kUnresolved = static_cast<std::size_t>(-1);
constexpr std::size_t kOrphan = static_cast<std::size_t>(-2);

}  // namespace

AssemblyResult assemble_threads(std::span<const TweetRecord> records) {
  std::unordered_map<std::string_view, std::size_t> by_id;
  by_id.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) by_id.emplace(records[i].id, i);

  // root[i]: index of the source record that i resolves to.
  std::vector<std::size_t> root(records.size(), kUnresolved);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < records.size(); ++start) {
    if (root[start] != kUnresolved) continue;
    path.clear();
    std::size_t current = start;
    std::size_t resolved = kUnresolved;
    while (true) {
      if (root[current] != kUnresolved) {
        resolved = root[current];
        break;
      }
      if (records[current].is_source()) {
        resolved = current;
        break;
      }
      if (const auto seen = std::find(path.begin(), path.end(), current); seen != path.end()) {
        std::string cycle;
        for (auto it = seen; it != path.end(); ++it) cycle += records[*it].id + " -> ";
        cycle += records[current].id;
        throw ValidationError("cyclic parent links: " + cycle);
      }
      path.push_back(current);
      const auto parent = by_id.find(*records[current].parent_id);
      if (parent == by_id.end()) {
        resolved = kOrphan;
        break;
      }
      current = parent->second;
    }
    for (std::size_t node : path) root[node] = resolved;
    root[current] = root[current] == kUnresolved ? resolved : root[current];
  }

  AssemblyResult result;
  std::unordered_map<std::size_t, std::vector<std::size_t>> replies_of;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].is_source()) continue;
    if (root[i] == kOrphan) {
      ++result.orphaned_replies;
    } else if (records[i].created_at < records[root[i]].created_at) {
      ++result.early_replies;
    } else {
      replies_of[root[i]].push_back(i);
    }
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].is_source()) continue;
    Thread thread;
    thread.source = records[i];
    thread.label = records[i].label;
    if (auto it = replies_of.find(i); it != replies_of.end()) {
      for (std::size_t r : it->second) thread.replies.push_back(records[r]);
    }
    std::sort(thread.replies.begin(), thread.replies.end(),
              [](const TweetRecord& a, const TweetRecord& b) {
                if (a.created_at != b.created_at) return a.created_at < b.created_at;
                return a.id < b.id;
              });
    (thread.label ? result.threads : result.unlabeled).push_back(std::move(thread));
  }
  return result;
}

}  // namespace rumourlab::ingest
