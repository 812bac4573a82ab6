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

#include <unordered_map>

#include "rumourlab/proptree.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::tree {

PropTree build_tree(const ingest::Thread& thread, const features::TfidfModel& model,
                    const TreeOptions& options) {
  PropTree tree;
  tree.thread_id = thread.id();
  tree.label = thread.label;
  tree.nodes.reserve(thread.replies.size() + 1);

  auto features_of = [&](const ingest::TweetRecord& tweet) {
    const auto terms = text::content_terms(tweet.text);
    return features::transform_tfidf(model, terms, options.weighting);
  };

  std::unordered_map<std::string, std::size_t> position{{thread.source.id, 1}};
  tree.nodes.push_back({std::nullopt, 1, features_of(thread.source)});
  for (const ingest::TweetRecord& reply : thread.replies) {
    const std::size_t index = tree.nodes.size() + 1;
    std::size_t parent = 1;
    if (options.keep_reply_links && reply.parent_id) {
      auto it = position.find(*reply.parent_id);
      if (it != position.end()) parent = it->second;
    }
    position.emplace(reply.id, index);
    tree.nodes.push_back({parent, index, features_of(reply)});
  }
  return tree;
}

}  // namespace rumourlab::tree
