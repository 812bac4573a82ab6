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

#include "rumourlab/textproc.hpp"

namespace rumourlab::text {

AttributeCounts count_attributes(std::string_view raw) {
  return count_attributes(raw, EmojiTable::bundled(), StopwordList::bundled());
}

AttributeCounts count_attributes(std::string_view raw, const EmojiTable& emoji,
                                 const StopwordList& stopwords) {
  NormalizeStats stats;
  const std::string normalized = normalize(raw, emoji, &stats);
  AttributeCounts counts;
  counts.urls = stats.urls;
  counts.mentions = stats.mentions;
  counts.emojis = stats.emojis;
  for (const std::string& token : tokenize(normalized).tokens) {
    switch (classify(token)) {
      case TokenKind::hashtag:
        ++counts.hashtags;
        break;
      case TokenKind::word:
        ++counts.words;
        if (stopwords.contains(token)) ++counts.stopwords;
        break;
      default:
        break;
    }
  }
  return counts;
}

}  // namespace rumourlab::text
