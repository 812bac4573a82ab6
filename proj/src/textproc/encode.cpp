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
#include "rumourlab/textproc.hpp"

namespace rumourlab::text {

using features::Vocabulary;

std::size_t PairEncoding::attended() const {
  return static_cast<std::size_t>(std::count(attention_mask.begin(), attention_mask.end(), 1));
}

PairEncoding encode_pair(std::span<const std::string> source_tokens,
                         std::span<const std::string> reply_tokens, const Vocabulary& vocab,
                         std::size_t max_len) {
  if (max_len < 3) throw ValidationError("encode_pair: max_len must be at least 3");

  const std::size_t source_len = std::min(source_tokens.size(), max_len - 2);
  const std::size_t reply_len = std::min(reply_tokens.size(), max_len - 2 - source_len);

  PairEncoding encoding;
  encoding.input_ids.assign(max_len, Vocabulary::kPad);
  encoding.attention_mask.assign(max_len, 0);
  encoding.segment_ids.assign(max_len, 0);

  std::size_t pos = 0;
  const auto put = [&](std::int32_t id, std::uint8_t segment) {
    encoding.input_ids[pos] = id;
    encoding.attention_mask[pos] = 1;
    encoding.segment_ids[pos] = segment;
    ++pos;
  };
  for (std::size_t i = 0; i < source_len; ++i) put(vocab.id(source_tokens[i]), 0);
  put(Vocabulary::kSeparator, 0);
  for (std::size_t i = 0; i < reply_len; ++i) put(vocab.id(reply_tokens[i]), 1);
  put(Vocabulary::kSeparator, 1);
  return encoding;
}

}  // namespace rumourlab::text
