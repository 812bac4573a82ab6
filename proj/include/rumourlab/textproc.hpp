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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rumourlab::features {
class Vocabulary;
}

namespace rumourlab::text {

inline constexpr std::string_view kUserToken = "@USER";
inline constexpr std::string_view kUrlToken = "HTTPURL";
inline constexpr std::string_view kUnknownEmoji = ":emoji:";

// Emoji sequence -> alias table. Keys are code point sequences with U+FE0F
// (variation selector 16) removed; lookups strip it the same way.
class EmojiTable {
 public:
  // `# ...` comment lines, then `<hex cp> [<hex cp>...]\t<alias>` rows.
  static EmojiTable parse(std::string_view tsv);
  static const EmojiTable& bundled();

  // Longest table entry starting at code point `pos`; returns the number of
  // code points consumed (0 when nothing matches).
  std::size_t match(std::span<const char32_t> cps, std::size_t pos, std::string_view* alias) const;

  std::size_t size() const { return aliases_.size(); }
  std::string_view version() const { return version_; }

 private:
  std::unordered_map<std::u32string, std::string> aliases_;
  std::size_t longest_ = 0;
  std::string version_;
};

// Case-insensitive word list.
class StopwordList {
 public:
  static StopwordList parse(std::string_view text);
  static const StopwordList& bundled();

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  std::string_view version() const { return version_; }

 private:
  std::unordered_set<std::string> words_;
  std::string version_;
};

// Counts of the replacements made while normalizing.
struct NormalizeStats {
  std::size_t urls = 0;
  std::size_t mentions = 0;
  std::size_t emojis = 0;
};

// Mentions become @USER, URLs become HTTPURL, emoji become their colon
// alias (unknown emoji become :emoji:), whitespace runs collapse to one space
// and the result is trimmed. Idempotent.
std::string normalize(std::string_view raw);
std::string normalize(std::string_view raw, const EmojiTable& table, NormalizeStats* stats = nullptr);

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct TokenStream {
  std::vector<std::string> tokens;
  // Byte offsets into the normalized text.
  std::vector<Span> spans;

  std::size_t size() const { return tokens.size(); }
};

enum class TokenKind { word, punctuation, hashtag, mention, url, emoji, emoticon };

TokenStream tokenize(std::string_view normalized);
TokenKind classify(std::string_view token);

bool is_emoticon(std::string_view token);
bool is_emoji_alias(std::string_view token);

// Lowercased terms of a raw tweet: words, hashtags without the '#', and the
// names of known emoji. The unit counted by TF-IDF and topic tables.
std::vector<std::string> content_terms(std::string_view raw);

struct AttributeCounts {
  std::size_t words = 0;
  std::size_t urls = 0;
  std::size_t emojis = 0;
  std::size_t hashtags = 0;
  std::size_t mentions = 0;
  std::size_t stopwords = 0;

  bool operator==(const AttributeCounts&) const = default;
};

// URLs, mentions and emoji are counted on the raw text; hashtags, words and
// stopwords on its token stream.
AttributeCounts count_attributes(std::string_view raw);
AttributeCounts count_attributes(std::string_view raw, const EmojiTable& emoji,
                                 const StopwordList& stopwords);

struct PairEncoding {
  std::vector<std::int32_t> input_ids;
  std::vector<std::uint8_t> attention_mask;
  std::vector<std::uint8_t> segment_ids;

  std::size_t attended() const;
};

// Layout: [source, SEP, reply, SEP], truncated from the reply end (then from
// the source end) to fit max_len, padded with the pad id.
PairEncoding encode_pair(std::span<const std::string> source_tokens,
                         std::span<const std::string> reply_tokens,
                         const features::Vocabulary& vocab, std::size_t max_len);

// UTF-8 helpers. Invalid bytes decode to themselves as single code points so
// text round-trips unchanged.
std::u32string decode_utf8(std::string_view text, std::vector<std::size_t>* offsets = nullptr);
void append_utf8(std::string& out, char32_t cp);

// Pictographic ranges treated as emoji when no table entry matches.
bool is_emoji_codepoint(char32_t cp);

}  // namespace rumourlab::text
