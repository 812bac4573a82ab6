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
#include <array>
#include <cctype>

#include "rumourlab/text_io.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::text {

namespace {

constexpr std::array<std::string_view, 34> kEmoticons = {
    ":)",  ":-)", ":(",  ":-(", ":D",  ":-D", ";)",  ";-)", ":P",  ":-P", ":p", ":-p",
    ":'(", ":/",  ":-/", ":o",  ":O",  ":-o", ":|",  ":-|", "=)",  "=(",  ":*", ":-*",
    "<3",  "</3", "XD",  "xD",  "^_^", "-_-", ":]",  ":[",  "8)",  "B)"};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

bool is_hashtag(std::string_view token) {
  if (token.size() < 2 || token[0] != '#') return false;
  return std::all_of(token.begin() + 1, token.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u) || c == '_';
  });
}

bool is_special(std::string_view token) {
  return token == kUserToken || token == kUrlToken || is_emoticon(token) ||
         is_emoji_alias(token) || is_hashtag(token);
}

}  // namespace

bool is_emoticon(std::string_view token) {
  return std::find(kEmoticons.begin(), kEmoticons.end(), token) != kEmoticons.end();
}

bool is_emoji_alias(std::string_view token) {
  if (token.size() < 3 || token.front() != ':' || token.back() != ':') return false;
  const std::string_view inner = token.substr(1, token.size() - 2);
  return std::none_of(inner.begin(), inner.end(), [](char c) { return c == ':' || is_space(c); });
}

TokenKind classify(std::string_view token) {
  if (token == kUrlToken) return TokenKind::url;
  if (token == kUserToken) return TokenKind::mention;
  if (is_emoticon(token)) return TokenKind::emoticon;
  if (is_emoji_alias(token)) return TokenKind::emoji;
  if (is_hashtag(token)) return TokenKind::hashtag;
  if (!token.empty() && std::all_of(token.begin(), token.end(), is_punct)) {
    return TokenKind::punctuation;
  }
  return TokenKind::word;
}

TokenStream tokenize(std::string_view normalized) {
  TokenStream stream;
  const auto emit = [&](std::size_t begin, std::size_t end) {
    stream.tokens.emplace_back(normalized.substr(begin, end - begin));
    stream.spans.push_back({begin, end});
  };

  std::size_t pos = 0;
  while (pos < normalized.size()) {
    if (is_space(normalized[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < normalized.size() && !is_space(normalized[end])) ++end;

    // Peel punctuation off both ends until the core is a single special token
    // or a plain word.
    std::size_t core_begin = pos;
    std::size_t core_end = end;
    std::size_t trailing = 0;
    while (core_begin < core_end) {
      const std::string_view core = normalized.substr(core_begin, core_end - core_begin);
      if (is_special(core)) break;
      if (is_punct(normalized[core_end - 1]) && core.size() > 1) {
        --core_end;
        ++trailing;
      } else if (is_punct(normalized[core_begin]) && core.size() > 1) {
        emit(core_begin, core_begin + 1);
        ++core_begin;
      } else {
        break;
      }
    }
    emit(core_begin, core_end);
    for (std::size_t k = 0; k < trailing; ++k) emit(core_end + k, core_end + k + 1);
    pos = end;
  }
  return stream;
}

std::vector<std::string> content_terms(std::string_view raw) {
  std::vector<std::string> terms;
  const TokenStream stream = tokenize(normalize(raw));
  for (const std::string& token : stream.tokens) {
    switch (classify(token)) {
      case TokenKind::word:
        terms.push_back(io::to_lower(token));
        break;
      case TokenKind::hashtag:
        terms.push_back(io::to_lower(std::string_view(token).substr(1)));
        break;
      case TokenKind::emoji:
        if (token != kUnknownEmoji) terms.push_back(io::to_lower(token.substr(1, token.size() - 2)));
        break;
      default:
        break;
    }
  }
  return terms;
}

}  // namespace rumourlab::text
