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

namespace {

bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v';
}

bool is_word_char(char32_t cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9') ||
         cp == '_';
}

bool starts_with_ci(std::u32string_view cps, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > cps.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    char32_t cp = cps[pos + k];
    if (cp >= 'A' && cp <= 'Z') cp += 'a' - 'A';
    if (cp != static_cast<unsigned char>(prefix[k])) return false;
  }
  return true;
}

// Length in code points of an unmatched emoji cluster starting at pos:
// the base, any variation selectors or skin-tone modifiers, and ZWJ joins.
std::size_t emoji_cluster(std::u32string_view cps, std::size_t pos) {
  const auto is_regional = [](char32_t cp) { return cp >= 0x1F1E6 && cp <= 0x1F1FF; };
  std::size_t end = pos + 1;
  if (is_regional(cps[pos]) && end < cps.size() && is_regional(cps[end])) ++end;
  while (end < cps.size()) {
    const char32_t cp = cps[end];
    if (cp == 0xFE0F || (cp >= 0x1F3FB && cp <= 0x1F3FF) || cp == 0x20E3) {
      ++end;
    } else if (cp == 0x200D && end + 1 < cps.size() && is_emoji_codepoint(cps[end + 1])) {
      end += 2;
    } else {
      break;
    }
  }
  return end - pos;
}

class Writer {
 public:
  void separate() { pending_space_ = true; }

  void word(std::string_view text) {
    if (pending_space_ && !out_.empty()) out_.push_back(' ');
    pending_space_ = false;
    out_.append(text);
  }

  void codepoint(char32_t cp) {
    if (pending_space_ && !out_.empty()) out_.push_back(' ');
    pending_space_ = false;
    append_utf8(out_, cp);
  }

  std::string take() { return std::move(out_); }

 private:
  std::string out_;
  bool pending_space_ = false;
};

}  // namespace

std::string normalize(std::string_view raw) { return normalize(raw, EmojiTable::bundled()); }

std::string normalize(std::string_view raw, const EmojiTable& table, NormalizeStats* stats) {
  const std::u32string cps = decode_utf8(raw);
  const std::u32string_view view(cps);
  NormalizeStats local;
  Writer out;
  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t cp = cps[i];
    const bool at_boundary = i == 0 || !is_word_char(cps[i - 1]);
    if (is_space(cp)) {
      out.separate();
      ++i;
    } else if (at_boundary && (starts_with_ci(view, i, "http://") ||
                               starts_with_ci(view, i, "https://") ||
                               starts_with_ci(view, i, "www."))) {
      out.word(kUrlToken);
      ++local.urls;
      while (i < cps.size() && !is_space(cps[i])) ++i;
    } else if (cp == '@' && at_boundary && i + 1 < cps.size() && is_word_char(cps[i + 1])) {
      out.word(kUserToken);
      ++local.mentions;
      ++i;
      while (i < cps.size() && is_word_char(cps[i])) ++i;
    } else if (std::string_view alias; std::size_t used = table.match(cps, i, &alias)) {
      out.separate();
      out.word(alias);
      out.separate();
      ++local.emojis;
      i += used;
    } else if (is_emoji_codepoint(cp)) {
      out.separate();
      out.word(kUnknownEmoji);
      out.separate();
      ++local.emojis;
      i += emoji_cluster(view, i);
    } else {
      out.codepoint(cp);
      ++i;
    }
  }
  if (stats) *stats = local;
  return out.take();
}

}  // namespace rumourlab::text
