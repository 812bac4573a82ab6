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

#include "rumourlab/error.hpp"
#include "rumourlab/resources.hpp"
#include "rumourlab/text_io.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::text {

namespace {

constexpr char32_t kVariationSelector = 0xFE0F;
// Invalid UTF-8 bytes are carried as U+DC80..U+DCFF and re-emitted verbatim.
constexpr char32_t kEscapeBase = 0xDC00;

std::string version_line(std::string_view text) {
  const std::string_view first = text.substr(0, text.find('\n'));
  return first.starts_with("# ") ? std::string(io::trim(first.substr(2))) : std::string();
}

}  // namespace

std::u32string decode_utf8(std::string_view text, std::vector<std::size_t>* offsets) {
  std::u32string out;
  out.reserve(text.size());
  if (offsets) offsets->clear();
  std::size_t i = 0;
  while (i < text.size()) {
    const auto byte = static_cast<unsigned char>(text[i]);
    std::size_t length = 0;
    char32_t cp = 0;
    if (byte < 0x80) {
      length = 1;
      cp = byte;
    } else if ((byte & 0xE0) == 0xC0) {
      length = 2;
      cp = byte & 0x1F;
    } else if ((byte & 0xF0) == 0xE0) {
      length = 3;
      cp = byte & 0x0F;
    } else if ((byte & 0xF8) == 0xF0) {
      length = 4;
      cp = byte & 0x07;
    }
    bool valid = length > 0 && i + length <= text.size();
    for (std::size_t k = 1; valid && k < length; ++k) {
      const auto next = static_cast<unsigned char>(text[i + k]);
      if ((next & 0xC0) != 0x80) {
        valid = false;
      } else {
        cp = (cp << 6) | (next & 0x3F);
      }
    }
    if (valid && length > 1) {
      static constexpr char32_t kMinimum[] = {0, 0, 0x80, 0x800, 0x10000};
      valid = cp >= kMinimum[length] && cp <= 0x10FFFF && (cp < 0xD800 || cp > 0xDFFF);
    }
    if (!valid) {
      length = 1;
      cp = kEscapeBase + byte;
    }
    if (offsets) offsets->push_back(i);
    out.push_back(cp);
    i += length;
  }
  if (offsets) offsets->push_back(text.size());
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp >= kEscapeBase + 0x80 && cp <= kEscapeBase + 0xFF) {
    out.push_back(static_cast<char>(cp - kEscapeBase));
  } else if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_emoji_codepoint(char32_t cp) {
  return (cp >= 0x1F000 && cp <= 0x1FAFF) || (cp >= 0x2600 && cp <= 0x27BF);
}

EmojiTable EmojiTable::parse(std::string_view tsv) {
  EmojiTable table;
  table.version_ = version_line(tsv);
  std::size_t line_number = 0;
  for (const std::string& line : io::split_lines(tsv)) {
    ++line_number;
    if (line.empty() || line.starts_with("#")) continue;
    const auto fields = io::split(line, '\t');
    if (fields.size() != 2 || fields[1].empty()) {
      throw ParseError("emoji table line " + std::to_string(line_number) + ": expected 2 fields");
    }
    std::u32string key;
    for (std::string_view hex : io::split(fields[0], ' ')) {
      if (hex.empty()) continue;
      std::uint64_t value = 0;
      for (char c : hex) {
        const int digit = (c >= '0' && c <= '9')   ? c - '0'
                          : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                          : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                                                   : -1;
        if (digit < 0) {
          throw ParseError("emoji table line " + std::to_string(line_number) + ": bad code point");
        }
        value = value * 16 + static_cast<std::uint64_t>(digit);
      }
      if (value != kVariationSelector) key.push_back(static_cast<char32_t>(value));
    }
    if (key.empty()) continue;
    table.longest_ = std::max(table.longest_, key.size());
    table.aliases_.emplace(std::move(key), std::string(fields[1]));
  }
  return table;
}

const EmojiTable& EmojiTable::bundled() {
  static const EmojiTable table = parse(resources::emoji_aliases_tsv());
  return table;
}

std::size_t EmojiTable::match(std::span<const char32_t> cps, std::size_t pos,
                              std::string_view* alias) const {
  // Collect up to longest_ code points, skipping variation selectors, and
  // remember where each one ends in the original sequence.
  std::u32string key;
  std::vector<std::size_t> ends;
  for (std::size_t i = pos; i < cps.size() && key.size() < longest_; ++i) {
    if (cps[i] == kVariationSelector) {
      if (key.empty()) return 0;
      continue;
    }
    key.push_back(cps[i]);
    ends.push_back(i + 1);
  }
  for (std::size_t length = key.size(); length > 0; --length) {
    const auto it = aliases_.find(key.substr(0, length));
    if (it == aliases_.end()) continue;
    std::size_t end = ends[length - 1];
    while (end < cps.size() && cps[end] == kVariationSelector) ++end;
    if (alias) *alias = it->second;
    return end - pos;
  }
  return 0;
}

StopwordList StopwordList::parse(std::string_view text) {
  StopwordList list;
  list.version_ = version_line(text);
  for (const std::string& line : io::split_lines(text)) {
    const std::string_view word = io::trim(line);
    if (word.empty() || word.starts_with("#")) continue;
    list.words_.insert(io::to_lower(word));
  }
  return list;
}

const StopwordList& StopwordList::bundled() {
  static const StopwordList list = parse(resources::stopwords_txt());
  return list;
}

bool StopwordList::contains(std::string_view word) const {
  return words_.contains(io::to_lower(word));
}

}  // namespace rumourlab::text
