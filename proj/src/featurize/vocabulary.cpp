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
#include <ostream>

#include "rumourlab/error.hpp"
#include "rumourlab/features.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::features {

namespace {

constexpr std::string_view kReservedHeader[] = {"#0\t<pad>", "#1\t<unk>", "#2\t<sep>"};

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> terms) : terms_(std::move(terms)) {
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].empty()) throw ValidationError("vocabulary term " + std::to_string(i) + " is empty");
    if (!index_.emplace(terms_[i], i).second) {
      throw ValidationError("duplicate vocabulary term '" + terms_[i] + "'");
    }
  }
}

Vocabulary Vocabulary::build(std::span<const std::vector<std::string>> docs, std::size_t max_terms) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& doc : docs) {
    for (const std::string& token : doc) ++counts[io::to_lower(token)];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (ranked.size() > max_terms) ranked.resize(max_terms);
  std::vector<std::string> terms;
  terms.reserve(ranked.size());
  for (auto& entry : ranked) terms.push_back(std::move(entry.first));
  return Vocabulary(std::move(terms));
}

std::int32_t Vocabulary::id(std::string_view token) const {
  const auto index = content_index(token);
  return index ? static_cast<std::int32_t>(*index) + kFirstContent : kUnknown;
}

std::optional<std::size_t> Vocabulary::content_index(std::string_view token) const {
  const auto it = index_.find(io::to_lower(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Vocabulary::save(std::ostream& out) const {
  for (std::string_view line : kReservedHeader) out << line << '\n';
  for (const std::string& term : terms_) out << term << '\n';
}

Vocabulary Vocabulary::parse(std::string_view text) {
  const auto lines = io::split_lines(text);
  if (lines.size() < 3) throw ParseError("vocabulary: missing reserved-id header");
  for (std::size_t i = 0; i < 3; ++i) {
    if (lines[i] != kReservedHeader[i]) {
      throw ParseError("vocabulary line " + std::to_string(i + 1) + ": expected reserved id header");
    }
  }
  return Vocabulary(std::vector<std::string>(lines.begin() + 3, lines.end()));
}

}  // namespace rumourlab::features
