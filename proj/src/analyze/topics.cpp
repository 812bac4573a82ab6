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
#include <map>

#include "rumourlab/analyze.hpp"
#include "rumourlab/text_io.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::analyze {

std::vector<std::string> keyword_variants(std::string_view keyword) {
  std::vector<std::string> words;
  for (std::string_view part : io::split(io::to_lower(io::trim(keyword)), ' ')) {
    if (!part.empty()) words.emplace_back(part);
  }
  std::vector<std::string> variants;
  if (words.empty()) return variants;
  for (std::string_view joiner : {"", "-", "_"}) {
    std::string v = words[0];
    for (std::size_t i = 1; i < words.size(); ++i) v += std::string(joiner) + words[i];
    if (std::find(variants.begin(), variants.end(), v) == variants.end()) variants.push_back(v);
  }
  return variants;
}

namespace {

struct Exclusions {
  std::vector<std::string> single;               // whole-token forms
  std::vector<std::vector<std::string>> phrases;  // multiword forms, matched on consecutive tokens
};

Exclusions make_exclusions(std::span<const std::string> keywords) {
  Exclusions ex;
  for (const std::string& keyword : keywords) {
    for (std::string& v : keyword_variants(keyword)) ex.single.push_back(std::move(v));
    std::vector<std::string> words;
    for (std::string_view part : io::split(io::to_lower(io::trim(keyword)), ' ')) {
      if (!part.empty()) words.emplace_back(part);
    }
    if (words.size() > 1) ex.phrases.push_back(std::move(words));
  }
  return ex;
}

std::vector<std::string> filtered_terms(std::string_view text, const Exclusions& ex) {
  const std::vector<std::string> terms = text::content_terms(text);
  std::vector<bool> drop(terms.size(), false);
  for (const auto& phrase : ex.phrases) {
    for (std::size_t i = 0; i + phrase.size() <= terms.size(); ++i) {
      if (std::equal(phrase.begin(), phrase.end(), terms.begin() + static_cast<std::ptrdiff_t>(i))) {
        std::fill_n(drop.begin() + static_cast<std::ptrdiff_t>(i), phrase.size(), true);
      }
    }
  }
  const text::StopwordList& stopwords = text::StopwordList::bundled();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (drop[i] || stopwords.contains(terms[i])) continue;
    if (std::find(ex.single.begin(), ex.single.end(), terms[i]) != ex.single.end()) continue;
    out.push_back(terms[i]);
  }
  return out;
}

RankedTerms rank(const std::map<std::string, std::size_t>& counts, std::size_t top_n) {
  RankedTerms ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > top_n) ranked.resize(top_n);
  return ranked;
}

}  // namespace

std::vector<MonthlyTermTable> monthly_top_terms(std::span<const AnalyzedTweet> tweets,
                                                std::span<const std::string> exclude, std::size_t top_n) {
  const Exclusions ex = make_exclusions(exclude);
  std::map<YearMonth, std::pair<std::map<std::string, std::size_t>, std::map<std::string, std::size_t>>> months;
  for (const AnalyzedTweet& tweet : tweets) {
    auto& [rumour, nonrumour] = months[year_month(tweet.created_at)];
    auto& counts = tweet.label == Label::rumour ? rumour : nonrumour;
    for (const std::string& term : filtered_terms(tweet.text, ex)) ++counts[term];
  }
  std::vector<MonthlyTermTable> tables;
  for (const auto& [month, counts] : months) {
    tables.push_back({month, rank(counts.first, top_n), rank(counts.second, top_n)});
  }
  return tables;
}

}  // namespace rumourlab::analyze
