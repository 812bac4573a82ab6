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

#include "rumourlab/analyze.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::analyze {

std::string_view to_string(Attribute attribute) {
  switch (attribute) {
    case Attribute::words: return "words";
    case Attribute::urls: return "urls";
    case Attribute::emojis: return "emojis";
    case Attribute::hashtags: return "hashtags";
    case Attribute::mentions: return "mentions";
    case Attribute::stopwords: return "stopwords";
  }
  return "unknown";
}

const std::vector<std::size_t>& bin_edges(Attribute attribute) {
  static const std::vector<std::size_t> words = {0, 5, 10, 15, 20, 30, 50};
  static const std::vector<std::size_t> urls = {0, 1, 2, 3, 5};
  static const std::vector<std::size_t> small = {0, 1, 2, 3, 5, 10};
  static const std::vector<std::size_t> stopwords = {0, 2, 4, 6, 10, 20};
  switch (attribute) {
    case Attribute::words: return words;
    case Attribute::urls: return urls;
    case Attribute::stopwords: return stopwords;
    default: return small;
  }
}

namespace {

std::size_t value_of(const text::AttributeCounts& c, Attribute a) {
  switch (a) {
    case Attribute::words: return c.words;
    case Attribute::urls: return c.urls;
    case Attribute::emojis: return c.emojis;
    case Attribute::hashtags: return c.hashtags;
    case Attribute::mentions: return c.mentions;
    case Attribute::stopwords: return c.stopwords;
  }
  return 0;
}

std::size_t bin_of(const std::vector<std::size_t>& edges, std::size_t value) {
  const auto it = std::upper_bound(edges.begin(), edges.end(), value);
  return static_cast<std::size_t>(it - edges.begin()) - 1;
}

}  // namespace

HistogramSet attribute_histograms(std::span<const AnalyzedTweet> tweets) {
  HistogramSet set;
  for (Attribute a : kAttributes) {
    AttributeHistogram h;
    h.attribute = a;
    h.rumour.assign(bin_edges(a).size(), 0);
    h.nonrumour.assign(bin_edges(a).size(), 0);
    set.histograms.push_back(std::move(h));
  }
  for (const AnalyzedTweet& tweet : tweets) {
    const text::AttributeCounts counts = text::count_attributes(tweet.text);
    const bool rumour = tweet.label == Label::rumour;
    ++(rumour ? set.rumour_total : set.nonrumour_total);
    for (AttributeHistogram& h : set.histograms) {
      const std::size_t bin = bin_of(bin_edges(h.attribute), value_of(counts, h.attribute));
      ++(rumour ? h.rumour : h.nonrumour)[bin];
    }
  }
  return set;
}

}  // namespace rumourlab::analyze
