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

namespace rumourlab::analyze {

namespace {

double dimension_value(const ScoredTweet& t, std::size_t d) {
  switch (d) {
    case 0: return t.emotion.happy;
    case 1: return t.emotion.angry;
    case 2: return t.emotion.surprise;
    case 3: return t.emotion.sad;
    case 4: return t.emotion.fear;
    default: return t.sentiment.compound;
  }
}

}  // namespace

std::vector<SeriesPoint> monthly_average_scores(std::span<const ScoredTweet> tweets) {
  std::vector<SeriesPoint> series;
  if (tweets.empty()) return series;

  struct Accumulator {
    std::array<double, kSeriesDimensions.size()> sums{};
    std::size_t n = 0;
  };
  std::map<std::pair<YearMonth, Label>, Accumulator> cells;
  YearMonth first = year_month(tweets[0].created_at), last = first;
  for (const ScoredTweet& t : tweets) {
    const YearMonth ym = year_month(t.created_at);
    first = std::min(first, ym);
    last = std::max(last, ym);
    Accumulator& acc = cells[{ym, t.label}];
    for (std::size_t d = 0; d < kSeriesDimensions.size(); ++d) acc.sums[d] += dimension_value(t, d);
    ++acc.n;
  }
  for (YearMonth ym = first; ym <= last; ym = ym.next()) {
    for (Label label : {Label::rumour, Label::nonrumour}) {
      auto it = cells.find({ym, label});
      for (std::size_t d = 0; d < kSeriesDimensions.size(); ++d) {
        SeriesPoint point;
        point.month = ym;
        point.label = label;
        point.dimension = std::string(kSeriesDimensions[d]);
        if (it != cells.end()) {
          point.n = it->second.n;
          point.mean = it->second.sums[d] / static_cast<double>(it->second.n);
        }
        series.push_back(std::move(point));
      }
    }
  }
  return series;
}

}  // namespace rumourlab::analyze
