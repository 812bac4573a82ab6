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
#include <cmath>
#include <unordered_set>

#include "rumourlab/analyze.hpp"
#include "rumourlab/text_io.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::analyze {

namespace {

const std::unordered_set<std::string_view>& negators() {
  static const std::unordered_set<std::string_view> words = {
      "aint",    "arent",    "cannot",  "cant",     "couldnt", "darent",   "didnt",   "doesnt",  "ain't",
      "aren't",  "can't",    "couldn't", "daren't", "didn't",  "doesn't",  "dont",    "hadnt",   "hasnt",
      "havent",  "isnt",     "mightnt", "mustnt",   "neither", "don't",    "hadn't",  "hasn't",  "haven't",
      "isn't",   "mightn't", "mustn't", "neednt",   "needn't", "never",    "none",    "nope",    "nor",
      "not",     "nothing",  "nowhere", "oughtnt",  "shant",   "shouldnt", "uhuh",    "wasnt",   "werent",
      "oughtn't", "shan't",  "shouldn't", "uh-uh",  "wasn't",  "weren't",  "without", "wont",    "wouldnt",
      "won't",   "wouldn't", "rarely",  "seldom",   "despite"};
  return words;
}

const std::unordered_set<std::string_view>& intensifiers() {
  static const std::unordered_set<std::string_view> words = {
      "absolutely", "amazingly",   "awfully",     "completely", "considerable", "considerably", "decidedly",
      "deeply",     "effing",      "enormous",    "enormously", "entirely",     "especially",   "exceptional",
      "exceptionally", "extreme",  "extremely",   "fabulously", "flipping",     "flippin",      "frackin",
      "fracking",   "fricking",    "frickin",     "frigging",   "friggin",      "fully",        "fuckin",
      "fucking",    "fuggin",      "fugging",     "greatly",    "hella",        "highly",       "hugely",
      "incredible", "incredibly",  "intensely",   "major",      "majorly",      "more",         "most",
      "particularly", "purely",    "quite",       "really",     "remarkably",   "so",           "substantially",
      "thoroughly", "total",       "totally",     "tremendous", "tremendously", "uber",         "unbelievably",
      "unusually",  "utter",       "utterly",     "very"};
  return words;
}

const std::unordered_set<std::string_view>& dampeners() {
  static const std::unordered_set<std::string_view> words = {
      "almost",   "barely",     "hardly",   "kinda",        "kindof", "kind-of", "less",     "little",
      "marginal", "marginally", "occasional", "occasionally", "partly", "scarce",  "scarcely", "slight",
      "slightly", "somewhat",   "sorta",    "sortof",       "sort-of"};
  return words;
}

}  // namespace

bool is_negator(std::string_view lowered) {
  return negators().contains(lowered) || lowered.find("n't") != std::string_view::npos;
}

int booster_direction(std::string_view lowered) {
  if (intensifiers().contains(lowered)) return 1;
  if (dampeners().contains(lowered)) return -1;
  return 0;
}

SentimentScores score_sentiment(std::string_view text, const ValenceLexicon& lexicon) {
  const std::string normalized = text::normalize(text);
  std::vector<std::string> words;
  for (const std::string& token : text::tokenize(normalized).tokens) {
    if (text::classify(token) == text::TokenKind::punctuation) continue;
    words.push_back(io::to_lower(token));
  }
  SentimentScores scores;
  if (words.empty()) return scores;

  std::vector<double> valences(words.size(), 0.0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (booster_direction(words[i]) != 0) continue;  // boosters carry no valence of their own
    const auto base = lexicon.lookup(words[i]);
    if (!base || *base == 0.0) continue;
    double v = *base;
    const double sign = v > 0.0 ? 1.0 : -1.0;
    for (std::size_t back = 1; back <= 3 && back <= i; ++back) {
      const std::string& prior = words[i - back];
      v += sign * kBoosterIncrement * booster_direction(prior);
    }
    for (std::size_t back = 1; back <= 3 && back <= i; ++back) {
      if (is_negator(words[i - back])) v *= kNegationScalar;
    }
    valences[i] = v;
  }

  const auto bangs = static_cast<std::size_t>(std::count(normalized.begin(), normalized.end(), '!'));
  const double emphasis = static_cast<double>(std::min(bangs, kMaxExclamations)) * kExclamationIncrement;

  double sum = 0.0;
  for (double v : valences) sum += v;
  if (sum > 0.0) {
    sum += emphasis;
  } else if (sum < 0.0) {
    sum -= emphasis;
  }
  scores.compound = sum / std::sqrt(sum * sum + kCompoundAlpha);

  double pos = 0.0, neg = 0.0, neu = 0.0;
  for (double v : valences) {
    if (v > 0.0) {
      pos += v + 1.0;
    } else if (v < 0.0) {
      neg += v - 1.0;
    } else {
      neu += 1.0;
    }
  }
  if (pos > std::abs(neg)) {
    pos += emphasis;
  } else if (pos < std::abs(neg)) {
    neg -= emphasis;
  }
  const double total = pos + std::abs(neg) + neu;
  scores.pos = pos / total;
  scores.neg = std::abs(neg) / total;
  scores.neu = neu / total;
  return scores;
}

}  // namespace rumourlab::analyze
