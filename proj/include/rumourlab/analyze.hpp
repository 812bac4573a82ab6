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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rumourlab/ingest.hpp"

namespace rumourlab::analyze {

// ---------------------------------------------------------------- lexicons

enum class Emotion { happy, angry, surprise, sad, fear, none };

std::string_view to_string(Emotion emotion);
std::optional<Emotion> parse_emotion(std::string_view text);

// `word<TAB>emotion` rows; `#` lines are comments.
class EmotionLexicon {
 public:
  static EmotionLexicon parse(std::string_view text, const std::string& source = "<emotion lexicon>");
  static const EmotionLexicon& bundled();

  std::optional<Emotion> lookup(std::string_view lowered) const;
  std::size_t size() const { return words_.size(); }
  void add(std::string word, Emotion emotion);

 private:
  std::unordered_map<std::string, Emotion> words_;
};

// `word<TAB>valence` rows with valence in [-4, 4].
class ValenceLexicon {
 public:
  static ValenceLexicon parse(std::string_view text, const std::string& source = "<valence lexicon>");
  static const ValenceLexicon& bundled();

  std::optional<double> lookup(std::string_view lowered) const;
  std::size_t size() const { return words_.size(); }
  void add(std::string word, double valence);
  const std::unordered_map<std::string, double>& entries() const { return words_; }

 private:
  std::unordered_map<std::string, double> words_;
};

// ------------------------------------------------------------------ scores

struct EmotionScores {
  double happy = 0.0;
  double angry = 0.0;
  double surprise = 0.0;
  double sad = 0.0;
  double fear = 0.0;
  Emotion label = Emotion::none;

  double operator[](Emotion e) const;
};

// Share of matched tokens per emotion; the label is the argmax with ties
// resolved in the order angry, fear, happy, sad, surprise.
EmotionScores score_emotions(std::string_view text, const EmotionLexicon& lexicon);

struct SentimentScores {
  double pos = 0.0;
  double neu = 1.0;
  double neg = 0.0;
  double compound = 0.0;
};

inline constexpr double kNegationScalar = -0.74;
inline constexpr double kBoosterIncrement = 0.293;
inline constexpr double kExclamationIncrement = 0.292;
inline constexpr std::size_t kMaxExclamations = 3;
inline constexpr double kCompoundAlpha = 15.0;

bool is_negator(std::string_view lowered);
// +1 for intensifiers, -1 for dampeners, 0 otherwise.
int booster_direction(std::string_view lowered);

SentimentScores score_sentiment(std::string_view text, const ValenceLexicon& lexicon);

// ------------------------------------------------------------- aggregates

// One tweet as the analysis suite sees it: text, time and a (predicted) class.
struct AnalyzedTweet {
  std::string text;
  Timestamp created_at;
  Label label = Label::nonrumour;
};

enum class Attribute { words, urls, emojis, hashtags, mentions, stopwords };
inline constexpr std::array<Attribute, 6> kAttributes = {Attribute::words,    Attribute::urls,
                                                         Attribute::emojis,   Attribute::hashtags,
                                                         Attribute::mentions, Attribute::stopwords};
std::string_view to_string(Attribute attribute);

// Bin b covers [edges[b], edges[b + 1]); the last bin is open-ended.
const std::vector<std::size_t>& bin_edges(Attribute attribute);

struct AttributeHistogram {
  Attribute attribute = Attribute::words;
  std::vector<std::size_t> rumour;     // one count per bin
  std::vector<std::size_t> nonrumour;
};

struct HistogramSet {
  std::vector<AttributeHistogram> histograms;  // in kAttributes order
  std::size_t rumour_total = 0;
  std::size_t nonrumour_total = 0;
};

HistogramSet attribute_histograms(std::span<const AnalyzedTweet> tweets);

using RankedTerms = std::vector<std::pair<std::string, std::size_t>>;

struct MonthlyTermTable {
  YearMonth month;
  RankedTerms rumour;
  RankedTerms nonrumour;
};

// Forms of a keyword that are filtered: the phrase itself (as consecutive
// tokens) and its concatenated, hyphenated and underscored spellings.
std::vector<std::string> keyword_variants(std::string_view keyword);

std::vector<MonthlyTermTable> monthly_top_terms(std::span<const AnalyzedTweet> tweets,
                                                std::span<const std::string> exclude, std::size_t top_n);

struct ScoredTweet {
  Timestamp created_at;
  Label label = Label::nonrumour;
  EmotionScores emotion;
  SentimentScores sentiment;
};

inline constexpr std::array<std::string_view, 6> kSeriesDimensions = {"happy", "angry", "surprise",
                                                                      "sad",   "fear",  "compound"};

struct SeriesPoint {
  YearMonth month;
  Label label = Label::nonrumour;
  std::string dimension;
  std::optional<double> mean;  // absent for a month without tweets of that class
  std::size_t n = 0;
};

// Every month from the earliest to the latest tweet, for both classes and all
// dimensions in kSeriesDimensions order.
std::vector<SeriesPoint> monthly_average_scores(std::span<const ScoredTweet> tweets);

// ----------------------------------------------------------------- tables

// CSV writers. Headers: attribute,class,bin_low,bin_high,count /
// month,class,rank,term,freq / month,class,dimension,mean,n.
std::string histograms_csv(const HistogramSet& set);
std::string terms_csv(std::span<const MonthlyTermTable> tables);
std::string timeseries_csv(std::span<const SeriesPoint> series);
// Quotes a field containing a comma, quote or line break.
std::string csv_field(std::string_view text);

}  // namespace rumourlab::analyze
