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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rumourlab/ingest.hpp"

namespace rumourlab::features {

// Lowercased term list with three reserved ids in front: pad = 0,
// unknown = 1, separator = 2. Content terms start at id 3.
class Vocabulary {
 public:
  static constexpr std::int32_t kPad = 0;
  static constexpr std::int32_t kUnknown = 1;
  static constexpr std::int32_t kSeparator = 2;
  static constexpr std::int32_t kFirstContent = 3;

  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> terms);

  // Keeps the `max_terms` most frequent lowercased tokens; ties break
  // lexicographically.
  static Vocabulary build(std::span<const std::vector<std::string>> docs, std::size_t max_terms);

  std::int32_t id(std::string_view token) const;
  std::optional<std::size_t> content_index(std::string_view token) const;

  std::size_t size() const { return terms_.size() + kFirstContent; }
  std::size_t content_size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }

  // Three reserved-id header lines, then one term per line (line k after
  // the header is id k + 3).
  void save(std::ostream& out) const;
  static Vocabulary parse(std::string_view text);

  bool operator==(const Vocabulary& other) const { return terms_ == other.terms_; }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct SparseEntry {
  std::uint32_t index = 0;
  double value = 0.0;

  bool operator==(const SparseEntry&) const = default;
};

// Entries strictly ascending by index.
struct SparseVector {
  std::vector<SparseEntry> entries;

  bool empty() const { return entries.empty(); }
  double norm() const;

  bool operator==(const SparseVector&) const = default;
};

enum class TermWeighting { tfidf, raw_count };

// Smoothed idf: ln((1 + N) / (1 + df)) + 1, with N documents.
struct TfidfModel {
  Vocabulary vocab;
  std::vector<double> idf;
  std::size_t doc_count = 0;

  std::size_t dimension() const { return vocab.content_size(); }

  // `term<TAB>idf` per content term; the first line records doc_count.
  void save_idf(std::ostream& out) const;
  static TfidfModel from_files(std::string_view vocab_text, std::string_view idf_text);
};

inline constexpr std::size_t kDefaultTopTerms = 5000;

TfidfModel fit_tfidf(std::span<const std::vector<std::string>> train_docs,
                     std::size_t top_k = kDefaultTopTerms);

// tf * idf per in-vocabulary term, scaled to unit Euclidean norm. In
// raw_count mode the values are plain term counts, unscaled.
SparseVector transform_tfidf(const TfidfModel& model, std::span<const std::string> doc,
                             TermWeighting weighting = TermWeighting::tfidf);

inline constexpr std::size_t kHandcraftedCount = 8;

// Order: retweet_count, like_count, create_year, verified, followers,
// following, tweet_count, listed_count.
using HandcraftedFeatures = std::array<double, kHandcraftedCount>;

HandcraftedFeatures extract_handcrafted(const ingest::TweetRecord& tweet);
const std::array<std::string_view, kHandcraftedCount>& handcrafted_names();

using FeatureRow = std::vector<double>;

// Each synthetic point is x + u * (neighbor - x), with x a uniformly chosen
// minority point, neighbor one of its k nearest (Euclidean) and u ~ U[0, 1].
std::vector<FeatureRow> smote_oversample(std::span<const FeatureRow> minority, std::size_t k,
                                         std::size_t n_new, std::uint64_t seed);

inline constexpr std::size_t kDefaultSmoteNeighbors = 5;

// Oversamples the smaller class until both classes have equal counts. k is
// clamped to the minority size minus one.
void smote_balance(std::vector<FeatureRow>& rows, std::vector<Label>& labels, std::size_t k,
                   std::uint64_t seed);

struct ClassWeights {
  double rumour = 1.0;
  double nonrumour = 1.0;

  double operator[](Label label) const { return label == Label::rumour ? rumour : nonrumour; }
};

// weight(c) = N / (C * count(c)).
ClassWeights compute_class_weights(std::span<const Label> labels);

// Per-column z-scores with training-set statistics. Constant columns get
// scale 1.
class Standardizer {
 public:
  Standardizer() = default;
  Standardizer(std::vector<double> mean, std::vector<double> scale);

  static Standardizer fit(std::span<const FeatureRow> rows);

  FeatureRow transform(std::span<const double> row) const;
  void transform_in_place(std::vector<FeatureRow>& rows) const;

  const std::vector<double>& mean() const { return mean_; }
  const std::vector<double>& scale() const { return scale_; }
  std::size_t dimension() const { return mean_.size(); }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

}  // namespace rumourlab::features
