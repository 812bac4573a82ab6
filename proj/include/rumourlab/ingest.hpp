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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rumourlab {

enum class Label { rumour, nonrumour };

std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view text);

// Seconds since the Unix epoch, UTC.
struct Timestamp {
  std::int64_t seconds = 0;

  auto operator<=>(const Timestamp&) const = default;
};

// Accepts `YYYY-MM-DDTHH:MM[:SS]` followed by `Z` or `+00:00`.
Timestamp parse_timestamp(std::string_view text);
// Always `YYYY-MM-DDTHH:MM:SSZ`.
std::string format_timestamp(Timestamp ts);

struct YearMonth {
  int year = 1970;
  int month = 1;

  auto operator<=>(const YearMonth&) const = default;
  YearMonth next() const;
};

YearMonth year_month(Timestamp ts);
std::string format_year_month(YearMonth ym);

}  // namespace rumourlab

namespace rumourlab::ingest {

struct UserMeta {
  bool verified = false;
  std::uint64_t followers = 0;
  std::uint64_t following = 0;
  std::uint64_t tweet_count = 0;
  std::uint64_t listed_count = 0;
  int account_created_year = 2006;

  bool operator==(const UserMeta&) const = default;
};

struct TweetRecord {
  std::string id;
  std::string text;
  Timestamp created_at;
  std::optional<std::string> parent_id;
  std::optional<Label> label;
  UserMeta user;
  std::uint64_t retweet_count = 0;
  std::uint64_t like_count = 0;

  bool is_source() const { return !parent_id.has_value(); }
  bool operator==(const TweetRecord&) const = default;
};

// A source tweet and every reply that resolves to it, replies in creation
// order (ties by ascending id). Replies keep their original parent_id so that
// true reply links remain available downstream.
struct Thread {
  TweetRecord source;
  std::vector<TweetRecord> replies;
  std::optional<Label> label;

  const std::string& id() const { return source.id; }
};

// Dataset files are JSON Lines: one object per line with the field names of
// TweetRecord (user fields flattened). Blank lines are skipped.
std::vector<TweetRecord> load_tweets(const std::filesystem::path& path);
std::vector<TweetRecord> parse_tweets(std::istream& in, std::string_view source_name);
std::vector<TweetRecord> parse_tweets(std::string_view text, std::string_view source_name);

void save_tweets(const std::filesystem::path& path, std::span<const TweetRecord> records);
void write_tweets(std::ostream& out, std::span<const TweetRecord> records);
std::string serialize_tweet(const TweetRecord& record);

struct AssemblyResult {
  // One thread per labeled source tweet, in file order of the sources.
  std::vector<Thread> threads;
  // Sources without a label; kept for analysis, never used for training.
  std::vector<Thread> unlabeled;
  // Replies whose chain of parent links never reaches a source.
  std::size_t orphaned_replies = 0;
  // Replies timestamped before their source; dropped to keep thread order valid.
  std::size_t early_replies = 0;
};

// Replies pointing at another reply are attached to that reply's source.
AssemblyResult assemble_threads(std::span<const TweetRecord> records);

struct SplitRatios {
  double train = 0.7;
  double dev = 0.15;
  double test = 0.15;

  std::array<double, 3> as_array() const { return {train, dev, test}; }
};

struct DatasetSplit {
  std::vector<Thread> train;
  std::vector<Thread> dev;
  std::vector<Thread> test;
  std::uint64_t seed = 0;
  SplitRatios ratios;
};

// Stratified by label; unlabeled threads are ignored.
DatasetSplit split_dataset(std::span<const Thread> threads, const SplitRatios& ratios,
                           std::uint64_t seed);

// Split manifest: `train.ids`, `dev.ids` and `test.ids` in `directory`, each
// starting with the header `# rumourlab-split v1 seed=<n> ratios=<a>,<b>,<c>`
// followed by one source id per line.
void write_split_manifest(const std::filesystem::path& directory, const DatasetSplit& split);

struct SplitManifest {
  std::uint64_t seed = 0;
  SplitRatios ratios;
  std::vector<std::string> train;
  std::vector<std::string> dev;
  std::vector<std::string> test;
};

SplitManifest read_split_manifest(const std::filesystem::path& directory);

}  // namespace rumourlab::ingest
