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

#include <ctime>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "rumourlab/error.hpp"
#include "rumourlab/ingest.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab {

std::string_view to_string(Label label) {
  return label == Label::rumour ? "rumour" : "nonrumour";
}

std::optional<Label> parse_label(std::string_view text) {
  if (text == "rumour") return Label::rumour;
  if (text == "nonrumour") return Label::nonrumour;
  return std::nullopt;
}

namespace {

// Howard Hinnant's civil-date conversions.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
  std::int64_t year;
  unsigned month;
  unsigned day;
};

Civil civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {y + (m <= 2), m, d};
}

bool is_leap(std::int64_t y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

unsigned days_in_month(std::int64_t y, unsigned m) {
  static constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : kDays[m - 1];
}

int fixed_digits(std::string_view text, std::size_t pos, std::size_t count, std::string_view whole) {
  if (pos + count > text.size()) throw ParseError("truncated timestamp '" + std::string(whole) + "'");
  int value = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("invalid timestamp '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return value;
}

int current_year() {
  const std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  return parts.tm_year + 1900;
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  const auto bad = [&] { return ParseError("invalid timestamp '" + std::string(text) + "'"); };
  if (text.size() < 17) throw bad();
  const int year = fixed_digits(text, 0, 4, text);
  const int month = fixed_digits(text, 5, 2, text);
  const int day = fixed_digits(text, 8, 2, text);
  const int hour = fixed_digits(text, 11, 2, text);
  const int minute = fixed_digits(text, 14, 2, text);
  if (text[4] != '-' || text[7] != '-' || text[10] != 'T' || text[13] != ':') throw bad();
  std::size_t pos = 16;
  int second = 0;
  if (pos < text.size() && text[pos] == ':') {
    second = fixed_digits(text, pos + 1, 2, text);
    pos += 3;
  }
  const std::string_view zone = text.substr(pos);
  if (zone != "Z" && zone != "+00:00") throw bad();
  if (month < 1 || month > 12 || day < 1 ||
      static_cast<unsigned>(day) > days_in_month(year, static_cast<unsigned>(month)) ||
      hour > 23 || minute > 59 || second > 59) {
    throw bad();
  }
  const std::int64_t days =
      days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
  return Timestamp{days * 86400 + hour * 3600 + minute * 60 + second};
}

std::string format_timestamp(Timestamp ts) {
  std::int64_t days = ts.seconds / 86400;
  std::int64_t rem = ts.seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  const Civil c = civil_from_days(days);
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(c.year), c.month, c.day, static_cast<long long>(rem / 3600),
                static_cast<long long>(rem % 3600 / 60), static_cast<long long>(rem % 60));
  return buffer;
}

YearMonth YearMonth::next() const {
  return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1};
}

YearMonth year_month(Timestamp ts) {
  std::int64_t days = ts.seconds / 86400;
  if (ts.seconds % 86400 < 0) --days;
  const Civil c = civil_from_days(days);
  return {static_cast<int>(c.year), static_cast<int>(c.month)};
}

std::string format_year_month(YearMonth ym) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02d", ym.year, ym.month);
  return buffer;
}

}  // namespace rumourlab

namespace rumourlab::ingest {

namespace {

using nlohmann::json;

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

const json& require(const json& object, const char* field, std::string_view source, std::size_t line) {
  const auto it = object.find(field);
  if (it == object.end() || it->is_null()) {
    throw ValidationError(where(source, line) + ": missing required field '" + field + "'");
  }
  return *it;
}

std::string require_string(const json& object, const char* field, std::string_view source,
                           std::size_t line) {
  const json& value = require(object, field, source, line);
  if (!value.is_string()) {
    throw ValidationError(where(source, line) + ": field '" + field + "' must be a string");
  }
  return value.get<std::string>();
}

std::uint64_t require_count(const json& object, const char* field, std::string_view source,
                            std::size_t line) {
  const json& value = require(object, field, source, line);
  if (!value.is_number_unsigned()) {
    throw ValidationError(where(source, line) + ": field '" + field +
                          "' must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

TweetRecord parse_record(std::string_view text, std::string_view source, std::size_t line,
                         int max_year) {
  json object;
  try {
    object = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where(source, line) + ": malformed record: " + e.what());
  }
  if (!object.is_object()) throw ParseError(where(source, line) + ": record is not an object");

  TweetRecord record;
  record.id = require_string(object, "id", source, line);
  if (record.id.empty()) throw ValidationError(where(source, line) + ": empty id");
  record.text = require_string(object, "text", source, line);
  try {
    record.created_at = parse_timestamp(require_string(object, "created_at", source, line));
  } catch (const ParseError& e) {
    throw ValidationError(where(source, line) + ": " + e.what());
  }

  if (auto it = object.find("parent_id"); it != object.end() && !it->is_null()) {
    if (!it->is_string()) {
      throw ValidationError(where(source, line) + ": field 'parent_id' must be a string");
    }
    record.parent_id = it->get<std::string>();
    if (*record.parent_id == record.id) {
      throw ValidationError(where(source, line) + ": tweet '" + record.id + "' is its own parent");
    }
  }
  if (auto it = object.find("label"); it != object.end() && !it->is_null()) {
    const auto label = it->is_string() ? parse_label(it->get<std::string>()) : std::nullopt;
    if (!label) {
      throw ValidationError(where(source, line) + ": label must be 'rumour' or 'nonrumour'");
    }
    record.label = label;
  }

  const json& verified = require(object, "verified", source, line);
  if (!verified.is_boolean()) {
    throw ValidationError(where(source, line) + ": field 'verified' must be a boolean");
  }
  record.user.verified = verified.get<bool>();
  record.user.followers = require_count(object, "followers", source, line);
  record.user.following = require_count(object, "following", source, line);
  record.user.tweet_count = require_count(object, "tweet_count", source, line);
  record.user.listed_count = require_count(object, "listed_count", source, line);
  const json& year = require(object, "account_created_year", source, line);
  if (!year.is_number_integer()) {
    throw ValidationError(where(source, line) + ": field 'account_created_year' must be an integer");
  }
  const std::int64_t y = year.get<std::int64_t>();
  if (y < 2006 || y > max_year) {
    throw ValidationError(where(source, line) + ": account_created_year " + std::to_string(y) +
                          " outside [2006, " + std::to_string(max_year) + "]");
  }
  record.user.account_created_year = static_cast<int>(y);
  record.retweet_count = require_count(object, "retweet_count", source, line);
  record.like_count = require_count(object, "like_count", source, line);
  return record;
}

}  // namespace

std::vector<TweetRecord> parse_tweets(std::string_view text, std::string_view source_name) {
  std::vector<TweetRecord> records;
  std::unordered_set<std::string> seen;
  const int max_year = current_year();
  std::size_t line_number = 0;
  for (const std::string& line : io::split_lines(text)) {
    ++line_number;
    if (io::trim(line).empty()) continue;
    TweetRecord record = parse_record(line, source_name, line_number, max_year);
    if (!seen.insert(record.id).second) {
      throw ValidationError(where(source_name, line_number) + ": duplicate id '" + record.id + "'");
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<TweetRecord> parse_tweets(std::istream& in, std::string_view source_name) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tweets(buffer.str(), source_name);
}

std::vector<TweetRecord> load_tweets(const std::filesystem::path& path) {
  return parse_tweets(io::read_file(path), path.string());
}

std::string serialize_tweet(const TweetRecord& record) {
  nlohmann::ordered_json object;
  object["id"] = record.id;
  object["text"] = record.text;
  object["created_at"] = format_timestamp(record.created_at);
  if (record.parent_id) object["parent_id"] = *record.parent_id;
  if (record.label) object["label"] = std::string(to_string(*record.label));
  object["verified"] = record.user.verified;
  object["followers"] = record.user.followers;
  object["following"] = record.user.following;
  object["tweet_count"] = record.user.tweet_count;
  object["listed_count"] = record.user.listed_count;
  object["account_created_year"] = record.user.account_created_year;
  object["retweet_count"] = record.retweet_count;
  object["like_count"] = record.like_count;
  return object.dump();
}

void write_tweets(std::ostream& out, std::span<const TweetRecord> records) {
  for (const TweetRecord& record : records) out << serialize_tweet(record) << '\n';
}

void save_tweets(const std::filesystem::path& path, std::span<const TweetRecord> records) {
  std::ostringstream out;
  write_tweets(out, records);
  io::write_file(path, out.str());
}

}  // namespace rumourlab::ingest
