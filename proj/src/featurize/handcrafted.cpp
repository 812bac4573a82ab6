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

#include "rumourlab/features.hpp"

namespace rumourlab::features {

HandcraftedFeatures extract_handcrafted(const ingest::TweetRecord& tweet) {
  return {static_cast<double>(tweet.retweet_count),
          static_cast<double>(tweet.like_count),
          static_cast<double>(tweet.user.account_created_year),
          tweet.user.verified ? 1.0 : 0.0,
          static_cast<double>(tweet.user.followers),
          static_cast<double>(tweet.user.following),
          static_cast<double>(tweet.user.tweet_count),
          static_cast<double>(tweet.user.listed_count)};
}

const std::array<std::string_view, kHandcraftedCount>& handcrafted_names() {
  static constexpr std::array<std::string_view, kHandcraftedCount> kNames = {
      "retweet_count", "like_count", "create_year", "verified",
      "followers",     "following",  "tweet_count", "listed_count"};
  return kNames;
}

}  // namespace rumourlab::features
