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

#include <gtest/gtest.h>

#include <numeric>

#include "rumourlab/error.hpp"
#include "rumourlab/features.hpp"
#include "rumourlab/random.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::text {
namespace {

std::vector<std::string> tokens_of(std::string_view s) { return tokenize(s).tokens; }

// Random tweet-like text drawn from pieces that exercise every rule.
std::string random_tweet(Rng& rng) {
  static const std::vector<std::string> pieces{
      "hello", "World", "#covid", "@bob_1", "http://t.co/x", "https://example.org/a?b=1", "www.site.com",
      "really?!", ":-)", ";)", "😷", "🙂", "👍🏽", "don't", "the", "and", "of", "U.S.", "1,000", "...",
      "  ", "\t", "wow!!!", "😷😷", "e-mail", "(yes)", "\"quoted\"", "é", "中文", ":face_with_medical_mask:",
      "@USER", "HTTPURL", "#", "@", "end."};
  std::string out;
  const std::size_t n = rng.below(12);
  for (std::size_t i = 0; i < n; ++i) {
    out += pieces[rng.below(pieces.size())];
    if (rng.bernoulli(0.8)) out += ' ';
  }
  return out;
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize("see http://t.co/x @bob"), "see HTTPURL @USER");
  EXPECT_EQ(normalize(""), "");
  EXPECT_EQ(normalize("😷 masks work"), ":face_with_medical_mask: masks work");
  EXPECT_EQ(normalize("  lots   of\t\nspace  "), "lots of space");
  EXPECT_EQ(normalize("visit www.example.com now"), "visit HTTPURL now");
  EXPECT_EQ(normalize("Keep Case"), "Keep Case");
}

TEST(Normalize, CountsReplacements) {
  NormalizeStats stats;
  normalize("a @x @y http://z 😷", EmojiTable::bundled(), &stats);
  EXPECT_EQ(stats.mentions, 2u);
  EXPECT_EQ(stats.urls, 1u);
  EXPECT_EQ(stats.emojis, 1u);
}

TEST(Normalize, UnknownEmojiGetsGenericAlias) {
  const EmojiTable empty = EmojiTable::parse("# empty table\n");
  EXPECT_EQ(normalize("x 😷", empty, nullptr), std::string("x ") + std::string(kUnknownEmoji));
}

TEST(Normalize, PropertyIdempotent) {
  Rng rng(42);
  for (int i = 0; i < 2000; ++i) {
    const std::string raw = random_tweet(rng);
    const std::string once = normalize(raw);
    EXPECT_EQ(normalize(once), once) << "input: " << raw;
  }
}

TEST(Tokenize, Examples) {
  EXPECT_EQ(tokens_of("#covid is HTTPURL"), (std::vector<std::string>{"#covid", "is", "HTTPURL"}));
  EXPECT_EQ(tokens_of("really?!"), (std::vector<std::string>{"really", "?", "!"}));
  EXPECT_EQ(tokens_of(":face_with_medical_mask: @USER").size(), 2u);
  EXPECT_EQ(tokens_of("nice :-) day"), (std::vector<std::string>{"nice", ":-)", "day"}));
  EXPECT_TRUE(tokens_of("").empty());
}

TEST(Tokenize, Classification) {
  EXPECT_EQ(classify("#covid"), TokenKind::hashtag);
  EXPECT_EQ(classify("@USER"), TokenKind::mention);
  EXPECT_EQ(classify("HTTPURL"), TokenKind::url);
  EXPECT_EQ(classify(":face_with_medical_mask:"), TokenKind::emoji);
  EXPECT_EQ(classify(":-)"), TokenKind::emoticon);
  EXPECT_EQ(classify("!"), TokenKind::punctuation);
  EXPECT_EQ(classify("word"), TokenKind::word);
}

TEST(Tokenize, PropertySpansCoverEveryNonSpaceByte) {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::string text = normalize(random_tweet(rng));
    const TokenStream stream = tokenize(text);
    ASSERT_EQ(stream.tokens.size(), stream.spans.size());
    std::vector<bool> covered(text.size(), false);
    std::size_t previous_end = 0;
    for (std::size_t k = 0; k < stream.size(); ++k) {
      const Span s = stream.spans[k];
      EXPECT_FALSE(stream.tokens[k].empty());
      EXPECT_LE(previous_end, s.begin);
      EXPECT_LT(s.begin, s.end);
      EXPECT_EQ(stream.tokens[k], text.substr(s.begin, s.end - s.begin));
      for (std::size_t b = s.begin; b < s.end; ++b) covered[b] = true;
      previous_end = s.end;
    }
    for (std::size_t b = 0; b < text.size(); ++b) {
      if (text[b] != ' ') {
        EXPECT_TRUE(covered[b]) << "byte " << b << " of '" << text << "'";
      }
    }
  }
}

TEST(ContentTerms, LowercasedWordsHashtagsAndEmojiNames) {
  EXPECT_EQ(content_terms("Masks WORK! #Covid @bob http://x 😷"),
            (std::vector<std::string>{"masks", "work", "covid", "face_with_medical_mask"}));
  EXPECT_EQ(content_terms("ok :-) ..."), (std::vector<std::string>{"ok"}));
}

TEST(CountAttributes, Examples) {
  const AttributeCounts a = count_attributes("Check http://a.b #x #y @z 😷");
  EXPECT_EQ(a.urls, 1u);
  EXPECT_EQ(a.hashtags, 2u);
  EXPECT_EQ(a.mentions, 1u);
  EXPECT_EQ(a.emojis, 1u);
  EXPECT_EQ(a.words, 1u);

  const AttributeCounts b = count_attributes("the and of");
  EXPECT_EQ(b.words, 3u);
  EXPECT_EQ(b.stopwords, 3u);

  EXPECT_EQ(count_attributes(""), AttributeCounts{});
}

TEST(CountAttributes, PropertyStopwordsNeverExceedWords) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto a = count_attributes(random_tweet(rng));
    EXPECT_LE(a.stopwords, a.words);
  }
}

TEST(BundledData, ListsAreVersionedAndSized) {
  EXPECT_EQ(StopwordList::bundled().size(), 179u);
  EXPECT_FALSE(StopwordList::bundled().version().empty());
  EXPECT_TRUE(StopwordList::bundled().contains("The"));
  EXPECT_GT(EmojiTable::bundled().size(), 100u);
  EXPECT_FALSE(EmojiTable::bundled().version().empty());
}

features::Vocabulary small_vocab() { return features::Vocabulary({"a", "b", "c", "d", "e"}); }

TEST(EncodePair, LayoutExample) {
  const std::vector<std::string> source{"a", "b"}, reply{"c", "d", "e"};
  const PairEncoding enc = encode_pair(source, reply, small_vocab(), 10);
  ASSERT_EQ(enc.input_ids.size(), 10u);
  EXPECT_EQ(enc.attended(), 7u);
  const std::vector<std::uint8_t> segments(enc.segment_ids.begin(), enc.segment_ids.begin() + 7);
  EXPECT_EQ(segments, (std::vector<std::uint8_t>{0, 0, 0, 1, 1, 1, 1}));
  const auto sep = features::Vocabulary::kSeparator;
  EXPECT_EQ(enc.input_ids[2], sep);
  EXPECT_EQ(enc.input_ids[6], sep);
  EXPECT_EQ(enc.input_ids[7], features::Vocabulary::kPad);
}

TEST(EncodePair, TruncatesTheReplyFirst) {
  const std::vector<std::string> source(5, "a"), reply(200, "b");
  const PairEncoding enc = encode_pair(source, reply, small_vocab(), 8);
  EXPECT_EQ(enc.attended(), 8u);
  const auto b = small_vocab().id("b");
  EXPECT_EQ(std::count(enc.input_ids.begin(), enc.input_ids.end(), b), 1);
}

TEST(EncodePair, UnknownTokensAndErrors) {
  const std::vector<std::string> source{"zzz"}, reply{};
  const PairEncoding enc = encode_pair(source, reply, small_vocab(), 4);
  EXPECT_EQ(enc.input_ids[0], features::Vocabulary::kUnknown);
  EXPECT_THROW(encode_pair(source, reply, small_vocab(), 2), ValidationError);
}

TEST(EncodePair, PropertyMaskAndSegments) {
  Rng rng(3);
  const auto vocab = small_vocab();
  const std::vector<std::string> words{"a", "b", "c", "x", "y"};
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::string> source(rng.below(15)), reply(rng.below(15));
    for (auto& w : source) w = words[rng.below(words.size())];
    for (auto& w : reply) w = words[rng.below(words.size())];
    const std::size_t max_len = 3 + rng.below(30);
    const PairEncoding enc = encode_pair(source, reply, vocab, max_len);
    ASSERT_EQ(enc.input_ids.size(), max_len);
    ASSERT_EQ(enc.attention_mask.size(), max_len);
    ASSERT_EQ(enc.segment_ids.size(), max_len);
    const std::size_t attended = std::accumulate(enc.attention_mask.begin(), enc.attention_mask.end(), std::size_t{0});
    EXPECT_EQ(attended, std::min(max_len, source.size() + reply.size() + 2));
    for (std::size_t k = 0; k < max_len; ++k) {
      EXPECT_EQ(enc.attention_mask[k], k < attended ? 1 : 0);
      if (k >= attended) {
        EXPECT_EQ(enc.input_ids[k], features::Vocabulary::kPad);
      } else if (k > 0) {
        EXPECT_LE(enc.segment_ids[k - 1], enc.segment_ids[k]);
      }
    }
  }
}

TEST(Utf8, InvalidBytesRoundTrip) {
  const std::string text = "ok \xff\xfe bad \xe2\x82";
  std::string back;
  for (char32_t cp : decode_utf8(text)) append_utf8(back, cp);
  EXPECT_EQ(back, text);
  EXPECT_EQ(normalize(normalize(text)), normalize(text));
}

}  // namespace
}  // namespace rumourlab::text
