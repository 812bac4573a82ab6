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

#include "rumourlab/analyze.hpp"
#include "rumourlab/error.hpp"
#include "rumourlab/resources.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::analyze {

std::string_view to_string(Emotion emotion) {
  switch (emotion) {
    case Emotion::happy: return "happy";
    case Emotion::angry: return "angry";
    case Emotion::surprise: return "surprise";
    case Emotion::sad: return "sad";
    case Emotion::fear: return "fear";
    case Emotion::none: return "none";
  }
  return "none";
}

std::optional<Emotion> parse_emotion(std::string_view text) {
  const std::string lowered = io::to_lower(text);
  for (Emotion e : {Emotion::happy, Emotion::angry, Emotion::surprise, Emotion::sad, Emotion::fear}) {
    if (lowered == to_string(e)) return e;
  }
  return std::nullopt;
}

namespace {

template <typename Fn>
void for_each_row(std::string_view text, const std::string& source, Fn&& fn) {
  const auto lines = io::split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string_view line = lines[n];
    if (line.empty() || line.starts_with('#')) continue;
    const auto tab = line.find('\t');
    const std::string where = source + ":" + std::to_string(n + 1) + ": ";
    if (tab == std::string_view::npos || tab == 0) throw ParseError(where + "expected 'word<TAB>value'");
    fn(io::to_lower(line.substr(0, tab)), line.substr(tab + 1), where);
  }
}

}  // namespace

EmotionLexicon EmotionLexicon::parse(std::string_view text, const std::string& source) {
  EmotionLexicon lexicon;
  for_each_row(text, source, [&](std::string word, std::string_view value, const std::string& where) {
    const auto emotion = parse_emotion(value);
    if (!emotion) throw ParseError(where + "unknown emotion '" + std::string(value) + "'");
    lexicon.add(std::move(word), *emotion);
  });
  return lexicon;
}

const EmotionLexicon& EmotionLexicon::bundled() {
  static const EmotionLexicon lexicon = parse(resources::emotion_lexicon_tsv(), "emotion_lexicon.tsv");
  return lexicon;
}

void EmotionLexicon::add(std::string word, Emotion emotion) {
  if (emotion == Emotion::none) throw ValidationError("emotion lexicon entries need one of the five emotions");
  words_.insert_or_assign(std::move(word), emotion);
}

std::optional<Emotion> EmotionLexicon::lookup(std::string_view lowered) const {
  auto it = words_.find(std::string(lowered));
  if (it == words_.end()) return std::nullopt;
  return it->second;
}

ValenceLexicon ValenceLexicon::parse(std::string_view text, const std::string& source) {
  ValenceLexicon lexicon;
  for_each_row(text, source, [&](std::string word, std::string_view value, const std::string& where) {
    double valence = 0.0;
    try {
      valence = io::parse_double(value, "valence");
    } catch (const ParseError&) {
      throw ParseError(where + "bad valence '" + std::string(value) + "'");
    }
    if (valence < -4.0 || valence > 4.0) throw ParseError(where + "valence outside [-4, 4]");
    lexicon.add(std::move(word), valence);
  });
  return lexicon;
}

const ValenceLexicon& ValenceLexicon::bundled() {
  static const ValenceLexicon lexicon = parse(resources::valence_lexicon_tsv(), "valence_lexicon.tsv");
  return lexicon;
}

void ValenceLexicon::add(std::string word, double valence) { words_.insert_or_assign(std::move(word), valence); }

std::optional<double> ValenceLexicon::lookup(std::string_view lowered) const {
  auto it = words_.find(std::string(lowered));
  if (it == words_.end()) return std::nullopt;
  return it->second;
}

}  // namespace rumourlab::analyze
