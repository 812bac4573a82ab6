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
#include "rumourlab/text_io.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::analyze {

double EmotionScores::operator[](Emotion e) const {
  switch (e) {
    case Emotion::happy: return happy;
    case Emotion::angry: return angry;
    case Emotion::surprise: return surprise;
    case Emotion::sad: return sad;
    case Emotion::fear: return fear;
    case Emotion::none: return 0.0;
  }
  return 0.0;
}

EmotionScores score_emotions(std::string_view text, const EmotionLexicon& lexicon) {
  std::array<std::size_t, 5> counts{};
  std::size_t matched = 0;
  for (const std::string& token : text::tokenize(text::normalize(text)).tokens) {
    if (auto e = lexicon.lookup(io::to_lower(token))) {
      ++counts[static_cast<std::size_t>(*e)];
      ++matched;
    }
  }
  EmotionScores scores;
  if (matched == 0) return scores;
  const double total = static_cast<double>(matched);
  scores.happy = static_cast<double>(counts[static_cast<std::size_t>(Emotion::happy)]) / total;
  scores.angry = static_cast<double>(counts[static_cast<std::size_t>(Emotion::angry)]) / total;
  scores.surprise = static_cast<double>(counts[static_cast<std::size_t>(Emotion::surprise)]) / total;
  scores.sad = static_cast<double>(counts[static_cast<std::size_t>(Emotion::sad)]) / total;
  scores.fear = static_cast<double>(counts[static_cast<std::size_t>(Emotion::fear)]) / total;
  double best = -1.0;
  for (Emotion e : {Emotion::angry, Emotion::fear, Emotion::happy, Emotion::sad, Emotion::surprise}) {
    if (scores[e] > best) {
      best = scores[e];
      scores.label = e;
    }
  }
  return scores;
}

}  // namespace rumourlab::analyze
