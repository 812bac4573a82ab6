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

#include <string_view>

// Raw contents of the data files shipped under data/, compiled into the
// library. Each file starts with a `# rumourlab-<kind> v<N>` version line.
namespace rumourlab::resources {

std::string_view emoji_aliases_tsv();
std::string_view stopwords_txt();
std::string_view emotion_lexicon_tsv();
std::string_view valence_lexicon_tsv();

}  // namespace rumourlab::resources
