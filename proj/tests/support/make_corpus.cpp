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

// Writes a planted-signal corpus as JSON lines, for trying the CLI by hand.
//   make_corpus OUT.jsonl [threads] [seed] [unlabeled]

#include <cstdlib>
#include <iostream>

#include "rumourlab/ingest.hpp"
#include "synthetic.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_corpus OUT.jsonl [threads] [seed] [unlabeled]\n";
    return 1;
  }
  rumourlab::testing::CorpusOptions options;
  if (argc > 2) options.threads = std::strtoul(argv[2], nullptr, 10);
  if (argc > 3) options.seed = std::strtoull(argv[3], nullptr, 10);
  if (argc > 4) options.unlabeled = std::strtoul(argv[4], nullptr, 10);
  const auto records = rumourlab::testing::planted_corpus(options);
  rumourlab::ingest::save_tweets(argv[1], records);
  std::cerr << "wrote " << records.size() << " records\n";
  return 0;
}
