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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rumourlab/error.hpp"
#include "rumourlab/ingest.hpp"
#include "rumourlab/random.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::ingest {

namespace {

// Largest-remainder apportionment of n items over the ratios, with every
// split receiving at least one item.
std::array<std::size_t, 3> apportion(std::size_t n, const std::array<double, 3>& ratios) {
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> remainders{};
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double quota = static_cast<double>(n) * ratios[k];
    counts[k] = static_cast<std::size_t>(std::floor(quota));
    remainders[k] = quota - std::floor(quota);
    assigned += counts[k];
  }
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (std::size_t i = 0; assigned < n; ++i, ++assigned) ++counts[order[i % 3]];
  for (std::size_t k = 0; k < 3; ++k) {
    if (counts[k] == 0) {
      const auto donor = std::max_element(counts.begin(), counts.end());
      --*donor;
      ++counts[k];
    }
  }
  return counts;
}

}  // namespace

DatasetSplit split_dataset(std::span<const Thread> threads, const SplitRatios& ratios,
                           std::uint64_t seed) {
  const auto r = ratios.as_array();
  for (double value : r) {
    if (!(value > 0.0)) throw ValidationError("split ratios must be positive");
  }
  if (std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-9) {
    throw ValidationError("split ratios must sum to 1");
  }

  std::array<std::vector<std::size_t>, 3> members;
  Rng rng(seed);
  for (Label label : {Label::rumour, Label::nonrumour}) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < threads.size(); ++i) {
      if (threads[i].label == label) indices.push_back(i);
    }
    if (indices.size() < 3) {
      throw ValidationError("class '" + std::string(to_string(label)) + "' has " +
                            std::to_string(indices.size()) +
                            " threads; at least one per split (3) is required");
    }
    Rng class_rng = rng.derive(label == Label::rumour ? 1 : 2);
    class_rng.shuffle(std::span<std::size_t>(indices));
    const auto counts = apportion(indices.size(), r);
    std::size_t offset = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      members[k].insert(members[k].end(), indices.begin() + static_cast<std::ptrdiff_t>(offset),
                        indices.begin() + static_cast<std::ptrdiff_t>(offset + counts[k]));
      offset += counts[k];
    }
  }

  DatasetSplit split;
  split.seed = seed;
  split.ratios = ratios;
  std::array<std::vector<Thread>*, 3> outputs{&split.train, &split.dev, &split.test};
  for (std::size_t k = 0; k < 3; ++k) {
    std::sort(members[k].begin(), members[k].end());
    for (std::size_t i : members[k]) outputs[k]->push_back(threads[i]);
  }
  return split;
}

namespace {

constexpr const char* kSplitNames[] = {"train", "dev", "test"};

std::string manifest_header(const DatasetSplit& split) {
  return "# rumourlab-split v1 seed=" + std::to_string(split.seed) +
         " ratios=" + io::format_double(split.ratios.train) + "," +
         io::format_double(split.ratios.dev) + "," + io::format_double(split.ratios.test);
}

}  // namespace

void write_split_manifest(const std::filesystem::path& directory, const DatasetSplit& split) {
  const std::array<const std::vector<Thread>*, 3> parts{&split.train, &split.dev, &split.test};
  for (std::size_t k = 0; k < 3; ++k) {
    std::string content = manifest_header(split) + "\n";
    for (const Thread& thread : *parts[k]) content += thread.id() + "\n";
    io::write_file(directory / (std::string(kSplitNames[k]) + ".ids"), content);
  }
}

SplitManifest read_split_manifest(const std::filesystem::path& directory) {
  SplitManifest manifest;
  std::array<std::vector<std::string>*, 3> parts{&manifest.train, &manifest.dev, &manifest.test};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto path = directory / (std::string(kSplitNames[k]) + ".ids");
    const auto lines = io::split_lines(io::read_file(path));
    if (lines.empty() || !lines[0].starts_with("# rumourlab-split v1 ")) {
      throw ParseError(path.string() + ":1: missing split manifest header");
    }
    std::istringstream header(lines[0].substr(std::string("# rumourlab-split v1 ").size()));
    std::string field;
    while (header >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw ParseError(path.string() + ":1: bad header field");
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (key == "seed") {
        manifest.seed = io::parse_uint(value, "seed");
      } else if (key == "ratios") {
        const auto values = io::split(value, ',');
        if (values.size() != 3) throw ParseError(path.string() + ":1: ratios need three values");
        manifest.ratios = {io::parse_double(values[0], "ratio"), io::parse_double(values[1], "ratio"),
                           io::parse_double(values[2], "ratio")};
      }
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (!io::trim(lines[i]).empty()) parts[k]->push_back(lines[i]);
    }
  }
  return manifest;
}

}  // namespace rumourlab::ingest
