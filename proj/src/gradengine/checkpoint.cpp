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

#include "rumourlab/grad/checkpoint.hpp"

#include "rumourlab/error.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::grad {

namespace {

constexpr std::string_view kHeader = "# rumourlab-ckpt v1";
constexpr std::string_view kMetaPrefix = "# meta ";

bool has_space(std::string_view s) {
  return s.empty() || s.find_first_of(" \t\r\n") != std::string_view::npos;
}

}  // namespace

std::string serialize_checkpoint(const Checkpoint& checkpoint) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& [key, value] : checkpoint.meta) {
    if (has_space(key)) throw ValidationError("checkpoint meta key '" + key + "' must be a non-empty word");
    if (value.find('\n') != std::string::npos) throw ValidationError("checkpoint meta value for '" + key + "' spans lines");
    out += kMetaPrefix;
    out += key;
    out += ' ';
    out += value;
    out += '\n';
  }
  for (const auto& [name, tensor] : checkpoint.params) {
    if (has_space(name)) throw ValidationError("parameter name '" + name + "' must be a non-empty word");
    out += name;
    out += " [";
    for (std::size_t d = 0; d < tensor.shape().size(); ++d) {
      if (d) out += ',';
      out += std::to_string(tensor.shape()[d]);
    }
    out += ']';
    for (double v : tensor.values()) {
      out += ' ';
      out += io::format_double(v);
    }
    out += '\n';
  }
  return out;
}

Checkpoint parse_checkpoint(std::string_view text, const std::string& source) {
  const auto lines = io::split_lines(text);
  if (lines.empty() || lines[0] != kHeader) {
    throw ParseError(source + ":1: missing '" + std::string(kHeader) + "' header");
  }
  Checkpoint checkpoint;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::string where = source + ":" + std::to_string(n + 1) + ": ";
    std::string_view line = lines[n];
    if (line.empty()) continue;
    if (line.starts_with(kMetaPrefix)) {
      std::string_view rest = line.substr(kMetaPrefix.size());
      const auto space = rest.find(' ');
      const std::string key(rest.substr(0, space));
      const std::string value = space == std::string_view::npos ? "" : std::string(rest.substr(space + 1));
      checkpoint.meta[key] = value;
      continue;
    }
    if (line.starts_with('#')) continue;
    const auto fields = io::split(line, ' ');
    if (fields.size() < 2) throw ParseError(where + "expected 'name [shape] values...'");
    std::string_view shape_text = fields[1];
    if (shape_text.size() < 2 || shape_text.front() != '[' || shape_text.back() != ']') {
      throw ParseError(where + "malformed shape '" + std::string(shape_text) + "'");
    }
    shape_text = shape_text.substr(1, shape_text.size() - 2);
    Shape shape;
    std::size_t count = 1;
    if (!shape_text.empty()) {
      for (std::string_view dim : io::split(shape_text, ',')) {
        shape.push_back(static_cast<std::size_t>(io::parse_uint(dim, "shape dimension")));
        count *= shape.back();
      }
    }
    if (fields.size() - 2 != count) {
      throw ParseError(where + "shape " + shape_string(shape) + " needs " + std::to_string(count) +
                       " values, found " + std::to_string(fields.size() - 2));
    }
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t i = 2; i < fields.size(); ++i) values.push_back(io::parse_double(fields[i], "parameter value"));
    const std::string name(fields[0]);
    if (!checkpoint.params.emplace(name, Tensor(shape, std::move(values))).second) {
      throw ParseError(where + "duplicate parameter '" + name + "'");
    }
  }
  return checkpoint;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  io::write_file(path, serialize_checkpoint(checkpoint));
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  return parse_checkpoint(io::read_file(path), path.string());
}

}  // namespace rumourlab::grad
