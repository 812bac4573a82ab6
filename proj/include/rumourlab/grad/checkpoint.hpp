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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "rumourlab/grad/tensor.hpp"

namespace rumourlab::grad {

// Text envelope:
//   # rumourlab-ckpt v1
//   # meta <key> <value>
//   <name> [d1,d2] v1 v2 ...
// Values are printed with 17 significant digits and read back bit-exact.
struct Checkpoint {
  std::map<std::string, std::string> meta;
  ParameterSet params;
};

std::string serialize_checkpoint(const Checkpoint& checkpoint);
Checkpoint parse_checkpoint(std::string_view text, const std::string& source = "<checkpoint>");
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace rumourlab::grad
