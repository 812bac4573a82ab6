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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rumourlab/evalrun.hpp"

// Subcommand implementations behind dispatch(). Each returns an exit code or
// throws; dispatch() maps exceptions to exit codes.
namespace rumourlab::cli::detail {

struct CommonOptions {
  std::string config;
  std::string data;
  std::string out;
  std::string model;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> set;  // key=value overrides
};

eval::RunConfig resolve_config(const CommonOptions& options);

int cmd_ingest(const CommonOptions& o, std::ostream& out, std::ostream& err);
int cmd_stats(const CommonOptions& o, std::ostream& out, std::ostream& err);
int cmd_build_trees(const CommonOptions& o, std::ostream& out, std::ostream& err);
int cmd_train(const CommonOptions& o, std::ostream& out, std::ostream& err);
int cmd_evaluate(const CommonOptions& o, const std::string& model_dir, std::ostream& out, std::ostream& err);
int cmd_predict(const CommonOptions& o, const std::string& model_dir, std::ostream& out, std::ostream& err);
int cmd_analyze(const std::string& what, const CommonOptions& o, const std::string& predictions,
                std::ostream& out, std::ostream& err);

}  // namespace rumourlab::cli::detail
