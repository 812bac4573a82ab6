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

#include <cstdint>

#include "rumourlab/grad/tensor.hpp"

namespace rumourlab::grad {

enum class OptimizerKind { adam, adamw };

struct AdamConfig {
  OptimizerKind kind = OptimizerKind::adamw;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  // adam: coupled L2 (added to the gradient); adamw: decoupled decay.
  double weight_decay = 0.0;

  // lr 1e-4, weight decay 1e-2, eps 1e-7.
  static AdamConfig adamw_defaults();
};

struct OptimizerState {
  Gradients m;
  Gradients v;
  std::uint64_t step = 0;
};

std::string_view to_string(OptimizerKind kind);
OptimizerKind parse_optimizer_kind(std::string_view text);

// One Adam(W) update of every tensor in `params`. Parameters without an entry
// in `grads` see a zero gradient. Throws on a non-finite gradient before
// touching anything.
void optimizer_step(const AdamConfig& config, OptimizerState& state, ParameterSet& params,
                    const Gradients& grads);

}  // namespace rumourlab::grad
