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

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <cmath>
#include <functional>

#include "rumourlab/grad/tape.hpp"

namespace rumourlab::grad {

// Builds a scalar loss on the given tape from the given parameters. The
// function must watch parameters through Tape::parameter.
using LossFunction = std::function<Var(Tape&, const ParameterSet&)>;

struct GradCheckOptions {
  // 0 checks every coordinate; otherwise at most this many per tensor.
  std::size_t max_coordinates = 0;
  std::uint64_t seed = 0;
};

inline double relative_error(double analytic, double numeric) {
  const double denom = std::max(1e-8, std::abs(analytic) + std::abs(numeric));
  return std::abs(analytic - numeric) / denom;
}

// Largest relative error between backward() and central differences over the
// sampled coordinates.
double grad_check(const LossFunction& fn, ParameterSet params, double eps = 1e-5,
                  const GradCheckOptions& options = {});

}  // namespace rumourlab::grad
