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

#include "rumourlab/grad/grad_check.hpp"

#include <numeric>
#include <vector>

#include "rumourlab/random.hpp"

namespace rumourlab::grad {

namespace {

double evaluate(const LossFunction& fn, const ParameterSet& params) {
  Tape tape;
  return fn(tape, params).value().item();
}

}  // namespace

double grad_check(const LossFunction& fn, ParameterSet params, double eps, const GradCheckOptions& options) {
  Gradients analytic;
  {
    Tape tape;
    Var loss = fn(tape, params);
    analytic = tape.backward(loss, params);
  }
  Rng rng(options.seed);
  double worst = 0.0;
  for (auto& [name, tensor] : params) {
    std::vector<std::size_t> coords(tensor.size());
    std::iota(coords.begin(), coords.end(), 0);
    if (options.max_coordinates != 0 && coords.size() > options.max_coordinates) {
      rng.shuffle(std::span<std::size_t>(coords));
      coords.resize(options.max_coordinates);
    }
    const Tensor& grad = analytic.at(name);
    for (std::size_t i : coords) {
      const double original = tensor[i];
      tensor[i] = original + eps;
      const double plus = evaluate(fn, params);
      tensor[i] = original - eps;
      const double minus = evaluate(fn, params);
      tensor[i] = original;
      worst = std::max(worst, relative_error(grad[i], (plus - minus) / (2.0 * eps)));
    }
  }
  return worst;
}

}  // namespace rumourlab::grad
