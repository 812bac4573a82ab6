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

#include <cmath>

#include "rumourlab/grad/ops.hpp"
#include "rumourlab/models.hpp"

namespace rumourlab::models {

grad::Tensor glorot_uniform(grad::Shape shape, std::size_t fan_in, std::size_t fan_out, Rng& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  grad::Tensor t(std::move(shape));
  for (double& v : t.values()) v = rng.uniform(-limit, limit);
  return t;
}

grad::Var dropout(grad::Var x, double rate, Rng& rng) {
  if (rate <= 0.0) return x;
  const double keep = 1.0 - rate;
  grad::Tensor mask(x.shape());
  for (double& v : mask.values()) v = rng.bernoulli(keep) ? 1.0 / keep : 0.0;
  return grad::mul(x, x.tape()->constant(std::move(mask)));
}

}  // namespace rumourlab::models
