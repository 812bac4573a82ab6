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

#include "rumourlab/grad/optimizer.hpp"

#include <cmath>

#include "rumourlab/error.hpp"

namespace rumourlab::grad {

AdamConfig AdamConfig::adamw_defaults() {
  AdamConfig config;
  config.kind = OptimizerKind::adamw;
  config.lr = 1e-4;
  config.weight_decay = 1e-2;
  config.eps = 1e-7;
  return config;
}

std::string_view to_string(OptimizerKind kind) {
  return kind == OptimizerKind::adam ? "adam" : "adamw";
}

OptimizerKind parse_optimizer_kind(std::string_view text) {
  if (text == "adam") return OptimizerKind::adam;
  if (text == "adamw") return OptimizerKind::adamw;
  throw ValidationError("unknown optimizer '" + std::string(text) + "' (expected adam or adamw)");
}

void optimizer_step(const AdamConfig& config, OptimizerState& state, ParameterSet& params,
                    const Gradients& grads) {
  for (const auto& [name, param] : params) {
    auto it = grads.find(name);
    if (it == grads.end()) continue;
    if (it->second.shape() != param.shape()) {
      throw ValidationError("gradient for '" + name + "' has shape " + shape_string(it->second.shape()) +
                            ", parameter has " + shape_string(param.shape()));
    }
    if (!it->second.all_finite()) throw ValidationError("non-finite gradient for parameter '" + name + "'");
  }

  state.step += 1;
  const double t = static_cast<double>(state.step);
  const double correction1 = 1.0 - std::pow(config.beta1, t);
  const double correction2 = 1.0 - std::pow(config.beta2, t);

  for (auto& [name, param] : params) {
    Tensor& m = state.m.try_emplace(name, Tensor::zeros_like(param)).first->second;
    Tensor& v = state.v.try_emplace(name, Tensor::zeros_like(param)).first->second;
    if (m.shape() != param.shape() || v.shape() != param.shape()) {
      throw ValidationError("optimizer moments for '" + name + "' do not match the parameter shape");
    }
    auto it = grads.find(name);
    const Tensor* grad = it == grads.end() ? nullptr : &it->second;

    if (config.kind == OptimizerKind::adamw && config.weight_decay != 0.0) {
      const double decay = 1.0 - config.lr * config.weight_decay;
      for (double& p : param.values()) p *= decay;
    }
    for (std::size_t i = 0; i < param.size(); ++i) {
      double g = grad ? (*grad)[i] : 0.0;
      if (config.kind == OptimizerKind::adam) g += config.weight_decay * param[i];
      m[i] = config.beta1 * m[i] + (1.0 - config.beta1) * g;
      v[i] = config.beta2 * v[i] + (1.0 - config.beta2) * g * g;
      const double m_hat = m[i] / correction1;
      const double v_hat = v[i] / correction2;
      param[i] -= config.lr * m_hat / (std::sqrt(v_hat) + config.eps);
    }
  }
}

}  // namespace rumourlab::grad
