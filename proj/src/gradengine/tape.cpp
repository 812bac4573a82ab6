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

#include "rumourlab/grad/tape.hpp"

#include "rumourlab/error.hpp"

namespace rumourlab::grad {

std::string_view op_name(OpKind kind) {
  switch (kind) {
    case OpKind::constant: return "constant";
    case OpKind::parameter: return "parameter";
    case OpKind::matmul: return "matmul";
    case OpKind::spmm: return "spmm";
    case OpKind::add: return "add";
    case OpKind::sub: return "sub";
    case OpKind::mul: return "mul";
    case OpKind::add_bias: return "add_bias";
    case OpKind::scale: return "scale";
    case OpKind::relu: return "relu";
    case OpKind::sigmoid: return "sigmoid";
    case OpKind::tanh: return "tanh";
    case OpKind::concat: return "concat";
    case OpKind::softmax: return "softmax";
    case OpKind::segment_mean: return "segment_mean";
    case OpKind::gather_rows: return "gather_rows";
    case OpKind::mask_rows: return "mask_rows";
    case OpKind::slice_cols: return "slice_cols";
    case OpKind::sum: return "sum";
    case OpKind::mean: return "mean";
    case OpKind::squared_norm: return "squared_norm";
    case OpKind::bce: return "bce";
    case OpKind::weighted_ce: return "weighted_ce";
    case OpKind::hinge: return "hinge";
  }
  return "unknown";
}

const Tensor& Var::value() const {
  if (tape_ == nullptr) throw ValidationError("use of an unbound Var");
  return tape_->value(id_);
}

Var Tape::constant(Tensor value) {
  Node node;
  node.kind = OpKind::constant;
  node.owned = std::move(value);
  nodes_.push_back(std::move(node));
  return Var(this, nodes_.size() - 1);
}

Var Tape::constant_ref(const Tensor& value) {
  Node node;
  node.kind = OpKind::constant;
  node.external = &value;
  nodes_.push_back(std::move(node));
  return Var(this, nodes_.size() - 1);
}

Var Tape::parameter(const std::string& name, const Tensor& value) {
  if (auto it = parameters_.find(name); it != parameters_.end()) return Var(this, it->second);
  Node node;
  node.kind = OpKind::parameter;
  node.external = &value;
  node.requires_grad = true;
  node.name = name;
  nodes_.push_back(std::move(node));
  parameters_.emplace(name, nodes_.size() - 1);
  return Var(this, nodes_.size() - 1);
}

Var Tape::record(OpKind kind, std::vector<Var> inputs, Tensor value, BackwardFn backward) {
  Node node;
  node.kind = kind;
  node.owned = std::move(value);
  node.backward = std::move(backward);
  for (const Var& input : inputs) {
    if (input.tape_ != this) {
      throw ValidationError(std::string(op_name(kind)) + ": input belongs to another tape");
    }
    node.inputs.push_back(input.id_);
    node.requires_grad = node.requires_grad || nodes_[input.id_].requires_grad;
  }
  nodes_.push_back(std::move(node));
  return Var(this, nodes_.size() - 1);
}

const Tensor& Tape::value(std::size_t id) const {
  const Node& node = nodes_.at(id);
  return node.external != nullptr ? *node.external : node.owned;
}

Gradients Tape::backward(Var loss) const {
  if (loss.tape_ != this) throw ValidationError("backward: loss belongs to another tape");
  if (value(loss.id_).size() != 1) {
    throw ValidationError("backward: loss must be scalar, got shape " +
                          shape_string(value(loss.id_).shape()));
  }
  std::vector<Tensor> grads(nodes_.size());
  std::vector<bool> reached(nodes_.size(), false);
  grads[loss.id_] = Tensor(value(loss.id_).shape(), 1.0);
  reached[loss.id_] = true;

  std::vector<Tensor*> input_grads;
  for (std::size_t id = loss.id_ + 1; id-- > 0;) {
    const Node& node = nodes_[id];
    if (!reached[id] || !node.requires_grad || !node.backward) continue;
    input_grads.assign(node.inputs.size(), nullptr);
    for (std::size_t k = 0; k < node.inputs.size(); ++k) {
      const std::size_t input = node.inputs[k];
      if (!nodes_[input].requires_grad) continue;
      if (!reached[input]) {
        grads[input] = Tensor::zeros_like(value(input));
        reached[input] = true;
      }
      input_grads[k] = &grads[input];
    }
    node.backward(value(id), grads[id], input_grads);
  }

  Gradients result;
  for (const auto& [name, id] : parameters_) {
    result.emplace(name, reached[id] ? std::move(grads[id]) : Tensor::zeros_like(value(id)));
  }
  return result;
}

Gradients Tape::backward(Var loss, const ParameterSet& all) const {
  Gradients result = backward(loss);
  for (const auto& [name, tensor] : all) {
    if (!result.contains(name)) result.emplace(name, Tensor::zeros_like(tensor));
  }
  return result;
}

}  // namespace rumourlab::grad
