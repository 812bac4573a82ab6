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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rumourlab/grad/tensor.hpp"

namespace rumourlab::grad {

enum class OpKind {
  constant,
  parameter,
  matmul,
  spmm,
  add,
  sub,
  mul,
  add_bias,
  scale,
  relu,
  sigmoid,
  tanh,
  concat,
  softmax,
  segment_mean,
  gather_rows,
  mask_rows,
  slice_cols,
  sum,
  mean,
  squared_norm,
  bce,
  weighted_ce,
  hinge,
};

std::string_view op_name(OpKind kind);

class Tape;

// Handle to a node on a tape. Cheap to copy; valid while the tape lives.
class Var {
 public:
  Var() = default;

  const Tensor& value() const;
  const Shape& shape() const { return value().shape(); }
  std::size_t id() const { return id_; }
  Tape* tape() const { return tape_; }

 private:
  friend class Tape;
  Var(Tape* tape, std::size_t id) : tape_(tape), id_(id) {}

  Tape* tape_ = nullptr;
  std::size_t id_ = 0;
};

// Receives the node's output and its gradient and accumulates into the
// gradients of its inputs. Entries for inputs that need no gradient are null.
using BackwardFn = std::function<void(const Tensor& output, const Tensor& grad_out,
                                      std::span<Tensor* const> input_grads)>;

// Records primitive applications in execution order, so the node list is
// topologically sorted by construction.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Tensor value);
  // Constant that references `value`, which must outlive the tape.
  Var constant_ref(const Tensor& value);
  // The tensor is referenced, not copied, and must outlive the tape. Watching
  // the same name twice returns the same node.
  Var parameter(const std::string& name, const Tensor& value);

  Var record(OpKind kind, std::vector<Var> inputs, Tensor value, BackwardFn backward);

  const Tensor& value(std::size_t id) const;
  OpKind kind(std::size_t id) const { return nodes_[id].kind; }
  std::span<const std::size_t> inputs(std::size_t id) const { return nodes_[id].inputs; }
  bool requires_grad(std::size_t id) const { return nodes_[id].requires_grad; }
  std::size_t size() const { return nodes_.size(); }

  // Gradients of a scalar loss for every watched parameter; watched
  // parameters outside the loss's ancestry get zeros.
  Gradients backward(Var loss) const;
  // As above, additionally zero-filling every entry of `all` not watched.
  Gradients backward(Var loss, const ParameterSet& all) const;

 private:
  struct Node {
    OpKind kind = OpKind::constant;
    std::vector<std::size_t> inputs;
    Tensor owned;
    const Tensor* external = nullptr;
    bool requires_grad = false;
    BackwardFn backward;
    std::string name;
  };

  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> parameters_;
};

}  // namespace rumourlab::grad
