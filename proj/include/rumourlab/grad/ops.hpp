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
#include <optional>
#include <span>
#include <vector>

#include "rumourlab/grad/sparse.hpp"
#include "rumourlab/grad/tape.hpp"

// Differentiable primitives. Every function records one node on the tape of
// its (first) Var argument and throws ValidationError on shape mismatch.
namespace rumourlab::grad {

// [n,k] x [k,m]
Var matmul(Var a, Var b);
// Constant sparse [n,k] times [k,m]. The tape keeps its own copy of `a`.
Var spmm(const SparseMatrix& a, Var x);

Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
// x [n,m] plus bias [m] broadcast over rows.
Var add_bias(Var x, Var bias);
Var scale(Var x, double factor);

Var relu(Var x);  // derivative taken as 0 at x == 0
Var sigmoid(Var x);
Var tanh(Var x);

// Concatenate rank-2 inputs along columns.
Var concat_cols(std::span<const Var> parts);
Var concat_cols(Var a, Var b);
Var softmax_rows(Var x);

// Mean of the rows of x assigned to each segment; empty segments yield zeros.
Var segment_mean(Var x, std::span<const std::size_t> membership, std::size_t num_segments);
// Rows of x at the given indices (embedding lookup when x is a table).
Var gather_rows(Var x, std::span<const std::size_t> indices);
// Multiplies row i by mask[i].
Var mask_rows(Var x, std::span<const double> mask);
Var slice_cols(Var x, std::size_t start, std::size_t count);

Var sum(Var x);
Var mean(Var x);
Var squared_norm(Var x);

// Probabilities are clamped to [kProbabilityFloor, 1 - kProbabilityFloor].
inline constexpr double kProbabilityFloor = 1e-12;

// -sum_i w_i [y_i ln p_i + (1 - y_i) ln(1 - p_i)] / sum_i w_i; without
// weights this is the plain mean.
Var bce_loss(Var probabilities, std::span<const double> targets,
             std::span<const double> sample_weights = {});
// -sum_i w[y_i] ln p[i, y_i] / sum_i w[y_i]
Var weighted_ce_loss(Var probabilities, std::span<const std::size_t> targets,
                     std::span<const double> class_weights = {});
// mean_i max(0, 1 - y_i s_i) with y_i in {-1, +1}; sample weights optional.
Var hinge_loss(Var scores, std::span<const double> targets,
               std::span<const double> sample_weights = {});
// hinge_loss + lambda * ||w||^2
Var hinge_loss(Var scores, std::span<const double> targets, Var weights, double lambda,
               std::span<const double> sample_weights = {});

}  // namespace rumourlab::grad
