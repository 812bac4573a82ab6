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

#include "rumourlab/grad/ops.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "rumourlab/error.hpp"

namespace rumourlab::grad {

namespace {

Tape& tape_of(Var v) {
  if (v.tape() == nullptr) throw ValidationError("primitive applied to an unbound Var");
  return *v.tape();
}

[[noreturn]] void shape_error(OpKind kind, const std::string& detail) {
  throw ValidationError(std::string(op_name(kind)) + ": " + detail);
}

void require_matrix(OpKind kind, const Tensor& t, const char* what) {
  if (t.rank() != 2) shape_error(kind, std::string(what) + " must be rank 2, got " + shape_string(t.shape()));
}

void require_same_shape(OpKind kind, const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) {
    shape_error(kind, "shapes " + shape_string(a.shape()) + " and " + shape_string(b.shape()) + " differ");
  }
}

template <typename Forward, typename Derivative>
Var unary(OpKind kind, Var x, Forward forward, Derivative derivative) {
  const Tensor& in = x.value();
  Tensor out(in.shape());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = forward(in[i]);
  return tape_of(x).record(kind, {x}, std::move(out),
                           [x, derivative](const Tensor& y, const Tensor& g, std::span<Tensor* const> grads) {
                             if (!grads[0]) return;
                             const Tensor& in = x.value();
                             Tensor& dx = *grads[0];
                             for (std::size_t i = 0; i < g.size(); ++i) dx[i] += g[i] * derivative(in[i], y[i]);
                           });
}

double clamp_probability(double p) {
  return std::clamp(p, kProbabilityFloor, 1.0 - kProbabilityFloor);
}

}  // namespace

Var matmul(Var a, Var b) {
  const Tensor& A = a.value();
  const Tensor& B = b.value();
  require_matrix(OpKind::matmul, A, "left operand");
  require_matrix(OpKind::matmul, B, "right operand");
  if (A.cols() != B.rows()) {
    shape_error(OpKind::matmul, "cannot multiply " + shape_string(A.shape()) + " by " + shape_string(B.shape()));
  }
  const std::size_t n = A.rows(), k = A.cols(), m = B.cols();
  Tensor C(Shape{n, m}, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double* c = C.data() + i * m;
    for (std::size_t p = 0; p < k; ++p) {
      const double av = A[i * k + p];
      if (av == 0.0) continue;
      const double* brow = B.data() + p * m;
      for (std::size_t j = 0; j < m; ++j) c[j] += av * brow[j];
    }
  }
  return tape_of(a).record(OpKind::matmul, {a, b}, std::move(C),
                           [a, b, n, k, m](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             const Tensor& A = a.value();
                             const Tensor& B = b.value();
                             if (grads[0]) {
                               Tensor& dA = *grads[0];
                               for (std::size_t i = 0; i < n; ++i) {
                                 const double* grow = g.data() + i * m;
                                 for (std::size_t p = 0; p < k; ++p) {
                                   const double* brow = B.data() + p * m;
                                   double acc = 0.0;
                                   for (std::size_t j = 0; j < m; ++j) acc += grow[j] * brow[j];
                                   dA[i * k + p] += acc;
                                 }
                               }
                             }
                             if (grads[1]) {
                               Tensor& dB = *grads[1];
                               for (std::size_t i = 0; i < n; ++i) {
                                 const double* grow = g.data() + i * m;
                                 for (std::size_t p = 0; p < k; ++p) {
                                   const double av = A[i * k + p];
                                   if (av == 0.0) continue;
                                   double* drow = dB.data() + p * m;
                                   for (std::size_t j = 0; j < m; ++j) drow[j] += av * grow[j];
                                 }
                               }
                             }
                           });
}

Var spmm(const SparseMatrix& a, Var x) {
  const Tensor& X = x.value();
  require_matrix(OpKind::spmm, X, "dense operand");
  if (a.cols() != X.rows()) {
    shape_error(OpKind::spmm, "cannot multiply sparse " + std::to_string(a.rows()) + "x" +
                                  std::to_string(a.cols()) + " by " + shape_string(X.shape()));
  }
  const std::size_t width = X.cols();
  Tensor out(Shape{a.rows(), width}, 0.0);
  a.multiply(X.data(), width, out.data());
  auto matrix = std::make_shared<const SparseMatrix>(a);
  return tape_of(x).record(OpKind::spmm, {x}, std::move(out),
                           [matrix, width](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             if (grads[0]) matrix->multiply_transpose_add(g.data(), width, grads[0]->data());
                           });
}

Var add(Var a, Var b) {
  require_same_shape(OpKind::add, a.value(), b.value());
  Tensor out = a.value();
  const Tensor& B = b.value();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += B[i];
  return tape_of(a).record(OpKind::add, {a, b}, std::move(out),
                           [](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             for (Tensor* d : grads) {
                               if (!d) continue;
                               for (std::size_t i = 0; i < g.size(); ++i) (*d)[i] += g[i];
                             }
                           });
}

Var sub(Var a, Var b) {
  require_same_shape(OpKind::sub, a.value(), b.value());
  Tensor out = a.value();
  const Tensor& B = b.value();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= B[i];
  return tape_of(a).record(OpKind::sub, {a, b}, std::move(out),
                           [](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             if (grads[0]) {
                               for (std::size_t i = 0; i < g.size(); ++i) (*grads[0])[i] += g[i];
                             }
                             if (grads[1]) {
                               for (std::size_t i = 0; i < g.size(); ++i) (*grads[1])[i] -= g[i];
                             }
                           });
}

Var mul(Var a, Var b) {
  require_same_shape(OpKind::mul, a.value(), b.value());
  Tensor out = a.value();
  const Tensor& B = b.value();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= B[i];
  return tape_of(a).record(OpKind::mul, {a, b}, std::move(out),
                           [a, b](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             const Tensor& A = a.value();
                             const Tensor& B = b.value();
                             if (grads[0]) {
                               for (std::size_t i = 0; i < g.size(); ++i) (*grads[0])[i] += g[i] * B[i];
                             }
                             if (grads[1]) {
                               for (std::size_t i = 0; i < g.size(); ++i) (*grads[1])[i] += g[i] * A[i];
                             }
                           });
}

Var add_bias(Var x, Var bias) {
  const Tensor& X = x.value();
  const Tensor& b = bias.value();
  require_matrix(OpKind::add_bias, X, "input");
  if (b.rank() != 1 || b.size() != X.cols()) {
    shape_error(OpKind::add_bias, "bias " + shape_string(b.shape()) + " does not match input " +
                                      shape_string(X.shape()));
  }
  const std::size_t n = X.rows(), m = X.cols();
  Tensor out = X;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) out[i * m + j] += b[j];
  }
  return tape_of(x).record(OpKind::add_bias, {x, bias}, std::move(out),
                           [n, m](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             if (grads[0]) {
                               for (std::size_t i = 0; i < g.size(); ++i) (*grads[0])[i] += g[i];
                             }
                             if (grads[1]) {
                               for (std::size_t i = 0; i < n; ++i) {
                                 for (std::size_t j = 0; j < m; ++j) (*grads[1])[j] += g[i * m + j];
                               }
                             }
                           });
}

Var scale(Var x, double factor) {
  return unary(
      OpKind::scale, x, [factor](double v) { return v * factor; },
      [factor](double, double) { return factor; });
}

Var relu(Var x) {
  return unary(
      OpKind::relu, x, [](double v) { return v > 0.0 ? v : 0.0; },
      [](double v, double) { return v > 0.0 ? 1.0 : 0.0; });
}

Var sigmoid(Var x) {
  return unary(
      OpKind::sigmoid, x,
      [](double v) {
        if (v >= 0.0) return 1.0 / (1.0 + std::exp(-v));
        const double e = std::exp(v);
        return e / (1.0 + e);
      },
      [](double, double y) { return y * (1.0 - y); });
}

Var tanh(Var x) {
  return unary(
      OpKind::tanh, x, [](double v) { return std::tanh(v); },
      [](double, double y) { return 1.0 - y * y; });
}

Var concat_cols(std::span<const Var> parts) {
  if (parts.empty()) shape_error(OpKind::concat, "no inputs");
  const std::size_t n = parts[0].value().rows();
  std::vector<std::size_t> widths;
  std::size_t total = 0;
  for (const Var& part : parts) {
    const Tensor& t = part.value();
    require_matrix(OpKind::concat, t, "input");
    if (t.rows() != n) {
      shape_error(OpKind::concat, "row counts differ: " + shape_string(parts[0].shape()) + " vs " +
                                      shape_string(t.shape()));
    }
    widths.push_back(t.cols());
    total += t.cols();
  }
  Tensor out(Shape{n, total}, 0.0);
  std::size_t offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Tensor& t = parts[p].value();
    for (std::size_t i = 0; i < n; ++i) {
      std::copy_n(t.data() + i * widths[p], widths[p], out.data() + i * total + offset);
    }
    offset += widths[p];
  }
  return tape_of(parts[0]).record(
      OpKind::concat, std::vector<Var>(parts.begin(), parts.end()), std::move(out),
      [n, total, widths](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
        std::size_t offset = 0;
        for (std::size_t p = 0; p < widths.size(); ++p) {
          if (grads[p]) {
            for (std::size_t i = 0; i < n; ++i) {
              const double* src = g.data() + i * total + offset;
              double* dst = grads[p]->data() + i * widths[p];
              for (std::size_t j = 0; j < widths[p]; ++j) dst[j] += src[j];
            }
          }
          offset += widths[p];
        }
      });
}

Var concat_cols(Var a, Var b) {
  const Var parts[] = {a, b};
  return concat_cols(parts);
}

Var softmax_rows(Var x) {
  const Tensor& X = x.value();
  require_matrix(OpKind::softmax, X, "input");
  const std::size_t n = X.rows(), m = X.cols();
  Tensor out(X.shape());
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = X.data() + i * m;
    const double peak = *std::max_element(row, row + m);
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) total += out[i * m + j] = std::exp(row[j] - peak);
    for (std::size_t j = 0; j < m; ++j) out[i * m + j] /= total;
  }
  return tape_of(x).record(OpKind::softmax, {x}, std::move(out),
                           [n, m](const Tensor& y, const Tensor& g, std::span<Tensor* const> grads) {
                             if (!grads[0]) return;
                             for (std::size_t i = 0; i < n; ++i) {
                               double dot = 0.0;
                               for (std::size_t j = 0; j < m; ++j) dot += g[i * m + j] * y[i * m + j];
                               for (std::size_t j = 0; j < m; ++j) {
                                 (*grads[0])[i * m + j] += y[i * m + j] * (g[i * m + j] - dot);
                               }
                             }
                           });
}

Var segment_mean(Var x, std::span<const std::size_t> membership, std::size_t num_segments) {
  const Tensor& X = x.value();
  require_matrix(OpKind::segment_mean, X, "input");
  if (membership.size() != X.rows()) {
    shape_error(OpKind::segment_mean, "membership has " + std::to_string(membership.size()) +
                                          " entries for " + std::to_string(X.rows()) + " rows");
  }
  const std::size_t m = X.cols();
  std::vector<double> counts(num_segments, 0.0);
  for (std::size_t segment : membership) {
    if (segment >= num_segments) shape_error(OpKind::segment_mean, "segment index out of range");
    counts[segment] += 1.0;
  }
  Tensor out(Shape{num_segments, m}, 0.0);
  for (std::size_t i = 0; i < membership.size(); ++i) {
    double* dst = out.data() + membership[i] * m;
    for (std::size_t j = 0; j < m; ++j) dst[j] += X[i * m + j];
  }
  for (std::size_t s = 0; s < num_segments; ++s) {
    if (counts[s] == 0.0) continue;
    for (std::size_t j = 0; j < m; ++j) out[s * m + j] /= counts[s];
  }
  std::vector<std::size_t> members(membership.begin(), membership.end());
  return tape_of(x).record(
      OpKind::segment_mean, {x}, std::move(out),
      [members = std::move(members), counts = std::move(counts), m](
          const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
        if (!grads[0]) return;
        for (std::size_t i = 0; i < members.size(); ++i) {
          const double inv = 1.0 / counts[members[i]];
          const double* src = g.data() + members[i] * m;
          double* dst = grads[0]->data() + i * m;
          for (std::size_t j = 0; j < m; ++j) dst[j] += src[j] * inv;
        }
      });
}

Var gather_rows(Var x, std::span<const std::size_t> indices) {
  const Tensor& X = x.value();
  require_matrix(OpKind::gather_rows, X, "table");
  const std::size_t m = X.cols();
  Tensor out(Shape{indices.size(), m}, 0.0);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= X.rows()) {
      shape_error(OpKind::gather_rows, "index " + std::to_string(indices[i]) + " outside table of " +
                                           std::to_string(X.rows()) + " rows");
    }
    std::copy_n(X.data() + indices[i] * m, m, out.data() + i * m);
  }
  std::vector<std::size_t> rows(indices.begin(), indices.end());
  return tape_of(x).record(OpKind::gather_rows, {x}, std::move(out),
                           [rows = std::move(rows), m](const Tensor&, const Tensor& g,
                                                       std::span<Tensor* const> grads) {
                             if (!grads[0]) return;
                             for (std::size_t i = 0; i < rows.size(); ++i) {
                               const double* src = g.data() + i * m;
                               double* dst = grads[0]->data() + rows[i] * m;
                               for (std::size_t j = 0; j < m; ++j) dst[j] += src[j];
                             }
                           });
}

Var mask_rows(Var x, std::span<const double> mask) {
  const Tensor& X = x.value();
  require_matrix(OpKind::mask_rows, X, "input");
  if (mask.size() != X.rows()) {
    shape_error(OpKind::mask_rows, "mask has " + std::to_string(mask.size()) + " entries for " +
                                       std::to_string(X.rows()) + " rows");
  }
  const std::size_t m = X.cols();
  Tensor out = X;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) out[i * m + j] *= mask[i];
  }
  std::vector<double> factors(mask.begin(), mask.end());
  return tape_of(x).record(OpKind::mask_rows, {x}, std::move(out),
                           [factors = std::move(factors), m](const Tensor&, const Tensor& g,
                                                             std::span<Tensor* const> grads) {
                             if (!grads[0]) return;
                             for (std::size_t i = 0; i < factors.size(); ++i) {
                               for (std::size_t j = 0; j < m; ++j) {
                                 (*grads[0])[i * m + j] += g[i * m + j] * factors[i];
                               }
                             }
                           });
}

Var slice_cols(Var x, std::size_t start, std::size_t count) {
  const Tensor& X = x.value();
  require_matrix(OpKind::slice_cols, X, "input");
  if (start + count > X.cols()) {
    shape_error(OpKind::slice_cols, "columns [" + std::to_string(start) + "," + std::to_string(start + count) +
                                        ") outside " + shape_string(X.shape()));
  }
  const std::size_t n = X.rows(), m = X.cols();
  Tensor out(Shape{n, count}, 0.0);
  for (std::size_t i = 0; i < n; ++i) std::copy_n(X.data() + i * m + start, count, out.data() + i * count);
  return tape_of(x).record(OpKind::slice_cols, {x}, std::move(out),
                           [n, m, start, count](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             if (!grads[0]) return;
                             for (std::size_t i = 0; i < n; ++i) {
                               for (std::size_t j = 0; j < count; ++j) {
                                 (*grads[0])[i * m + start + j] += g[i * count + j];
                               }
                             }
                           });
}

Var sum(Var x) {
  double total = 0.0;
  for (double v : x.value().values()) total += v;
  return tape_of(x).record(OpKind::sum, {x}, Tensor::scalar(total),
                           [](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             if (!grads[0]) return;
                             for (double& d : grads[0]->values()) d += g[0];
                           });
}

Var mean(Var x) {
  const double n = static_cast<double>(x.value().size());
  double total = 0.0;
  for (double v : x.value().values()) total += v;
  return tape_of(x).record(OpKind::mean, {x}, Tensor::scalar(total / n),
                           [n](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             if (!grads[0]) return;
                             for (double& d : grads[0]->values()) d += g[0] / n;
                           });
}

Var squared_norm(Var x) {
  double total = 0.0;
  for (double v : x.value().values()) total += v * v;
  return tape_of(x).record(OpKind::squared_norm, {x}, Tensor::scalar(total),
                           [x](const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
                             if (!grads[0]) return;
                             const Tensor& X = x.value();
                             for (std::size_t i = 0; i < X.size(); ++i) (*grads[0])[i] += 2.0 * X[i] * g[0];
                           });
}

Var bce_loss(Var probabilities, std::span<const double> targets, std::span<const double> sample_weights) {
  const Tensor& P = probabilities.value();
  if (P.size() != targets.size()) {
    shape_error(OpKind::bce, std::to_string(P.size()) + " predictions for " + std::to_string(targets.size()) +
                                 " targets");
  }
  if (!sample_weights.empty() && sample_weights.size() != targets.size()) {
    shape_error(OpKind::bce, "sample weight count does not match targets");
  }
  std::vector<double> weights(targets.size(), 1.0);
  if (!sample_weights.empty()) weights.assign(sample_weights.begin(), sample_weights.end());
  double total_weight = 0.0;
  double loss = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double p = clamp_probability(P[i]);
    loss -= weights[i] * (targets[i] * std::log(p) + (1.0 - targets[i]) * std::log(1.0 - p));
    total_weight += weights[i];
  }
  std::vector<double> y(targets.begin(), targets.end());
  return tape_of(probabilities).record(
      OpKind::bce, {probabilities}, Tensor::scalar(loss / total_weight),
      [probabilities, y = std::move(y), weights = std::move(weights), total_weight](
          const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
        if (!grads[0]) return;
        const Tensor& P = probabilities.value();
        for (std::size_t i = 0; i < y.size(); ++i) {
          const double p = clamp_probability(P[i]);
          (*grads[0])[i] += g[0] * weights[i] * (-y[i] / p + (1.0 - y[i]) / (1.0 - p)) / total_weight;
        }
      });
}

Var weighted_ce_loss(Var probabilities, std::span<const std::size_t> targets,
                     std::span<const double> class_weights) {
  const Tensor& P = probabilities.value();
  require_matrix(OpKind::weighted_ce, P, "probabilities");
  const std::size_t n = P.rows(), c = P.cols();
  if (targets.size() != n) {
    shape_error(OpKind::weighted_ce, std::to_string(n) + " rows for " + std::to_string(targets.size()) + " targets");
  }
  if (!class_weights.empty() && class_weights.size() != c) {
    shape_error(OpKind::weighted_ce, "expected " + std::to_string(c) + " class weights");
  }
  std::vector<double> weights(n, 1.0);
  double total_weight = 0.0;
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (targets[i] >= c) shape_error(OpKind::weighted_ce, "target class out of range");
    if (!class_weights.empty()) weights[i] = class_weights[targets[i]];
    loss -= weights[i] * std::log(clamp_probability(P[i * c + targets[i]]));
    total_weight += weights[i];
  }
  std::vector<std::size_t> y(targets.begin(), targets.end());
  return tape_of(probabilities).record(
      OpKind::weighted_ce, {probabilities}, Tensor::scalar(loss / total_weight),
      [probabilities, y = std::move(y), weights = std::move(weights), total_weight, c](
          const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
        if (!grads[0]) return;
        const Tensor& P = probabilities.value();
        for (std::size_t i = 0; i < y.size(); ++i) {
          const double p = clamp_probability(P[i * c + y[i]]);
          (*grads[0])[i * c + y[i]] -= g[0] * weights[i] / (p * total_weight);
        }
      });
}

Var hinge_loss(Var scores, std::span<const double> targets, std::span<const double> sample_weights) {
  const Tensor& S = scores.value();
  if (S.size() != targets.size()) {
    shape_error(OpKind::hinge, std::to_string(S.size()) + " scores for " + std::to_string(targets.size()) +
                                   " targets");
  }
  if (!sample_weights.empty() && sample_weights.size() != targets.size()) {
    shape_error(OpKind::hinge, "sample weight count does not match targets");
  }
  std::vector<double> weights(targets.size(), 1.0);
  if (!sample_weights.empty()) weights.assign(sample_weights.begin(), sample_weights.end());
  double total_weight = 0.0;
  double loss = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    loss += weights[i] * std::max(0.0, 1.0 - targets[i] * S[i]);
    total_weight += weights[i];
  }
  std::vector<double> y(targets.begin(), targets.end());
  return tape_of(scores).record(
      OpKind::hinge, {scores}, Tensor::scalar(loss / total_weight),
      [scores, y = std::move(y), weights = std::move(weights), total_weight](
          const Tensor&, const Tensor& g, std::span<Tensor* const> grads) {
        if (!grads[0]) return;
        const Tensor& S = scores.value();
        for (std::size_t i = 0; i < y.size(); ++i) {
          if (1.0 - y[i] * S[i] > 0.0) (*grads[0])[i] -= g[0] * weights[i] * y[i] / total_weight;
        }
      });
}

Var hinge_loss(Var scores, std::span<const double> targets, Var weights, double lambda,
               std::span<const double> sample_weights) {
  Var data_term = hinge_loss(scores, targets, sample_weights);
  if (lambda == 0.0) return data_term;
  return add(data_term, scale(squared_norm(weights), lambda));
}

}  // namespace rumourlab::grad
