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

#include "rumourlab/error.hpp"
#include "rumourlab/grad/ops.hpp"
#include "rumourlab/models.hpp"

namespace rumourlab::models {

using grad::Tensor;
using grad::Var;

void BiGcnConfig::validate() const {
  if (input_dim == 0 || hidden_dim == 0 || out_dim == 0) throw ValidationError("bigcn: dimensions must be positive");
  if (!(drop_edge_rate >= 0.0 && drop_edge_rate < 1.0)) {
    throw ValidationError("bigcn: drop_edge_rate must lie in [0, 1)");
  }
  if (!(dropout >= 0.0 && dropout < 1.0)) throw ValidationError("bigcn: dropout must lie in [0, 1)");
}

grad::ParameterSet init_bigcn(const BiGcnConfig& config, std::uint64_t seed) {
  config.validate();
  const std::size_t in = config.input_dim, h = config.hidden_dim, o = config.out_dim;
  Rng rng(seed);
  grad::ParameterSet params;
  for (const char* dir : {"td", "bu"}) {
    const std::string prefix = std::string("bigcn.") + dir + ".";
    params[prefix + "W1"] = glorot_uniform({in, h}, in, h, rng);
    params[prefix + "b1"] = Tensor(grad::Shape{h}, 0.0);
    params[prefix + "W2"] = glorot_uniform({2 * h, o}, 2 * h, o, rng);
    params[prefix + "b2"] = Tensor(grad::Shape{o}, 0.0);
  }
  const std::size_t rep = 2 * (o + h);
  params["bigcn.fc.W"] = glorot_uniform({rep, 2}, rep, 2, rng);
  params["bigcn.fc.b"] = Tensor(grad::Shape{2}, 0.0);
  return params;
}

Var bigcn_forward(grad::Tape& tape, const grad::ParameterSet& params, const BiGcnConfig& config,
                  const tree::GraphBatch& batch, Rng* rng) {
  if (batch.vocab_size != config.input_dim) {
    throw ValidationError("bigcn: batch feature width " + std::to_string(batch.vocab_size) +
                          " does not match input_dim " + std::to_string(config.input_dim));
  }
  std::vector<std::size_t> root_of(batch.num_nodes);
  for (std::size_t i = 0; i < batch.num_nodes; ++i) root_of[i] = batch.roots[batch.membership[i]];

  auto param = [&](const std::string& name) { return tape.parameter(name, params.at(name)); };
  std::vector<Var> pooled;
  for (const char* dir : {"td", "bu"}) {
    const std::string prefix = std::string("bigcn.") + dir + ".";
    const grad::SparseMatrix& adjacency = std::string_view(dir) == "td" ? batch.td : batch.bu;

    Var h1 = grad::relu(
        grad::add_bias(grad::spmm(adjacency, grad::spmm(batch.features, param(prefix + "W1"))), param(prefix + "b1")));
    Var root1 = grad::gather_rows(h1, root_of);
    Var layer2_in = grad::concat_cols(h1, root1);
    if (rng) layer2_in = dropout(layer2_in, config.dropout, *rng);
    Var h2 = grad::relu(
        grad::add_bias(grad::spmm(adjacency, grad::matmul(layer2_in, param(prefix + "W2"))), param(prefix + "b2")));
    Var enhanced = grad::concat_cols(h2, root1);
    pooled.push_back(grad::segment_mean(enhanced, batch.membership, batch.num_graphs));
  }
  Var representation = grad::concat_cols(pooled[0], pooled[1]);
  return grad::softmax_rows(
      grad::add_bias(grad::matmul(representation, param("bigcn.fc.W")), param("bigcn.fc.b")));
}

}  // namespace rumourlab::models
