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

#include <algorithm>

#include "rumourlab/error.hpp"
#include "rumourlab/grad/ops.hpp"
#include "rumourlab/models.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::models {

using grad::Tensor;
using grad::Var;

void LstmConfig::validate() const {
  if (vocab_cap <= features::Vocabulary::kFirstContent || embed_dim == 0 || hidden_dim == 0 ||
      perceptron_dim == 0 || max_len == 0 || layers == 0) {
    throw ValidationError("lstm: dimensions must be positive and vocab_cap above the reserved ids");
  }
  if (!(dropout >= 0.0 && dropout < 1.0)) throw ValidationError("lstm: dropout must lie in [0, 1)");
}

std::vector<std::string> thread_tokens(const ingest::Thread& thread) {
  std::vector<std::string> tokens = text::tokenize(text::normalize(thread.source.text)).tokens;
  for (const ingest::TweetRecord& reply : thread.replies) {
    auto more = text::tokenize(text::normalize(reply.text)).tokens;
    tokens.insert(tokens.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return tokens;
}

std::vector<std::int32_t> encode_sequence(std::span<const std::string> tokens, const features::Vocabulary& vocab,
                                          std::size_t max_len) {
  std::vector<std::int32_t> ids;
  ids.reserve(std::min(tokens.size(), max_len));
  for (std::size_t i = 0; i < tokens.size() && i < max_len; ++i) ids.push_back(vocab.id(tokens[i]));
  return ids;
}

SequenceBatch make_sequence_batch(std::span<const std::vector<std::int32_t>> sequences, std::size_t extra_padding) {
  SequenceBatch batch;
  batch.batch = sequences.size();
  for (const auto& s : sequences) batch.length = std::max(batch.length, s.size());
  batch.length += extra_padding;
  batch.ids.assign(batch.batch * batch.length, features::Vocabulary::kPad);
  batch.mask.assign(batch.batch * batch.length, 0.0);
  for (std::size_t b = 0; b < sequences.size(); ++b) {
    for (std::size_t t = 0; t < sequences[b].size(); ++t) {
      batch.ids[b * batch.length + t] = sequences[b][t];
      batch.mask[b * batch.length + t] = 1.0;
    }
  }
  return batch;
}

namespace {

std::string layer_name(std::size_t layer, const char* part) {
  return "lstm.l" + std::to_string(layer) + "." + part;
}

}  // namespace

grad::ParameterSet init_lstm(const LstmConfig& config, std::size_t vocab_size, std::uint64_t seed) {
  config.validate();
  const std::size_t rows = std::min(vocab_size, config.vocab_cap);
  const std::size_t e = config.embed_dim, h = config.hidden_dim, p = config.perceptron_dim;
  Rng rng(seed);
  grad::ParameterSet params;
  params["lstm.embedding"] = glorot_uniform({rows, e}, rows, e, rng);
  for (std::size_t l = 0; l < config.layers; ++l) {
    const std::size_t in = l == 0 ? e : h;
    params[layer_name(l, "W")] = glorot_uniform({in, 4 * h}, in, 4 * h, rng);
    params[layer_name(l, "U")] = glorot_uniform({h, 4 * h}, h, 4 * h, rng);
    Tensor bias(grad::Shape{4 * h}, 0.0);
    for (std::size_t j = h; j < 2 * h; ++j) bias[j] = 1.0;  // forget gate
    params[layer_name(l, "b")] = std::move(bias);
  }
  params["lstm.head.W"] = glorot_uniform({h, p}, h, p, rng);
  params["lstm.head.b"] = Tensor(grad::Shape{p}, 0.0);
  params["lstm.out.W"] = glorot_uniform({p, 1}, p, 1, rng);
  params["lstm.out.b"] = Tensor(grad::Shape{1}, 0.0);
  return params;
}

Var lstm_forward(grad::Tape& tape, const grad::ParameterSet& params, const LstmConfig& config,
                 const SequenceBatch& batch, Rng* rng) {
  const Tensor& table = params.at("lstm.embedding");
  const std::size_t B = batch.batch, T = batch.length, h = config.hidden_dim;
  if (batch.ids.size() != B * T || batch.mask.size() != B * T) throw ValidationError("lstm: malformed batch");
  for (std::int32_t id : batch.ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= table.rows()) {
      throw ValidationError("lstm: token id " + std::to_string(id) + " outside embedding table of " +
                            std::to_string(table.rows()) + " rows");
    }
  }

  Var embedding = tape.parameter("lstm.embedding", table);
  std::vector<Var> inputs(T);
  std::vector<std::size_t> column(B);
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t b = 0; b < B; ++b) column[b] = static_cast<std::size_t>(batch.ids[b * T + t]);
    inputs[t] = grad::gather_rows(embedding, column);
  }

  std::vector<double> step_mask(B), carry_mask(B);
  Var h_state;
  for (std::size_t l = 0; l < config.layers; ++l) {
    Var W = tape.parameter(layer_name(l, "W"), params.at(layer_name(l, "W")));
    Var U = tape.parameter(layer_name(l, "U"), params.at(layer_name(l, "U")));
    Var bias = tape.parameter(layer_name(l, "b"), params.at(layer_name(l, "b")));
    h_state = tape.constant(Tensor(grad::Shape{B, h}, 0.0));
    Var c_state = h_state;
    for (std::size_t t = 0; t < T; ++t) {
      double active = 0.0;
      for (std::size_t b = 0; b < B; ++b) {
        step_mask[b] = batch.mask[b * T + t];
        carry_mask[b] = 1.0 - step_mask[b];
        active += step_mask[b];
      }
      if (active == 0.0) continue;  // nothing would change

      Var z = grad::add_bias(grad::add(grad::matmul(inputs[t], W), grad::matmul(h_state, U)), bias);
      Var in_gate = grad::sigmoid(grad::slice_cols(z, 0, h));
      Var forget_gate = grad::sigmoid(grad::slice_cols(z, h, h));
      Var candidate = grad::tanh(grad::slice_cols(z, 2 * h, h));
      Var out_gate = grad::sigmoid(grad::slice_cols(z, 3 * h, h));
      Var c_new = grad::add(grad::mul(forget_gate, c_state), grad::mul(in_gate, candidate));
      Var h_new = grad::mul(out_gate, grad::tanh(c_new));
      if (active == static_cast<double>(B)) {
        c_state = c_new;
        h_state = h_new;
      } else {
        c_state = grad::add(grad::mask_rows(c_new, step_mask), grad::mask_rows(c_state, carry_mask));
        h_state = grad::add(grad::mask_rows(h_new, step_mask), grad::mask_rows(h_state, carry_mask));
      }
      inputs[t] = h_state;
    }
  }

  Var features = rng ? dropout(h_state, config.dropout, *rng) : h_state;
  Var hidden = grad::relu(grad::add_bias(grad::matmul(features, tape.parameter("lstm.head.W", params.at("lstm.head.W"))),
                                         tape.parameter("lstm.head.b", params.at("lstm.head.b"))));
  return grad::sigmoid(grad::add_bias(grad::matmul(hidden, tape.parameter("lstm.out.W", params.at("lstm.out.W"))),
                                      tape.parameter("lstm.out.b", params.at("lstm.out.b"))));
}

}  // namespace rumourlab::models
