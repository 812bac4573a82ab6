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
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "rumourlab/analyze.hpp"
#include "rumourlab/cli.hpp"
#include "rumourlab/evalrun.hpp"
#include "rumourlab/features.hpp"
#include "rumourlab/grad/checkpoint.hpp"
#include "rumourlab/grad/grad_check.hpp"
#include "rumourlab/grad/ops.hpp"
#include "rumourlab/models.hpp"
#include "rumourlab/proptree.hpp"
#include "rumourlab/random.hpp"
#include "rumourlab/text_io.hpp"

// Quick built-in checks. The test suite covers the same ground in more depth;
// these exist so an installed binary can vouch for itself.
namespace rumourlab::cli {

namespace {

using grad::ParameterSet;
using grad::Tape;
using grad::Tensor;
using grad::Var;

constexpr double kGradTolerance = 1e-4;

Tensor random_tensor(Rng& rng, std::size_t rows, std::size_t cols) {
  Tensor t({rows, cols});
  for (double& v : t.storage()) v = rng.uniform(-1.0, 1.0);
  return t;
}

// Contracts a tensor with fixed random weights so every coordinate matters.
Var project(Tape& tape, Var x, std::uint64_t seed) {
  Rng rng(seed);
  Tensor w(x.shape());
  for (double& v : w.storage()) v = rng.uniform(-1.0, 1.0);
  return grad::sum(grad::mul(x, tape.constant(std::move(w))));
}

struct Case {
  std::string name;
  ParameterSet params;
  grad::LossFunction loss;
};

std::vector<Case> primitive_cases() {
  Rng rng(2026);
  auto p2 = [&](std::size_t r, std::size_t c) { return random_tensor(rng, r, c); };
  const std::vector<std::size_t> membership{0, 0, 1, 1, 1};
  const std::vector<std::size_t> rows{4, 0, 0, 2};
  const std::vector<double> mask{1, 0, 1, 1, 0};
  const std::vector<double> targets{1, 0, 1, 0, 1};
  const std::vector<double> signs{1, -1, 1, -1, 1};
  const std::vector<std::size_t> classes{0, 1, 1, 0, 1};
  const grad::SparseMatrix sparse(5, 4, {{0, 0, 0.5}, {1, 3, -1.0}, {2, 1, 2.0}, {4, 2, 0.25}, {4, 0, 1.5}});

  std::vector<Case> cases;
  auto unary = [&](std::string name, std::function<Var(Var)> op) {
    cases.push_back({std::move(name), {{"x", p2(5, 3)}}, [op](Tape& t, const ParameterSet& p) {
                       return project(t, op(t.parameter("x", p.at("x"))), 7);
                     }});
  };
  auto binary = [&](std::string name, std::function<Var(Var, Var)> op, grad::Shape a, grad::Shape b) {
    cases.push_back({std::move(name), {{"a", p2(a[0], a[1])}, {"b", p2(b[0], b[1])}},
                     [op](Tape& t, const ParameterSet& p) {
                       return project(t, op(t.parameter("a", p.at("a")), t.parameter("b", p.at("b"))), 11);
                     }});
  };
  binary("matmul", [](Var a, Var b) { return grad::matmul(a, b); }, {5, 4}, {4, 3});
  binary("add", [](Var a, Var b) { return grad::add(a, b); }, {5, 3}, {5, 3});
  binary("sub", [](Var a, Var b) { return grad::sub(a, b); }, {5, 3}, {5, 3});
  binary("mul", [](Var a, Var b) { return grad::mul(a, b); }, {5, 3}, {5, 3});
  binary("concat_cols", [](Var a, Var b) { return grad::concat_cols(a, b); }, {5, 2}, {5, 3});
  cases.push_back({"add_bias", {{"x", p2(5, 3)}, {"b", Tensor::vector({0.1, -0.2, 0.3})}},
                   [](Tape& t, const ParameterSet& p) {
                     return project(t, grad::add_bias(t.parameter("x", p.at("x")), t.parameter("b", p.at("b"))), 3);
                   }});
  unary("spmm", [sparse](Var x) { return grad::spmm(sparse, grad::slice_cols(x, 0, 3)); });
  cases.back().params["x"] = p2(4, 3);
  unary("scale", [](Var x) { return grad::scale(x, -2.5); });
  unary("relu", [](Var x) { return grad::relu(x); });
  unary("sigmoid", [](Var x) { return grad::sigmoid(x); });
  unary("tanh", [](Var x) { return grad::tanh(x); });
  unary("softmax_rows", [](Var x) { return grad::softmax_rows(x); });
  unary("segment_mean", [membership](Var x) { return grad::segment_mean(x, membership, 2); });
  unary("gather_rows", [rows](Var x) { return grad::gather_rows(x, rows); });
  unary("mask_rows", [mask](Var x) { return grad::mask_rows(x, mask); });
  unary("slice_cols", [](Var x) { return grad::slice_cols(x, 1, 2); });
  cases.push_back({"sum", {{"x", p2(5, 3)}}, [](Tape& t, const ParameterSet& p) {
                     return grad::sum(t.parameter("x", p.at("x")));
                   }});
  cases.push_back({"mean", {{"x", p2(5, 3)}}, [](Tape& t, const ParameterSet& p) {
                     return grad::mean(t.parameter("x", p.at("x")));
                   }});
  cases.push_back({"squared_norm", {{"x", p2(5, 3)}}, [](Tape& t, const ParameterSet& p) {
                     return grad::squared_norm(t.parameter("x", p.at("x")));
                   }});
  const std::vector<double> weights{1.0, 2.0, 0.5, 1.0, 3.0};
  cases.push_back({"bce_loss", {{"x", p2(5, 1)}}, [targets, weights](Tape& t, const ParameterSet& p) {
                     return grad::bce_loss(grad::sigmoid(t.parameter("x", p.at("x"))), targets, weights);
                   }});
  cases.push_back({"weighted_ce_loss", {{"x", p2(5, 2)}}, [classes](Tape& t, const ParameterSet& p) {
                     const std::vector<double> class_weights{0.7, 1.6};
                     return grad::weighted_ce_loss(grad::softmax_rows(t.parameter("x", p.at("x"))), classes,
                                                   class_weights);
                   }});
  cases.push_back({"hinge_loss", {{"x", p2(5, 1)}, {"w", p2(3, 1)}}, [signs](Tape& t, const ParameterSet& p) {
                     return grad::hinge_loss(grad::scale(t.parameter("x", p.at("x")), 3.0), signs,
                                             t.parameter("w", p.at("w")), 0.01);
                   }});
  return cases;
}

std::vector<std::vector<std::int32_t>> toy_sequences(Rng& rng, std::size_t vocab, std::size_t count) {
  std::vector<std::vector<std::int32_t>> seqs;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::int32_t> s(1 + rng.below(7));
    for (auto& id : s) id = static_cast<std::int32_t>(1 + rng.below(vocab - 1));
    seqs.push_back(std::move(s));
  }
  return seqs;
}

std::vector<tree::PropTree> toy_trees(Rng& rng, std::size_t dim, std::size_t count) {
  std::vector<tree::PropTree> trees;
  for (std::size_t g = 0; g < count; ++g) {
    tree::PropTree t;
    t.thread_id = std::to_string(g);
    t.label = g % 2 ? Label::rumour : Label::nonrumour;
    const std::size_t n = 1 + rng.below(5);
    for (std::size_t i = 1; i <= n; ++i) {
      tree::PropNode node;
      node.index = i;
      if (i > 1) node.parent = 1;
      for (std::uint32_t f = 0; f < dim; ++f) {
        if (rng.bernoulli(0.5)) node.features.entries.push_back({f, rng.uniform(0.1, 1.0)});
      }
      t.nodes.push_back(std::move(node));
    }
    trees.push_back(std::move(t));
  }
  return trees;
}

using Check = std::pair<std::string, std::function<bool(std::string&)>>;

std::vector<Check> checks() {
  std::vector<Check> out;
  for (auto& c : primitive_cases()) {
    out.emplace_back("grad " + c.name, [c](std::string& detail) {
      const double e = grad::grad_check(c.loss, c.params);
      detail = "max relative error " + io::format_double(e, 3);
      return e < kGradTolerance;
    });
  }
  out.emplace_back("grad lstm", [](std::string& detail) {
    models::LstmConfig config;
    config.vocab_cap = 12;
    config.embed_dim = 4;
    config.hidden_dim = 5;
    config.perceptron_dim = 3;
    config.max_len = 8;
    Rng rng(5);
    const auto seqs = toy_sequences(rng, 12, 4);
    const auto batch = models::make_sequence_batch(seqs, 1);
    const std::vector<double> targets{1, 0, 1, 0};
    const double e = grad::grad_check(
        [&](Tape& t, const ParameterSet& p) {
          return grad::bce_loss(models::lstm_forward(t, p, config, batch), targets);
        },
        models::init_lstm(config, 12, 9));
    detail = "max relative error " + io::format_double(e, 3);
    return e < kGradTolerance;
  });
  out.emplace_back("grad bigcn", [](std::string& detail) {
    models::BiGcnConfig config;
    config.input_dim = 6;
    config.hidden_dim = 4;
    config.out_dim = 3;
    Rng rng(6);
    const auto trees = toy_trees(rng, 6, 3);
    const auto batch = tree::to_graph_batch(trees, 6);
    const std::vector<std::size_t> targets{1, 0, 1};
    const double e = grad::grad_check(
        [&](Tape& t, const ParameterSet& p) {
          return grad::weighted_ce_loss(models::bigcn_forward(t, p, config, batch), targets);
        },
        models::init_bigcn(config, 4));
    detail = "max relative error " + io::format_double(e, 3);
    return e < kGradTolerance;
  });
  out.emplace_back("tfidf unit norm", [](std::string& detail) {
    const std::vector<std::vector<std::string>> docs{{"a", "b", "b"}, {"b", "c"}, {"c", "c", "d"}};
    const auto model = features::fit_tfidf(docs, 10);
    const auto v = features::transform_tfidf(model, docs[0]);
    // idf(b) = ln(4/3) + 1 and idf(a) = ln(4/2) + 1; tf 2 and 1.
    const double a = std::log(2.0) + 1.0, b = 2.0 * (std::log(4.0 / 3.0) + 1.0);
    const double norm = std::hypot(a, b);
    bool ok = v.entries.size() == 2 && std::abs(v.norm() - 1.0) < 1e-12;
    for (const auto& e : v.entries) {
      const auto& term = model.vocab.terms()[e.index];
      const double expected = (term == "a" ? a : b) / norm;
      ok = ok && std::abs(e.value - expected) < 1e-12;
    }
    detail = std::to_string(v.entries.size()) + " entries";
    return ok;
  });
  out.emplace_back("metrics", [](std::string& detail) {
    const std::vector<Label> pred{Label::rumour, Label::rumour, Label::nonrumour, Label::nonrumour, Label::rumour};
    const std::vector<Label> truth{Label::rumour, Label::nonrumour, Label::nonrumour, Label::rumour, Label::rumour};
    const auto r = eval::compute_report(pred, truth);
    detail = "accuracy " + std::to_string(r.accuracy);
    const double f = 2.0 * 0.79 * 0.77 / (0.79 + 0.77);
    return std::abs(r.accuracy - 0.6) < 1e-12 && std::abs(r.rumour.precision - 2.0 / 3.0) < 1e-12 &&
           std::abs(r.rumour.recall - 2.0 / 3.0) < 1e-12 && std::abs(eval::f1_score(0.79, 0.77) - f) < 1e-12 &&
           std::lround(f * 100) == 78;
  });
  out.emplace_back("checkpoint round trip", [](std::string& detail) {
    grad::Checkpoint ck;
    ck.meta["kind"] = "selftest";
    Rng rng(3);
    ck.params["w"] = random_tensor(rng, 3, 4);
    ck.params["b"] = Tensor::vector({1e-300, -0.1, 3.5e7});
    const auto back = grad::parse_checkpoint(grad::serialize_checkpoint(ck));
    detail = std::to_string(back.params.size()) + " tensors";
    return back.meta == ck.meta && back.params == ck.params;
  });
  out.emplace_back("tree round trip", [](std::string& detail) {
    Rng rng(8);
    const auto trees = toy_trees(rng, 5, 4);
    const auto back = tree::parse_corpus(tree::serialize_corpus(trees));
    detail = std::to_string(back.size()) + " trees";
    if (back.size() != trees.size()) return false;
    for (std::size_t t = 0; t < trees.size(); ++t) {
      if (back[t].thread_id != trees[t].thread_id || back[t].label != trees[t].label ||
          back[t].size() != trees[t].size()) {
        return false;
      }
      for (std::size_t n = 0; n < trees[t].size(); ++n) {
        const auto& a = trees[t].nodes[n];
        const auto& b = back[t].nodes[n];
        if (a.parent != b.parent || a.index != b.index || a.features.entries.size() != b.features.entries.size()) {
          return false;
        }
        for (std::size_t k = 0; k < a.features.entries.size(); ++k) {
          if (a.features.entries[k].index != b.features.entries[k].index ||
              std::abs(a.features.entries[k].value - b.features.entries[k].value) > 1e-10) {
            return false;
          }
        }
      }
    }
    return true;
  });
  out.emplace_back("sentiment", [](std::string& detail) {
    analyze::ValenceLexicon lexicon;
    lexicon.add("solid", 1.9);
    const auto s = analyze::score_sentiment("solid", lexicon);
    detail = "compound " + std::to_string(s.compound);
    return std::abs(s.compound - 0.440) <= 0.001;
  });
  return out;
}

}  // namespace

bool run_selftest(std::ostream& out) {
  bool all = true;
  for (const auto& [name, check] : checks()) {
    std::string detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    out << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    all = all && ok;
  }
  out << (all ? "selftest passed" : "selftest FAILED") << "\n";
  return all;
}

}  // namespace rumourlab::cli
