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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
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
#include "synthetic.hpp"

namespace {

using namespace rumourlab;
using grad::ParameterSet;
using grad::Tape;
using grad::Tensor;
using grad::Var;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later ones only flip the flag.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && outcome_.pass) outcome_.detail = what;
    outcome_.pass = outcome_.pass && ok;
  }
  void note(const std::string& text) {
    if (outcome_.pass) outcome_.detail = text;
  }
  Outcome result() const { return outcome_; }

 private:
  Outcome outcome_;
};

std::string fmt(double v, int digits = 4) { return io::format_double(v, digits); }

Tensor random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0) {
  Tensor t({rows, cols});
  for (double& v : t.storage()) v = rng.uniform(-scale, scale);
  return t;
}

Var project(Tape& tape, Var x, std::uint64_t seed) {
  Rng rng(seed);
  Tensor w(x.shape());
  for (double& v : w.storage()) v = rng.uniform(-1.0, 1.0);
  return grad::sum(grad::mul(x, tape.constant(std::move(w))));
}

ParameterSet jittered(ParameterSet params, Rng& rng, double scale) {
  for (auto& [name, t] : params) {
    for (double& v : t.storage()) v += rng.uniform(-scale, scale);
  }
  return params;
}

std::vector<std::vector<std::int32_t>> random_sequences(Rng& rng, std::size_t count, std::size_t vocab,
                                                        std::size_t max_len) {
  std::vector<std::vector<std::int32_t>> seqs(count);
  for (auto& s : seqs) {
    s.resize(1 + rng.below(max_len));
    for (auto& id : s) id = static_cast<std::int32_t>(1 + rng.below(vocab - 1));
  }
  return seqs;
}

tree::PropTree random_tree(Rng& rng, std::size_t dim, std::size_t max_nodes) {
  tree::PropTree t;
  t.thread_id = std::to_string(rng.next() % 100000);
  t.label = rng.bernoulli(0.5) ? Label::rumour : Label::nonrumour;
  const std::size_t n = 1 + rng.below(max_nodes);
  for (std::size_t i = 1; i <= n; ++i) {
    tree::PropNode node;
    node.index = i;
    if (i > 1) node.parent = 1;
    for (std::uint32_t f = 0; f < dim; ++f) {
      if (rng.bernoulli(0.5)) node.features.entries.push_back({f, rng.uniform(0.05, 1.0)});
    }
    t.nodes.push_back(std::move(node));
  }
  return t;
}

// ------------------------------------------------------------------ 1

Outcome gradient_correctness() {
  constexpr double kTolerance = 1e-4;
  Check check;
  double worst = 0.0;
  auto record = [&](double err, const std::string& what) {
    worst = std::max(worst, err);
    check.expect(err < kTolerance, what + " relative error " + fmt(err, 3));
  };
  Rng rng(2026);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 2 + rng.below(5), c = 1 + rng.below(5), k = 1 + rng.below(4);
    const Tensor other = random_matrix(rng, c, k), same = random_matrix(rng, r, c);
    std::vector<grad::Triplet> triplets;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (rng.bernoulli(0.4)) triplets.push_back({i, j, rng.uniform(-1, 1)});
      }
    }
    const grad::SparseMatrix sparse(r, r, triplets);
    std::vector<std::size_t> membership(r), rows(3);
    for (auto& m : membership) m = rng.below(2);
    membership[0] = 0;
    membership[1] = 1;
    for (auto& i : rows) i = rng.below(r);
    std::vector<double> mask(r);
    for (auto& m : mask) m = rng.bernoulli(0.5) ? 1.0 : 0.0;
    const std::size_t start = rng.below(c), count = 1 + rng.below(c - start);

    struct Case {
      const char* name;
      std::function<Var(Tape&, Var)> op;
      std::size_t rows, cols;
      bool kink = false;
    };
    const std::vector<Case> cases{
        {"matmul", [&](Tape& t, Var x) { return grad::matmul(x, t.constant(other)); }, r, c},
        {"spmm", [&](Tape&, Var x) { return grad::spmm(sparse, x); }, r, c},
        {"add", [&](Tape& t, Var x) { return grad::add(x, t.constant(same)); }, r, c},
        {"sub", [&](Tape& t, Var x) { return grad::sub(t.constant(same), x); }, r, c},
        {"mul", [&](Tape& t, Var x) { return grad::mul(x, t.constant(same)); }, r, c},
        {"scale", [](Tape&, Var x) { return grad::scale(x, -1.7); }, r, c},
        {"relu", [](Tape&, Var x) { return grad::relu(x); }, r, c, true},
        {"sigmoid", [](Tape&, Var x) { return grad::sigmoid(x); }, r, c},
        {"tanh", [](Tape&, Var x) { return grad::tanh(x); }, r, c},
        {"concat_cols", [&](Tape& t, Var x) { return grad::concat_cols(t.constant(other), x); }, c, k},
        {"softmax_rows", [](Tape&, Var x) { return grad::softmax_rows(x); }, r, c},
        {"segment_mean", [&](Tape&, Var x) { return grad::segment_mean(x, membership, 2); }, r, c},
        {"gather_rows", [&](Tape&, Var x) { return grad::gather_rows(x, rows); }, r, c},
        {"mask_rows", [&](Tape&, Var x) { return grad::mask_rows(x, mask); }, r, c},
        {"slice_cols", [&](Tape&, Var x) { return grad::slice_cols(x, start, count); }, r, c},
        {"sum", [](Tape&, Var x) { return grad::sum(x); }, r, c},
        {"mean", [](Tape&, Var x) { return grad::mean(x); }, r, c},
        {"squared_norm", [](Tape&, Var x) { return grad::squared_norm(x); }, r, c},
    };
    for (const auto& pc : cases) {
      Tensor x = random_matrix(rng, pc.rows, pc.cols);
      if (pc.kink) {
        for (double& v : x.storage()) {
          if (std::abs(v) < 1e-3) v = v < 0 ? -1e-3 : 1e-3;
        }
      }
      record(grad::grad_check(
                 [&](Tape& t, const ParameterSet& p) { return project(t, pc.op(t, t.parameter("x", p.at("x"))), 99); },
                 ParameterSet{{"x", x}}),
             pc.name);
    }
    const Tensor row = random_matrix(rng, 1, c);
    record(grad::grad_check(
               [&](Tape& t, const ParameterSet& p) {
                 return project(t, grad::add_bias(t.parameter("m", p.at("m")), t.parameter("b", p.at("b"))), 5);
               },
               ParameterSet{{"m", same}, {"b", Tensor::vector({row.values().begin(), row.values().end()})}}),
           "add_bias");

    const std::size_t n = 1 + rng.below(8);
    std::vector<double> targets(n), signs(n), weights(n);
    std::vector<std::size_t> classes(n);
    for (std::size_t i = 0; i < n; ++i) {
      targets[i] = rng.bernoulli(0.5) ? 1.0 : 0.0;
      signs[i] = targets[i] * 2 - 1;
      weights[i] = rng.uniform(0.2, 3.0);
      classes[i] = rng.below(2);
    }
    const std::vector<double> class_weights{rng.uniform(0.5, 2), rng.uniform(0.5, 2)};
    record(grad::grad_check([&](Tape& t, const ParameterSet& p) {
             return grad::bce_loss(grad::sigmoid(t.parameter("x", p.at("x"))), targets, weights);
           }, ParameterSet{{"x", random_matrix(rng, n, 1, 2.0)}}),
           "bce_loss");
    record(grad::grad_check([&](Tape& t, const ParameterSet& p) {
             return grad::weighted_ce_loss(grad::softmax_rows(t.parameter("x", p.at("x"))), classes, class_weights);
           }, ParameterSet{{"x", random_matrix(rng, n, 2, 2.0)}}),
           "weighted_ce_loss");
    Tensor s = random_matrix(rng, n, 1, 3.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(1.0 - signs[i] * s[i]) < 1e-3) s[i] += 0.01;
    }
    record(grad::grad_check([&](Tape& t, const ParameterSet& p) {
             return grad::hinge_loss(t.parameter("s", p.at("s")), signs, t.parameter("w", p.at("w")), 0.05, weights);
           }, ParameterSet{{"s", s}, {"w", random_matrix(rng, 3, 1)}}),
           "hinge_loss");
  }

  for (int trial = 0; trial < 5; ++trial) {
    models::LstmConfig lc;
    lc.vocab_cap = 20;
    lc.embed_dim = 4;
    lc.hidden_dim = 5;
    lc.perceptron_dim = 3;
    lc.max_len = 30;
    lc.layers = 1 + trial % 2;
    const auto seqs = random_sequences(rng, 4, 20, 30);
    const auto batch = models::make_sequence_batch(seqs);
    const std::vector<double> targets{1, 0, 1, 0};
    record(grad::grad_check(
               [&](Tape& t, const ParameterSet& p) {
                 return grad::bce_loss(models::lstm_forward(t, p, lc, batch), targets);
               },
               jittered(models::init_lstm(lc, 20, rng.next()), rng, 0.5)),
           "lstm");

    models::BiGcnConfig bc;
    bc.input_dim = 6;
    bc.hidden_dim = 4;
    bc.out_dim = 3;
    std::vector<tree::PropTree> trees;
    for (int i = 0; i < 3; ++i) trees.push_back(random_tree(rng, 6, 6));  // at most 18 nodes
    const auto graph = tree::to_graph_batch(trees, 6);
    std::vector<std::size_t> classes;
    for (const auto& t : trees) classes.push_back(t.label == Label::rumour ? 0 : 1);
    record(grad::grad_check(
               [&](Tape& t, const ParameterSet& p) {
                 return grad::weighted_ce_loss(models::bigcn_forward(t, p, bc, graph), classes);
               },
               jittered(models::init_bigcn(bc, rng.next()), rng, 0.3)),
           "bigcn");
  }
  check.note("max relative error " + fmt(worst, 3));
  return check.result();
}

// ------------------------------------------------------------------ 2

Outcome tfidf_oracle() {
  const std::vector<std::vector<std::string>> docs{{"masks", "work", "masks"},
                                                   {"vaccine", "news", "work"},
                                                   {"masks", "news", "today", "news"},
                                                   {"lab", "leak", "claim"},
                                                   {"today", "work", "lab", "masks", "news"}};
  const auto model = features::fit_tfidf(docs, 100);
  Check check;
  std::set<std::string> terms;
  for (const auto& d : docs) terms.insert(d.begin(), d.end());
  check.expect(model.dimension() == terms.size(), "vocabulary size");
  double worst = 0.0;
  for (const auto& doc : docs) {
    std::map<std::string, double> expected;
    for (const auto& term : terms) {
      double tf = 0, df = 0;
      for (const auto& w : doc) tf += w == term;
      for (const auto& d : docs) df += std::find(d.begin(), d.end(), term) != d.end();
      if (tf > 0) expected[term] = tf * (std::log((1.0 + 5.0) / (1.0 + df)) + 1.0);
    }
    double norm = 0;
    for (const auto& [t, v] : expected) norm += v * v;
    for (auto& [t, v] : expected) v /= std::sqrt(norm);
    const auto got = features::transform_tfidf(model, doc);
    check.expect(got.entries.size() == expected.size(), "entry count");
    for (const auto& e : got.entries) {
      const auto it = expected.find(model.vocab.terms()[e.index]);
      check.expect(it != expected.end(), "unexpected term");
      if (it != expected.end()) worst = std::max(worst, std::abs(e.value - it->second));
    }
  }
  check.expect(worst <= 1e-12, "max deviation " + fmt(worst, 3));
  check.note("max deviation " + fmt(worst, 3));
  return check.result();
}

// ------------------------------------------------------------------ 3

Outcome metrics_oracle() {
  Check check;
  Rng rng(3);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(50);
    std::vector<Label> pred(n), truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred[i] = rng.bernoulli(0.5) ? Label::rumour : Label::nonrumour;
      truth[i] = rng.bernoulli(0.3) ? Label::rumour : Label::nonrumour;
    }
    const eval::Report r = eval::compute_report(pred, truth);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) correct += pred[i] == truth[i];
    worst = std::max(worst, std::abs(r.accuracy - double(correct) / double(n)));
    for (Label positive : {Label::rumour, Label::nonrumour}) {
      std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool p = pred[i] == positive, t = truth[i] == positive;
        tp += p && t;
        fp += p && !t;
        fn += !p && t;
        tn += !p && !t;
      }
      const auto& counts = positive == Label::rumour ? r.counts.rumour : r.counts.nonrumour;
      check.expect(counts == eval::ClassCounts{tp, fp, fn, tn}, "confusion counts differ");
      const auto& row = positive == Label::rumour ? r.rumour : r.nonrumour;
      const double p = tp + fp ? double(tp) / double(tp + fp) : 0.0;
      const double rc = tp + fn ? double(tp) / double(tp + fn) : 0.0;
      const double f = p + rc > 0 ? 2 * p * rc / (p + rc) : 0.0;
      worst = std::max({worst, std::abs(row.precision - p), std::abs(row.recall - rc), std::abs(row.f1 - f)});
    }
  }
  check.expect(worst <= 1e-12, "metric deviation " + fmt(worst, 3));
  const double f1 = std::round(eval::f1_score(0.79, 0.77) * 100.0) / 100.0;
  check.expect(std::abs(f1 - 0.78) < 1e-12, "f1(0.79, 0.77) rounds to " + fmt(f1));
  check.note("1000 pairs, max deviation " + fmt(worst, 3) + ", f1(0.79, 0.77) = " + fmt(f1, 2));
  return check.result();
}

// ------------------------------------------------------------------ 4

Outcome learning_sanity(const fs::path& work) {
  testing::CorpusOptions options;
  options.threads = 200;
  const fs::path corpus = work / "planted.jsonl";
  ingest::save_tweets(corpus, testing::planted_corpus(options));
  const auto assembled = ingest::assemble_threads(ingest::load_tweets(corpus));
  const auto split = ingest::split_dataset(assembled.threads, {}, 13);

  auto accuracy = [](const eval::TrainedModel& model, std::span<const ingest::Thread> threads) {
    const auto predictions = eval::predict_threads(model, threads);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < threads.size(); ++i) correct += predictions[i].label == *threads[i].label;
    return double(correct) / double(threads.size());
  };
  auto base = [&](const std::string& model) {
    eval::RunConfig c;
    c.set("data", corpus.string());
    c.set("model", model);
    c.set("train.max_epochs", "30");
    c.set("train.patience", "30");
    c.set("train.lr", "0.01");
    return c;
  };

  Check check;
  std::string detail;
  eval::RunConfig lstm = base("lstm");
  lstm.set("lstm.embed_dim", "16");
  lstm.set("lstm.hidden_dim", "16");
  lstm.set("lstm.perceptron_dim", "8");
  lstm.set("lstm.max_len", "32");
  eval::RunConfig bigcn = base("bigcn");
  bigcn.set("bigcn.hidden_dim", "16");
  bigcn.set("bigcn.out_dim", "16");
  for (const eval::RunConfig* config : {&lstm, &bigcn}) {
    const auto model = eval::train_model(*config, split.train, split.dev, 1);
    const double acc = accuracy(model, split.train);
    check.expect(model.history.size() <= 30, config->model() + " ran more than 30 epochs");
    check.expect(acc >= 0.95, config->model() + " training accuracy " + fmt(acc));
    detail += config->model() + " train " + fmt(acc) + ", ";
  }
  const auto logreg = eval::train_model(base("logreg"), split.train, split.dev, 1);
  const double dev = accuracy(logreg, split.dev);
  check.expect(dev >= 0.9, "logreg dev accuracy " + fmt(dev));
  check.note(detail + "logreg dev " + fmt(dev));
  return check.result();
}

// ------------------------------------------------------------------ 5

Outcome drop_edge_statistics() {
  std::vector<tree::PropTree> forest;
  for (std::size_t g = 0; g < 100; ++g) {
    tree::PropTree t;
    t.thread_id = std::to_string(g);
    t.nodes.push_back({std::nullopt, 1, {}});
    for (std::size_t i = 2; i <= 101; ++i) t.nodes.push_back({1, i, {}});
    forest.push_back(std::move(t));
  }
  const auto batch = tree::to_graph_batch(forest, 1);
  Check check;
  check.expect(batch.edges.size() == 10000, "expected 10000 edges");
  const auto half = tree::drop_edge(batch, 0.5, 2026);
  const double kept = static_cast<double>(half.edges.size());
  check.expect(std::abs(kept - 5000.0) <= 150.0, "kept " + fmt(kept, 6) + " edges");
  const auto none = tree::drop_edge(batch, 0.0, 2026);
  check.expect(none.edges == batch.edges && none.td.to_dense() == batch.td.to_dense() &&
                   none.bu.to_dense() == batch.bu.to_dense(),
               "rate 0 is not the identity");
  check.note("kept " + fmt(kept, 6) + " of 10000 at rate 0.5; rate 0 identity");
  return check.result();
}

// ------------------------------------------------------------------ 6

bool on_segment(const features::FeatureRow& s, const features::FeatureRow& a, const features::FeatureRow& b) {
  constexpr double kTol = 1e-9;
  std::optional<double> u;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double d = b[j] - a[j];
    if (std::abs(d) < 1e-12) {
      if (std::abs(s[j] - a[j]) > kTol) return false;
      continue;
    }
    const double uj = (s[j] - a[j]) / d;
    if (uj < -kTol || uj > 1 + kTol) return false;
    if (u && std::abs(*u - uj) > kTol) return false;
    if (!u) u = uj;
  }
  return true;
}

Outcome smote_properties() {
  Check check;
  Rng rng(6);
  std::size_t synthetic = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + rng.below(5);
    const std::size_t minority = 2 + rng.below(8), majority = minority + 1 + rng.below(20);
    std::vector<features::FeatureRow> rows;
    std::vector<Label> labels;
    const Label small = rng.bernoulli(0.5) ? Label::rumour : Label::nonrumour;
    const Label large = small == Label::rumour ? Label::nonrumour : Label::rumour;
    for (std::size_t i = 0; i < minority + majority; ++i) {
      features::FeatureRow row(dim);
      for (double& v : row) v = rng.uniform(-5, 5);
      rows.push_back(std::move(row));
      labels.push_back(i < minority ? small : large);
    }
    const std::vector<features::FeatureRow> originals(rows.begin(), rows.begin() + minority);
    features::smote_balance(rows, labels, 5, rng.next());
    const auto n_small = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), small));
    const auto n_large = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), large));
    check.expect(n_small == n_large, "unbalanced after smote");
    for (std::size_t i = minority + majority; i < rows.size(); ++i) {
      ++synthetic;
      bool found = false;
      for (std::size_t a = 0; a < originals.size() && !found; ++a) {
        for (std::size_t b = 0; b < originals.size() && !found; ++b) {
          found = a != b && on_segment(rows[i], originals[a], originals[b]);
        }
      }
      check.expect(found, "synthetic point off every minority segment");
    }
  }
  check.note(std::to_string(synthetic) + " synthetic points checked, classes balanced");
  return check.result();
}

// ------------------------------------------------------------------ 7

Outcome structural_invariance() {
  Check check;
  Rng rng(7);
  double lstm_worst = 0.0, gcn_worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    models::LstmConfig lc;
    lc.vocab_cap = 20;
    lc.embed_dim = 4;
    lc.hidden_dim = 5;
    lc.perceptron_dim = 3;
    lc.max_len = 12;
    lc.layers = 1 + rng.below(2);
    const auto params = models::init_lstm(lc, 20, rng.next());
    const auto seqs = random_sequences(rng, 1 + rng.below(5), 20, 10);
    Tape a, b;
    const Tensor base = models::lstm_forward(a, params, lc, models::make_sequence_batch(seqs)).value();
    const Tensor padded =
        models::lstm_forward(b, params, lc, models::make_sequence_batch(seqs, 1 + rng.below(6))).value();
    for (std::size_t i = 0; i < base.size(); ++i) lstm_worst = std::max(lstm_worst, std::abs(base[i] - padded[i]));

    models::BiGcnConfig bc;
    bc.input_dim = 6;
    bc.hidden_dim = 4;
    bc.out_dim = 3;
    const auto gparams = jittered(models::init_bigcn(bc, rng.next()), rng, 0.1);
    std::vector<tree::PropTree> trees;
    for (int i = 0; i < 3; ++i) trees.push_back(random_tree(rng, 6, 8));
    auto permuted = trees;
    for (auto& t : permuted) {
      std::vector<features::SparseVector> replies;
      for (std::size_t i = 1; i < t.size(); ++i) replies.push_back(t.nodes[i].features);
      rng.shuffle(std::span<features::SparseVector>(replies));
      for (std::size_t i = 1; i < t.size(); ++i) t.nodes[i].features = replies[i - 1];
    }
    Tape c, d;
    const Tensor p = models::bigcn_forward(c, gparams, bc, tree::to_graph_batch(trees, 6)).value();
    const Tensor q = models::bigcn_forward(d, gparams, bc, tree::to_graph_batch(permuted, 6)).value();
    for (std::size_t i = 0; i < p.size(); ++i) gcn_worst = std::max(gcn_worst, std::abs(p[i] - q[i]));
  }
  check.expect(lstm_worst <= 1e-12, "lstm padding deviation " + fmt(lstm_worst, 3));
  check.expect(gcn_worst <= 1e-9, "bigcn permutation deviation " + fmt(gcn_worst, 3));
  check.note("lstm padding " + fmt(lstm_worst, 3) + ", bigcn permutation " + fmt(gcn_worst, 3));
  return check.result();
}

// ------------------------------------------------------------------ 8

Outcome format_round_trips(const fs::path& work) {
  Check check;
  Rng rng(8);
  std::vector<tree::PropTree> trees;
  for (int i = 0; i < 50; ++i) {
    tree::PropTree t = random_tree(rng, 40, 20);
    t.thread_id = "t" + std::to_string(i);
    for (auto& node : t.nodes) {
      for (auto& e : node.features.entries) e.value = rng.uniform(-1e3, 1e3);
    }
    trees.push_back(std::move(t));
  }
  tree::save_corpus(work / "trees.txt", trees);
  const auto back = tree::load_corpus(work / "trees.txt");
  check.expect(back.size() == trees.size(), "tree count");
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(back.size(), trees.size()); ++i) {
    check.expect(back[i].thread_id == trees[i].thread_id && back[i].label == trees[i].label &&
                     back[i].size() == trees[i].size(),
                 "tree structure differs");
    for (std::size_t n = 0; n < std::min(back[i].size(), trees[i].size()); ++n) {
      const auto& x = trees[i].nodes[n];
      const auto& y = back[i].nodes[n];
      check.expect(x.parent == y.parent && x.index == y.index && x.features.entries.size() == y.features.entries.size(),
                   "node structure differs");
      for (std::size_t e = 0; e < std::min(x.features.entries.size(), y.features.entries.size()); ++e) {
        check.expect(x.features.entries[e].index == y.features.entries[e].index, "feature index differs");
        const double rel = std::abs(x.features.entries[e].value - y.features.entries[e].value) /
                           std::max(1.0, std::abs(x.features.entries[e].value));
        worst = std::max(worst, rel);
      }
    }
  }
  check.expect(worst <= 1e-10, "tree value deviation " + fmt(worst, 3));

  grad::Checkpoint ckpt;
  ckpt.meta["kind"] = "acceptance";
  for (int i = 0; i < 5; ++i) ckpt.params["p" + std::to_string(i)] = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(6), 1e4);
  grad::save_checkpoint(work / "model.ckpt", ckpt);
  const auto loaded = grad::load_checkpoint(work / "model.ckpt");
  check.expect(loaded.params == ckpt.params && loaded.meta == ckpt.meta, "checkpoint differs after reload");

  testing::CorpusOptions options;
  options.threads = 30;
  options.unlabeled = 3;
  ingest::save_tweets(work / "a.jsonl", testing::planted_corpus(options));
  const auto first = ingest::load_tweets(work / "a.jsonl");
  ingest::save_tweets(work / "b.jsonl", first);
  const auto second = ingest::load_tweets(work / "b.jsonl");
  check.expect(first == second, "dataset differs after load-save-load");
  check.expect(testing::read_text(work / "a.jsonl") == testing::read_text(work / "b.jsonl"), "dataset bytes differ");
  check.note("trees within " + fmt(worst, 3) + ", checkpoint exact, dataset identity");
  return check.result();
}

// ------------------------------------------------------------------ 9

Outcome sentiment_emotion_contracts() {
  Check check;
  const auto& valence = analyze::ValenceLexicon::bundled();
  std::vector<std::string> vocab;
  for (const auto& [word, v] : valence.entries()) vocab.push_back(word);
  std::sort(vocab.begin(), vocab.end());
  for (const char* extra : {"not", "never", "very", "extremely", "slightly", "!", "!!!", "the", "cat", "😷", "#news"}) {
    vocab.emplace_back(extra);
  }
  Rng rng(9);
  double lo = 0.0, hi = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::string text;
    for (std::size_t i = rng.below(40); i > 0; --i) text += vocab[rng.below(vocab.size())] + " ";
    const auto s = analyze::score_sentiment(text, valence);
    lo = std::min(lo, s.compound);
    hi = std::max(hi, s.compound);
    check.expect(s.compound > -1.0 && s.compound < 1.0, "compound out of range for '" + text + "'");
  }
  analyze::ValenceLexicon single;
  single.add("word", 1.9);
  const double c = analyze::score_sentiment("word", single).compound;
  check.expect(std::abs(c - 0.440) <= 0.001, "valence 1.9 compound " + fmt(c));

  const auto& emotions = analyze::EmotionLexicon::bundled();
  std::vector<std::string> words(vocab.begin(), vocab.end());
  for (const char* w : {"abandon", "aback", "abandoned", "abhorrence", "happy", "afraid", "angry", "sad"}) {
    words.emplace_back(w);
  }
  std::size_t matched = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::string text;
    for (std::size_t i = rng.below(20); i > 0; --i) text += words[rng.below(words.size())] + " ";
    const auto e = analyze::score_emotions(text, emotions);
    const double total = e.happy + e.angry + e.surprise + e.sad + e.fear;
    if (e.label == analyze::Emotion::none) {
      check.expect(total == 0.0, "unmatched text has non-zero emotion scores");
    } else {
      ++matched;
      check.expect(std::abs(total - 1.0) <= 1e-9, "emotion scores sum to " + fmt(total, 17));
    }
  }
  check.expect(matched > 1000, "too few emotion matches to be meaningful");
  check.note("compound range [" + fmt(lo) + ", " + fmt(hi) + "], valence 1.9 -> " + fmt(c) + ", " +
             std::to_string(matched) + " emotion-matched texts sum to 1");
  return check.result();
}

// ------------------------------------------------------------------ 10

std::map<fs::path, std::string> snapshot(const fs::path& dir) {
  std::map<fs::path, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) files[fs::relative(entry.path(), dir)] = testing::read_text(entry.path());
  }
  return files;
}

Outcome determinism(const fs::path& work) {
  Check check;
  testing::CorpusOptions options;
  options.threads = 60;
  const fs::path corpus = work / "det.jsonl";
  ingest::save_tweets(corpus, testing::planted_corpus(options));
  io::write_file(work / "det.cfg",
                 "seeds = 3\ntrain.max_epochs = 5\nlstm.embed_dim = 8\nlstm.hidden_dim = 8\n"
                 "lstm.perceptron_dim = 4\nlstm.max_len = 24\nlstm.dropout = 0.2\n"
                 "bigcn.hidden_dim = 8\nbigcn.out_dim = 8\nbigcn.dropout = 0.2\nrf.n_trees = 20\n");
  std::size_t files = 0;
  for (const char* model : {"lstm", "bigcn", "rf"}) {
    const fs::path out = work / (std::string("det-") + model);
    const std::vector<std::string> args{"train",   "--config", (work / "det.cfg").string(), "--model", model,
                                        "--data", corpus.string(), "--out", out.string()};
    std::ostringstream sink;
    const int first_code = cli::dispatch(args, sink, sink);
    const auto first = snapshot(out);
    fs::remove_all(out);
    const int second_code = cli::dispatch(args, sink, sink);
    const auto second = snapshot(out);
    check.expect(first_code == 0 && second_code == 0, std::string("train failed for ") + model + ": " + sink.str());
    check.expect(!first.empty() && first == second, std::string("train outputs differ for ") + model);
    files += first.size();
  }
  for (const char* model : {"logreg", "bigcn"}) {
    eval::RunConfig config = eval::RunConfig::load(work / "det.cfg");
    config.set("data", corpus.string());
    config.set("model", model);
    config.set("seeds", "1,2,3");
    config.set("out", (work / "runs").string());
    const auto a = eval::run_experiment(config);
    const auto before = snapshot(a.run_dir);
    fs::remove_all(a.run_dir);
    const auto b = eval::run_experiment(config);
    check.expect(a.run_dir == b.run_dir && before == snapshot(b.run_dir),
                 std::string("experiment outputs differ for ") + model);
    files += before.size();
  }
  check.note(std::to_string(files) + " files byte-identical across reruns");
  return check.result();
}

}  // namespace

int main() {
  testing::TempDir work;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "gradient correctness", gradient_correctness},
      {2, "tf-idf oracle", tfidf_oracle},
      {3, "metrics oracle", metrics_oracle},
      {4, "learning sanity", [&] { return learning_sanity(work.path()); }},
      {5, "dropedge statistics", drop_edge_statistics},
      {6, "smote properties", smote_properties},
      {7, "structural invariance", structural_invariance},
      {8, "format round-trips", [&] { return format_round_trips(work.path()); }},
      {9, "sentiment and emotion contracts", sentiment_emotion_contracts},
      {10, "determinism", [&] { return determinism(work.path()); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << " (" << outcome.detail << "; "
              << fmt(seconds, 3) << " s)" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
