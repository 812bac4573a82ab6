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

#include <gtest/gtest.h>

#include <cmath>

#include "rumourlab/error.hpp"
#include "rumourlab/grad/grad_check.hpp"
#include "rumourlab/grad/ops.hpp"
#include "rumourlab/models.hpp"
#include "rumourlab/random.hpp"
#include "synthetic.hpp"

namespace rumourlab::models {
namespace {

using grad::ParameterSet;
using grad::Tape;
using grad::Tensor;
using grad::Var;

LstmConfig small_lstm(std::size_t layers = 1) {
  LstmConfig c;
  c.vocab_cap = 20;
  c.embed_dim = 4;
  c.hidden_dim = 5;
  c.perceptron_dim = 3;
  c.max_len = 12;
  c.layers = layers;
  return c;
}

BiGcnConfig small_bigcn() {
  BiGcnConfig c;
  c.input_dim = 6;
  c.hidden_dim = 4;
  c.out_dim = 3;
  return c;
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

// Gradient checks run at a random point rather than at initialisation, where
// zero biases put relu inputs exactly on the kink and deep-layer gradients
// fall below central-difference round-off.
ParameterSet jittered(ParameterSet params, Rng& rng, double scale) {
  for (auto& [name, t] : params) {
    for (double& v : t.storage()) v += rng.uniform(-scale, scale);
  }
  return params;
}

std::vector<double> forward_values(const ParameterSet& params, const LstmConfig& config, const SequenceBatch& batch) {
  Tape tape;
  const Tensor out = lstm_forward(tape, params, config, batch).value();
  return {out.values().begin(), out.values().end()};
}

Tensor bigcn_probs(const ParameterSet& params, const BiGcnConfig& config, std::span<const tree::PropTree> trees) {
  Tape tape;
  return bigcn_forward(tape, params, config, tree::to_graph_batch(trees, config.input_dim)).value();
}

TEST(Lstm, OutputsAreProbabilities) {
  Rng rng(1);
  const auto config = small_lstm();
  const auto params = init_lstm(config, 20, 3);
  const auto seqs = random_sequences(rng, 8, 20, 10);
  for (double p : forward_values(params, config, make_sequence_batch(seqs))) {
    EXPECT_GT(p, 0.0);
    EXPECT_LT(p, 1.0);
  }
}

TEST(Lstm, InitialisationFollowsTheDocumentedScheme) {
  const auto config = small_lstm();
  const auto params = init_lstm(config, 20, 3);
  const Tensor& b = params.at("lstm.l0.b");
  const std::size_t h = config.hidden_dim;
  ASSERT_EQ(b.size(), 4 * h);
  for (std::size_t i = 0; i < 4 * h; ++i) EXPECT_EQ(b[i], i >= h && i < 2 * h ? 1.0 : 0.0) << i;
  const double bound = std::sqrt(6.0 / static_cast<double>(h + config.perceptron_dim));
  for (double w : params.at("lstm.head.W").values()) EXPECT_LE(std::abs(w), bound);
  EXPECT_EQ(init_lstm(config, 20, 3), params);
  EXPECT_NE(init_lstm(config, 20, 4), params);
}

TEST(Lstm, FullyPaddedRowIsTheBiasPathConstant) {
  const auto config = small_lstm();
  auto params = init_lstm(config, 20, 5);
  Rng rng(2);
  for (double& v : params.at("lstm.head.b").storage()) v = rng.uniform(-1, 1);
  params.at("lstm.out.b")[0] = 0.3;
  const std::vector<std::vector<std::int32_t>> seqs{{}, {4, 5, 6}};
  const auto out = forward_values(params, config, make_sequence_batch(seqs));
  double z = params.at("lstm.out.b")[0];
  for (std::size_t j = 0; j < config.perceptron_dim; ++j) {
    z += std::max(0.0, params.at("lstm.head.b")[j]) * params.at("lstm.out.W")[j];
  }
  EXPECT_NEAR(out[0], 1.0 / (1.0 + std::exp(-z)), 1e-15);
}

TEST(Lstm, PropertyPaddingExtensionInvariance) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto config = small_lstm(1 + rng.below(2));
    const auto params = init_lstm(config, 20, rng.next());
    const auto seqs = random_sequences(rng, 1 + rng.below(5), 20, 10);
    const auto base = forward_values(params, config, make_sequence_batch(seqs));
    const auto padded = forward_values(params, config, make_sequence_batch(seqs, 1 + rng.below(6)));
    ASSERT_EQ(base.size(), padded.size());
    for (std::size_t i = 0; i < base.size(); ++i) EXPECT_NEAR(base[i], padded[i], 1e-12);
  }
}

TEST(Lstm, IdOutOfRangeIsRejected) {
  const auto config = small_lstm();
  const auto params = init_lstm(config, 20, 1);
  const std::vector<std::vector<std::int32_t>> seqs{{3, 25}};
  EXPECT_THROW(forward_values(params, config, make_sequence_batch(seqs)), ValidationError);
  LstmConfig bad = config;
  bad.dropout = 1.0;
  EXPECT_THROW(bad.validate(), ValidationError);
  bad = config;
  bad.hidden_dim = 0;
  EXPECT_THROW(bad.validate(), ValidationError);
}

TEST(Lstm, GradCheck) {
  Rng rng(4);
  for (std::size_t layers : {1, 2}) {
    const auto config = small_lstm(layers);
    const auto seqs = random_sequences(rng, 4, 20, 6);
    const auto batch = make_sequence_batch(seqs, 2);
    const std::vector<double> targets{1, 0, 0, 1};
    const double err = grad::grad_check(
        [&](Tape& t, const ParameterSet& p) { return grad::bce_loss(lstm_forward(t, p, config, batch), targets); },
        jittered(init_lstm(config, 20, 7), rng, 0.5));
    EXPECT_LT(err, 1e-4) << layers << " layers";
  }
}

TEST(Sequences, EncodeAndBatch) {
  const features::Vocabulary vocab({"masks", "work"});
  const std::vector<std::string> tokens{"Masks", "really", "work", "!"};
  EXPECT_EQ(encode_sequence(tokens, vocab, 10), (std::vector<std::int32_t>{3, 1, 4, 1}));
  EXPECT_EQ(encode_sequence(tokens, vocab, 2).size(), 2u);
  const std::vector<std::vector<std::int32_t>> seqs{{3}, {4, 3, 4}};
  const SequenceBatch b = make_sequence_batch(seqs, 1);
  EXPECT_EQ(b.batch, 2u);
  EXPECT_EQ(b.length, 4u);
  EXPECT_EQ(b.mask, (std::vector<double>{1, 0, 0, 0, 1, 1, 1, 0}));
  EXPECT_EQ(b.ids[4], 4);
}

TEST(BiGcn, ProbabilitiesSumToOne) {
  Rng rng(5);
  const auto config = small_bigcn();
  const auto params = init_bigcn(config, 1);
  std::vector<tree::PropTree> trees;
  for (int i = 0; i < 6; ++i) trees.push_back(random_tree(rng, 6, 6));
  const Tensor p = bigcn_probs(params, config, trees);
  ASSERT_EQ(p.shape(), (grad::Shape{6, 2}));
  for (std::size_t g = 0; g < 6; ++g) EXPECT_NEAR(p.at(g, 0) + p.at(g, 1), 1.0, 1e-9);
}

TEST(BiGcn, PropertyNonRootPermutationInvariance) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto config = small_bigcn();
    auto params = init_bigcn(config, rng.next());
    for (auto& [name, t] : params) {
      for (double& v : t.storage()) v += rng.uniform(-0.1, 0.1);  // non-zero biases too
    }
    std::vector<tree::PropTree> trees;
    for (int i = 0; i < 3; ++i) trees.push_back(random_tree(rng, 6, 8));
    std::vector<tree::PropTree> permuted = trees;
    for (auto& t : permuted) {
      std::vector<features::SparseVector> replies;
      for (std::size_t i = 1; i < t.size(); ++i) replies.push_back(t.nodes[i].features);
      rng.shuffle(std::span<features::SparseVector>(replies));
      for (std::size_t i = 1; i < t.size(); ++i) t.nodes[i].features = replies[i - 1];
    }
    const Tensor a = bigcn_probs(params, config, trees), b = bigcn_probs(params, config, permuted);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
  }
}

TEST(BiGcn, SingleNodeBranchesAgree) {
  Rng rng(7);
  const auto config = small_bigcn();
  auto params = init_bigcn(config, 3);
  for (const char* part : {"W1", "b1", "W2", "b2"}) {
    Tensor& bu = params.at(std::string("bigcn.bu.") + part);
    bu = params.at(std::string("bigcn.td.") + part);
    for (double& v : bu.storage()) v += 0.0;
  }
  params.at("bigcn.td.b1")[0] = 0.2;
  params.at("bigcn.bu.b1")[0] = 0.2;
  // With equal pooled halves, swapping the td and bu halves of the output
  // layer cannot change the result.
  Tensor swapped = params.at("bigcn.fc.W");
  const std::size_t half = swapped.rows() / 2;
  for (std::size_t r = 0; r < half; ++r) {
    for (std::size_t c = 0; c < 2; ++c) std::swap(swapped.at(r, c), swapped.at(r + half, c));
  }
  ParameterSet other = params;
  other.at("bigcn.fc.W") = swapped;
  const std::vector<tree::PropTree> single{random_tree(rng, 6, 1)};
  ASSERT_EQ(single[0].size(), 1u);
  const Tensor a = bigcn_probs(params, config, single), b = bigcn_probs(other, config, single);
  EXPECT_NEAR(a[0], b[0], 1e-12);
  // A two-node tree separates the directions, so the swap now matters.
  std::vector<tree::PropTree> pair{random_tree(rng, 6, 1)};
  pair[0].nodes.push_back({1, 2, {{{1, 0.7}, {4, 0.2}}}});
  EXPECT_GT(std::abs(bigcn_probs(params, config, pair)[0] - bigcn_probs(other, config, pair)[0]), 1e-9);
}

TEST(BiGcn, GradCheckAndDimensionMismatch) {
  Rng rng(8);
  const auto config = small_bigcn();
  std::vector<tree::PropTree> trees;
  for (int i = 0; i < 3; ++i) trees.push_back(random_tree(rng, 6, 5));
  const auto batch = tree::to_graph_batch(trees, 6);
  const std::vector<std::size_t> targets{0, 1, 0};
  const double err = grad::grad_check(
      [&](Tape& t, const ParameterSet& p) { return grad::weighted_ce_loss(bigcn_forward(t, p, config, batch), targets); },
      jittered(init_bigcn(config, 2), rng, 0.3));
  EXPECT_LT(err, 1e-4);
  const auto wide = tree::to_graph_batch(trees, 9);
  Tape tape;
  EXPECT_THROW(bigcn_forward(tape, init_bigcn(config, 2), config, wide), ValidationError);
}

TEST(BiGcn, ScoresMatchArgmaxOfForward) {
  Rng rng(9);
  const auto config = small_bigcn();
  const auto params = init_bigcn(config, 5);
  std::vector<tree::PropTree> trees;
  for (int i = 0; i < 70; ++i) trees.push_back(random_tree(rng, 6, 4));
  const auto scores = bigcn_scores(params, config, trees);
  const Tensor p = bigcn_probs(params, config, trees);
  for (std::size_t g = 0; g < trees.size(); ++g) {
    EXPECT_NEAR(scores[g], p.at(g, 0), 1e-12);
    EXPECT_EQ(scores[g] >= 0.5, p.at(g, 0) >= p.at(g, 1));
  }
}

// One scalar parameter pulled towards 1 by the training loss while the dev
// loss measures distance from -5, so dev loss rises every epoch.
class DriftTask : public TrainingTask {
 public:
  explicit DriftTask(double poison = 0.0) : poison_(poison) {}
  ParameterSet initial_parameters(std::uint64_t) const override { return {{"w", Tensor::vector({0.0})}}; }
  std::size_t size(DataPart part) const override { return part == DataPart::train ? 8 : 4; }
  Label label(DataPart, std::size_t i) const override { return i % 2 ? Label::rumour : Label::nonrumour; }
  Var loss(Tape& tape, const ParameterSet& params, DataPart part, std::span<const std::size_t>,
           const features::ClassWeights&, Rng*) const override {
    const Var w = tape.parameter("w", params.at("w"));
    const double target = part == DataPart::train ? 1.0 : -5.0;
    const Var d = grad::add(w, tape.constant(Tensor::vector({-target + poison_})));
    return grad::sum(grad::mul(d, d));
  }
  std::vector<double> scores(const ParameterSet& params, DataPart, std::span<const std::size_t> examples) const override {
    return std::vector<double>(examples.size(), 1.0 / (1.0 + std::exp(-params.at("w")[0])));
  }

 private:
  double poison_;
};

TEST(Fit, EarlyStoppingRestoresBestParameters) {
  TrainConfig config;
  config.patience = 1;
  config.lr = 0.05;
  config.batch_size = 4;
  const DriftTask task;
  const FitResult result = fit(task, config);
  ASSERT_EQ(result.history.size(), 2u);
  EXPECT_TRUE(result.stopped_early);
  EXPECT_EQ(result.best_epoch, 1u);
  EXPECT_LT(result.history[0].dev_loss, result.history[1].dev_loss);

  // The restored parameters are the ones after exactly one epoch.
  TrainConfig one = config;
  one.max_epochs = 1;
  EXPECT_EQ(result.params, fit(task, one).params);
  EXPECT_NE(result.params.at("w")[0], 0.0);
}

TEST(Fit, DivergenceNamesEpochAndBatch) {
  TrainConfig config;
  const DriftTask task(std::nan(""));
  try {
    fit(task, config);
    FAIL();
  } catch (const DivergenceError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("epoch 1"), std::string::npos) << what;
    EXPECT_NE(what.find("batch 1"), std::string::npos) << what;
  }
}

TEST(Fit, ConfigValidation) {
  TrainConfig c;
  c.lr = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = {};
  c.batch_size = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = {};
  c.patience = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  EXPECT_EQ(TrainConfig{}.adam().kind, grad::OptimizerKind::adam);
}

std::vector<std::vector<std::int32_t>> marker_sequences(Rng& rng, std::size_t n, std::vector<Label>& labels) {
  std::vector<std::vector<std::int32_t>> seqs;
  for (std::size_t i = 0; i < n; ++i) {
    auto s = random_sequences(rng, 1, 12, 6)[0];
    const bool rumour = i % 2 == 0;
    if (rumour) s[rng.below(s.size())] = 12;
    labels.push_back(rumour ? Label::rumour : Label::nonrumour);
    seqs.push_back(std::move(s));
  }
  return seqs;
}

TEST(Fit, LstmIsDeterministicAndLearns) {
  Rng rng(10);
  std::vector<Label> train_labels, dev_labels;
  auto train = marker_sequences(rng, 40, train_labels);
  auto dev = marker_sequences(rng, 10, dev_labels);
  LstmConfig lc = small_lstm();
  lc.embed_dim = 8;
  lc.hidden_dim = 8;
  lc.dropout = 0.1;
  const LstmTask task(lc, 13, train, train_labels, dev, dev_labels);
  TrainConfig config;
  config.lr = 0.02;
  config.batch_size = 8;
  config.max_epochs = 15;
  config.patience = 15;
  config.seed = 3;
  const FitResult a = fit(task, config), b = fit(task, config);
  EXPECT_EQ(a.history, b.history);
  EXPECT_EQ(a.params, b.params);
  EXPECT_LT(a.history.back().train_loss, a.history.front().train_loss);
  config.seed = 4;
  EXPECT_NE(fit(task, config).history, a.history);
}

TEST(Fit, BiGcnIsDeterministicWithDropEdge) {
  Rng rng(11);
  std::vector<tree::PropTree> train, dev;
  for (int i = 0; i < 24; ++i) train.push_back(random_tree(rng, 6, 5));
  for (int i = 0; i < 6; ++i) dev.push_back(random_tree(rng, 6, 5));
  BiGcnConfig bc = small_bigcn();
  bc.drop_edge_rate = 0.5;
  bc.dropout = 0.2;
  const BiGcnTask task(bc, train, dev);
  TrainConfig config;
  config.max_epochs = 4;
  config.class_weights = true;
  config.seed = 9;
  const FitResult a = fit(task, config), b = fit(task, config);
  EXPECT_EQ(a.history, b.history);
  EXPECT_EQ(a.params, b.params);
}

// ------------------------------------------------------------- classics

void separable(Rng& rng, std::size_t n, std::vector<features::FeatureRow>& rows, std::vector<Label>& labels,
               double margin) {
  for (std::size_t i = 0; i < n; ++i) {
    const bool rumour = i % 2 == 0;
    const double x = rng.uniform(-3, 3);
    const double y = x + (rumour ? 1 : -1) * (margin + rng.uniform(0, 2));
    rows.push_back({x, y});
    labels.push_back(rumour ? Label::rumour : Label::nonrumour);
  }
}

TEST(Classic, LogregSeparatesSeparableData) {
  Rng rng(12);
  std::vector<features::FeatureRow> rows;
  std::vector<Label> labels;
  separable(rng, 40, rows, labels, 0.5);
  ClassicOptions options;
  const ClassicModel m = train_classic(ClassicKind::logreg, rows, labels, options);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(predict(m, rows[i]).label, labels[i]);
}

TEST(Classic, ZeroWeightLogregScoresOneHalf) {
  ClassicModel m;
  m.kind = ClassicKind::logreg;
  m.dimension = 3;
  m.linear.weights = {0, 0, 0};
  for (const auto& row : {features::FeatureRow{1, 2, 3}, features::FeatureRow{-5, 0, 9}}) {
    const Prediction p = predict(m, row);
    EXPECT_EQ(p.score, 0.5);
    EXPECT_EQ(p.label, Label::rumour);
  }
  EXPECT_THROW(predict(m, features::FeatureRow{1, 2}), ValidationError);
}

TEST(Classic, SvmReachesSmallHingeLossOnMarginData) {
  std::vector<features::FeatureRow> rows;
  std::vector<Label> labels;
  for (int i = 0; i < 5; ++i) {
    rows.push_back({2.0 + i * 0.3, 1.0 + 0.1 * i});
    labels.push_back(Label::rumour);
    rows.push_back({-2.0 - i * 0.3, -1.0 - 0.1 * i});
    labels.push_back(Label::nonrumour);
  }
  LinearOptions options;
  options.iterations = 2000;
  const LinearModel m = fit_svm(rows, labels, {}, options);
  EXPECT_LT(hinge_loss(m, rows, labels), 0.01);
  ClassicOptions co;
  co.linear = options;
  const ClassicModel cm = train_classic(ClassicKind::svm, rows, labels, co);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(predict(cm, rows[i]).label, labels[i]);
}

TEST(Classic, DepthZeroSingleTreePredictsMajority) {
  Rng rng(13);
  std::vector<features::FeatureRow> rows;
  std::vector<Label> labels;
  for (int i = 0; i < 30; ++i) {
    rows.push_back({rng.uniform(), rng.uniform()});
    labels.push_back(i < 24 ? Label::nonrumour : Label::rumour);
  }
  ClassicOptions options;
  options.forest.n_trees = 1;
  options.forest.max_depth = 0;
  const ClassicModel m = train_classic(ClassicKind::rf, rows, labels, options);
  ASSERT_EQ(m.forest.trees.size(), 1u);
  EXPECT_EQ(m.forest.trees[0].size(), 1u);
  for (const auto& row : rows) EXPECT_EQ(predict(m, row).label, Label::nonrumour);
}

TEST(Classic, UnanimousForestScoresOne) {
  Forest f;
  f.dimension = 1;
  for (int t = 0; t < 5; ++t) f.trees.push_back({ForestNode{-1, 0.0, -1, -1, 3.0, 1.0}});
  EXPECT_EQ(f.rumour_vote(std::vector<double>{0.0}), 1.0);
  ClassicModel m;
  m.kind = ClassicKind::rf;
  m.dimension = 1;
  m.forest = f;
  EXPECT_EQ(predict(m, std::vector<double>{4.0}).score, 1.0);
  EXPECT_EQ(predict(m, std::vector<double>{4.0}).label, Label::rumour);
}

TEST(Classic, ForestLearnsAxisAlignedRuleAndRoundTrips) {
  Rng rng(14);
  std::vector<features::FeatureRow> rows;
  std::vector<Label> labels;
  for (int i = 0; i < 80; ++i) {
    const double x = rng.uniform(-1, 1), noise = rng.uniform(-1, 1);
    rows.push_back({noise, x, rng.uniform()});
    labels.push_back(x > 0.1 ? Label::rumour : Label::nonrumour);
  }
  ForestOptions options;
  options.n_trees = 15;
  const Forest f = fit_forest(rows, labels, {}, options, 5);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) correct += (f.rumour_vote(rows[i]) >= 0.5) == (labels[i] == Label::rumour);
  EXPECT_GE(correct, 76u);
  EXPECT_EQ(Forest::parse(f.serialize()), f);
  EXPECT_EQ(fit_forest(rows, labels, {}, options, 5), f);
  EXPECT_THROW(Forest::parse("# rumourlab-forest v1\n# dimension 2\n# trees 1\ntree 0 1\n0 0.5 1 2 0 0\n"), Error);
}

TEST(Classic, OptionsAndPersistence) {
  Rng rng(15);
  std::vector<features::FeatureRow> rows;
  std::vector<Label> labels;
  separable(rng, 30, rows, labels, 0.3);
  for (int i = 0; i < 10; ++i) {
    rows.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
    labels.push_back(Label::nonrumour);
  }
  for (ClassicKind kind : {ClassicKind::logreg, ClassicKind::svm, ClassicKind::rf}) {
    ClassicOptions options;
    options.smote = true;
    options.class_weights = true;
    options.forest.n_trees = 5;
    options.seed = 3;
    const ClassicModel a = train_classic(kind, rows, labels, options);
    const ClassicModel b = train_classic(kind, rows, labels, options);
    EXPECT_EQ(a.linear.weights, b.linear.weights);
    EXPECT_EQ(a.forest, b.forest);
    testing::TempDir dir;
    save_classic(dir.path(), a);
    const ClassicModel back = load_classic(dir.path());
    EXPECT_EQ(back.kind, kind);
    for (const auto& row : rows) {
      EXPECT_EQ(predict(back, row).score, predict(a, row).score);
    }
  }
  EXPECT_THROW(train_classic(ClassicKind::logreg, rows, std::vector<Label>(rows.size(), Label::rumour), {}),
               ValidationError);
  EXPECT_THROW(train_classic(ClassicKind::logreg, rows, std::vector<Label>(3, Label::rumour), {}), ValidationError);
  EXPECT_EQ(parse_classic_kind("rf"), ClassicKind::rf);
  EXPECT_THROW(parse_classic_kind("knn"), ValidationError);
}

}  // namespace
}  // namespace rumourlab::models
