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
#include <sstream>

#include "rumourlab/error.hpp"
#include "rumourlab/evalrun.hpp"
#include "rumourlab/grad/checkpoint.hpp"
#include "rumourlab/proptree.hpp"
#include "rumourlab/text_io.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::eval {

namespace {

std::vector<std::string> tweet_terms(const ingest::TweetRecord& tweet) { return text::content_terms(tweet.text); }

std::vector<std::string> thread_terms(const ingest::Thread& thread) {
  std::vector<std::string> terms = tweet_terms(thread.source);
  for (const auto& reply : thread.replies) {
    auto more = tweet_terms(reply);
    terms.insert(terms.end(), more.begin(), more.end());
  }
  return terms;
}

std::vector<Label> labels_of(std::span<const ingest::Thread> threads) {
  std::vector<Label> labels;
  for (const auto& t : threads) {
    if (!t.label) throw ValidationError("thread " + t.id() + " has no label");
    labels.push_back(*t.label);
  }
  return labels;
}

bool uses_tfidf(const TrainedModel& model) {
  if (model.kind == "bigcn") return true;
  if (model.kind == "lstm") return false;
  const auto sets = model.config.classic_features();
  return std::find(sets.begin(), sets.end(), "tfidf") != sets.end();
}

std::vector<tree::PropTree> trees_of(const TrainedModel& model, std::span<const ingest::Thread> threads) {
  tree::TreeOptions options;
  options.keep_reply_links = model.config.keep_reply_links();
  std::vector<tree::PropTree> trees;
  trees.reserve(threads.size());
  for (const auto& t : threads) trees.push_back(tree::build_tree(t, model.tfidf, options));
  return trees;
}

std::vector<std::vector<std::int32_t>> sequences_of(const TrainedModel& model, std::span<const ingest::Thread> threads) {
  const std::size_t max_len = model.config.lstm().max_len;
  std::vector<std::vector<std::int32_t>> out;
  out.reserve(threads.size());
  for (const auto& t : threads) out.push_back(models::encode_sequence(models::thread_tokens(t), model.sequence_vocab, max_len));
  return out;
}

}  // namespace

features::FeatureRow classic_row(const TrainedModel& model, const ingest::Thread& thread) {
  features::FeatureRow row;
  for (const std::string& set : model.config.classic_features()) {
    if (set == "handcrafted") {
      const auto h = features::extract_handcrafted(thread.source);
      row.insert(row.end(), h.begin(), h.end());
    } else if (set == "tfidf") {
      const std::size_t offset = row.size();
      row.resize(offset + model.tfidf.dimension(), 0.0);
      const auto terms = thread_terms(thread);
      for (const auto& e : features::transform_tfidf(model.tfidf, terms).entries) row[offset + e.index] = e.value;
    } else if (set == "ids" || set == "mask") {
      std::vector<std::string> replies;
      for (const auto& reply : thread.replies) {
        auto tokens = text::tokenize(text::normalize(reply.text)).tokens;
        replies.insert(replies.end(), tokens.begin(), tokens.end());
      }
      const auto source = text::tokenize(text::normalize(thread.source.text)).tokens;
      const auto encoding = text::encode_pair(source, replies, model.sequence_vocab, model.config.classic_max_len());
      if (set == "ids") {
        for (auto id : encoding.input_ids) row.push_back(static_cast<double>(id));
      } else {
        for (auto m : encoding.attention_mask) row.push_back(static_cast<double>(m));
      }
    } else {
      throw ValidationError("unknown classic feature set '" + set + "'");
    }
  }
  return row;
}

TrainedModel train_model(const RunConfig& config, std::span<const ingest::Thread> train,
                         std::span<const ingest::Thread> dev, std::uint64_t seed) {
  if (train.empty()) throw ValidationError("train_model: empty training split");
  TrainedModel model;
  model.kind = config.model();
  model.config = config;
  model.seed = seed;
  const auto train_labels = labels_of(train);

  if (uses_tfidf(model)) {
    std::vector<std::vector<std::string>> docs;
    for (const auto& t : train) {
      docs.push_back(tweet_terms(t.source));
      for (const auto& reply : t.replies) docs.push_back(tweet_terms(reply));
    }
    model.tfidf = features::fit_tfidf(docs, config.tfidf_top_k());
  }
  if (model.kind != "bigcn") {
    const std::size_t cap = config.lstm().vocab_cap;
    std::vector<std::vector<std::string>> docs;
    for (const auto& t : train) docs.push_back(models::thread_tokens(t));
    model.sequence_vocab = features::Vocabulary::build(docs, cap - features::Vocabulary::kFirstContent);
  }

  if (model.kind == "lstm") {
    if (dev.empty()) throw ValidationError("train_model: empty dev split");
    models::LstmTask task(config.lstm(), model.sequence_vocab.size(), sequences_of(model, train), train_labels,
                          sequences_of(model, dev), labels_of(dev));
    auto result = models::fit(task, config.train(seed));
    model.params = std::move(result.params);
    model.history = std::move(result.history);
  } else if (model.kind == "bigcn") {
    if (dev.empty()) throw ValidationError("train_model: empty dev split");
    models::BiGcnTask task(config.bigcn(model.tfidf.dimension()), trees_of(model, train), trees_of(model, dev));
    auto result = models::fit(task, config.train(seed));
    model.params = std::move(result.params);
    model.history = std::move(result.history);
  } else {
    const models::ClassicKind kind = models::parse_classic_kind(model.kind);
    std::vector<features::FeatureRow> rows;
    for (const auto& t : train) rows.push_back(classic_row(model, t));
    model.classic = models::train_classic(kind, rows, train_labels, config.classic(seed));
  }
  return model;
}

std::vector<ThreadPrediction> predict_threads(const TrainedModel& model, std::span<const ingest::Thread> threads) {
  std::vector<double> scores;
  std::vector<ThreadPrediction> out(threads.size());
  if (model.kind == "lstm") {
    scores = models::lstm_scores(model.params, model.config.lstm(), sequences_of(model, threads));
  } else if (model.kind == "bigcn") {
    scores = models::bigcn_scores(model.params, model.config.bigcn(model.tfidf.dimension()), trees_of(model, threads));
  } else {
    for (std::size_t i = 0; i < threads.size(); ++i) {
      const auto p = models::predict(model.classic, classic_row(model, threads[i]));
      out[i] = {threads[i].id(), p.label, p.score};
    }
    return out;
  }
  for (std::size_t i = 0; i < threads.size(); ++i) {
    out[i] = {threads[i].id(), scores[i] >= 0.5 ? Label::rumour : Label::nonrumour, scores[i]};
  }
  return out;
}

std::string format_history(std::span<const models::EpochRecord> history) {
  std::string out = "epoch\ttrain_loss\tdev_loss\ttrain_accuracy\tdev_accuracy\n";
  for (const auto& r : history) {
    out += std::to_string(r.epoch) + '\t' + io::format_double(r.train_loss) + '\t' + io::format_double(r.dev_loss) +
           '\t' + io::format_double(r.train_accuracy) + '\t' + io::format_double(r.dev_accuracy) + '\n';
  }
  return out;
}

std::string format_predictions(std::span<const ThreadPrediction> predictions) {
  std::string out;
  for (const auto& p : predictions) {
    out += p.thread_id + '\t' + std::string(to_string(p.label)) + '\t' + io::format_double(p.score, 10) + '\n';
  }
  return out;
}

void save_model(const std::filesystem::path& dir, const TrainedModel& model) {
  grad::Checkpoint ckpt;
  ckpt.meta["kind"] = model.kind;
  ckpt.meta["seed"] = std::to_string(model.seed);
  for (const auto& [key, value] : RunConfig::defaults()) ckpt.meta["config." + key] = model.config.get(key);
  ckpt.params = model.params;
  grad::save_checkpoint(dir / "model.ckpt", ckpt);

  if (uses_tfidf(model)) {
    std::ostringstream vocab, idf;
    model.tfidf.vocab.save(vocab);
    model.tfidf.save_idf(idf);
    io::write_file(dir / "vocab.txt", vocab.str());
    io::write_file(dir / "idf.tsv", idf.str());
  }
  if (model.kind != "bigcn") {
    std::ostringstream vocab;
    model.sequence_vocab.save(vocab);
    io::write_file(dir / "sequence_vocab.txt", vocab.str());
  }
  if (is_deep_model(model.kind)) {
    io::write_file(dir / "history.tsv", format_history(model.history));
  } else {
    models::save_classic(dir, model.classic);
  }
}

TrainedModel load_model(const std::filesystem::path& dir) {
  const grad::Checkpoint ckpt = grad::load_checkpoint(dir / "model.ckpt");
  TrainedModel model;
  for (const auto& [key, value] : ckpt.meta) {
    if (key.starts_with("config.")) model.config.set(key.substr(7), value);
  }
  auto meta = [&](const std::string& key) {
    auto it = ckpt.meta.find(key);
    if (it == ckpt.meta.end()) throw ValidationError((dir / "model.ckpt").string() + ": missing meta '" + key + "'");
    return it->second;
  };
  model.kind = meta("kind");
  model.seed = io::parse_uint(meta("seed"), "seed");
  model.params = ckpt.params;
  if (uses_tfidf(model)) model.tfidf = features::TfidfModel::from_files(io::read_file(dir / "vocab.txt"), io::read_file(dir / "idf.tsv"));
  if (model.kind != "bigcn") model.sequence_vocab = features::Vocabulary::parse(io::read_file(dir / "sequence_vocab.txt"));
  if (!is_deep_model(model.kind)) model.classic = models::load_classic(dir);
  return model;
}

}  // namespace rumourlab::eval
