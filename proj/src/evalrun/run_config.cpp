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
#include <cmath>

#include "rumourlab/error.hpp"
#include "rumourlab/evalrun.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::eval {

namespace {

std::vector<std::string> list(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view part : io::split(text, ',')) {
    part = io::trim(part);
    if (!part.empty()) out.emplace_back(part);
  }
  return out;
}

}  // namespace

const std::map<std::string, std::string>& RunConfig::defaults() {
  static const std::map<std::string, std::string> table = {
      {"data", ""},
      {"out", "out"},
      {"model", "logreg"},
      {"seeds", "1"},
      {"split.ratios", "0.7,0.15,0.15"},
      {"split.seed", "13"},
      {"tfidf.top_k", "5000"},
      {"trees.keep_reply_links", "false"},
      {"lstm.vocab_cap", "20000"},
      {"lstm.embed_dim", "64"},
      {"lstm.hidden_dim", "128"},
      {"lstm.perceptron_dim", "64"},
      {"lstm.max_len", "128"},
      {"lstm.layers", "1"},
      {"lstm.dropout", "0"},
      {"bigcn.hidden_dim", "64"},
      {"bigcn.out_dim", "64"},
      {"bigcn.drop_edge_rate", "0.2"},
      {"bigcn.dropout", "0"},
      {"train.optimizer", "adam"},
      {"train.lr", "0.001"},
      {"train.weight_decay", "0"},
      {"train.epsilon", "1e-8"},
      {"train.batch_size", "16"},
      {"train.max_epochs", "30"},
      {"train.patience", "3"},
      {"train.class_weights", "false"},
      {"classic.features", "handcrafted,tfidf"},
      {"classic.max_len", "32"},
      {"classic.smote", "false"},
      {"classic.smote_k", "5"},
      {"classic.class_weights", "false"},
      {"classic.standardize", "true"},
      {"rf.n_trees", "100"},
      {"rf.max_depth", "none"},
      {"rf.max_features", "0"},
      {"logreg.l2", "0"},
      {"logreg.lr", "0.1"},
      {"logreg.iterations", "500"},
      {"svm.lambda", "1e-4"},
      {"svm.lr", "0.1"},
      {"svm.iterations", "500"},
      {"analyze.keywords", "covid,corona virus"},
      {"analyze.top_n", "10"},
  };
  return table;
}

RunConfig::RunConfig() : values_(defaults()) {}

RunConfig RunConfig::parse(std::string_view text, const std::string& source) {
  RunConfig config;
  const auto lines = io::split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = io::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(source + ":" + std::to_string(n + 1) + ": expected 'key = value'");
    }
    try {
      config.set(std::string(io::trim(line.substr(0, eq))), std::string(io::trim(line.substr(eq + 1))));
    } catch (const ValidationError& e) {
      throw ValidationError(source + ":" + std::to_string(n + 1) + ": " + e.what());
    }
  }
  return config;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  return parse(io::read_file(path), path.string());
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (!defaults().contains(key)) throw ValidationError("unknown config key '" + key + "'");
  values_[key] = value;
  explicit_[key] = true;
}

const std::string& RunConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ValidationError("unknown config key '" + key + "'");
  return it->second;
}

bool RunConfig::is_set(const std::string& key) const { return explicit_.contains(key); }

std::string RunConfig::canonical() const {
  std::string out;
  for (const auto& [key, value] : values_) out += key + " = " + value + "\n";
  return out;
}

std::string RunConfig::digest() const { return io::hex64(io::fnv1a64(canonical())); }

void RunConfig::validate(bool require_data) const {
  const std::string kind = model();
  if (!is_deep_model(kind)) models::parse_classic_kind(kind);
  if (seeds().empty()) throw ValidationError("config: seeds must list at least one seed");
  const auto ratios = split_ratios().as_array();
  double ratio_sum = 0.0;
  for (double r : ratios) {
    if (!(r > 0.0)) throw ValidationError("config: split.ratios must all be positive");
    ratio_sum += r;
  }
  if (std::abs(ratio_sum - 1.0) > 1e-9) throw ValidationError("config: split.ratios must sum to 1");
  split_seed();
  if (tfidf_top_k() == 0) throw ValidationError("config: tfidf.top_k must be positive");
  keep_reply_links();
  lstm().validate();
  bigcn(tfidf_top_k()).validate();
  train(0).validate();
  const auto options = classic(0);
  if (options.forest.n_trees == 0) throw ValidationError("config: rf.n_trees must be positive");
  if (options.linear.iterations == 0 || !(options.linear.lr > 0.0)) {
    throw ValidationError("config: linear models need positive lr and iterations");
  }
  for (const std::string& f : classic_features()) {
    if (f != "handcrafted" && f != "tfidf" && f != "ids" && f != "mask") {
      throw ValidationError("config: unknown classic feature set '" + f + "' (expected handcrafted, tfidf, ids, mask)");
    }
  }
  if (classic_features().empty()) throw ValidationError("config: classic.features is empty");
  if (classic_max_len() < 3) throw ValidationError("config: classic.max_len must be at least 3");
  analyze_top_n();
  if (require_data) {
    if (get("data").empty()) throw ValidationError("config: 'data' (dataset path) is required");
    if (!std::filesystem::exists(data_path())) {
      throw ValidationError("config: dataset '" + data_path().string() + "' does not exist");
    }
  }
}

std::filesystem::path RunConfig::data_path() const { return get("data"); }
std::filesystem::path RunConfig::out_dir() const { return get("out"); }
std::string RunConfig::model() const { return get("model"); }

std::vector<std::uint64_t> RunConfig::seeds() const {
  std::vector<std::uint64_t> out;
  for (const std::string& s : list(get("seeds"))) out.push_back(io::parse_uint(s, "seeds"));
  return out;
}

ingest::SplitRatios RunConfig::split_ratios() const {
  const auto parts = list(get("split.ratios"));
  if (parts.size() != 3) throw ValidationError("config: split.ratios needs three comma-separated fractions");
  ingest::SplitRatios ratios;
  ratios.train = io::parse_double(parts[0], "split.ratios");
  ratios.dev = io::parse_double(parts[1], "split.ratios");
  ratios.test = io::parse_double(parts[2], "split.ratios");
  return ratios;
}

std::uint64_t RunConfig::split_seed() const { return io::parse_uint(get("split.seed"), "split.seed"); }
std::size_t RunConfig::tfidf_top_k() const { return io::parse_uint(get("tfidf.top_k"), "tfidf.top_k"); }
bool RunConfig::keep_reply_links() const { return io::parse_bool(get("trees.keep_reply_links"), "trees.keep_reply_links"); }

models::LstmConfig RunConfig::lstm() const {
  models::LstmConfig c;
  c.vocab_cap = io::parse_uint(get("lstm.vocab_cap"), "lstm.vocab_cap");
  c.embed_dim = io::parse_uint(get("lstm.embed_dim"), "lstm.embed_dim");
  c.hidden_dim = io::parse_uint(get("lstm.hidden_dim"), "lstm.hidden_dim");
  c.perceptron_dim = io::parse_uint(get("lstm.perceptron_dim"), "lstm.perceptron_dim");
  c.max_len = io::parse_uint(get("lstm.max_len"), "lstm.max_len");
  c.layers = io::parse_uint(get("lstm.layers"), "lstm.layers");
  c.dropout = io::parse_double(get("lstm.dropout"), "lstm.dropout");
  return c;
}

models::BiGcnConfig RunConfig::bigcn(std::size_t input_dim) const {
  models::BiGcnConfig c;
  c.input_dim = input_dim;
  c.hidden_dim = io::parse_uint(get("bigcn.hidden_dim"), "bigcn.hidden_dim");
  c.out_dim = io::parse_uint(get("bigcn.out_dim"), "bigcn.out_dim");
  c.drop_edge_rate = io::parse_double(get("bigcn.drop_edge_rate"), "bigcn.drop_edge_rate");
  c.dropout = io::parse_double(get("bigcn.dropout"), "bigcn.dropout");
  return c;
}

models::TrainConfig RunConfig::train(std::uint64_t seed) const {
  models::TrainConfig c;
  c.optimizer = grad::parse_optimizer_kind(get("train.optimizer"));
  c.lr = io::parse_double(get("train.lr"), "train.lr");
  c.weight_decay = io::parse_double(get("train.weight_decay"), "train.weight_decay");
  c.epsilon = io::parse_double(get("train.epsilon"), "train.epsilon");
  c.batch_size = io::parse_uint(get("train.batch_size"), "train.batch_size");
  c.max_epochs = io::parse_uint(get("train.max_epochs"), "train.max_epochs");
  c.patience = io::parse_uint(get("train.patience"), "train.patience");
  c.class_weights = io::parse_bool(get("train.class_weights"), "train.class_weights");
  c.seed = seed;
  return c;
}

models::ClassicOptions RunConfig::classic(std::uint64_t seed) const {
  models::ClassicOptions o;
  o.class_weights = io::parse_bool(get("classic.class_weights"), "classic.class_weights");
  o.smote = io::parse_bool(get("classic.smote"), "classic.smote");
  o.smote_k = io::parse_uint(get("classic.smote_k"), "classic.smote_k");
  o.standardize = io::parse_bool(get("classic.standardize"), "classic.standardize");
  o.forest.n_trees = io::parse_uint(get("rf.n_trees"), "rf.n_trees");
  if (get("rf.max_depth") != "none") o.forest.max_depth = io::parse_uint(get("rf.max_depth"), "rf.max_depth");
  o.forest.max_features = io::parse_uint(get("rf.max_features"), "rf.max_features");
  const std::string kind = model();
  if (kind == "svm") {
    o.linear.lambda = io::parse_double(get("svm.lambda"), "svm.lambda");
    o.linear.lr = io::parse_double(get("svm.lr"), "svm.lr");
    o.linear.iterations = io::parse_uint(get("svm.iterations"), "svm.iterations");
  } else {
    o.linear.l2 = io::parse_double(get("logreg.l2"), "logreg.l2");
    o.linear.lr = io::parse_double(get("logreg.lr"), "logreg.lr");
    o.linear.iterations = io::parse_uint(get("logreg.iterations"), "logreg.iterations");
  }
  o.seed = seed;
  return o;
}

std::vector<std::string> RunConfig::classic_features() const { return list(get("classic.features")); }
std::size_t RunConfig::classic_max_len() const { return io::parse_uint(get("classic.max_len"), "classic.max_len"); }
std::vector<std::string> RunConfig::analyze_keywords() const { return list(get("analyze.keywords")); }
std::size_t RunConfig::analyze_top_n() const { return io::parse_uint(get("analyze.top_n"), "analyze.top_n"); }

bool is_deep_model(std::string_view kind) { return kind == "lstm" || kind == "bigcn"; }

}  // namespace rumourlab::eval
