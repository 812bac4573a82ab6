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

#include "commands.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "rumourlab/analyze.hpp"
#include "rumourlab/error.hpp"
#include "rumourlab/proptree.hpp"
#include "rumourlab/text_io.hpp"
#include "rumourlab/textproc.hpp"

namespace rumourlab::cli::detail {

namespace {

ingest::AssemblyResult load_threads(const std::filesystem::path& path) {
  return ingest::assemble_threads(ingest::load_tweets(path));
}

std::size_t count_label(std::span<const ingest::Thread> threads, Label label) {
  std::size_t n = 0;
  for (const auto& t : threads) n += t.label == label ? 1 : 0;
  return n;
}

std::vector<ingest::Thread> all_threads(const ingest::AssemblyResult& assembled) {
  std::vector<ingest::Thread> threads = assembled.threads;
  threads.insert(threads.end(), assembled.unlabeled.begin(), assembled.unlabeled.end());
  return threads;
}

std::map<std::string, Label> read_predictions(const std::filesystem::path& path) {
  std::map<std::string, Label> labels;
  const auto lines = io::split_lines(io::read_file(path));
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    const auto fields = io::split(lines[n], '\t');
    const auto label = fields.size() >= 2 ? parse_label(fields[1]) : std::nullopt;
    if (!label) throw ParseError(path.string() + ":" + std::to_string(n + 1) + ": expected 'id<TAB>label<TAB>score'");
    labels[std::string(fields[0])] = *label;
  }
  return labels;
}

}  // namespace

eval::RunConfig resolve_config(const CommonOptions& o) {
  eval::RunConfig config = o.config.empty() ? eval::RunConfig() : eval::RunConfig::load(o.config);
  for (const std::string& assignment : o.set) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ValidationError("--set expects key=value, got '" + assignment + "'");
    config.set(std::string(io::trim(std::string_view(assignment).substr(0, eq))),
               std::string(io::trim(std::string_view(assignment).substr(eq + 1))));
  }
  if (!o.data.empty()) config.set("data", o.data);
  if (!o.out.empty()) config.set("out", o.out);
  if (!o.model.empty()) config.set("model", o.model);
  if (o.seed) config.set("seeds", std::to_string(*o.seed));
  return config;
}

int cmd_ingest(const CommonOptions& o, std::ostream&, std::ostream& err) {
  const eval::RunConfig config = resolve_config(o);
  config.validate(true);
  const auto records = ingest::load_tweets(config.data_path());
  const auto assembled = ingest::assemble_threads(records);
  err << "records: " << records.size() << "\n"
      << "labeled threads: " << assembled.threads.size() << " (rumour " << count_label(assembled.threads, Label::rumour)
      << ", nonrumour " << count_label(assembled.threads, Label::nonrumour) << ")\n"
      << "unlabeled threads: " << assembled.unlabeled.size() << "\n"
      << "orphaned replies: " << assembled.orphaned_replies << "\n"
      << "early replies: " << assembled.early_replies << "\n";
  if (!o.out.empty()) {
    const auto split = ingest::split_dataset(assembled.threads, config.split_ratios(), config.split_seed());
    ingest::write_split_manifest(config.out_dir() / "split", split);
    err << "split: train " << split.train.size() << ", dev " << split.dev.size() << ", test " << split.test.size()
        << " -> " << (config.out_dir() / "split").string() << "\n";
  }
  return 0;
}

int cmd_stats(const CommonOptions& o, std::ostream& out, std::ostream&) {
  const eval::RunConfig config = resolve_config(o);
  config.validate(true);
  const auto records = ingest::load_tweets(config.data_path());
  const auto assembled = ingest::assemble_threads(records);
  std::size_t sources = 0, replies = 0, thread_replies = 0;
  std::optional<Timestamp> first, last;
  for (const auto& r : records) {
    (r.is_source() ? sources : replies) += 1;
    if (!first || r.created_at < *first) first = r.created_at;
    if (!last || *last < r.created_at) last = r.created_at;
  }
  for (const auto& t : assembled.threads) thread_replies += t.replies.size();
  out << "records\t" << records.size() << "\n"
      << "sources\t" << sources << "\n"
      << "replies\t" << replies << "\n"
      << "threads\t" << assembled.threads.size() << "\n"
      << "rumour\t" << count_label(assembled.threads, Label::rumour) << "\n"
      << "nonrumour\t" << count_label(assembled.threads, Label::nonrumour) << "\n"
      << "unlabeled\t" << assembled.unlabeled.size() << "\n"
      << "orphaned_replies\t" << assembled.orphaned_replies << "\n"
      << "early_replies\t" << assembled.early_replies << "\n"
      << "mean_replies_per_thread\t"
      << io::format_double(assembled.threads.empty()
                               ? 0.0
                               : static_cast<double>(thread_replies) / static_cast<double>(assembled.threads.size()),
                           6)
      << "\n";
  if (first) out << "first\t" << format_timestamp(*first) << "\nlast\t" << format_timestamp(*last) << "\n";
  return 0;
}

int cmd_build_trees(const CommonOptions& o, std::ostream&, std::ostream& err) {
  const eval::RunConfig config = resolve_config(o);
  config.validate(true);
  const auto assembled = load_threads(config.data_path());
  const auto split = ingest::split_dataset(assembled.threads, config.split_ratios(), config.split_seed());
  std::vector<std::vector<std::string>> docs;
  for (const auto& t : split.train) {
    docs.push_back(text::content_terms(t.source.text));
    for (const auto& r : t.replies) docs.push_back(text::content_terms(r.text));
  }
  const features::TfidfModel tfidf = features::fit_tfidf(docs, config.tfidf_top_k());
  tree::TreeOptions options;
  options.keep_reply_links = config.keep_reply_links();
  std::vector<tree::PropTree> trees;
  for (const auto& t : all_threads(assembled)) trees.push_back(tree::build_tree(t, tfidf, options));

  const auto dir = config.out_dir();
  tree::save_corpus(dir / "trees.txt", trees);
  std::ostringstream vocab, idf;
  tfidf.vocab.save(vocab);
  tfidf.save_idf(idf);
  io::write_file(dir / "vocab.txt", vocab.str());
  io::write_file(dir / "idf.tsv", idf.str());
  ingest::write_split_manifest(dir / "split", split);
  err << "wrote " << trees.size() << " trees (" << tfidf.dimension() << " terms) to " << (dir / "trees.txt").string()
      << "\n";
  return 0;
}

int cmd_train(const CommonOptions& o, std::ostream&, std::ostream& err) {
  const eval::RunConfig config = resolve_config(o);
  config.validate(true);
  const auto assembled = load_threads(config.data_path());
  const auto split = ingest::split_dataset(assembled.threads, config.split_ratios(), config.split_seed());
  const std::uint64_t seed = config.seeds().front();
  err << "training " << config.model() << " on " << split.train.size() << " threads (dev " << split.dev.size()
      << "), seed " << seed << "\n";
  const eval::TrainedModel model = eval::train_model(config, split.train, split.dev, seed);
  for (const auto& r : model.history) {
    err << "epoch " << r.epoch << "  train_loss " << io::format_double(r.train_loss, 6) << "  dev_loss "
        << io::format_double(r.dev_loss, 6) << "  dev_acc " << io::format_double(r.dev_accuracy, 4) << "\n";
  }
  eval::save_model(config.out_dir(), model);
  ingest::write_split_manifest(config.out_dir() / "split", split);
  err << "saved model to " << config.out_dir().string() << "\n";
  return 0;
}

int cmd_evaluate(const CommonOptions& o, const std::string& model_dir, std::ostream&, std::ostream& err) {
  if (model_dir.empty()) {
    const eval::RunConfig config = resolve_config(o);
    const eval::ExperimentResult result = eval::run_experiment(config);
    err << eval::format_report(result.report) << "run directory: " << result.run_dir.string() << "\n";
    return 0;
  }
  const eval::TrainedModel model = eval::load_model(model_dir);
  const std::string data = o.data.empty() ? model.config.get("data") : o.data;
  if (data.empty()) throw ValidationError("evaluate: --data is required");
  const auto assembled = load_threads(data);
  if (assembled.threads.empty()) throw ValidationError("evaluate: no labeled threads in " + data);
  const auto predictions = eval::predict_threads(model, assembled.threads);
  std::vector<Label> predicted, truth;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    predicted.push_back(predictions[i].label);
    truth.push_back(*assembled.threads[i].label);
  }
  eval::Report report = eval::compute_report(predicted, truth);
  report.model = model.kind;
  report.config_digest = model.config.digest();
  report.seeds = {model.seed};
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(model_dir) / "evaluation" : std::filesystem::path(o.out);
  io::write_file(dir / "report.txt", eval::format_report(report));
  io::write_file(dir / "metrics.txt", eval::format_metrics(report));
  io::write_file(dir / "predictions.tsv", eval::format_predictions(predictions));
  err << eval::format_report(report) << "wrote " << (dir / "report.txt").string() << "\n";
  return 0;
}

int cmd_predict(const CommonOptions& o, const std::string& model_dir, std::ostream& out, std::ostream& err) {
  if (model_dir.empty()) throw ValidationError("predict: --model-dir is required");
  if (o.data.empty()) throw ValidationError("predict: --data is required");
  const eval::TrainedModel model = eval::load_model(model_dir);
  const auto assembled = load_threads(o.data);
  const auto threads = all_threads(assembled);
  out << eval::format_predictions(eval::predict_threads(model, threads));
  err << "predicted " << threads.size() << " threads\n";
  return 0;
}

int cmd_analyze(const std::string& what, const CommonOptions& o, const std::string& predictions, std::ostream&,
                std::ostream& err) {
  const eval::RunConfig config = resolve_config(o);
  config.validate(true);
  const auto assembled = load_threads(config.data_path());
  std::map<std::string, Label> labels;
  if (!predictions.empty()) labels = read_predictions(predictions);

  std::vector<analyze::AnalyzedTweet> tweets;
  std::size_t skipped = 0;
  for (const auto& thread : all_threads(assembled)) {
    std::optional<Label> label = thread.label;
    if (!predictions.empty()) {
      auto it = labels.find(thread.id());
      label = it == labels.end() ? std::nullopt : std::optional<Label>(it->second);
    }
    if (!label) {
      ++skipped;
      continue;
    }
    tweets.push_back({thread.source.text, thread.source.created_at, *label});
    for (const auto& r : thread.replies) tweets.push_back({r.text, r.created_at, *label});
  }
  if (skipped) err << "skipped " << skipped << " threads without a label\n";

  const auto dir = config.out_dir();
  if (what == "attributes") {
    io::write_file(dir / "attributes.csv", analyze::histograms_csv(analyze::attribute_histograms(tweets)));
    err << "wrote " << (dir / "attributes.csv").string() << "\n";
    return 0;
  }
  if (what == "topics") {
    const auto keywords = config.analyze_keywords();
    io::write_file(dir / "topics.csv", analyze::terms_csv(analyze::monthly_top_terms(tweets, keywords, config.analyze_top_n())));
    err << "wrote " << (dir / "topics.csv").string() << "\n";
    return 0;
  }

  const bool emotion = what == "emotion";
  if (!emotion && what != "sentiment") throw ValidationError("analyze: unknown analysis '" + what + "'");
  std::vector<analyze::ScoredTweet> scored;
  for (const auto& t : tweets) {
    analyze::ScoredTweet s;
    s.created_at = t.created_at;
    s.label = t.label;
    s.emotion = analyze::score_emotions(t.text, analyze::EmotionLexicon::bundled());
    s.sentiment = analyze::score_sentiment(t.text, analyze::ValenceLexicon::bundled());
    scored.push_back(s);
  }
  std::vector<analyze::SeriesPoint> series;
  for (auto& p : analyze::monthly_average_scores(scored)) {
    if ((p.dimension == "compound") != emotion) series.push_back(std::move(p));
  }
  const std::string stem = emotion ? "emotion" : "sentiment";
  io::write_file(dir / (stem + "_series.csv"), analyze::timeseries_csv(series));

  std::string summary;
  if (emotion) {
    summary = "class,emotion,count,share\n";
    for (Label label : {Label::rumour, Label::nonrumour}) {
      std::map<analyze::Emotion, std::size_t> counts;
      std::size_t total = 0;
      for (const auto& s : scored) {
        if (s.label != label) continue;
        ++counts[s.emotion.label];
        ++total;
      }
      for (auto e : {analyze::Emotion::happy, analyze::Emotion::angry, analyze::Emotion::surprise,
                     analyze::Emotion::sad, analyze::Emotion::fear, analyze::Emotion::none}) {
        const double share = total ? static_cast<double>(counts[e]) / static_cast<double>(total) : 0.0;
        summary += std::string(to_string(label)) + "," + std::string(analyze::to_string(e)) + "," +
                   std::to_string(counts[e]) + "," + io::format_double(share, 6) + "\n";
      }
    }
  } else {
    summary = "class,pos,neu,neg,compound,n\n";
    for (Label label : {Label::rumour, Label::nonrumour}) {
      double pos = 0, neu = 0, neg = 0, compound = 0;
      std::size_t n = 0;
      for (const auto& s : scored) {
        if (s.label != label) continue;
        pos += s.sentiment.pos;
        neu += s.sentiment.neu;
        neg += s.sentiment.neg;
        compound += s.sentiment.compound;
        ++n;
      }
      auto mean = [&](double v) { return n ? io::format_double(v / static_cast<double>(n), 6) : std::string("NA"); };
      summary += std::string(to_string(label)) + "," + mean(pos) + "," + mean(neu) + "," + mean(neg) + "," +
                 mean(compound) + "," + std::to_string(n) + "\n";
    }
  }
  io::write_file(dir / (stem + "_summary.csv"), summary);
  err << "wrote " << (dir / (stem + "_series.csv")).string() << " and " << (dir / (stem + "_summary.csv")).string()
      << "\n";
  return 0;
}

}  // namespace rumourlab::cli::detail
