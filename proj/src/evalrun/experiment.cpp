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
#include "rumourlab/evalrun.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::eval {

namespace {

// Runs `fn`, prefixing any toolkit error with the stage name while keeping
// its type.
template <typename Fn>
auto stage(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    throw ValidationError(name + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(name + ": " + e.what());
  } catch (const IoError& e) {
    throw IoError(name + ": " + e.what());
  } catch (const DivergenceError& e) {
    throw DivergenceError(name + ": " + e.what());
  }
}

}  // namespace

ExperimentResult run_experiment(const RunConfig& config) {
  stage("config", [&] {
    config.validate(true);
    return 0;
  });
  const auto assembled = stage("ingest", [&] { return ingest::assemble_threads(ingest::load_tweets(config.data_path())); });
  const auto split = stage("split", [&] { return ingest::split_dataset(assembled.threads, config.split_ratios(), config.split_seed()); });

  ExperimentResult result;
  result.run_dir = config.out_dir() / ("run-" + config.digest());
  io::write_file(result.run_dir / "config.cfg", config.canonical());
  ingest::write_split_manifest(result.run_dir / "split", split);

  const auto seeds = config.seeds();
  std::vector<std::vector<Label>> runs;
  std::vector<double> mean_score(split.test.size(), 0.0);
  for (std::uint64_t seed : seeds) {
    const std::string name = "train seed " + std::to_string(seed);
    const TrainedModel model = stage(name, [&] { return train_model(config, split.train, split.dev, seed); });
    save_model(result.run_dir / ("seed-" + std::to_string(seed)), model);
    const auto predictions = stage("predict seed " + std::to_string(seed), [&] { return predict_threads(model, split.test); });
    std::vector<Label> labels;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
      labels.push_back(predictions[i].label);
      mean_score[i] += predictions[i].score / static_cast<double>(seeds.size());
    }
    runs.push_back(std::move(labels));
  }

  const auto voted = majority_vote(runs);
  std::vector<Label> truth;
  for (const auto& t : split.test) truth.push_back(*t.label);
  result.report = stage("report", [&] { return compute_report(voted, truth); });
  result.report.model = config.model();
  result.report.config_digest = config.digest();
  result.report.seeds = seeds;

  std::vector<ThreadPrediction> predictions;
  for (std::size_t i = 0; i < split.test.size(); ++i) predictions.push_back({split.test[i].id(), voted[i], mean_score[i]});
  io::write_file(result.run_dir / "predictions.tsv", format_predictions(predictions));
  io::write_file(result.run_dir / "report.txt", format_report(result.report));
  io::write_file(result.run_dir / "metrics.txt", format_metrics(result.report));
  return result;
}

}  // namespace rumourlab::eval
