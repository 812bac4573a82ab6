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
#include <exception>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "rumourlab/cli.hpp"
#include "rumourlab/error.hpp"

namespace rumourlab::cli {

namespace {

void add_common(CLI::App* sub, detail::CommonOptions& o, bool with_model) {
  sub->add_option("--config", o.config, "run configuration file");
  sub->add_option("--data", o.data, "dataset (JSON lines)");
  sub->add_option("--out", o.out, "output directory");
  if (with_model) sub->add_option("--model", o.model, "lstm, bigcn, logreg, svm or rf");
  sub->add_option("--seed", o.seed, "training seed (overrides 'seeds')");
  sub->add_option("--set", o.set, "configuration override key=value (repeatable)");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rumourlab: rumour detection on tweet threads", "rumourlab"};
  app.require_subcommand(1);

  detail::CommonOptions o;
  std::string model_dir, predictions;

  auto* ingest = app.add_subcommand("ingest", "validate a dataset and optionally write the split manifest");
  add_common(ingest, o, false);
  auto* stats = app.add_subcommand("stats", "print corpus statistics");
  add_common(stats, o, false);
  auto* build = app.add_subcommand("build-trees", "build propagation trees and the TF-IDF vocabulary");
  add_common(build, o, false);
  auto* train = app.add_subcommand("train", "train one model and save it to --out");
  add_common(train, o, true);
  auto* evaluate = app.add_subcommand("evaluate", "run an experiment, or score a saved model with --model-dir");
  add_common(evaluate, o, true);
  evaluate->add_option("--model-dir", model_dir, "directory written by 'train'");
  auto* predict = app.add_subcommand("predict", "print id, label and score for every thread");
  add_common(predict, o, false);
  predict->add_option("--model-dir", model_dir, "directory written by 'train'")->required();
  auto* analyze = app.add_subcommand("analyze", "exploratory analyses written as CSV");
  analyze->require_subcommand(1);
  std::vector<CLI::App*> analyses;
  for (const char* name : {"attributes", "topics", "emotion", "sentiment"}) {
    auto* sub = analyze->add_subcommand(name, std::string(name) + " analysis");
    add_common(sub, o, false);
    sub->add_option("--predictions", predictions, "id/label/score file used instead of dataset labels");
    analyses.push_back(sub);
  }
  auto* selftest = app.add_subcommand("selftest", "run built-in gradient and oracle checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    // Usage of the innermost subcommand that was recognised.
    CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    err << target->help();
    return kValidationError;
  }

  try {
    if (*ingest) return detail::cmd_ingest(o, out, err);
    if (*stats) return detail::cmd_stats(o, out, err);
    if (*build) return detail::cmd_build_trees(o, out, err);
    if (*train) return detail::cmd_train(o, out, err);
    if (*evaluate) return detail::cmd_evaluate(o, model_dir, out, err);
    if (*predict) return detail::cmd_predict(o, model_dir, out, err);
    for (auto* sub : analyses) {
      if (*sub) return detail::cmd_analyze(sub->get_name(), o, predictions, out, err);
    }
    if (*selftest) return run_selftest(out) ? kSuccess : kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  err << app.help();
  return kValidationError;
}

}  // namespace rumourlab::cli
