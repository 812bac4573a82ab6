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

#include <cstdio>
#include <tuple>

#include "rumourlab/evalrun.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::eval {

namespace {

std::string fixed4(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4f", v);
  return buffer;
}

std::string seed_list(const std::vector<std::uint64_t>& seeds) {
  std::string out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seeds[i]);
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string format_report(const Report& report) {
  std::string out = "# rumourlab-report v1\n";
  out += "model: " + report.model + "\n";
  out += "config_digest: " + report.config_digest + "\n";
  out += "seeds: " + seed_list(report.seeds) + "\n";
  out += "examples: " + std::to_string(report.counts.total) + "\n\n";
  const std::string model = report.model.empty() ? "-" : report.model;
  const std::size_t width = std::max<std::size_t>(model.size() + 2, 8);
  out += pad("Model", width) + "Class  Acc.    Prec.   Rec.    F1      Support\n";
  out += pad(model, width) + "R      " + fixed4(report.accuracy) + "  " + fixed4(report.rumour.precision) + "  " +
         fixed4(report.rumour.recall) + "  " + fixed4(report.rumour.f1) + "  " + std::to_string(report.rumour.support) +
         "\n";
  out += pad("", width) + "N              " + fixed4(report.nonrumour.precision) + "  " +
         fixed4(report.nonrumour.recall) + "  " + fixed4(report.nonrumour.f1) + "  " +
         std::to_string(report.nonrumour.support) + "\n";
  return out;
}

std::string format_metrics(const Report& report) {
  std::string out;
  auto line = [&](const std::string& key, const std::string& value) { out += key + "=" + value + "\n"; };
  line("model", report.model);
  line("config_digest", report.config_digest);
  line("seeds", seed_list(report.seeds));
  line("examples", std::to_string(report.counts.total));
  line("accuracy", io::format_double(report.accuracy));
  for (const auto& [name, row, counts] :
       {std::tuple{"rumour", report.rumour, report.counts.rumour},
        std::tuple{"nonrumour", report.nonrumour, report.counts.nonrumour}}) {
    const std::string prefix(name);
    line(prefix + ".precision", io::format_double(row.precision));
    line(prefix + ".recall", io::format_double(row.recall));
    line(prefix + ".f1", io::format_double(row.f1));
    line(prefix + ".support", std::to_string(row.support));
    line(prefix + ".tp", std::to_string(counts.tp));
    line(prefix + ".fp", std::to_string(counts.fp));
    line(prefix + ".fn", std::to_string(counts.fn));
    line(prefix + ".tn", std::to_string(counts.tn));
  }
  return out;
}

}  // namespace rumourlab::eval
