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

#include "rumourlab/analyze.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::analyze {

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string histograms_csv(const HistogramSet& set) {
  std::string out;
  out += "# class_totals rumour=" + std::to_string(set.rumour_total) +
         " nonrumour=" + std::to_string(set.nonrumour_total) + "\n";
  for (const AttributeHistogram& h : set.histograms) {
    out += "# bins " + std::string(to_string(h.attribute)) + ":";
    for (std::size_t edge : bin_edges(h.attribute)) out += " " + std::to_string(edge);
    out += " inf\n";
  }
  out += "attribute,class,bin_low,bin_high,count\n";
  for (const AttributeHistogram& h : set.histograms) {
    const auto& edges = bin_edges(h.attribute);
    for (Label label : {Label::rumour, Label::nonrumour}) {
      const auto& counts = label == Label::rumour ? h.rumour : h.nonrumour;
      for (std::size_t b = 0; b < edges.size(); ++b) {
        const std::string high = b + 1 < edges.size() ? std::to_string(edges[b + 1]) : "inf";
        out += std::string(to_string(h.attribute)) + "," + std::string(to_string(label)) + "," +
               std::to_string(edges[b]) + "," + high + "," + std::to_string(counts[b]) + "\n";
      }
    }
  }
  return out;
}

std::string terms_csv(std::span<const MonthlyTermTable> tables) {
  std::string out = "month,class,rank,term,freq\n";
  for (const MonthlyTermTable& table : tables) {
    for (Label label : {Label::rumour, Label::nonrumour}) {
      const auto& ranked = label == Label::rumour ? table.rumour : table.nonrumour;
      for (std::size_t r = 0; r < ranked.size(); ++r) {
        out += format_year_month(table.month) + "," + std::string(to_string(label)) + "," + std::to_string(r + 1) +
               "," + csv_field(ranked[r].first) + "," + std::to_string(ranked[r].second) + "\n";
      }
    }
  }
  return out;
}

std::string timeseries_csv(std::span<const SeriesPoint> series) {
  std::string out = "month,class,dimension,mean,n\n";
  for (const SeriesPoint& p : series) {
    out += format_year_month(p.month) + "," + std::string(to_string(p.label)) + "," + p.dimension + "," +
           (p.mean ? io::format_double(*p.mean, 12) : std::string("NA")) + "," + std::to_string(p.n) + "\n";
  }
  return out;
}

}  // namespace rumourlab::analyze
