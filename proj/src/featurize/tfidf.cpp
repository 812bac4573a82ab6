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
#include <map>
#include <ostream>
#include <set>

#include "rumourlab/error.hpp"
#include "rumourlab/features.hpp"
#include "rumourlab/text_io.hpp"

namespace rumourlab::features {

double SparseVector::norm() const {
  double sum = 0.0;
  for (const SparseEntry& e : entries) sum += e.value * e.value;
  return std::sqrt(sum);
}

TfidfModel fit_tfidf(std::span<const std::vector<std::string>> train_docs, std::size_t top_k) {
  const bool any_terms = std::any_of(train_docs.begin(), train_docs.end(),
                                     [](const auto& doc) { return !doc.empty(); });
  if (!any_terms) throw ValidationError("fit_tfidf: corpus has no terms");
  if (top_k == 0) throw ValidationError("fit_tfidf: top_k must be positive");

  TfidfModel model;
  model.vocab = Vocabulary::build(train_docs, top_k);
  model.doc_count = train_docs.size();

  std::vector<std::size_t> df(model.vocab.content_size(), 0);
  std::set<std::size_t> present;
  for (const auto& doc : train_docs) {
    present.clear();
    for (const std::string& token : doc) {
      if (auto index = model.vocab.content_index(token)) present.insert(*index);
    }
    for (std::size_t index : present) ++df[index];
  }
  const double n = static_cast<double>(model.doc_count);
  model.idf.resize(df.size());
  for (std::size_t i = 0; i < df.size(); ++i) {
    model.idf[i] = std::log((1.0 + n) / (1.0 + static_cast<double>(df[i]))) + 1.0;
  }
  return model;
}

SparseVector transform_tfidf(const TfidfModel& model, std::span<const std::string> doc,
                             TermWeighting weighting) {
  std::map<std::uint32_t, double> tf;
  for (const std::string& token : doc) {
    if (auto index = model.vocab.content_index(token)) tf[static_cast<std::uint32_t>(*index)] += 1.0;
  }
  SparseVector vector;
  vector.entries.reserve(tf.size());
  for (const auto& [index, count] : tf) {
    const double value = weighting == TermWeighting::tfidf ? count * model.idf[index] : count;
    vector.entries.push_back({index, value});
  }
  if (weighting == TermWeighting::tfidf && !vector.empty()) {
    const double norm = vector.norm();
    for (SparseEntry& e : vector.entries) e.value /= norm;
  }
  return vector;
}

void TfidfModel::save_idf(std::ostream& out) const {
  out << "# doc_count\t" << doc_count << '\n';
  for (std::size_t i = 0; i < idf.size(); ++i) {
    out << vocab.terms()[i] << '\t' << io::format_double(idf[i]) << '\n';
  }
}

TfidfModel TfidfModel::from_files(std::string_view vocab_text, std::string_view idf_text) {
  TfidfModel model;
  model.vocab = Vocabulary::parse(vocab_text);
  const auto lines = io::split_lines(idf_text);
  if (lines.empty() || !lines[0].starts_with("# doc_count\t")) {
    throw ParseError("idf file: missing doc_count header");
  }
  model.doc_count = io::parse_uint(std::string_view(lines[0]).substr(12), "doc_count");
  if (lines.size() - 1 != model.vocab.content_size()) {
    throw ValidationError("idf file has " + std::to_string(lines.size() - 1) +
                          " terms, vocabulary has " + std::to_string(model.vocab.content_size()));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = io::split(lines[i], '\t');
    if (fields.size() != 2) throw ParseError("idf line " + std::to_string(i + 1) + ": expected term<TAB>idf");
    if (fields[0] != model.vocab.terms()[i - 1]) {
      throw ValidationError("idf line " + std::to_string(i + 1) + ": term does not match vocabulary");
    }
    const double value = io::parse_double(fields[1], "idf");
    if (!(value >= 0.0)) throw ValidationError("idf line " + std::to_string(i + 1) + ": negative idf");
    model.idf.push_back(value);
  }
  return model;
}

}  // namespace rumourlab::features
