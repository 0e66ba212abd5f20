// Copyright 2026 The Scisumm Authors
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

#include "scisumm/textproc.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

namespace scisumm::text {

namespace detail {
extern const char* kStopwordsText;  // generated from data/stopwords.txt
}

namespace {

bool is_token_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

char to_lower_ascii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

const std::unordered_set<std::string>& stopword_set() {
  static const std::unordered_set<std::string> words = [] {
    std::unordered_set<std::string> set;
    std::istringstream in(detail::kStopwordsText);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) set.insert(line);
    }
    return set;
  }();
  return words;
}

}  // namespace

TokenSeq tokenize(std::string_view text) {
  TokenSeq tokens;
  std::string current;
  for (char c : text) {
    if (is_token_char(c)) {
      current += to_lower_ascii(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::size_t word_count(std::string_view text) { return tokenize(text).size(); }

bool is_stopword(const std::string& token) {
  return stopword_set().count(token) > 0;
}

const std::vector<std::string>& stopword_list() {
  static const std::vector<std::string> list = [] {
    std::vector<std::string> words;
    std::istringstream in(detail::kStopwordsText);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) words.push_back(line);
    }
    return words;
  }();
  return list;
}

TokenSeq normalize(const TokenSeq& tokens, bool stem, bool drop_stopwords) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (drop_stopwords && is_stopword(token)) continue;
    if (stem) {
      // Iterated to a fixed point so normalize is idempotent (a single pass
      // is not: stems ending in s re-strip, e.g. decisiveness -> decis ->
      // deci). Each extra round shortens the token, so the cap is ample.
      std::string stemmed = porter_stem(token);
      for (int round = 0; round < 10; ++round) {
        std::string again = porter_stem(stemmed);
        if (again == stemmed) break;
        stemmed = std::move(again);
      }
      out.push_back(std::move(stemmed));
    } else {
      out.push_back(token);
    }
  }
  return out;
}

double TfIdfVector::norm() const {
  double sum = 0.0;
  for (const auto& [term, w] : entries) sum += w * w;
  return std::sqrt(sum);
}

double TfIdfVector::weight(const std::string& term) const {
  auto it = entries.find(term);
  return it == entries.end() ? 0.0 : it->second;
}

IdfModel IdfModel::fit(const std::vector<TokenSeq>& collection) {
  IdfModel model;
  model.collection_size = collection.size();
  for (const auto& item : collection) {
    std::unordered_set<std::string> seen;
    for (const auto& token : item) {
      if (seen.insert(token).second) ++model.df[token];
    }
  }
  return model;
}

double IdfModel::idf(const std::string& term) const {
  auto it = df.find(term);
  std::size_t count = it == df.end() ? 0 : it->second;
  return std::log(static_cast<double>(1 + collection_size) /
                  static_cast<double>(1 + count)) +
         1.0;
}

TfIdfVector IdfModel::vectorize(const TokenSeq& tokens) const {
  std::map<std::string, std::size_t> tf;
  for (const auto& token : tokens) ++tf[token];
  TfIdfVector vec;
  for (const auto& [term, count] : tf) {
    vec.entries[term] = static_cast<double>(count) * idf(term);
  }
  return vec;
}

std::vector<TfIdfVector> tfidf_vectors(const std::vector<TokenSeq>& collection) {
  IdfModel model = IdfModel::fit(collection);
  std::vector<TfIdfVector> vectors;
  vectors.reserve(collection.size());
  for (const auto& item : collection) vectors.push_back(model.vectorize(item));
  return vectors;
}

double cosine(const TfIdfVector& u, const TfIdfVector& v) {
  const TfIdfVector& small = u.entries.size() <= v.entries.size() ? u : v;
  const TfIdfVector& large = u.entries.size() <= v.entries.size() ? v : u;
  double dot = 0.0;
  for (const auto& [term, w] : small.entries) {
    auto it = large.entries.find(term);
    if (it != large.entries.end()) dot += w * it->second;
  }
  if (dot == 0.0) return 0.0;
  double nu = u.norm();
  double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) return 0.0;
  double value = dot / (nu * nv);
  return value < 0.0 ? 0.0 : (value > 1.0 ? 1.0 : value);
}

}  // namespace scisumm::text
