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

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace scisumm::text {

// Ordered lowercase tokens. Tokens are maximal ASCII alphanumeric runs, so
// hyphenated words split and punctuation never survives.
using TokenSeq = std::vector<std::string>;

TokenSeq tokenize(std::string_view text);

// Token count of the raw text (before stopword removal or stemming). This is
// the word count used by every sentence-length rule.
std::size_t word_count(std::string_view text);

// Single pass of the classic Porter (1980) suffix-stripping algorithm.
// Tokens containing non-alphabetic characters are returned unchanged.
std::string porter_stem(std::string_view token);

bool is_stopword(const std::string& token);
const std::vector<std::string>& stopword_list();

// Stopword filtering first, then stemming of the survivors. Stemming is
// iterated to a fixed point so a second normalize() call is a no-op.
TokenSeq normalize(const TokenSeq& tokens, bool stem, bool drop_stopwords);

// Sparse tf-idf vector; absent terms have weight 0.
struct TfIdfVector {
  std::map<std::string, double> entries;

  double norm() const;
  double weight(const std::string& term) const;
};

// Document-frequency model fit on one collection. Weights use raw term
// frequency and the smoothed idf ln((1+M)/(1+df)) + 1, where M is the
// collection size; terms unseen at fit time get df = 0.
struct IdfModel {
  std::size_t collection_size = 0;
  std::map<std::string, std::size_t> df;

  static IdfModel fit(const std::vector<TokenSeq>& collection);
  double idf(const std::string& term) const;
  TfIdfVector vectorize(const TokenSeq& tokens) const;
};

// Per-item tf-idf vectors with idf fit locally on `collection` and nothing
// else. Callers choose the collection scope.
std::vector<TfIdfVector> tfidf_vectors(const std::vector<TokenSeq>& collection);

// Cosine similarity in [0, 1]; 0 whenever either vector has zero norm.
double cosine(const TfIdfVector& u, const TfIdfVector& v);

}  // namespace scisumm::text
