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

#include <map>
#include <string>
#include <vector>

#include "scisumm/textproc.hpp"

namespace scisumm::rouge {

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
};

struct RougeFlags {
  bool stem = false;
  bool drop_stopwords = false;
};

// Multiset of contiguous n-grams (token windows joined on an unprintable
// separator); empty when the sequence is shorter than n.
std::map<std::string, std::size_t> ngrams(const text::TokenSeq& tokens, int n);

// Skip-bigram units: ordered pairs (i < j) with at most max_gap tokens
// skipped between them, plus unigrams when requested. max_gap = -1 disables
// pairs entirely, reducing the unit set to unigrams.
std::map<std::string, std::size_t> skip_units(const text::TokenSeq& tokens,
                                              int max_gap,
                                              bool include_unigrams);

// Clipped n-gram overlap against each reference, averaged over references.
// Throws empty_reference when there is no usable reference text.
RougeScore rouge_n(const std::string& candidate,
                   const std::vector<std::string>& references, int n,
                   RougeFlags flags);

// Skip-bigram (+ optional unigram) overlap, same averaging and flags.
RougeScore rouge_su(const std::string& candidate,
                    const std::vector<std::string>& references, int max_gap,
                    bool include_unigrams, RougeFlags flags);

struct BenchmarkRow {
  std::string paper_id;
  double r2_recall = 0.0;
  double r2_f1 = 0.0;
  double r3_f1 = 0.0;
  double su4_f1 = 0.0;
};

struct BenchmarkResult {
  std::vector<BenchmarkRow> rows;  // sorted by paper_id
  BenchmarkRow mean;               // unweighted, paper_id = "mean"
};

// Scores every system summary against its gold summaries with stemming and
// stopword removal on, reporting ROUGE-2 recall/F1, ROUGE-3 F1 and SU4 F1.
// Throws key_mismatch unless the id sets coincide.
BenchmarkResult evaluate_benchmark(
    const std::map<std::string, std::string>& system,
    const std::map<std::string, std::vector<std::string>>& gold);

std::string benchmark_csv(const BenchmarkResult& result);

}  // namespace scisumm::rouge
