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
#include <string>
#include <utility>
#include <vector>

#include "scisumm/corpus.hpp"
#include "scisumm/textproc.hpp"

namespace scisumm::spans {

// The summarization input: union of the paper's abstract sentences and the
// cited text spans pulled in by its citation sentences.
struct InputMember {
  int sid = 0;
  std::string text;
  bool is_abstract = false;
  bool is_cited_span = false;
};

struct InputSet {
  std::string rp_id;
  std::vector<InputMember> members;   // sorted by sid, sids unique
  std::vector<double> authority;      // per member, scaled to [0,1]

  std::size_t size() const { return members.size(); }
};

// Complete similarity graph over the input sentences together with its
// self-loop-augmented, symmetrically normalized adjacency matrix.
struct SentenceGraph {
  std::size_t n = 0;
  std::vector<double> weights;  // n*n, symmetric, zero diagonal, entries in [0,1]
  std::vector<double> a_norm;   // n*n, D^-1/2 (weights + I) D^-1/2
  std::vector<double> degree;   // row sums of weights + I

  double weight(std::size_t i, std::size_t j) const { return weights[i * n + j]; }
  double norm_at(std::size_t i, std::size_t j) const { return a_norm[i * n + j]; }
};

// The two reference-paper sentences most similar to the citation under
// tf-idf cosine with stopwords removed, ordered best-first; ties break
// toward the lower sid. Idf is fit on the paper's sentences plus all of its
// retained citation sentences. Throws too_few_sentences below 2 sentences.
std::pair<int, int> extract_spans_for_citation(
    const corpus::ReferencePaper& rp, const corpus::CitationSentence& citation);

// Span pairs for every citation of the paper, aligned with rp.citations.
std::vector<std::pair<int, int>> extract_all_spans(
    const corpus::ReferencePaper& rp);

// Abstract plus cited text spans, ordered by sid, with origin flags.
// Authority is initialized by authority_scores().
InputSet build_input_set(const corpus::ReferencePaper& rp);

// Per-member authority: cited spans sum the citation counts of the papers
// citing them, abstract sentences take the paper's own citation count, and
// dual-origin members take the max. Scores are ln(1+raw) then min-max scaled
// to [0,1] (all-equal collapses to 0.5).
std::vector<double> authority_scores(const InputSet& input,
                                     const corpus::ReferencePaper& rp);

// Normalized token sequences (stopwords removed, no stemming) used for all
// similarity computations over the input set.
std::vector<text::TokenSeq> member_tokens(const InputSet& input);

// Member tf-idf vectors with idf scoped to the input set itself; shared by
// graph construction and summary redundancy checks.
std::vector<text::TfIdfVector> member_vectors(const InputSet& input);

SentenceGraph build_graph(const InputSet& input);

}  // namespace scisumm::spans
