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

#include <string>
#include <utility>
#include <vector>

#include "scisumm/salience.hpp"
#include "scisumm/spans.hpp"

namespace scisumm::summarize {

enum class Mode { hybrid1, hybrid2, cited_only };

const char* mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

struct Summary {
  std::string rp_id;
  std::vector<int> sids;        // strictly increasing (original paper order)
  std::vector<std::string> texts;  // aligned with sids
  int total_words = 0;
  Mode mode = Mode::hybrid1;
  int word_limit = 0;
};

// Core greedy selection: walks `ranked` (descending score, ties toward the
// lower sid), keeping sentences that have more than 8 words, are not
// redundant (tf-idf cosine with every sentence already kept, seed included,
// must stay at or below 0.5) and still fit the word budget. Over-budget
// candidates are skipped and scanning continues. Returns seed + accepted
// sids, unordered.
std::vector<int> greedy_select(
    const std::vector<std::pair<int, double>>& ranked,
    const std::vector<int>& seed_sids, const spans::InputSet& input,
    int word_limit);

// Extractive summary over the whole input set.
Summary hybrid1(const spans::InputSet& input,
                const salience::SalienceDistribution& scores, int word_limit);

// The full abstract, augmented with salient non-abstract cited spans under
// the same length/redundancy/budget rules. The abstract is never truncated,
// even when it alone exceeds the limit.
Summary hybrid2(const spans::InputSet& input,
                const salience::SalienceDistribution& scores, int word_limit);

// Cited text spans only (shared-task protocol; 250-word budget by default).
Summary cited_only(const spans::InputSet& input,
                   const salience::SalienceDistribution& scores,
                   int word_limit = 250);

Summary make_summary(Mode mode, const spans::InputSet& input,
                     const salience::SalienceDistribution& scores,
                     int word_limit);

// One sentence per line, preceded by a header comment with the paper id,
// mode and word count.
std::string summary_to_text(const Summary& summary);
// Inverse of summary_to_text as far as the sentence text goes.
std::vector<std::string> summary_sentences_from_text(const std::string& text);

}  // namespace scisumm::summarize
