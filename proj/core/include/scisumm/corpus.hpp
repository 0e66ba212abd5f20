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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scisumm/rng.hpp"

namespace scisumm::corpus {

struct Sentence {
  int sid = 0;          // 0-based position in the paper's original order
  std::string text;
  std::string section;

  bool operator==(const Sentence&) const = default;
};

struct CitationSentence {
  std::string citing_paper_id;
  std::string text;              // cleaned citing sentence
  int year = 0;
  std::uint64_t citing_citation_count = 0;  // citations received by the citing paper

  bool operator==(const CitationSentence&) const = default;
};

struct ReferencePaper {
  std::string paper_id;
  std::string title;
  std::vector<Sentence> sentences;       // ordered, sids contiguous from 0
  std::set<int> abstract_sids;
  std::uint64_t citation_count = 0;      // from the full citation network
  std::vector<CitationSentence> citations;
  std::optional<std::vector<std::string>> gold_summary;

  bool operator==(const ReferencePaper&) const = default;
};

// Parses and validates one corpus record (JSON, schema documented in the
// README). Throws Error with the offending path on schema or invariant
// violations: missing_field, duplicate_sid, empty_abstract, empty_sentence,
// invalid_field.
ReferencePaper parse_paper(const std::string& json_text);
ReferencePaper load_paper(const std::filesystem::path& file);

// Inverse of parse_paper; parse(serialize(p)) == p.
std::string serialize_paper(const ReferencePaper& paper);

// Keeps the oldest and latest citations and samples the rest without
// replacement until `limit` items remain; result sorted by year ascending.
// Collections at or under the limit are returned whole (sorted). Year ties
// break toward the lexicographically lower citing_paper_id.
std::vector<CitationSentence> sample_citations(
    const std::vector<CitationSentence>& citations, std::size_t limit,
    Rng& rng);

struct Splits {
  std::vector<std::string> train;
  std::vector<std::string> validation;
};

// Deterministic 80/20 split of the paper ids not in exclude_ids. Throws
// empty_corpus_after_exclusion when nothing is left.
Splits make_splits(const std::vector<ReferencePaper>& papers,
                   const std::set<std::string>& exclude_ids,
                   std::uint64_t seed);

// All *.json records in a directory, sorted by filename.
std::vector<ReferencePaper> load_corpus_dir(const std::filesystem::path& dir);

}  // namespace scisumm::corpus
