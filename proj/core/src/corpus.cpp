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

#include "scisumm/corpus.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "scisumm/error.hpp"
#include "scisumm/textproc.hpp"
#include "scisumm/util.hpp"

namespace scisumm::corpus {

namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(errc::missing_field, path + "." + key);
  }
  return *it;
}

std::string require_string(const json& obj, const std::string& key,
                           const std::string& path) {
  const json& value = require(obj, key, path);
  if (!value.is_string()) {
    throw Error(errc::invalid_field, path + "." + key + " must be a string");
  }
  return value.get<std::string>();
}

std::int64_t require_int(const json& obj, const std::string& key,
                         const std::string& path) {
  const json& value = require(obj, key, path);
  if (!value.is_number_integer()) {
    throw Error(errc::invalid_field, path + "." + key + " must be an integer");
  }
  return value.get<std::int64_t>();
}

std::uint64_t require_count(const json& obj, const std::string& key,
                            const std::string& path) {
  std::int64_t value = require_int(obj, key, path);
  if (value < 0) {
    throw Error(errc::invalid_field, path + "." + key + " must be >= 0");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

ReferencePaper parse_paper(const std::string& json_text) {
  json record;
  try {
    record = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(errc::invalid_field, std::string("malformed JSON: ") + e.what());
  }
  if (!record.is_object()) {
    throw Error(errc::invalid_field, "record root must be an object");
  }

  ReferencePaper paper;
  paper.paper_id = require_string(record, "paper_id", "$");
  if (util::trim(paper.paper_id).empty() ||
      paper.paper_id.find('/') != std::string::npos) {
    throw Error(errc::invalid_field, "$.paper_id must be non-empty without '/'");
  }
  paper.title = require_string(record, "title", "$");
  paper.citation_count = require_count(record, "citation_count", "$");

  const json& sentences = require(record, "sentences", "$");
  if (!sentences.is_array() || sentences.empty()) {
    throw Error(errc::invalid_field, "$.sentences must be a non-empty array");
  }
  std::set<int> seen_sids;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const std::string path = "$.sentences[" + std::to_string(i) + "]";
    const json& s = sentences[i];
    if (!s.is_object()) {
      throw Error(errc::invalid_field, path + " must be an object");
    }
    Sentence sentence;
    sentence.sid = static_cast<int>(require_int(s, "sid", path));
    sentence.section = require_string(s, "section", path);
    sentence.text = require_string(s, "text", path);
    if (util::trim(sentence.text).empty() ||
        text::tokenize(sentence.text).empty()) {
      throw Error(errc::empty_sentence, path + ".text");
    }
    if (!seen_sids.insert(sentence.sid).second) {
      throw Error(errc::duplicate_sid,
                  path + ".sid = " + std::to_string(sentence.sid));
    }
    paper.sentences.push_back(std::move(sentence));
  }
  // sids must be 0..N-1 in order.
  for (std::size_t i = 0; i < paper.sentences.size(); ++i) {
    if (paper.sentences[i].sid != static_cast<int>(i)) {
      throw Error(errc::invalid_field,
                  "$.sentences[" + std::to_string(i) +
                      "].sid: expected contiguous sids in order, got " +
                      std::to_string(paper.sentences[i].sid));
    }
  }

  const json& abstract = require(record, "abstract_sids", "$");
  if (!abstract.is_array()) {
    throw Error(errc::invalid_field, "$.abstract_sids must be an array");
  }
  if (abstract.empty()) {
    throw Error(errc::empty_abstract, "$.abstract_sids");
  }
  for (const json& v : abstract) {
    if (!v.is_number_integer()) {
      throw Error(errc::invalid_field, "$.abstract_sids entries must be integers");
    }
    int sid = v.get<int>();
    if (sid < 0 || sid >= static_cast<int>(paper.sentences.size())) {
      throw Error(errc::invalid_field,
                  "$.abstract_sids contains unknown sid " + std::to_string(sid));
    }
    paper.abstract_sids.insert(sid);
  }

  if (auto it = record.find("citations"); it != record.end()) {
    if (!it->is_array()) {
      throw Error(errc::invalid_field, "$.citations must be an array");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "$.citations[" + std::to_string(i) + "]";
      const json& c = (*it)[i];
      if (!c.is_object()) {
        throw Error(errc::invalid_field, path + " must be an object");
      }
      CitationSentence citation;
      citation.citing_paper_id = require_string(c, "citing_paper_id", path);
      citation.text = require_string(c, "text", path);
      if (util::trim(citation.text).empty()) {
        throw Error(errc::empty_sentence, path + ".text");
      }
      citation.year = static_cast<int>(require_int(c, "year", path));
      if (citation.year < 1950 || citation.year > 2100) {
        throw Error(errc::invalid_field,
                    path + ".year implausible: " + std::to_string(citation.year));
      }
      citation.citing_citation_count =
          require_count(c, "citing_citation_count", path);
      paper.citations.push_back(std::move(citation));
    }
  }

  if (auto it = record.find("gold_summary"); it != record.end()) {
    if (!it->is_array()) {
      throw Error(errc::invalid_field, "$.gold_summary must be an array");
    }
    std::vector<std::string> gold;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& g = (*it)[i];
      if (!g.is_string()) {
        throw Error(errc::invalid_field,
                    "$.gold_summary[" + std::to_string(i) + "] must be a string");
      }
      gold.push_back(g.get<std::string>());
    }
    paper.gold_summary = std::move(gold);
  }

  return paper;
}

ReferencePaper load_paper(const std::filesystem::path& file) {
  try {
    return parse_paper(util::read_file(file));
  } catch (const Error& e) {
    throw Error(e.code(), file.string() + ": " + e.what());
  }
}

std::string serialize_paper(const ReferencePaper& paper) {
  json record;
  record["paper_id"] = paper.paper_id;
  record["title"] = paper.title;
  record["citation_count"] = paper.citation_count;
  json sentences = json::array();
  for (const auto& s : paper.sentences) {
    sentences.push_back({{"sid", s.sid}, {"section", s.section}, {"text", s.text}});
  }
  record["sentences"] = std::move(sentences);
  record["abstract_sids"] = paper.abstract_sids;
  json citations = json::array();
  for (const auto& c : paper.citations) {
    citations.push_back({{"citing_paper_id", c.citing_paper_id},
                         {"year", c.year},
                         {"citing_citation_count", c.citing_citation_count},
                         {"text", c.text}});
  }
  record["citations"] = std::move(citations);
  if (paper.gold_summary) {
    record["gold_summary"] = *paper.gold_summary;
  }
  return record.dump(2) + "\n";
}

std::vector<CitationSentence> sample_citations(
    const std::vector<CitationSentence>& citations, std::size_t limit,
    Rng& rng) {
  auto by_year = [](const CitationSentence& a, const CitationSentence& b) {
    if (a.year != b.year) return a.year < b.year;
    return a.citing_paper_id < b.citing_paper_id;
  };

  std::vector<CitationSentence> result;
  if (citations.empty()) return result;
  if (citations.size() <= limit) {
    result = citations;
    std::sort(result.begin(), result.end(), by_year);
    return result;
  }

  // Oldest and latest are always retained; ties break toward the lower
  // citing_paper_id.
  std::size_t oldest = 0;
  std::size_t latest = 0;
  for (std::size_t i = 1; i < citations.size(); ++i) {
    if (by_year(citations[i], citations[oldest])) oldest = i;
    if (by_year(citations[latest], citations[i])) latest = i;
  }

  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < citations.size(); ++i) {
    if (i != oldest && i != latest) rest.push_back(i);
  }
  std::shuffle(rest.begin(), rest.end(), rng);

  result.push_back(citations[oldest]);
  result.push_back(citations[latest]);
  for (std::size_t i = 0; i + 2 < limit && i < rest.size(); ++i) {
    result.push_back(citations[rest[i]]);
  }
  std::sort(result.begin(), result.end(), by_year);
  return result;
}

Splits make_splits(const std::vector<ReferencePaper>& papers,
                   const std::set<std::string>& exclude_ids,
                   std::uint64_t seed) {
  std::vector<std::string> ids;
  for (const auto& paper : papers) {
    if (!exclude_ids.count(paper.paper_id)) ids.push_back(paper.paper_id);
  }
  if (ids.empty()) {
    throw Error(errc::empty_corpus_after_exclusion,
                "no papers left after excluding " +
                    std::to_string(exclude_ids.size()) + " ids");
  }
  std::sort(ids.begin(), ids.end());
  Rng rng = make_rng(seed);
  std::shuffle(ids.begin(), ids.end(), rng);

  std::size_t train_count =
      static_cast<std::size_t>(0.8 * static_cast<double>(ids.size()));
  Splits splits;
  splits.train.assign(ids.begin(), ids.begin() + train_count);
  splits.validation.assign(ids.begin() + train_count, ids.end());
  return splits;
}

std::vector<ReferencePaper> load_corpus_dir(const std::filesystem::path& dir) {
  std::vector<ReferencePaper> papers;
  for (const auto& file : util::list_files(dir, ".json")) {
    papers.push_back(load_paper(file));
  }
  return papers;
}

}  // namespace scisumm::corpus
