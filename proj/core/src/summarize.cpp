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

#include "scisumm/summarize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "scisumm/error.hpp"
#include "scisumm/util.hpp"

namespace scisumm::summarize {

namespace {

constexpr double kRedundancyThreshold = 0.5;
constexpr int kMinWords = 9;  // "more than 8 words"

std::map<int, std::size_t> index_by_sid(const spans::InputSet& input) {
  std::map<int, std::size_t> by_sid;
  for (std::size_t i = 0; i < input.members.size(); ++i) {
    by_sid[input.members[i].sid] = i;
  }
  return by_sid;
}

// Members ranked by salience descending, ties toward the lower sid.
std::vector<std::pair<int, double>> ranked_members(
    const spans::InputSet& input, const salience::SalienceDistribution& scores,
    const std::function<bool(const spans::InputMember&)>& keep) {
  std::vector<std::pair<int, double>> ranked;
  for (std::size_t i = 0; i < input.members.size(); ++i) {
    if (keep(input.members[i])) {
      ranked.emplace_back(input.members[i].sid, scores[i]);
    }
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return ranked;
}

Summary finalize(Mode mode, const spans::InputSet& input,
                 std::vector<int> sids, int word_limit) {
  std::sort(sids.begin(), sids.end());
  auto by_sid = index_by_sid(input);
  Summary summary;
  summary.rp_id = input.rp_id;
  summary.mode = mode;
  summary.word_limit = word_limit;
  for (int sid : sids) {
    const auto& member = input.members[by_sid.at(sid)];
    summary.sids.push_back(sid);
    summary.texts.push_back(member.text);
    summary.total_words +=
        static_cast<int>(text::word_count(member.text));
  }
  return summary;
}

}  // namespace

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::hybrid1: return "hybrid1";
    case Mode::hybrid2: return "hybrid2";
    case Mode::cited_only: return "cited";
  }
  return "unknown";
}

Mode mode_from_name(const std::string& name) {
  if (name == "hybrid1") return Mode::hybrid1;
  if (name == "hybrid2") return Mode::hybrid2;
  if (name == "cited" || name == "cited_only") return Mode::cited_only;
  throw Error(errc::usage_error, "unknown summarizer mode: " + name);
}

std::vector<int> greedy_select(
    const std::vector<std::pair<int, double>>& ranked,
    const std::vector<int>& seed_sids, const spans::InputSet& input,
    int word_limit) {
  auto by_sid = index_by_sid(input);
  auto vectors = spans::member_vectors(input);

  std::vector<int> selected = seed_sids;
  std::vector<std::size_t> selected_idx;
  int total_words = 0;
  for (int sid : seed_sids) {
    std::size_t idx = by_sid.at(sid);
    selected_idx.push_back(idx);
    total_words += static_cast<int>(text::word_count(input.members[idx].text));
  }

  for (const auto& [sid, score] : ranked) {
    auto it = by_sid.find(sid);
    if (it == by_sid.end()) continue;
    std::size_t idx = it->second;
    if (std::find(selected_idx.begin(), selected_idx.end(), idx) !=
        selected_idx.end()) {
      continue;
    }
    int words = static_cast<int>(text::word_count(input.members[idx].text));
    if (words < kMinWords) continue;
    // Over-budget candidates are skipped; shorter ones may still fit.
    if (total_words + words > word_limit) continue;
    bool redundant = false;
    for (std::size_t other : selected_idx) {
      if (text::cosine(vectors[idx], vectors[other]) > kRedundancyThreshold) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    selected.push_back(sid);
    selected_idx.push_back(idx);
    total_words += words;
  }
  return selected;
}

Summary hybrid1(const spans::InputSet& input,
                const salience::SalienceDistribution& scores, int word_limit) {
  auto ranked = ranked_members(input, scores,
                               [](const spans::InputMember&) { return true; });
  auto sids = greedy_select(ranked, {}, input, word_limit);
  return finalize(Mode::hybrid1, input, std::move(sids), word_limit);
}

Summary hybrid2(const spans::InputSet& input,
                const salience::SalienceDistribution& scores, int word_limit) {
  std::vector<int> seed;
  for (const auto& member : input.members) {
    if (member.is_abstract) seed.push_back(member.sid);
  }
  auto ranked = ranked_members(input, scores, [](const spans::InputMember& m) {
    return m.is_cited_span && !m.is_abstract;
  });
  auto sids = greedy_select(ranked, seed, input, word_limit);
  return finalize(Mode::hybrid2, input, std::move(sids), word_limit);
}

Summary cited_only(const spans::InputSet& input,
                   const salience::SalienceDistribution& scores,
                   int word_limit) {
  auto ranked = ranked_members(input, scores, [](const spans::InputMember& m) {
    return m.is_cited_span;
  });
  auto sids = greedy_select(ranked, {}, input, word_limit);
  return finalize(Mode::cited_only, input, std::move(sids), word_limit);
}

Summary make_summary(Mode mode, const spans::InputSet& input,
                     const salience::SalienceDistribution& scores,
                     int word_limit) {
  switch (mode) {
    case Mode::hybrid1: return hybrid1(input, scores, word_limit);
    case Mode::hybrid2: return hybrid2(input, scores, word_limit);
    case Mode::cited_only: return cited_only(input, scores, word_limit);
  }
  throw Error(errc::usage_error, "unknown summarizer mode");
}

std::string summary_to_text(const Summary& summary) {
  std::ostringstream out;
  out << "# rp_id=" << summary.rp_id << " mode=" << mode_name(summary.mode)
      << " words=" << summary.total_words << "\n";
  for (const auto& text : summary.texts) out << text << "\n";
  return out.str();
}

std::vector<std::string> summary_sentences_from_text(const std::string& text) {
  std::vector<std::string> sentences;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    sentences.push_back(line);
  }
  return sentences;
}

}  // namespace scisumm::summarize
