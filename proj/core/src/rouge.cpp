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

#include "scisumm/rouge.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "scisumm/error.hpp"
#include "scisumm/util.hpp"

namespace scisumm::rouge {

namespace {

constexpr char kSep = '\x1f';

text::TokenSeq prepare(const std::string& raw, RougeFlags flags) {
  return text::normalize(text::tokenize(raw), flags.stem, flags.drop_stopwords);
}

// recall = clipped overlap / reference units, precision over candidate units.
RougeScore score_counts(const std::map<std::string, std::size_t>& cand,
                        const std::map<std::string, std::size_t>& ref) {
  std::size_t cand_total = 0;
  for (const auto& [unit, count] : cand) cand_total += count;
  std::size_t ref_total = 0;
  for (const auto& [unit, count] : ref) ref_total += count;

  std::size_t overlap = 0;
  const auto& small = cand.size() <= ref.size() ? cand : ref;
  const auto& large = cand.size() <= ref.size() ? ref : cand;
  for (const auto& [unit, count] : small) {
    auto it = large.find(unit);
    if (it != large.end()) overlap += std::min(count, it->second);
  }

  RougeScore score;
  score.recall = ref_total == 0 ? 0.0
                                : static_cast<double>(overlap) /
                                      static_cast<double>(ref_total);
  score.precision = cand_total == 0 ? 0.0
                                    : static_cast<double>(overlap) /
                                          static_cast<double>(cand_total);
  double pr = score.precision + score.recall;
  score.f1 = pr > 0.0 ? 2.0 * score.precision * score.recall / pr : 0.0;
  return score;
}

RougeScore average_over_references(
    const std::map<std::string, std::size_t>& cand_units,
    const std::vector<std::string>& references, RougeFlags flags,
    const std::function<std::map<std::string, std::size_t>(
        const text::TokenSeq&)>& unitizer) {
  if (references.empty()) {
    throw Error(errc::empty_reference, "reference list is empty");
  }
  for (const auto& ref : references) {
    if (text::tokenize(ref).empty()) {
      throw Error(errc::empty_reference, "reference text has no tokens");
    }
  }
  RougeScore total;
  for (const auto& ref : references) {
    RougeScore s = score_counts(cand_units, unitizer(prepare(ref, flags)));
    total.recall += s.recall;
    total.precision += s.precision;
    total.f1 += s.f1;
  }
  double n = static_cast<double>(references.size());
  return {total.recall / n, total.precision / n, total.f1 / n};
}

}  // namespace

std::map<std::string, std::size_t> ngrams(const text::TokenSeq& tokens, int n) {
  std::map<std::string, std::size_t> counts;
  if (n < 1 || tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key += kSep;
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

std::map<std::string, std::size_t> skip_units(const text::TokenSeq& tokens,
                                              int max_gap,
                                              bool include_unigrams) {
  std::map<std::string, std::size_t> counts;
  if (include_unigrams) {
    for (const auto& token : tokens) ++counts[token];
  }
  if (max_gap >= 0) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::size_t max_j =
          std::min(tokens.size(), i + 2 + static_cast<std::size_t>(max_gap));
      for (std::size_t j = i + 1; j < max_j; ++j) {
        ++counts[tokens[i] + kSep + tokens[j]];
      }
    }
  }
  return counts;
}

RougeScore rouge_n(const std::string& candidate,
                   const std::vector<std::string>& references, int n,
                   RougeFlags flags) {
  auto cand_units = ngrams(prepare(candidate, flags), n);
  return average_over_references(
      cand_units, references, flags,
      [n](const text::TokenSeq& tokens) { return ngrams(tokens, n); });
}

RougeScore rouge_su(const std::string& candidate,
                    const std::vector<std::string>& references, int max_gap,
                    bool include_unigrams, RougeFlags flags) {
  auto cand_units = skip_units(prepare(candidate, flags), max_gap,
                               include_unigrams);
  return average_over_references(
      cand_units, references, flags,
      [max_gap, include_unigrams](const text::TokenSeq& tokens) {
        return skip_units(tokens, max_gap, include_unigrams);
      });
}

BenchmarkResult evaluate_benchmark(
    const std::map<std::string, std::string>& system,
    const std::map<std::string, std::vector<std::string>>& gold) {
  {
    std::string missing;
    for (const auto& [id, _] : system) {
      if (!gold.count(id)) missing += " system-only:" + id;
    }
    for (const auto& [id, _] : gold) {
      if (!system.count(id)) missing += " gold-only:" + id;
    }
    if (!missing.empty()) {
      throw Error(errc::key_mismatch, "paper id sets differ:" + missing);
    }
  }
  if (system.empty()) {
    throw Error(errc::key_mismatch, "no papers to evaluate");
  }

  const RougeFlags flags{.stem = true, .drop_stopwords = true};
  BenchmarkResult result;
  for (const auto& [id, summary] : system) {
    const auto& refs = gold.at(id);
    BenchmarkRow row;
    row.paper_id = id;
    RougeScore r2 = rouge_n(summary, refs, 2, flags);
    row.r2_recall = r2.recall;
    row.r2_f1 = r2.f1;
    row.r3_f1 = rouge_n(summary, refs, 3, flags).f1;
    row.su4_f1 = rouge_su(summary, refs, 4, true, flags).f1;
    result.rows.push_back(row);
  }

  result.mean.paper_id = "mean";
  for (const auto& row : result.rows) {
    result.mean.r2_recall += row.r2_recall;
    result.mean.r2_f1 += row.r2_f1;
    result.mean.r3_f1 += row.r3_f1;
    result.mean.su4_f1 += row.su4_f1;
  }
  double n = static_cast<double>(result.rows.size());
  result.mean.r2_recall /= n;
  result.mean.r2_f1 /= n;
  result.mean.r3_f1 /= n;
  result.mean.su4_f1 /= n;
  return result;
}

std::string benchmark_csv(const BenchmarkResult& result) {
  std::ostringstream out;
  out << "paper_id,R2_recall,R2_f1,R3_f1,SU4_f1\n";
  auto emit = [&out](const BenchmarkRow& row) {
    out << row.paper_id << ',' << util::fmt_fixed(row.r2_recall, 6) << ','
        << util::fmt_fixed(row.r2_f1, 6) << ',' << util::fmt_fixed(row.r3_f1, 6)
        << ',' << util::fmt_fixed(row.su4_f1, 6) << '\n';
  };
  for (const auto& row : result.rows) emit(row);
  emit(result.mean);
  return out.str();
}

}  // namespace scisumm::rouge
