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

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "scisumm/error.hpp"
#include "scisumm/rng.hpp"

using namespace scisumm;
using namespace scisumm::rouge;
using scisumm::text::TokenSeq;

TEST_SUITE_BEGIN("rouge");

namespace {

const RougeFlags kPlain{};  // no stemming, no stopword removal

// Brute-force unit enumeration, independent of the scorer's counting path:
// every window / index pair is listed and then tallied.
std::vector<std::string> enumerate_ngrams(const TokenSeq& tokens, int n) {
  std::vector<std::string> units;
  for (int i = 0; i + n <= static_cast<int>(tokens.size()); ++i) {
    std::string unit;
    for (int k = 0; k < n; ++k) unit += tokens[i + k] + "|";
    units.push_back(unit);
  }
  return units;
}

std::vector<std::string> enumerate_skip_units(const TokenSeq& tokens,
                                              int max_gap, bool unigrams) {
  std::vector<std::string> units;
  if (unigrams) {
    for (const auto& t : tokens) units.push_back(t + "|");
  }
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(tokens.size()); ++j) {
      if (j - i - 1 <= max_gap) units.push_back(tokens[i] + "|" + tokens[j] + "|");
    }
  }
  return units;
}

double oracle_recall(const std::vector<std::string>& cand,
                     const std::vector<std::string>& ref) {
  std::map<std::string, int> cand_counts, ref_counts;
  for (const auto& u : cand) ++cand_counts[u];
  for (const auto& u : ref) ++ref_counts[u];
  int overlap = 0;
  for (const auto& [unit, count] : ref_counts) {
    auto it = cand_counts.find(unit);
    if (it != cand_counts.end()) overlap += std::min(count, it->second);
  }
  return ref.empty() ? 0.0 : static_cast<double>(overlap) / ref.size();
}

}  // namespace

TEST_CASE("ngram multisets") {
  auto bigrams = ngrams({"a", "b", "a", "b"}, 2);
  CHECK(bigrams.size() == 2);
  CHECK(bigrams.at(std::string("a") + '\x1f' + "b") == 2);
  CHECK(bigrams.at(std::string("b") + '\x1f' + "a") == 1);

  CHECK(ngrams({"a", "b"}, 3).empty());
  auto unigrams = ngrams({"a", "b", "c"}, 1);
  CHECK(unigrams.size() == 3);
  for (const auto& [unit, count] : unigrams) CHECK(count == 1);
}

TEST_CASE("rouge_n bigram worked example") {
  RougeScore s = rouge_n("the cat sat on the mat", {"the cat sat"}, 2, kPlain);
  CHECK(s.recall == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.precision == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(s.f1 == doctest::Approx(2.0 * 0.4 / 1.4).epsilon(1e-12));
}

TEST_CASE("rouge_n identity and disjoint cases") {
  for (int n = 1; n <= 4; ++n) {
    RougeScore s = rouge_n("alpha beta gamma delta epsilon",
                           {"alpha beta gamma delta epsilon"}, n, kPlain);
    CHECK(s.recall == doctest::Approx(1.0));
    CHECK(s.precision == doctest::Approx(1.0));
    CHECK(s.f1 == doctest::Approx(1.0));
  }
  RougeScore s = rouge_n("alpha beta", {"gamma delta"}, 1, kPlain);
  CHECK(s.recall == 0.0);
  CHECK(s.precision == 0.0);
  CHECK(s.f1 == 0.0);
}

TEST_CASE("rouge_n rejects empty references") {
  CHECK_THROWS_AS(rouge_n("a b", {}, 1, kPlain), Error);
  CHECK_THROWS_AS(rouge_n("a b", {"..."}, 1, kPlain), Error);
}

TEST_CASE("skip-bigram unit enumeration with gap 4") {
  // "a b c d": all 6 ordered pairs are within the gap.
  auto units = skip_units({"a", "b", "c", "d"}, 4, false);
  std::size_t total = 0;
  for (const auto& [unit, count] : units) total += count;
  CHECK(total == 6);

  // Candidate "a b d c" shares 5 of the 6 reference pairs.
  RougeScore s = rouge_su("a b d c", {"a b c d"}, 4, false, kPlain);
  CHECK(s.recall == doctest::Approx(5.0 / 6.0).epsilon(1e-12));

  RougeScore id = rouge_su("a b c d", {"a b c d"}, 4, true, kPlain);
  CHECK(id.recall == doctest::Approx(1.0));
  CHECK(id.precision == doctest::Approx(1.0));
  CHECK(id.f1 == doctest::Approx(1.0));
}

TEST_CASE("skip-bigram gap limit actually limits") {
  // "a b c d e f" with gap 1: pairs (i, j) with j - i <= 2.
  auto units = skip_units({"a", "b", "c", "d", "e", "f"}, 1, false);
  std::size_t total = 0;
  for (const auto& [unit, count] : units) total += count;
  CHECK(total == 5 + 4);  // adjacent + one-gap pairs

  auto oracle = enumerate_skip_units({"a", "b", "c", "d", "e", "f"}, 1, false);
  CHECK(oracle.size() == total);
}

TEST_CASE("rouge_1 equals unigram-only skip mode") {
  Rng rng = make_rng(5);
  static const char* vocab[] = {"w1", "w2", "w3", "w4", "w5"};
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int round = 0; round < 50; ++round) {
    auto make_text = [&] {
      std::string text;
      int n = len(rng);
      for (int i = 0; i < n; ++i) {
        if (!text.empty()) text += ' ';
        text += vocab[pick(rng)];
      }
      return text;
    };
    std::string cand = make_text(), ref = make_text();
    RougeScore a = rouge_n(cand, {ref}, 1, kPlain);
    RougeScore b = rouge_su(cand, {ref}, -1, true, kPlain);
    CHECK(a.recall == doctest::Approx(b.recall).epsilon(1e-12));
    CHECK(a.precision == doctest::Approx(b.precision).epsilon(1e-12));
    CHECK(a.f1 == doctest::Approx(b.f1).epsilon(1e-12));
  }
}

TEST_CASE("clipped counting caps repeated units") {
  // Candidate repeats the reference bigram "x y" three times; the reference
  // has it once, so the clipped overlap is 1 of 2 reference bigrams.
  RougeScore s = rouge_n("x y x y x y", {"x y z"}, 2, kPlain);
  CHECK(s.recall == doctest::Approx(0.5).epsilon(1e-12));
  // Candidate has 5 bigrams, 3 of them "x y": precision = 1/5.
  CHECK(s.precision == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("recall is monotone under candidate extension") {
  Rng rng = make_rng(6);
  static const char* vocab[] = {"p", "q", "r", "s"};
  std::uniform_int_distribution<int> len(2, 10);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int round = 0; round < 40; ++round) {
    std::string cand, ref;
    int cn = len(rng), rn = len(rng);
    for (int i = 0; i < cn; ++i) cand += std::string(i ? " " : "") + vocab[pick(rng)];
    for (int i = 0; i < rn; ++i) ref += std::string(i ? " " : "") + vocab[pick(rng)];
    for (int n = 1; n <= 3; ++n) {
      double before = rouge_n(cand, {ref}, n, kPlain).recall;
      double after = rouge_n(cand + " " + ref, {ref}, n, kPlain).recall;
      CHECK(after >= before - 1e-12);
    }
    double su_before = rouge_su(cand, {ref}, 4, true, kPlain).recall;
    double su_after = rouge_su(cand + " " + ref, {ref}, 4, true, kPlain).recall;
    CHECK(su_after >= su_before - 1e-12);
  }
}

TEST_CASE("reference order does not change averaged scores") {
  std::vector<std::string> refs = {"a b c", "c b a", "a a b"};
  std::vector<std::string> reversed(refs.rbegin(), refs.rend());
  for (int n = 1; n <= 2; ++n) {
    RougeScore fwd = rouge_n("a b c a", refs, n, kPlain);
    RougeScore rev = rouge_n("a b c a", reversed, n, kPlain);
    CHECK(fwd.recall == doctest::Approx(rev.recall).epsilon(1e-12));
    CHECK(fwd.f1 == doctest::Approx(rev.f1).epsilon(1e-12));
  }
}

TEST_CASE("scorer agrees with brute-force enumeration on random texts") {
  Rng rng = make_rng(77);
  static const char* vocab[] = {"m", "n", "o", "p", "q", "r"};
  std::uniform_int_distribution<int> len(0, 14);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int round = 0; round < 60; ++round) {
    TokenSeq cand_tokens, ref_tokens;
    int cn = len(rng), rn = len(rng) + 1;
    for (int i = 0; i < cn; ++i) cand_tokens.push_back(vocab[pick(rng)]);
    for (int i = 0; i < rn; ++i) ref_tokens.push_back(vocab[pick(rng)]);
    std::string cand, ref;
    for (const auto& t : cand_tokens) cand += t + std::string(" ");
    for (const auto& t : ref_tokens) ref += t + std::string(" ");

    for (int n = 1; n <= 4; ++n) {
      double got = rouge_n(cand, {ref}, n, kPlain).recall;
      double want = oracle_recall(enumerate_ngrams(cand_tokens, n),
                                  enumerate_ngrams(ref_tokens, n));
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
    double got = rouge_su(cand, {ref}, 4, true, kPlain).recall;
    double want = oracle_recall(enumerate_skip_units(cand_tokens, 4, true),
                                enumerate_skip_units(ref_tokens, 4, true));
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("evaluate_benchmark identity, single paper and hand-computed mean") {
  std::map<std::string, std::string> system;
  std::map<std::string, std::vector<std::string>> gold;
  system["p1"] = "alpha beta gamma delta";
  gold["p1"] = {"alpha beta gamma delta"};
  BenchmarkResult one = evaluate_benchmark(system, gold);
  CHECK(one.rows.size() == 1);
  CHECK(one.mean.r2_recall == doctest::Approx(1.0));
  CHECK(one.mean.r2_f1 == doctest::Approx(1.0));
  CHECK(one.mean.r3_f1 == doctest::Approx(1.0));
  CHECK(one.mean.su4_f1 == doctest::Approx(1.0));

  // Second paper with zero overlap: mean is the average of 1 and 0.
  system["p2"] = "epsilon zeta";
  gold["p2"] = {"theta iota kappa"};
  BenchmarkResult two = evaluate_benchmark(system, gold);
  CHECK(two.rows.size() == 2);
  CHECK(two.mean.r2_recall == doctest::Approx(0.5));
  CHECK(two.mean.su4_f1 == doctest::Approx(0.5));

  system["p3"] = "anything";
  CHECK_THROWS_AS(evaluate_benchmark(system, gold), Error);
  try {
    evaluate_benchmark(system, gold);
  } catch (const Error& e) {
    CHECK(e.code() == errc::key_mismatch);
  }
}

TEST_CASE("benchmark csv layout") {
  std::map<std::string, std::string> system{{"p1", "a b c"}};
  std::map<std::string, std::vector<std::string>> gold{{"p1", {"a b c"}}};
  std::string csv = benchmark_csv(evaluate_benchmark(system, gold));
  CHECK(csv.find("paper_id,R2_recall,R2_f1,R3_f1,SU4_f1\n") == 0);
  CHECK(csv.find("\nmean,") != std::string::npos);
}

TEST_SUITE_END();
