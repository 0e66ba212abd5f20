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

#include "scisumm/spans.hpp"

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "scisumm/error.hpp"
#include "scisumm/rng.hpp"

using namespace scisumm;
using namespace scisumm::spans;
using corpus::CitationSentence;
using corpus::ReferencePaper;
using corpus::Sentence;

TEST_SUITE_BEGIN("spans");

namespace {

ReferencePaper make_paper(const std::vector<std::string>& sentences,
                          const std::set<int>& abstract_sids,
                          std::uint64_t citation_count = 10) {
  ReferencePaper rp;
  rp.paper_id = "RP";
  rp.title = "t";
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    Sentence s;
    s.sid = static_cast<int>(i);
    s.text = sentences[i];
    s.section = abstract_sids.count(static_cast<int>(i)) ? "abstract" : "body";
    rp.sentences.push_back(s);
  }
  rp.abstract_sids = abstract_sids;
  rp.citation_count = citation_count;
  return rp;
}

CitationSentence cite(const std::string& text, std::uint64_t count = 1,
                      int year = 2010) {
  CitationSentence c;
  c.citing_paper_id = "C";
  c.text = text;
  c.year = year;
  c.citing_citation_count = count;
  return c;
}

// Brute-force similarity ranking used as an oracle for span extraction.
std::pair<int, int> brute_force_top2(const ReferencePaper& rp,
                                     const CitationSentence& citation) {
  std::vector<text::TokenSeq> collection;
  for (const auto& s : rp.sentences) {
    collection.push_back(text::normalize(text::tokenize(s.text), false, true));
  }
  for (const auto& c : rp.citations) {
    collection.push_back(text::normalize(text::tokenize(c.text), false, true));
  }
  auto idf = text::IdfModel::fit(collection);
  auto cit_vec = idf.vectorize(text::normalize(text::tokenize(citation.text),
                                               false, true));
  std::vector<std::pair<double, int>> scored;
  for (std::size_t i = 0; i < rp.sentences.size(); ++i) {
    auto vec = idf.vectorize(collection[i]);
    scored.emplace_back(text::cosine(cit_vec, vec), static_cast<int>(i));
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  return {scored[0].second, scored[1].second};
}

}  // namespace

TEST_CASE("extract_spans_for_citation finds the lexically closest sentences") {
  ReferencePaper rp = make_paper(
      {"the corpus provides noun gender data for training",
       "our pronoun resolution model improves precision",
       "the experimental setup follows earlier work"},
      {0});
  rp.citations.push_back(cite("we use their noun gender data"));

  auto [top1, top2] = extract_spans_for_citation(rp, rp.citations[0]);
  CHECK(top1 == 0);
  CHECK(top1 != top2);
  auto oracle = brute_force_top2(rp, rp.citations[0]);
  CHECK(top1 == oracle.first);
  CHECK(top2 == oracle.second);
}

TEST_CASE("extraction tie-break picks lower sids when nothing matches") {
  ReferencePaper rp = make_paper(
      {"alpha bravo charlie delta", "echo foxtrot golf hotel",
       "india juliet kilo lima"},
      {0});
  rp.citations.push_back(cite("zulu yankee xray"));
  auto [top1, top2] = extract_spans_for_citation(rp, rp.citations[0]);
  CHECK(top1 == 0);
  CHECK(top2 == 1);
}

TEST_CASE("extraction on a two-sentence paper returns both") {
  ReferencePaper rp = make_paper({"first sentence body", "second sentence body"},
                                 {0});
  rp.citations.push_back(cite("anything at all"));
  auto [a, b] = extract_spans_for_citation(rp, rp.citations[0]);
  std::set<int> got{a, b};
  CHECK(got == std::set<int>{0, 1});

  ReferencePaper tiny = make_paper({"only one sentence"}, {0});
  CHECK_THROWS_AS(extract_spans_for_citation(tiny, cite("x")), Error);
}

TEST_CASE("extraction is stable under irrelevant alternatives") {
  Rng rng = make_rng(21);
  static const char* filler[] = {"parser", "tagger", "corpus", "kernel",
                                 "lattice", "treebank", "decoder", "chart"};
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> len(3, 8);
  for (int round = 0; round < 30; ++round) {
    // Sentence 1 carries the whole citation vocabulary; sentence 2 shares
    // one word; everything else shares nothing.
    std::vector<std::string> sentences;
    for (int i = 0; i < 5; ++i) {
      std::string s;
      int n = len(rng);
      for (int k = 0; k < n; ++k) s += std::string(k ? " " : "") + filler[pick(rng)];
      sentences.push_back(s);
    }
    sentences[1] = "graph node edge propagation scheme";
    sentences[2] += " graph";
    ReferencePaper rp = make_paper(sentences, {0});
    rp.citations.push_back(cite("graph node edge"));
    auto before = extract_spans_for_citation(rp, rp.citations[0]);
    CHECK(before.first == 1);
    CHECK(before.second == 2);

    // A sentence sharing no vocabulary scores 0 and cannot displace the
    // positive-similarity winners.
    ReferencePaper extended = rp;
    Sentence unrelated;
    unrelated.sid = static_cast<int>(extended.sentences.size());
    unrelated.text = "zygote quasar bison";
    unrelated.section = "body";
    extended.sentences.push_back(unrelated);
    auto after = extract_spans_for_citation(extended, rp.citations[0]);
    auto oracle = brute_force_top2(extended, rp.citations[0]);
    CHECK(after.first == oracle.first);
    CHECK(after.second == oracle.second);
    CHECK(after.first == before.first);
    CHECK(after.second == before.second);
  }
}

TEST_CASE("build_input_set unions abstract and spans with both flags") {
  // Sentences engineered so each citation's top-2 pair is known: citation k
  // repeats the exact wording of two target sentences.
  ReferencePaper rp = make_paper(
      {
          "summary of contributions and roadmap overview",   // 0 abstract
          "we introduce a lattice kernel for parsing",       // 1
          "the lattice kernel outperforms tree kernels",     // 2
          "training uses a margin objective with pruning",   // 3
          "datasets cover newswire and biomedical domains",  // 4
      },
      {0, 1});
  rp.citations.push_back(cite("lattice kernel parsing introduced kernels outperforms"));
  rp.citations.push_back(cite("margin objective pruning newswire biomedical domains"));

  InputSet input = build_input_set(rp);
  std::set<int> sids;
  for (const auto& m : input.members) sids.insert(m.sid);
  CHECK(sids.count(0) == 1);
  CHECK(sids.count(1) == 1);
  for (std::size_t i = 1; i < input.members.size(); ++i) {
    CHECK(input.members[i - 1].sid < input.members[i].sid);
  }
  for (const auto& m : input.members) {
    CHECK((m.is_abstract || m.is_cited_span));
    if (m.sid == 0) CHECK(m.is_abstract);
  }
  // The abstract is always fully included.
  for (int sid : rp.abstract_sids) CHECK(sids.count(sid) == 1);
}

TEST_CASE("build_input_set with no citations is the abstract only") {
  ReferencePaper rp = make_paper(
      {"abstract sentence one here", "abstract sentence two here",
       "body sentence goes here"},
      {0, 1});
  InputSet input = build_input_set(rp);
  CHECK(input.members.size() == 2);
  for (const auto& m : input.members) {
    CHECK(m.is_abstract);
    CHECK_FALSE(m.is_cited_span);
  }
}

TEST_CASE("input set size is bounded by abstract plus two per citation") {
  Rng rng = make_rng(31);
  static const char* vocab[] = {"model", "graph", "loss", "span", "score",
                                "vector", "token", "layer"};
  std::uniform_int_distribution<int> pick(0, 7);
  for (int round = 0; round < 10; ++round) {
    std::vector<std::string> sentences;
    for (int i = 0; i < 30; ++i) {
      std::string s;
      for (int k = 0; k < 6; ++k) s += std::string(k ? " " : "") + vocab[pick(rng)];
      sentences.push_back(s);
    }
    ReferencePaper rp = make_paper(sentences, {0, 1, 2});
    for (int c = 0; c < 15; ++c) {
      std::string t;
      for (int k = 0; k < 5; ++k) t += std::string(k ? " " : "") + vocab[pick(rng)];
      rp.citations.push_back(cite(t));
    }
    InputSet input = build_input_set(rp);
    CHECK(input.members.size() <= rp.abstract_sids.size() + 30);
    CHECK(input.members.size() >= rp.abstract_sids.size());
  }
}

TEST_CASE("authority raw scores follow the origin rules") {
  ReferencePaper rp = make_paper(
      {
          "overview of the toolkit and its contributions",       // 0 abstract
          "the alignment module uses beam search with pruning",  // 1
          "the scoring module uses a maximum entropy model",     // 2
      },
      {0}, /*citation_count=*/21);
  // Both citations hit sentences 1 and 2 (they repeat their wording), with
  // citing citation counts 5 and 10.
  rp.citations.push_back(cite("alignment module beam search pruning scoring", 5));
  rp.citations.push_back(cite("maximum entropy model scoring alignment", 10));

  InputSet input = build_input_set(rp);
  input.authority = authority_scores(input, rp);
  REQUIRE(input.members.size() == 3);

  // Recompute raw scores independently.
  auto pairs = extract_all_spans(rp);
  double raw1 = 0.0, raw2 = 0.0;
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    double w = static_cast<double>(rp.citations[c].citing_citation_count);
    if (pairs[c].first == 1 || pairs[c].second == 1) raw1 += w;
    if (pairs[c].first == 2 || pairs[c].second == 2) raw2 += w;
  }
  CHECK(raw1 + raw2 == 30.0);  // every citation contributes both its spans

  std::vector<double> logs = {std::log1p(21.0), std::log1p(raw1), std::log1p(raw2)};
  double lo = std::min({logs[0], logs[1], logs[2]});
  double hi = std::max({logs[0], logs[1], logs[2]});
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(input.authority[i] ==
          doctest::Approx((logs[i] - lo) / (hi - lo)).epsilon(1e-9));
    CHECK(input.authority[i] >= 0.0);
    CHECK(input.authority[i] <= 1.0);
  }
}

TEST_CASE("authority of a single-member input set collapses to one half") {
  ReferencePaper rp = make_paper(
      {"the single abstract sentence stands alone", "another body sentence"},
      {0});
  InputSet input = build_input_set(rp);
  REQUIRE(input.members.size() == 1);
  auto scores = authority_scores(input, rp);
  CHECK(scores[0] == doctest::Approx(0.5));
}

TEST_CASE("dual-flagged members take the max of both raw scores") {
  // Citation hits the abstract sentence itself, so sid 0 carries both flags.
  ReferencePaper rp = make_paper(
      {"neural summarization with citation networks",  // abstract + span
       "unrelated filler text goes here",
       "more unrelated filler text follows"},
      {0}, /*citation_count=*/100);
  rp.citations.push_back(cite("neural summarization citation networks", 3));
  InputSet input = build_input_set(rp);
  const auto& member0 = input.members[0];
  REQUIRE(member0.sid == 0);
  CHECK(member0.is_abstract);
  CHECK(member0.is_cited_span);

  // max(abstract raw 100, span raw 3) = 100 dominates the scaling.
  auto scores = authority_scores(input, rp);
  double best = *std::max_element(scores.begin(), scores.end());
  CHECK(scores[0] == doctest::Approx(best));
}

TEST_CASE("build_graph basic shapes") {
  ReferencePaper one = make_paper(
      {"a single abstract sentence", "plus one body sentence"}, {0});
  InputSet single = build_input_set(one);
  REQUIRE(single.members.size() == 1);
  SentenceGraph g1 = build_graph(single);
  CHECK(g1.n == 1);
  CHECK(g1.weights[0] == 0.0);
  CHECK(g1.a_norm[0] == doctest::Approx(1.0));

  // Two identical sentences: off-diagonal weight 1, a_norm all 0.5.
  InputSet twins;
  twins.rp_id = "RP";
  twins.members = {{0, "graph convolution layers", false, true},
                   {1, "graph convolution layers", false, true}};
  twins.authority = {0.5, 0.5};
  SentenceGraph g2 = build_graph(twins);
  CHECK(g2.weight(0, 1) == doctest::Approx(1.0));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(g2.norm_at(i, j) == doctest::Approx(0.5).epsilon(1e-12));
    }
  }

  // Lexically disjoint sentences: a_norm is the identity.
  InputSet disjoint;
  disjoint.rp_id = "RP";
  disjoint.members = {{0, "alpha bravo charlie", false, true},
                      {1, "delta echo foxtrot", false, true}};
  disjoint.authority = {0.5, 0.5};
  SentenceGraph g3 = build_graph(disjoint);
  CHECK(g3.weight(0, 1) == 0.0);
  CHECK(g3.norm_at(0, 0) == doctest::Approx(1.0));
  CHECK(g3.norm_at(0, 1) == doctest::Approx(0.0));
  CHECK(g3.norm_at(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("normalized adjacency satisfies the sqrt-degree eigenvector identity") {
  Rng rng = make_rng(55);
  static const char* vocab[] = {"span",  "graph", "model", "input",
                                "score", "layer", "node",  "text"};
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> len(3, 9);
  std::uniform_int_distribution<int> size(1, 12);
  for (int round = 0; round < 40; ++round) {
    InputSet input;
    input.rp_id = "RP";
    int n = size(rng);
    for (int i = 0; i < n; ++i) {
      std::string s;
      int w = len(rng);
      for (int k = 0; k < w; ++k) s += std::string(k ? " " : "") + vocab[pick(rng)];
      input.members.push_back({i, s, i == 0, i != 0});
    }
    input.authority.assign(n, 0.5);
    SentenceGraph g = build_graph(input);

    for (std::size_t i = 0; i < g.n; ++i) {
      CHECK(g.weight(i, i) == 0.0);
      for (std::size_t j = 0; j < g.n; ++j) {
        CHECK(g.norm_at(i, j) == doctest::Approx(g.norm_at(j, i)).epsilon(1e-12));
      }
    }
    // a_norm * sqrt(degree) == sqrt(degree)
    for (std::size_t i = 0; i < g.n; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < g.n; ++j) {
        sum += g.norm_at(i, j) * std::sqrt(g.degree[j]);
      }
      CHECK(std::abs(sum - std::sqrt(g.degree[i])) < 1e-9);
    }
  }
}

TEST_SUITE_END();
