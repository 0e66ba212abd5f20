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

#include <algorithm>
#include <cmath>
#include <map>

#include "scisumm/error.hpp"

namespace scisumm::spans {

namespace {

text::TokenSeq similarity_tokens(const std::string& raw) {
  return text::normalize(text::tokenize(raw), /*stem=*/false,
                         /*drop_stopwords=*/true);
}

// Idf scope for span extraction: the paper's sentences plus all of its
// retained citation sentences, so every citation scores candidates in one
// consistent space.
text::IdfModel extraction_idf(const corpus::ReferencePaper& rp) {
  std::vector<text::TokenSeq> collection;
  collection.reserve(rp.sentences.size() + rp.citations.size());
  for (const auto& s : rp.sentences) collection.push_back(similarity_tokens(s.text));
  for (const auto& c : rp.citations) collection.push_back(similarity_tokens(c.text));
  return text::IdfModel::fit(collection);
}

std::pair<int, int> top_two(const corpus::CitationSentence& citation,
                            const text::IdfModel& idf,
                            const std::vector<text::TfIdfVector>& sentence_vecs) {
  text::TfIdfVector cit_vec = idf.vectorize(similarity_tokens(citation.text));
  int best = -1, second = -1;
  double best_score = -1.0, second_score = -1.0;
  for (std::size_t i = 0; i < sentence_vecs.size(); ++i) {
    double score = text::cosine(cit_vec, sentence_vecs[i]);
    if (score > best_score) {
      second = best;
      second_score = best_score;
      best = static_cast<int>(i);
      best_score = score;
    } else if (score > second_score) {
      second = static_cast<int>(i);
      second_score = score;
    }
  }
  return {best, second};
}

}  // namespace

std::pair<int, int> extract_spans_for_citation(
    const corpus::ReferencePaper& rp, const corpus::CitationSentence& citation) {
  if (rp.sentences.size() < 2) {
    throw Error(errc::too_few_sentences,
                rp.paper_id + " has " + std::to_string(rp.sentences.size()) +
                    " sentence(s); span extraction needs at least 2");
  }
  text::IdfModel idf = extraction_idf(rp);
  std::vector<text::TfIdfVector> vecs;
  vecs.reserve(rp.sentences.size());
  for (const auto& s : rp.sentences) {
    vecs.push_back(idf.vectorize(similarity_tokens(s.text)));
  }
  return top_two(citation, idf, vecs);
}

std::vector<std::pair<int, int>> extract_all_spans(
    const corpus::ReferencePaper& rp) {
  if (rp.citations.empty()) return {};
  if (rp.sentences.size() < 2) {
    throw Error(errc::too_few_sentences,
                rp.paper_id + " has " + std::to_string(rp.sentences.size()) +
                    " sentence(s); span extraction needs at least 2");
  }
  text::IdfModel idf = extraction_idf(rp);
  std::vector<text::TfIdfVector> vecs;
  vecs.reserve(rp.sentences.size());
  for (const auto& s : rp.sentences) {
    vecs.push_back(idf.vectorize(similarity_tokens(s.text)));
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(rp.citations.size());
  for (const auto& citation : rp.citations) {
    pairs.push_back(top_two(citation, idf, vecs));
  }
  return pairs;
}

InputSet build_input_set(const corpus::ReferencePaper& rp) {
  std::map<int, InputMember> members;
  for (int sid : rp.abstract_sids) {
    InputMember m;
    m.sid = sid;
    m.text = rp.sentences[sid].text;
    m.is_abstract = true;
    members[sid] = m;
  }
  for (const auto& [first, second] : extract_all_spans(rp)) {
    for (int sid : {first, second}) {
      auto [it, inserted] = members.try_emplace(sid);
      if (inserted) {
        it->second.sid = sid;
        it->second.text = rp.sentences[sid].text;
      }
      it->second.is_cited_span = true;
    }
  }

  InputSet input;
  input.rp_id = rp.paper_id;
  for (auto& [sid, member] : members) input.members.push_back(std::move(member));
  input.authority.assign(input.members.size(), 0.0);
  return input;
}

std::vector<double> authority_scores(const InputSet& input,
                                     const corpus::ReferencePaper& rp) {
  // Raw score per sid: sum of citing papers' citation counts over the
  // citations whose span pair contains the sid.
  std::map<int, double> span_raw;
  if (!rp.citations.empty()) {
    auto pairs = extract_all_spans(rp);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      double weight = static_cast<double>(rp.citations[i].citing_citation_count);
      span_raw[pairs[i].first] += weight;
      span_raw[pairs[i].second] += weight;
    }
  }

  std::vector<double> scores(input.members.size(), 0.0);
  for (std::size_t i = 0; i < input.members.size(); ++i) {
    const auto& member = input.members[i];
    double raw = 0.0;
    if (member.is_cited_span) {
      auto it = span_raw.find(member.sid);
      if (it != span_raw.end()) raw = it->second;
    }
    if (member.is_abstract) {
      raw = std::max(raw, static_cast<double>(rp.citation_count));
    }
    scores[i] = std::log1p(raw);
  }

  double lo = *std::min_element(scores.begin(), scores.end());
  double hi = *std::max_element(scores.begin(), scores.end());
  if (hi - lo < 1e-12) {
    std::fill(scores.begin(), scores.end(), 0.5);
  } else {
    for (double& s : scores) s = (s - lo) / (hi - lo);
  }
  return scores;
}

std::vector<text::TokenSeq> member_tokens(const InputSet& input) {
  std::vector<text::TokenSeq> tokens;
  tokens.reserve(input.members.size());
  for (const auto& m : input.members) tokens.push_back(similarity_tokens(m.text));
  return tokens;
}

std::vector<text::TfIdfVector> member_vectors(const InputSet& input) {
  return text::tfidf_vectors(member_tokens(input));
}

SentenceGraph build_graph(const InputSet& input) {
  const std::size_t n = input.members.size();
  SentenceGraph graph;
  graph.n = n;
  graph.weights.assign(n * n, 0.0);
  graph.a_norm.assign(n * n, 0.0);
  graph.degree.assign(n, 0.0);

  auto vecs = member_vectors(input);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double w = text::cosine(vecs[i], vecs[j]);
      graph.weights[i * n + j] = w;
      graph.weights[j * n + i] = w;
    }
  }

  // Self-loops are added before symmetric normalization.
  for (std::size_t i = 0; i < n; ++i) {
    double degree = 1.0;
    for (std::size_t j = 0; j < n; ++j) degree += graph.weights[i * n + j];
    graph.degree[i] = degree;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double a = graph.weights[i * n + j] + (i == j ? 1.0 : 0.0);
      graph.a_norm[i * n + j] =
          a / std::sqrt(graph.degree[i] * graph.degree[j]);
    }
  }
  return graph;
}

}  // namespace scisumm::spans
