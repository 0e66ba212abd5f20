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

#include "scisumm/textproc.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "scisumm/rng.hpp"

using namespace scisumm;
using namespace scisumm::text;

TEST_SUITE_BEGIN("textproc");

TEST_CASE("tokenize splits on non-alphanumerics and lowercases") {
  CHECK(tokenize("Tf-idf Cosine.") == TokenSeq{"tf", "idf", "cosine"});
  CHECK(tokenize("") == TokenSeq{});
  CHECK(tokenize("GCNs (2017)!") == TokenSeq{"gcns", "2017"});
  CHECK(tokenize("  \t\n ") == TokenSeq{});
  CHECK(word_count("state-of-the-art systems") == 5);
}

TEST_CASE("stopword filtering") {
  TokenSeq in{"the", "resolution", "of", "pronouns"};
  CHECK(normalize(in, false, true) == TokenSeq{"resolution", "pronouns"});
  CHECK(normalize({"cat"}, false, false) == TokenSeq{"cat"});
  CHECK(is_stopword("the"));
  CHECK(is_stopword("we"));
  CHECK(is_stopword("use"));
  CHECK_FALSE(is_stopword("gender"));
  CHECK(stopword_list().size() > 400);
}

TEST_CASE("porter stemmer matches the classic vocabulary") {
  const std::pair<const char*, const char*> cases[] = {
      {"caresses", "caress"}, {"ponies", "poni"},     {"ties", "ti"},
      {"cats", "cat"},        {"feed", "feed"},       {"agreed", "agre"},
      {"plastered", "plaster"}, {"motoring", "motor"}, {"sing", "sing"},
      {"conflated", "conflat"}, {"troubled", "troubl"}, {"sized", "size"},
      {"hopping", "hop"},     {"falling", "fall"},    {"hissing", "hiss"},
      {"filing", "file"},     {"happy", "happi"},     {"sky", "sky"},
      {"relational", "relat"}, {"vietnamization", "vietnam"},
      {"operator", "oper"},   {"feudalism", "feudal"},
      {"decisiveness", "decis"}, {"triplicate", "triplic"},
      {"formative", "form"},  {"electrical", "electr"}, {"hopeful", "hope"},
      {"goodness", "good"},   {"revival", "reviv"},   {"inference", "infer"},
      {"adjustable", "adjust"}, {"replacement", "replac"},
      {"adoption", "adopt"},  {"activate", "activ"},  {"effective", "effect"},
      {"oscillators", "oscil"}, {"generalization", "gener"},
      {"resolutions", "resolut"},
  };
  for (const auto& [word, want] : cases) {
    CHECK_MESSAGE(porter_stem(word) == want, word);
  }
  // Non-alphabetic tokens pass through untouched.
  CHECK(porter_stem("2017") == "2017");
  CHECK(porter_stem("x2") == "x2");
  CHECK(porter_stem("at") == "at");
}

TEST_CASE("normalize applies stemming after stopword removal") {
  CHECK(normalize({"resolutions"}, true, false) == TokenSeq{"resolut"});
  // "using" is a stopword and must be dropped before any stemming.
  CHECK(normalize({"using", "embeddings"}, true, true) == TokenSeq{"embed"});
}

TEST_CASE("normalize is idempotent for every flag combination") {
  std::vector<TokenSeq> samples = {
      {"the", "decisiveness", "of", "agreed", "cease", "hopping"},
      {"relational", "databases", "are", "ponies"},
      {"callousness", "defensible", "2017", "gcns"},
  };
  // Randomized alphanumeric tokens as well.
  Rng rng = make_rng(11);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> ch(0, 35);
  for (int i = 0; i < 200; ++i) {
    TokenSeq seq;
    for (int t = 0; t < 6; ++t) {
      std::string token;
      int n = len(rng);
      for (int k = 0; k < n; ++k) {
        int c = ch(rng);
        token += c < 26 ? static_cast<char>('a' + c)
                        : static_cast<char>('0' + c - 26);
      }
      seq.push_back(token);
    }
    samples.push_back(seq);
  }
  for (bool stem : {false, true}) {
    for (bool drop : {false, true}) {
      for (const auto& seq : samples) {
        TokenSeq once = normalize(seq, stem, drop);
        CHECK(normalize(once, stem, drop) == once);
      }
    }
  }
}

TEST_CASE("tfidf weights use raw tf and smoothed local idf") {
  // Single-item collection: idf = ln(2/2) + 1 = 1.
  auto vecs = tfidf_vectors({{"a", "a", "b"}});
  CHECK(vecs[0].weight("a") == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(vecs[0].weight("b") == doctest::Approx(1.0).epsilon(1e-12));

  // Identical items get identical vectors.
  auto pair = tfidf_vectors({{"x", "y"}, {"x", "y"}});
  CHECK(pair[0].entries == pair[1].entries);

  // A term in every one of 3 items: idf = ln(4/4) + 1 = 1.
  auto three = tfidf_vectors({{"t", "u"}, {"t", "v"}, {"t", "w"}});
  CHECK(three[0].weight("t") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cosine identities") {
  auto vecs = tfidf_vectors({{"a", "b"}, {"a"}, {"c", "d"}});
  CHECK(cosine(vecs[0], vecs[0]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cosine(vecs[0], vecs[2]) == 0.0);

  // Uniform weights {a:1, b:1} vs {a:1} -> 1/sqrt(2).
  TfIdfVector u, v;
  u.entries = {{"a", 1.0}, {"b", 1.0}};
  v.entries = {{"a", 1.0}};
  CHECK(cosine(u, v) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  TfIdfVector zero;
  CHECK(cosine(zero, v) == 0.0);
}

namespace {

std::vector<TokenSeq> random_collection(Rng& rng, std::size_t items) {
  std::uniform_int_distribution<int> len(0, 10);
  std::uniform_int_distribution<int> word(0, 14);
  static const char* vocab[] = {"a", "b", "c", "d", "e", "f", "g", "h",
                                "i2", "j2", "k2", "l2", "m2", "n2", "o2"};
  std::vector<TokenSeq> collection;
  for (std::size_t i = 0; i < items; ++i) {
    TokenSeq seq;
    int n = len(rng);
    for (int t = 0; t < n; ++t) seq.push_back(vocab[word(rng)]);
    collection.push_back(seq);
  }
  return collection;
}

}  // namespace

TEST_CASE("cosine is symmetric and bounded on random vectors") {
  Rng rng = make_rng(42);
  for (int round = 0; round < 50; ++round) {
    auto collection = random_collection(rng, 6);
    auto vecs = tfidf_vectors(collection);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      for (std::size_t j = 0; j < vecs.size(); ++j) {
        double cij = cosine(vecs[i], vecs[j]);
        double cji = cosine(vecs[j], vecs[i]);
        CHECK(cij == doctest::Approx(cji).epsilon(1e-12));
        CHECK(cij >= 0.0);
        CHECK(cij <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("duplicating tokens within an item preserves vector direction") {
  Rng rng = make_rng(7);
  for (int round = 0; round < 50; ++round) {
    auto collection = random_collection(rng, 5);
    auto before = tfidf_vectors(collection);
    auto doubled = collection;
    for (auto& item : doubled) {
      auto copy = item;
      item.insert(item.end(), copy.begin(), copy.end());
    }
    auto after = tfidf_vectors(doubled);
    for (std::size_t i = 0; i < collection.size(); ++i) {
      if (before[i].entries.empty()) continue;
      CHECK(cosine(before[i], after[i]) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("duplicating the whole collection keeps directions nearly stable") {
  // The smoothed idf is not exactly invariant under collection duplication,
  // so only near-alignment is guaranteed.
  Rng rng = make_rng(8);
  for (int round = 0; round < 20; ++round) {
    auto collection = random_collection(rng, 5);
    auto doubled = collection;
    doubled.insert(doubled.end(), collection.begin(), collection.end());
    auto before = tfidf_vectors(collection);
    auto after = tfidf_vectors(doubled);
    for (std::size_t i = 0; i < collection.size(); ++i) {
      if (before[i].entries.empty()) continue;
      CHECK(cosine(before[i], after[i]) > 0.99);
    }
  }
}

TEST_SUITE_END();
