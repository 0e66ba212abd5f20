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
//
// Porter suffix stripping as published in 1980. A word is treated as
// [C](VC)^m[V]; the measure m and the *v*, *d and *o conditions follow the
// original definitions exactly, quirks included (agreement keeps the stem
// "agreem"; conflated becomes conflate).

#include <string>
#include <string_view>

#include "scisumm/textproc.hpp"

namespace scisumm::text {
namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string word) : b_(std::move(word)) {}

  std::string run() {
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return b_;
  }

 private:
  std::string b_;
  int j_ = 0;  // end of the stem (inclusive) set by the last suffix match

  int last() const { return static_cast<int>(b_.size()) - 1; }

  // A consonant is a non-vowel letter, except that y after a consonant
  // counts as a vowel (syzygy: c v c v c v).
  bool cons(int i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0..j_].
  int measure() const {
    int n = 0;
    int i = 0;
    for (;;) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    for (;;) {
      for (;;) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      for (;;) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_cons(int i) const {
    if (i < 1) return false;
    return b_[i] == b_[i - 1] && cons(i);
  }

  // consonant-vowel-consonant ending whose final consonant is not w, x or y;
  // gates the rules that restore a trailing e (hop -> hope never fires, but
  // fil -> file does).
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char c = b_[i];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > static_cast<int>(b_.size())) return false;
    if (b_.compare(b_.size() - s.size(), s.size(), s) != 0) return false;
    j_ = static_cast<int>(b_.size()) - len - 1;
    return true;
  }

  void set_to(std::string_view s) {
    b_.resize(static_cast<std::size_t>(j_ + 1));
    b_.append(s);
  }

  void replace_if_measure(std::string_view s) {
    if (measure() > 0) set_to(s);
  }

  void chop(int count) { b_.resize(b_.size() - static_cast<std::size_t>(count)); }

  void step1ab() {
    if (b_.back() == 's') {
      if (ends("sses")) {
        chop(2);
      } else if (ends("ies")) {
        set_to("i");
      } else if (b_.size() >= 2 && b_[b_.size() - 2] != 's') {
        chop(1);
      }
    }
    if (ends("eed")) {
      if (measure() > 0) chop(1);
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      b_.resize(static_cast<std::size_t>(j_ + 1));
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(last())) {
        char c = b_.back();
        if (c != 'l' && c != 's' && c != 'z') chop(1);
      } else {
        j_ = last();
        if (measure() == 1 && cvc(last())) b_ += 'e';
      }
    }
  }

  void step1c() {
    if (!b_.empty() && ends("y") && vowel_in_stem()) b_.back() = 'i';
  }

  struct Rule {
    std::string_view from, to;
  };

  // Applies the longest matching suffix's rule, if any; a match whose
  // measure condition fails still ends the step.
  void apply_rules(const Rule* rules, std::size_t count) {
    const Rule* best = nullptr;
    for (std::size_t i = 0; i < count; ++i) {
      const auto& from = rules[i].from;
      if (from.size() <= b_.size() &&
          b_.compare(b_.size() - from.size(), from.size(), from) == 0) {
        if (!best || from.size() > best->from.size()) best = &rules[i];
      }
    }
    if (best && ends(best->from)) replace_if_measure(best->to);
  }

  void step2() {
    static constexpr Rule rules[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
        {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
        {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
        {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
        {"iviti", "ive"},   {"biliti", "ble"},
    };
    apply_rules(rules, sizeof(rules) / sizeof(rules[0]));
  }

  void step3() {
    static constexpr Rule rules[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    };
    apply_rules(rules, sizeof(rules) / sizeof(rules[0]));
  }

  void step4() {
    static constexpr std::string_view suffixes[] = {
        "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent",
        "ion",   "ism",  "ate",  "iti",  "ous",  "ive",  "ize", "al",
        "er",    "ic",   "ou",
    };
    for (std::string_view s : suffixes) {
      if (s.size() > b_.size() ||
          b_.compare(b_.size() - s.size(), s.size(), s) != 0) {
        continue;
      }
      ends(s);
      if (s == "ion") {
        // Only strip -ion after s or t.
        if (j_ < 0) return;
        char c = b_[static_cast<std::size_t>(j_)];
        if (c != 's' && c != 't') return;
      }
      if (measure() > 1) b_.resize(static_cast<std::size_t>(j_ + 1));
      return;
    }
  }

  void step5() {
    j_ = last();
    if (b_.back() == 'e') {
      int m = measure();
      if (m > 1 || (m == 1 && !cvc(last() - 1))) chop(1);
    }
    j_ = last();
    if (b_.back() == 'l' && double_cons(last()) && measure() > 1) chop(1);
  }
};

}  // namespace

std::string porter_stem(std::string_view token) {
  if (token.size() <= 2) return std::string(token);
  for (char c : token) {
    if (c < 'a' || c > 'z') return std::string(token);
  }
  return Stemmer(std::string(token)).run();
}

}  // namespace scisumm::text
