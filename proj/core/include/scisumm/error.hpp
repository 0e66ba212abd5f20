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

#include <stdexcept>
#include <string>

namespace scisumm {

// Error kinds surfaced by the library. Messages name the offending record
// path or value so callers can report actionable diagnostics.
enum class errc {
  missing_field,
  invalid_field,
  duplicate_sid,
  empty_abstract,
  empty_sentence,
  empty_corpus_after_exclusion,
  too_few_sentences,
  empty_sequence,
  shape_mismatch,
  non_finite_loss,
  empty_reference,
  key_mismatch,
  usage_error,
  io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace scisumm
