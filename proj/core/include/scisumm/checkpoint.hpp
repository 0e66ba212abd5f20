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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "scisumm/neural.hpp"

namespace scisumm::neural {

// Versioned binary container: a configuration string (JSON), a string table
// (the vocabulary, in embedding-row order) and named tensors with shapes and
// row-major double values. All integers and doubles are little-endian; the
// byte layout is documented in the README and stable across versions.
struct Checkpoint {
  std::string config_json;
  std::vector<std::string> strings;
  std::vector<std::pair<std::string, Tensor>> tensors;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace scisumm::neural
