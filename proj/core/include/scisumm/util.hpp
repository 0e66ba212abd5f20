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

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace scisumm::util {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

// Regular files in `dir` with the given extension, sorted by filename so that
// directory iteration order never leaks into results.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir,
                                              const std::string& extension);

// Fixed-notation formatting used for all text artifacts (CSV, summaries),
// so identical runs emit identical bytes.
std::string fmt_fixed(double value, int precision);

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Callers write results
// into preallocated slots indexed by i, which keeps outputs deterministic
// regardless of scheduling.
void parallel_for(std::size_t n, std::size_t jobs,
                  const std::function<void(std::size_t)>& fn);

std::string trim(const std::string& s);

}  // namespace scisumm::util
