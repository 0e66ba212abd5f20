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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scisumm::cli {

enum class Command {
  ingest,     // validate + citation-sample a corpus, write cache and splits
  train,      // fit the salience model, write checkpoint and loss log
  summarize,  // generate per-paper summaries from a checkpoint
  evaluate,   // score summaries against gold summaries
  spans,      // debug emission of input sets and sentence graphs
  grad_check, // finite-difference diagnostics on a toy model
};

struct RunConfig {
  std::string corpus_dir;
  std::string out_dir;
  std::string checkpoint_path;
  std::string summaries_dir;
  std::string embeddings_path;
  std::string exclude_path;       // ids to drop from splits, one per line
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool use_authority = true;
  // Whether --authority was given explicitly; summarize otherwise follows
  // the setting stored in the checkpoint.
  bool authority_explicit = false;
  std::string mode = "hybrid2";
  std::optional<int> word_limit;  // default depends on mode
  std::size_t citation_limit = 20;

  // Training hyperparameters.
  double learning_rate = 1e-3;
  int batch_size = 5;
  double clip_norm = 2.0;
  double dropout = 0.5;
  int patience = 10;
  int max_epochs = 100;

  int effective_word_limit() const {
    if (word_limit) return *word_limit;
    return mode == "cited" ? 250 : 150;
  }
};

struct ParsedArgs {
  Command command;
  RunConfig config;
  bool help_requested = false;
};

// Parses a full argv (excluding the program name). Throws Error with
// errc::usage_error on unknown flags, bad ranges or missing paths; --help
// sets help_requested and fills no config.
ParsedArgs parse_args(const std::vector<std::string>& argv);

// Executes one command, writing artifacts and a run manifest under
// config.out_dir. Returns the process exit status.
int run_pipeline(Command command, const RunConfig& config);

// Entry point used by the binary: parse, run, report errors on stderr.
int main(const std::vector<std::string>& argv);

}  // namespace scisumm::cli
