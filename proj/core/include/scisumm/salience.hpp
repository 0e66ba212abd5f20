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
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "scisumm/neural.hpp"
#include "scisumm/spans.hpp"

namespace scisumm::salience {

// Softmax salience estimates over the input-set members; entries are
// positive and sum to 1.
using SalienceDistribution = std::vector<double>;

// Supervision targets: non-negative, sum to 1.
using TargetDistribution = std::vector<double>;

// Token-to-row mapping for the embedding table. Row 0 is the shared
// out-of-vocabulary token.
struct Vocab {
  std::vector<std::string> tokens;  // tokens[0] == "<unk>"
  std::unordered_map<std::string, int> index;

  int id(const std::string& token) const;
  std::size_t size() const { return tokens.size(); }

  // Unique tokens of the given sequences (min frequency 1), sorted, behind
  // the reserved <unk> row.
  static Vocab build(const std::vector<text::TokenSeq>& sequences);
};

// GloVe-style embedding file: one token per line followed by kEmbedDim
// whitespace-separated decimals.
using EmbeddingTable = std::unordered_map<std::string, std::vector<double>>;
EmbeddingTable load_embeddings(const std::filesystem::path& path);

// Everything the model needs for one paper, precomputed once.
struct EncodedDoc {
  std::string rp_id;
  spans::InputSet input;
  spans::SentenceGraph graph;
  std::vector<std::vector<int>> token_ids;  // per member, via Vocab
  TargetDistribution target;                // empty when the paper has no gold summary
};

EncodedDoc encode_doc(const spans::InputSet& input,
                      const spans::SentenceGraph& graph, const Vocab& vocab,
                      TargetDistribution target = {});

// Vocab over the raw tokens of the training input sets.
Vocab build_vocab(const std::vector<spans::InputSet>& inputs);

// Random initialization, then rows found in `pretrained` are overwritten.
neural::ModelParams init_params(const Vocab& vocab, std::uint64_t seed,
                                const EmbeddingTable* pretrained = nullptr);

// Forward activations kept for the backward pass.
struct ForwardCache {
  std::vector<neural::LstmCache> lstm;            // per member
  std::vector<std::vector<double>> input_masks;   // embedding dropout, per member
  std::vector<double> node_features;              // N x kNodeDim, post dropout
  std::vector<double> node_mask;
  neural::GcnCache gcn0, gcn1;
  std::vector<double> gcn_mask0, gcn_mask1;
  std::vector<double> z0_dropped;                 // input to the second layer
  std::vector<double> z_final;                    // N x kNodeDim, post dropout
  SalienceDistribution prediction;
};

// Embeds and LSTM-encodes each member, appends the authority scalar (or 0
// when disabled), and applies the two graph-convolution layers. Dropout on
// the embeddings, the stacked node features and each layer output is active
// only in training mode. Returns the N x kNodeDim output node features.
neural::Tensor encode_sentences(const EncodedDoc& doc,
                                const neural::ModelParams& params,
                                bool use_authority, double dropout_rate,
                                bool training, Rng& rng,
                                ForwardCache* cache = nullptr);

// Softmax over projection . z_i, computed with max subtraction.
SalienceDistribution estimate_salience(const neural::Tensor& z,
                                       const neural::Tensor& projection);

// Mean of ROUGE-1 and ROUGE-2 recall of each member against the gold
// summary (stemming on, stopwords removed), normalized by the total; an
// all-zero profile falls back to uniform.
TargetDistribution build_targets(const spans::InputSet& input,
                                 const std::vector<std::string>& gold);

// Cross entropy in nats; zero-target terms contribute nothing.
double loss(const SalienceDistribution& pred, const TargetDistribution& target);

double entropy(const TargetDistribution& target);

// Dropout-off forward pass; pure in (doc, params).
SalienceDistribution predict(const EncodedDoc& doc,
                             const neural::ModelParams& params,
                             bool use_authority);

// Runs one forward pass, adds the document's parameter gradients to params
// (scaled by grad_scale) and returns the loss.
double forward_backward(const EncodedDoc& doc, neural::ModelParams& params,
                        bool use_authority, double dropout_rate, bool training,
                        Rng& rng, double grad_scale);

struct TrainConfig {
  std::uint64_t seed = 0;
  int max_epochs = 100;
  int patience = 10;
  int batch_size = 5;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  double clip_norm = 2.0;
  double dropout = 0.5;
  bool use_authority = true;
};

struct EpochLog {
  int epoch = 0;          // 1-based
  double train_loss = 0;  // mean per-document loss as optimized
  double val_loss = 0;    // dropout off
};

struct TrainResult {
  neural::ModelParams params;  // best validation epoch
  std::vector<EpochLog> log;
  int best_epoch = 0;
  double best_val_loss = 0.0;
  double max_clipped_norm = 0.0;  // largest post-clip gradient norm seen
};

// Shuffled epochs with gradient accumulation over batch_size documents,
// global-norm clipping and Adam; early stopping on the validation loss.
// Throws non_finite_loss with the offending document id.
TrainResult train(const std::vector<EncodedDoc>& train_docs,
                  const std::vector<EncodedDoc>& val_docs,
                  std::size_t vocab_size, const TrainConfig& config,
                  const neural::ModelParams* initial = nullptr);

std::string training_log_csv(const std::vector<EpochLog>& log);

}  // namespace scisumm::salience
