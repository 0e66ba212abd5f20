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

#include "scisumm/salience.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "scisumm/error.hpp"
#include "scisumm/rouge.hpp"
#include "scisumm/util.hpp"

namespace scisumm::salience {

using neural::ModelParams;
using neural::Tensor;

int Vocab::id(const std::string& token) const {
  auto it = index.find(token);
  return it == index.end() ? 0 : it->second;
}

Vocab Vocab::build(const std::vector<text::TokenSeq>& sequences) {
  std::map<std::string, std::size_t> freq;
  for (const auto& seq : sequences) {
    for (const auto& token : seq) ++freq[token];
  }
  Vocab vocab;
  vocab.tokens.push_back("<unk>");
  for (const auto& [token, count] : freq) vocab.tokens.push_back(token);
  for (std::size_t i = 0; i < vocab.tokens.size(); ++i) {
    vocab.index[vocab.tokens[i]] = static_cast<int>(i);
  }
  return vocab;
}

Vocab build_vocab(const std::vector<spans::InputSet>& inputs) {
  std::vector<text::TokenSeq> sequences;
  for (const auto& input : inputs) {
    for (const auto& member : input.members) {
      sequences.push_back(text::tokenize(member.text));
    }
  }
  return Vocab::build(sequences);
}

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(errc::io_error, "cannot open embeddings file " + path.string());
  }
  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (util::trim(line).empty()) continue;
    std::istringstream parts(line);
    std::string token;
    parts >> token;
    std::vector<double> values;
    values.reserve(ModelParams::kEmbedDim);
    double v;
    while (parts >> v) values.push_back(v);
    if (values.size() != ModelParams::kEmbedDim) {
      throw Error(errc::invalid_field,
                  path.string() + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(ModelParams::kEmbedDim) + " values, got " +
                      std::to_string(values.size()));
    }
    table[token] = std::move(values);
  }
  return table;
}

EncodedDoc encode_doc(const spans::InputSet& input,
                      const spans::SentenceGraph& graph, const Vocab& vocab,
                      TargetDistribution target) {
  EncodedDoc doc;
  doc.rp_id = input.rp_id;
  doc.input = input;
  doc.graph = graph;
  doc.target = std::move(target);
  doc.token_ids.reserve(input.members.size());
  for (const auto& member : input.members) {
    std::vector<int> ids;
    for (const auto& token : text::tokenize(member.text)) {
      ids.push_back(vocab.id(token));
    }
    doc.token_ids.push_back(std::move(ids));
  }
  return doc;
}

ModelParams init_params(const Vocab& vocab, std::uint64_t seed,
                        const EmbeddingTable* pretrained) {
  Rng rng = make_rng(seed);
  ModelParams params = neural::init_params(vocab.size(), rng);
  if (pretrained) {
    for (std::size_t row = 0; row < vocab.tokens.size(); ++row) {
      auto it = pretrained->find(vocab.tokens[row]);
      if (it == pretrained->end()) continue;
      std::copy(it->second.begin(), it->second.end(),
                params.embeddings.values.begin() +
                    static_cast<std::ptrdiff_t>(row * ModelParams::kEmbedDim));
    }
  }
  return params;
}

Tensor encode_sentences(const EncodedDoc& doc, const ModelParams& params,
                        bool use_authority, double dropout_rate, bool training,
                        Rng& rng, ForwardCache* cache) {
  const std::size_t n = doc.input.members.size();
  const std::size_t embed_dim = ModelParams::kEmbedDim;
  const std::size_t hidden_dim = ModelParams::kHiddenDim;
  const std::size_t node_dim = ModelParams::kNodeDim;
  if (doc.graph.n != n) {
    throw Error(errc::shape_mismatch,
                doc.rp_id + ": graph has " + std::to_string(doc.graph.n) +
                    " nodes for " + std::to_string(n) + " members");
  }

  if (cache) {
    cache->lstm.assign(n, {});
    cache->input_masks.assign(n, {});
  }

  // Sentence encoding: embedded tokens (with dropout) -> final LSTM state,
  // then the authority scalar fills the last feature slot.
  Tensor x = Tensor::zeros({n, node_dim});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ids = doc.token_ids[i];
    if (ids.empty()) {
      throw Error(errc::empty_sequence,
                  doc.rp_id + ": member " + std::to_string(i) + " has no tokens");
    }
    std::vector<double> inputs(ids.size() * embed_dim);
    for (std::size_t t = 0; t < ids.size(); ++t) {
      const double* row =
          params.embeddings.values.data() +
          static_cast<std::size_t>(ids[t]) * embed_dim;
      std::copy(row, row + embed_dim, inputs.begin() + t * embed_dim);
    }
    neural::dropout_inplace(inputs, dropout_rate, training, rng,
                            cache ? &cache->input_masks[i] : nullptr);
    std::vector<double> hidden = neural::lstm_encode(
        inputs, ids.size(), params.lstm, cache ? &cache->lstm[i] : nullptr);
    std::copy(hidden.begin(), hidden.end(), x.values.begin() + i * node_dim);
    x.values[i * node_dim + hidden_dim] =
        use_authority ? doc.input.authority[i] : 0.0;
  }

  neural::dropout_inplace(x.values, dropout_rate, training, rng,
                          cache ? &cache->node_mask : nullptr);
  if (cache) cache->node_features = x.values;

  Tensor a_norm;
  a_norm.shape = {n, n};
  a_norm.values = doc.graph.a_norm;

  neural::GcnCache local_gcn0, local_gcn1;
  Tensor z0 = neural::gcn_forward(x, a_norm, params.gcn_weights[0],
                                  cache ? &cache->gcn0 : &local_gcn0);
  neural::dropout_inplace(z0.values, dropout_rate, training, rng,
                          cache ? &cache->gcn_mask0 : nullptr);
  if (cache) cache->z0_dropped = z0.values;

  Tensor z1 = neural::gcn_forward(z0, a_norm, params.gcn_weights[1],
                                  cache ? &cache->gcn1 : &local_gcn1);
  neural::dropout_inplace(z1.values, dropout_rate, training, rng,
                          cache ? &cache->gcn_mask1 : nullptr);
  if (cache) cache->z_final = z1.values;
  return z1;
}

SalienceDistribution estimate_salience(const Tensor& z,
                                       const Tensor& projection) {
  const std::size_t n = z.rows();
  const std::size_t d = z.cols();
  if (projection.size() != d) {
    throw Error(errc::shape_mismatch,
                "projection has " + std::to_string(projection.size()) +
                    " entries for node dim " + std::to_string(d));
  }
  std::vector<double> logits(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    const double* row = z.values.data() + i * d;
    for (std::size_t c = 0; c < d; ++c) sum += row[c] * projection.values[c];
    logits[i] = sum;
  }
  double max_logit = *std::max_element(logits.begin(), logits.end());
  double total = 0.0;
  SalienceDistribution scores(n);
  for (std::size_t i = 0; i < n; ++i) {
    scores[i] = std::exp(logits[i] - max_logit);
    total += scores[i];
  }
  for (double& s : scores) s /= total;
  return scores;
}

TargetDistribution build_targets(const spans::InputSet& input,
                                 const std::vector<std::string>& gold) {
  if (gold.empty()) {
    throw Error(errc::empty_reference, input.rp_id + ": gold summary is empty");
  }
  std::string reference;
  for (const auto& sentence : gold) {
    if (!reference.empty()) reference += ' ';
    reference += sentence;
  }
  const std::vector<std::string> references{reference};
  const rouge::RougeFlags flags{.stem = true, .drop_stopwords = true};

  TargetDistribution raw(input.members.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < input.members.size(); ++i) {
    double r1 = rouge::rouge_n(input.members[i].text, references, 1, flags).recall;
    double r2 = rouge::rouge_n(input.members[i].text, references, 2, flags).recall;
    raw[i] = 0.5 * (r1 + r2);
    total += raw[i];
  }
  if (total <= 0.0) {
    std::fill(raw.begin(), raw.end(), 1.0 / static_cast<double>(raw.size()));
  } else {
    for (double& r : raw) r /= total;
  }
  return raw;
}

double loss(const SalienceDistribution& pred, const TargetDistribution& target) {
  if (pred.size() != target.size()) {
    throw Error(errc::shape_mismatch,
                "loss: prediction and target sizes differ (" +
                    std::to_string(pred.size()) + " vs " +
                    std::to_string(target.size()) + ")");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (target[i] > 0.0) total -= target[i] * std::log(pred[i]);
  }
  return total;
}

double entropy(const TargetDistribution& target) {
  double total = 0.0;
  for (double t : target) {
    if (t > 0.0) total -= t * std::log(t);
  }
  return total;
}

SalienceDistribution predict(const EncodedDoc& doc, const ModelParams& params,
                             bool use_authority) {
  Rng unused = make_rng(0);
  Tensor z = encode_sentences(doc, params, use_authority, /*dropout_rate=*/0.0,
                              /*training=*/false, unused);
  return estimate_salience(z, params.projection);
}

namespace {

void apply_mask(std::vector<double>& grad, const std::vector<double>& mask) {
  for (std::size_t i = 0; i < grad.size(); ++i) grad[i] *= mask[i];
}

}  // namespace

double forward_backward(const EncodedDoc& doc, ModelParams& params,
                        bool use_authority, double dropout_rate, bool training,
                        Rng& rng, double grad_scale) {
  if (doc.target.size() != doc.input.members.size()) {
    throw Error(errc::shape_mismatch,
                doc.rp_id + ": target over " + std::to_string(doc.target.size()) +
                    " members, input has " +
                    std::to_string(doc.input.members.size()));
  }
  const std::size_t n = doc.input.members.size();
  const std::size_t node_dim = ModelParams::kNodeDim;
  const std::size_t hidden_dim = ModelParams::kHiddenDim;
  const std::size_t embed_dim = ModelParams::kEmbedDim;

  ForwardCache cache;
  Tensor z = encode_sentences(doc, params, use_authority, dropout_rate,
                              training, rng, &cache);
  SalienceDistribution pred = estimate_salience(z, params.projection);
  cache.prediction = pred;
  double loss_value = loss(pred, doc.target);

  // Softmax + cross entropy collapse to pred - target on the logits.
  std::vector<double> d_logits(n);
  for (std::size_t i = 0; i < n; ++i) {
    d_logits[i] = (pred[i] - doc.target[i]) * grad_scale;
  }

  std::vector<double> dz(n * node_dim, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* zrow = cache.z_final.data() + i * node_dim;
    double* dzrow = dz.data() + i * node_dim;
    for (std::size_t c = 0; c < node_dim; ++c) {
      params.projection.grad[c] += d_logits[i] * zrow[c];
      dzrow[c] = d_logits[i] * params.projection.values[c];
    }
  }

  Tensor a_norm;
  a_norm.shape = {n, n};
  a_norm.values = doc.graph.a_norm;

  if (training && dropout_rate > 0.0) apply_mask(dz, cache.gcn_mask1);
  std::vector<double> dz0 =
      neural::gcn_backward(params.gcn_weights[1], cache.gcn1, a_norm, dz);
  if (training && dropout_rate > 0.0) apply_mask(dz0, cache.gcn_mask0);
  std::vector<double> dx =
      neural::gcn_backward(params.gcn_weights[0], cache.gcn0, a_norm, dz0);
  if (training && dropout_rate > 0.0) apply_mask(dx, cache.node_mask);

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> dh(dx.begin() + static_cast<std::ptrdiff_t>(i * node_dim),
                           dx.begin() + static_cast<std::ptrdiff_t>(i * node_dim +
                                                                    hidden_dim));
    std::vector<double> d_inputs =
        neural::lstm_backward(params.lstm, cache.lstm[i], dh);
    if (training && dropout_rate > 0.0) {
      apply_mask(d_inputs, cache.input_masks[i]);
    }
    const auto& ids = doc.token_ids[i];
    for (std::size_t t = 0; t < ids.size(); ++t) {
      double* grad_row = params.embeddings.grad.data() +
                         static_cast<std::size_t>(ids[t]) * embed_dim;
      const double* src = d_inputs.data() + t * embed_dim;
      for (std::size_t c = 0; c < embed_dim; ++c) grad_row[c] += src[c];
    }
  }
  return loss_value;
}

TrainResult train(const std::vector<EncodedDoc>& train_docs,
                  const std::vector<EncodedDoc>& val_docs,
                  std::size_t vocab_size, const TrainConfig& config,
                  const ModelParams* initial) {
  if (train_docs.empty() || val_docs.empty()) {
    throw Error(errc::invalid_field,
                "training and validation sets must be non-empty");
  }
  for (const auto& doc : train_docs) {
    if (doc.target.empty()) {
      throw Error(errc::invalid_field,
                  doc.rp_id + " has no salience targets (missing gold summary)");
    }
  }

  Rng rng = make_rng(config.seed);
  ModelParams params;
  if (initial) {
    params = *initial;
  } else {
    params = neural::init_params(vocab_size, rng);
  }
  params.track_all();
  std::vector<Tensor*> tensors = params.tensors();
  neural::AdamState adam = neural::AdamState::init(tensors);

  auto validation_loss = [&](const ModelParams& p) {
    double total = 0.0;
    for (const auto& doc : val_docs) {
      total += loss(predict(doc, p, config.use_authority), doc.target);
    }
    return total / static_cast<double>(val_docs.size());
  };

  TrainResult result;
  double best_val = std::numeric_limits<double>::infinity();
  int epochs_without_improvement = 0;

  std::vector<std::size_t> order(train_docs.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);

    double epoch_loss = 0.0;
    std::size_t cursor = 0;
    while (cursor < order.size()) {
      std::size_t group_end =
          std::min(order.size(), cursor + static_cast<std::size_t>(
                                              std::max(1, config.batch_size)));
      const double group_scale =
          1.0 / static_cast<double>(group_end - cursor);
      params.zero_grads();
      for (std::size_t k = cursor; k < group_end; ++k) {
        const EncodedDoc& doc = train_docs[order[k]];
        double doc_loss =
            forward_backward(doc, params, config.use_authority, config.dropout,
                             /*training=*/true, rng, group_scale);
        if (!std::isfinite(doc_loss)) {
          throw Error(errc::non_finite_loss,
                      doc.rp_id + " at epoch " + std::to_string(epoch) +
                          ": loss is not finite");
        }
        epoch_loss += doc_loss;
      }
      double post_clip = neural::clip_gradients(tensors, config.clip_norm);
      result.max_clipped_norm = std::max(result.max_clipped_norm, post_clip);
      neural::adam_step(tensors, adam, config.learning_rate, config.beta1,
                        config.beta2, config.adam_eps);
      cursor = group_end;
    }

    EpochLog entry;
    entry.epoch = epoch;
    entry.train_loss = epoch_loss / static_cast<double>(train_docs.size());
    entry.val_loss = validation_loss(params);
    if (!std::isfinite(entry.val_loss)) {
      throw Error(errc::non_finite_loss,
                  "validation loss is not finite at epoch " +
                      std::to_string(epoch));
    }
    result.log.push_back(entry);

    if (entry.val_loss < best_val) {
      best_val = entry.val_loss;
      result.params = params;
      result.best_epoch = epoch;
      epochs_without_improvement = 0;
    } else {
      ++epochs_without_improvement;
      if (epochs_without_improvement >= config.patience) break;
    }
  }

  result.best_val_loss = best_val;
  return result;
}

std::string training_log_csv(const std::vector<EpochLog>& log) {
  std::string out = "epoch,train_loss,val_loss\n";
  char buf[96];
  for (const auto& entry : log) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", entry.epoch,
                  entry.train_loss, entry.val_loss);
    out += buf;
  }
  return out;
}

}  // namespace scisumm::salience
