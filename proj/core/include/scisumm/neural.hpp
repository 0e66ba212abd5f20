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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "scisumm/rng.hpp"

namespace scisumm::neural {

// Dense row-major tensor in double precision. grad is allocated only for
// tensors that participate in optimization.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> values;
  std::vector<double> grad;  // empty unless tracked

  static Tensor zeros(std::vector<std::size_t> shape);

  std::size_t size() const { return values.size(); }
  std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
  std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }

  double& at(std::size_t i, std::size_t j) { return values[i * cols() + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * cols() + j]; }

  void track_grad() { grad.assign(values.size(), 0.0); }
  void zero_grad() { grad.assign(grad.size(), 0.0); }
  bool tracked() const { return !grad.empty(); }
};

// Single-direction LSTM cell parameters with fused gate blocks in the order
// [input, forget, candidate, output].
struct LstmParams {
  Tensor w_input;   // 4H x E
  Tensor w_hidden;  // 4H x H
  Tensor bias;      // 4H

  std::size_t input_dim() const { return w_input.cols(); }
  std::size_t hidden_dim() const { return w_hidden.cols(); }

  static LstmParams create(std::size_t input_dim, std::size_t hidden_dim);
};

// Forward activations captured for backpropagation through time.
struct LstmCache {
  std::size_t steps = 0;
  std::size_t input_dim = 0;
  std::size_t hidden_dim = 0;
  std::vector<double> inputs;     // T x E, the inputs actually consumed
  std::vector<double> gates;      // T x 4H post-activation
  std::vector<double> cells;      // T x H
  std::vector<double> cell_tanh;  // T x H
  std::vector<double> hiddens;    // T x H
};

// Runs the LSTM recurrence over a T x E input sequence and returns the final
// hidden state. Throws empty_sequence when T = 0.
std::vector<double> lstm_encode(const std::vector<double>& inputs,
                                std::size_t steps, const LstmParams& params,
                                LstmCache* cache = nullptr);

// Accumulates parameter gradients for d(loss)/d(h_T) and returns gradients
// w.r.t. the cached inputs (T x E).
std::vector<double> lstm_backward(LstmParams& params, const LstmCache& cache,
                                  const std::vector<double>& d_hidden_last);

struct GcnCache {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<double> propagated;  // A * H, needed for the weight gradient
  std::vector<double> output;      // tanh(A * H * W)
};

// One graph-convolution layer: tanh(a_norm * H * W). Shapes must conform
// (H: n x d, a_norm: n x n, W: d x d) or shape_mismatch is thrown.
Tensor gcn_forward(const Tensor& h, const Tensor& a_norm, const Tensor& w,
                   GcnCache* cache = nullptr);

// Accumulates the weight gradient and returns d(loss)/dH. a_norm is used as
// given (transposed product), so symmetry is not assumed.
std::vector<double> gcn_backward(Tensor& w, const GcnCache& cache,
                                 const Tensor& a_norm,
                                 const std::vector<double>& d_output);

// Inverted dropout. Training mode zeroes entries with probability `rate` and
// scales survivors by 1/(1-rate); evaluation mode is the identity. The mask
// written to `mask_out` (when non-null) holds the applied scale factors and
// multiplying by it replays the layer exactly in the backward pass.
std::vector<double> dropout(const std::vector<double>& x, double rate,
                            bool training, Rng& rng,
                            std::vector<double>* mask_out = nullptr);

// In-place variant used on large activations.
void dropout_inplace(std::vector<double>& x, double rate, bool training,
                     Rng& rng, std::vector<double>* mask_out = nullptr);

// Global-norm gradient clipping over every tracked tensor; returns the
// post-clip global norm.
double global_grad_norm(const std::vector<Tensor*>& params);
double clip_gradients(const std::vector<Tensor*>& params, double max_norm);

struct AdamState {
  std::vector<std::vector<double>> m;
  std::vector<std::vector<double>> v;
  long step = 0;

  static AdamState init(const std::vector<Tensor*>& params);
};

// Standard Adam update with bias correction, reading each tensor's grad.
void adam_step(const std::vector<Tensor*>& params, AdamState& state,
               double lr = 1e-3, double beta1 = 0.9, double beta2 = 0.999,
               double eps = 1e-8);

// Compares the analytic gradients already stored in params against central
// finite differences of `loss_fn`, probing up to samples_per_tensor entries
// of each tensor (all entries when the tensor is small). Returns the max
// relative error; entries where both gradients are below 1e-5 in magnitude
// count as exact to keep finite-difference noise out of the result.
double grad_check(const std::vector<Tensor*>& params,
                  const std::function<double()>& loss_fn, double epsilon,
                  std::size_t samples_per_tensor, std::uint64_t seed);

// Full parameter set of the salience model: trained embeddings, the LSTM
// sentence encoder, two square graph-convolution layers over the appended
// node features, and the scoring projection.
struct ModelParams {
  static constexpr std::size_t kEmbedDim = 100;
  static constexpr std::size_t kHiddenDim = 200;
  static constexpr std::size_t kNodeDim = kHiddenDim + 1;  // authority slot
  static constexpr std::size_t kGcnLayers = 2;

  Tensor embeddings;  // vocab x kEmbedDim
  LstmParams lstm;    // kEmbedDim -> kHiddenDim
  std::array<Tensor, kGcnLayers> gcn_weights;  // kNodeDim x kNodeDim
  Tensor projection;  // kNodeDim

  static ModelParams create(std::size_t vocab_size);

  std::vector<std::pair<std::string, Tensor*>> named_tensors();
  std::vector<Tensor*> tensors();
  void track_all();
  void zero_grads();
};

// Uniform(-0.1, 0.1) for embeddings, LSTM and projection; Glorot-scaled
// uniform for the GCN weights; forget-gate bias 1.
ModelParams init_params(std::size_t vocab_size, Rng& rng);

}  // namespace scisumm::neural
