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

#include "scisumm/neural.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scisumm/error.hpp"

namespace scisumm::neural {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// out[n x m] = a[n x k] * b[k x m]
void matmul(const double* a, const double* b, double* out, std::size_t n,
            std::size_t k, std::size_t m) {
  std::fill(out, out + n * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      double av = a[i * k + p];
      if (av == 0.0) continue;
      const double* brow = b + p * m;
      double* orow = out + i * m;
      for (std::size_t j = 0; j < m; ++j) orow[j] += av * brow[j];
    }
  }
}

// out[k x m] += a^T[k x n] * b[n x m] with a stored as n x k
void matmul_at_b_accum(const double* a, const double* b, double* out,
                       std::size_t n, std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      double av = a[i * k + p];
      if (av == 0.0) continue;
      const double* brow = b + i * m;
      double* orow = out + p * m;
      for (std::size_t j = 0; j < m; ++j) orow[j] += av * brow[j];
    }
  }
}

// out[n x k] = a[n x m] * b^T[m x k] with b stored as k x m
void matmul_a_bt(const double* a, const double* b, double* out, std::size_t n,
                 std::size_t m, std::size_t k) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double sum = 0.0;
      const double* arow = a + i * m;
      const double* brow = b + j * m;
      for (std::size_t p = 0; p < m; ++p) sum += arow[p] * brow[p];
      out[i * k + j] = sum;
    }
  }
}

}  // namespace

Tensor Tensor::zeros(std::vector<std::size_t> shape) {
  Tensor t;
  std::size_t total = 1;
  for (std::size_t d : shape) total *= d;
  t.shape = std::move(shape);
  t.values.assign(total, 0.0);
  return t;
}

LstmParams LstmParams::create(std::size_t input_dim, std::size_t hidden_dim) {
  LstmParams p;
  p.w_input = Tensor::zeros({4 * hidden_dim, input_dim});
  p.w_hidden = Tensor::zeros({4 * hidden_dim, hidden_dim});
  p.bias = Tensor::zeros({4 * hidden_dim});
  return p;
}

std::vector<double> lstm_encode(const std::vector<double>& inputs,
                                std::size_t steps, const LstmParams& params,
                                LstmCache* cache) {
  if (steps == 0) {
    throw Error(errc::empty_sequence, "lstm_encode requires at least one step");
  }
  const std::size_t e = params.input_dim();
  const std::size_t h = params.hidden_dim();
  if (inputs.size() != steps * e) {
    throw Error(errc::shape_mismatch,
                "lstm_encode inputs: expected " + std::to_string(steps * e) +
                    " values, got " + std::to_string(inputs.size()));
  }

  if (cache) {
    cache->steps = steps;
    cache->input_dim = e;
    cache->hidden_dim = h;
    cache->inputs = inputs;
    cache->gates.assign(steps * 4 * h, 0.0);
    cache->cells.assign(steps * h, 0.0);
    cache->cell_tanh.assign(steps * h, 0.0);
    cache->hiddens.assign(steps * h, 0.0);
  }

  std::vector<double> hidden(h, 0.0);
  std::vector<double> cell(h, 0.0);
  std::vector<double> pre(4 * h, 0.0);

  for (std::size_t t = 0; t < steps; ++t) {
    const double* x = inputs.data() + t * e;
    // pre = w_input * x + w_hidden * h + bias, gate order [i, f, g, o]
    for (std::size_t r = 0; r < 4 * h; ++r) {
      double sum = params.bias.values[r];
      const double* wi = params.w_input.values.data() + r * e;
      for (std::size_t c = 0; c < e; ++c) sum += wi[c] * x[c];
      const double* wh = params.w_hidden.values.data() + r * h;
      for (std::size_t c = 0; c < h; ++c) sum += wh[c] * hidden[c];
      pre[r] = sum;
    }
    for (std::size_t c = 0; c < h; ++c) {
      double gi = sigmoid(pre[c]);
      double gf = sigmoid(pre[h + c]);
      double gg = std::tanh(pre[2 * h + c]);
      double go = sigmoid(pre[3 * h + c]);
      double c_new = gf * cell[c] + gi * gg;
      double c_tanh = std::tanh(c_new);
      cell[c] = c_new;
      hidden[c] = go * c_tanh;
      if (cache) {
        double* gates = cache->gates.data() + t * 4 * h;
        gates[c] = gi;
        gates[h + c] = gf;
        gates[2 * h + c] = gg;
        gates[3 * h + c] = go;
        cache->cells[t * h + c] = c_new;
        cache->cell_tanh[t * h + c] = c_tanh;
        cache->hiddens[t * h + c] = hidden[c];
      }
    }
  }
  return hidden;
}

std::vector<double> lstm_backward(LstmParams& params, const LstmCache& cache,
                                  const std::vector<double>& d_hidden_last) {
  if (!params.w_input.tracked() || !params.w_hidden.tracked() ||
      !params.bias.tracked()) {
    throw Error(errc::shape_mismatch, "lstm_backward requires tracked params");
  }
  const std::size_t e = cache.input_dim;
  const std::size_t h = cache.hidden_dim;
  const std::size_t steps = cache.steps;

  std::vector<double> d_inputs(steps * e, 0.0);
  std::vector<double> dh(d_hidden_last);
  std::vector<double> dc(h, 0.0);
  std::vector<double> dz(4 * h, 0.0);

  for (std::size_t t = steps; t-- > 0;) {
    const double* gates = cache.gates.data() + t * 4 * h;
    const double* c_tanh = cache.cell_tanh.data() + t * h;
    const double* c_prev = t == 0 ? nullptr : cache.cells.data() + (t - 1) * h;
    for (std::size_t c = 0; c < h; ++c) {
      double gi = gates[c];
      double gf = gates[h + c];
      double gg = gates[2 * h + c];
      double go = gates[3 * h + c];
      double ct = c_tanh[c];
      double do_ = dh[c] * ct;
      double dct = dc[c] + dh[c] * go * (1.0 - ct * ct);
      double di = dct * gg;
      double dg = dct * gi;
      double df = dct * (t == 0 ? 0.0 : c_prev[c]);
      dc[c] = dct * gf;  // becomes dc for t-1
      dz[c] = di * gi * (1.0 - gi);
      dz[h + c] = df * gf * (1.0 - gf);
      dz[2 * h + c] = dg * (1.0 - gg * gg);
      dz[3 * h + c] = do_ * go * (1.0 - go);
    }

    const double* x = cache.inputs.data() + t * e;
    const double* h_prev = t == 0 ? nullptr : cache.hiddens.data() + (t - 1) * h;
    double* dx = d_inputs.data() + t * e;
    std::fill(dh.begin(), dh.end(), 0.0);
    for (std::size_t r = 0; r < 4 * h; ++r) {
      double d = dz[r];
      if (d != 0.0) {
        double* gwi = params.w_input.grad.data() + r * e;
        for (std::size_t c = 0; c < e; ++c) gwi[c] += d * x[c];
        if (h_prev) {
          double* gwh = params.w_hidden.grad.data() + r * h;
          for (std::size_t c = 0; c < h; ++c) gwh[c] += d * h_prev[c];
        }
        params.bias.grad[r] += d;
      }
      const double* wi = params.w_input.values.data() + r * e;
      for (std::size_t c = 0; c < e; ++c) dx[c] += d * wi[c];
      const double* wh = params.w_hidden.values.data() + r * h;
      for (std::size_t c = 0; c < h; ++c) dh[c] += d * wh[c];
    }
  }
  return d_inputs;
}

Tensor gcn_forward(const Tensor& h, const Tensor& a_norm, const Tensor& w,
                   GcnCache* cache) {
  const std::size_t n = h.rows();
  const std::size_t d = h.cols();
  if (a_norm.rows() != n || a_norm.cols() != n || w.rows() != d ||
      w.cols() != d) {
    throw Error(errc::shape_mismatch,
                "gcn_forward: H is " + std::to_string(n) + "x" +
                    std::to_string(d) + ", a_norm is " +
                    std::to_string(a_norm.rows()) + "x" +
                    std::to_string(a_norm.cols()) + ", W is " +
                    std::to_string(w.rows()) + "x" + std::to_string(w.cols()));
  }

  std::vector<double> propagated(n * d, 0.0);
  matmul(a_norm.values.data(), h.values.data(), propagated.data(), n, n, d);

  Tensor z = Tensor::zeros({n, d});
  matmul(propagated.data(), w.values.data(), z.values.data(), n, d, d);
  for (double& v : z.values) v = std::tanh(v);

  if (cache) {
    cache->n = n;
    cache->dim = d;
    cache->propagated = std::move(propagated);
    cache->output = z.values;
  }
  return z;
}

std::vector<double> gcn_backward(Tensor& w, const GcnCache& cache,
                                 const Tensor& a_norm,
                                 const std::vector<double>& d_output) {
  const std::size_t n = cache.n;
  const std::size_t d = cache.dim;

  // dS for S = (A*H)*W, Z = tanh(S)
  std::vector<double> ds(n * d);
  for (std::size_t i = 0; i < n * d; ++i) {
    double z = cache.output[i];
    ds[i] = d_output[i] * (1.0 - z * z);
  }

  // dW += (A*H)^T * dS
  matmul_at_b_accum(cache.propagated.data(), ds.data(), w.grad.data(), n, d, d);

  // dH = A^T * (dS * W^T)
  std::vector<double> ds_wt(n * d, 0.0);
  matmul_a_bt(ds.data(), w.values.data(), ds_wt.data(), n, d, d);
  std::vector<double> dh(n * d, 0.0);
  // A^T * X computed as accumulation over rows of A.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double a = a_norm.values[i * n + j];
      if (a == 0.0) continue;
      const double* src = ds_wt.data() + i * d;
      double* dst = dh.data() + j * d;
      for (std::size_t c = 0; c < d; ++c) dst[c] += a * src[c];
    }
  }
  return dh;
}

std::vector<double> dropout(const std::vector<double>& x, double rate,
                            bool training, Rng& rng,
                            std::vector<double>* mask_out) {
  std::vector<double> out(x);
  dropout_inplace(out, rate, training, rng, mask_out);
  return out;
}

void dropout_inplace(std::vector<double>& x, double rate, bool training,
                     Rng& rng, std::vector<double>* mask_out) {
  if (!training || rate <= 0.0) {
    if (mask_out) mask_out->assign(x.size(), 1.0);
    return;
  }
  const double keep_scale = 1.0 / (1.0 - rate);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  if (mask_out) mask_out->assign(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (uniform(rng) < rate) {
      x[i] = 0.0;
    } else {
      x[i] *= keep_scale;
      if (mask_out) (*mask_out)[i] = keep_scale;
    }
  }
}

double global_grad_norm(const std::vector<Tensor*>& params) {
  double sum = 0.0;
  for (const Tensor* t : params) {
    for (double g : t->grad) sum += g * g;
  }
  return std::sqrt(sum);
}

double clip_gradients(const std::vector<Tensor*>& params, double max_norm) {
  double norm = global_grad_norm(params);
  if (norm > max_norm && norm > 0.0) {
    double scale = max_norm / norm;
    for (Tensor* t : params) {
      for (double& g : t->grad) g *= scale;
    }
    return max_norm;
  }
  return norm;
}

AdamState AdamState::init(const std::vector<Tensor*>& params) {
  AdamState state;
  for (const Tensor* t : params) {
    state.m.emplace_back(t->size(), 0.0);
    state.v.emplace_back(t->size(), 0.0);
  }
  return state;
}

void adam_step(const std::vector<Tensor*>& params, AdamState& state, double lr,
               double beta1, double beta2, double eps) {
  ++state.step;
  const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(state.step));
  for (std::size_t p = 0; p < params.size(); ++p) {
    Tensor& t = *params[p];
    auto& m = state.m[p];
    auto& v = state.v[p];
    for (std::size_t i = 0; i < t.size(); ++i) {
      double g = t.grad[i];
      m[i] = beta1 * m[i] + (1.0 - beta1) * g;
      v[i] = beta2 * v[i] + (1.0 - beta2) * g * g;
      double m_hat = m[i] / bc1;
      double v_hat = v[i] / bc2;
      t.values[i] -= lr * m_hat / (std::sqrt(v_hat) + eps);
    }
  }
}

double grad_check(const std::vector<Tensor*>& params,
                  const std::function<double()>& loss_fn, double epsilon,
                  std::size_t samples_per_tensor, std::uint64_t seed) {
  // Gradients below this magnitude on both sides are treated as matching;
  // central differences cannot resolve them above the f64 noise floor.
  constexpr double kZeroCutoff = 1e-5;

  Rng rng = make_rng(seed);
  double max_rel_error = 0.0;
  for (Tensor* t : params) {
    std::vector<std::size_t> indices(t->size());
    std::iota(indices.begin(), indices.end(), 0);
    if (indices.size() > samples_per_tensor) {
      std::shuffle(indices.begin(), indices.end(), rng);
      indices.resize(samples_per_tensor);
    }
    for (std::size_t i : indices) {
      const double saved = t->values[i];
      t->values[i] = saved + epsilon;
      double up = loss_fn();
      t->values[i] = saved - epsilon;
      double down = loss_fn();
      t->values[i] = saved;
      double numeric = (up - down) / (2.0 * epsilon);
      double analytic = t->grad[i];
      if (std::abs(numeric) < kZeroCutoff && std::abs(analytic) < kZeroCutoff) {
        continue;
      }
      double rel = std::abs(analytic - numeric) /
                   (std::abs(analytic) + std::abs(numeric));
      max_rel_error = std::max(max_rel_error, rel);
    }
  }
  return max_rel_error;
}

ModelParams ModelParams::create(std::size_t vocab_size) {
  ModelParams p;
  p.embeddings = Tensor::zeros({vocab_size, kEmbedDim});
  p.lstm = LstmParams::create(kEmbedDim, kHiddenDim);
  for (auto& w : p.gcn_weights) w = Tensor::zeros({kNodeDim, kNodeDim});
  p.projection = Tensor::zeros({kNodeDim});
  return p;
}

std::vector<std::pair<std::string, Tensor*>> ModelParams::named_tensors() {
  return {
      {"embeddings", &embeddings},
      {"lstm.w_input", &lstm.w_input},
      {"lstm.w_hidden", &lstm.w_hidden},
      {"lstm.bias", &lstm.bias},
      {"gcn.w0", &gcn_weights[0]},
      {"gcn.w1", &gcn_weights[1]},
      {"projection", &projection},
  };
}

std::vector<Tensor*> ModelParams::tensors() {
  std::vector<Tensor*> out;
  for (auto& [name, tensor] : named_tensors()) out.push_back(tensor);
  return out;
}

void ModelParams::track_all() {
  for (Tensor* t : tensors()) t->track_grad();
}

void ModelParams::zero_grads() {
  for (Tensor* t : tensors()) t->zero_grad();
}

ModelParams init_params(std::size_t vocab_size, Rng& rng) {
  ModelParams p = ModelParams::create(vocab_size);
  std::uniform_real_distribution<double> small(-0.1, 0.1);
  for (double& v : p.embeddings.values) v = small(rng);
  for (double& v : p.lstm.w_input.values) v = small(rng);
  for (double& v : p.lstm.w_hidden.values) v = small(rng);
  for (double& v : p.projection.values) v = small(rng);
  // Forget-gate bias starts at 1 so early training does not flush memory.
  const std::size_t h = ModelParams::kHiddenDim;
  for (std::size_t c = 0; c < h; ++c) p.lstm.bias.values[h + c] = 1.0;
  const double glorot =
      std::sqrt(6.0 / static_cast<double>(2 * ModelParams::kNodeDim));
  std::uniform_real_distribution<double> gcn_init(-glorot, glorot);
  for (auto& w : p.gcn_weights) {
    for (double& v : w.values) v = gcn_init(rng);
  }
  return p;
}

}  // namespace scisumm::neural
