// Copyright 2026 The KDP Authors
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

#include "kdp/net.hpp"

#include <cmath>
#include <string>

#include "kdp/error.hpp"

namespace kdp {

std::size_t FeedForwardNet::num_params() const {
  std::size_t n = 0;
  for (const auto& w : weights) n += w.size();
  for (const auto& b : biases) n += b.size();
  return n;
}

std::vector<DenseMatrix*> FeedForwardNet::params() {
  std::vector<DenseMatrix*> out;
  out.reserve(2 * weights.size());
  for (std::size_t l = 0; l < weights.size(); ++l) {
    out.push_back(&weights[l]);
    out.push_back(&biases[l]);
  }
  return out;
}

std::vector<const DenseMatrix*> FeedForwardNet::params() const {
  std::vector<const DenseMatrix*> out;
  out.reserve(2 * weights.size());
  for (std::size_t l = 0; l < weights.size(); ++l) {
    out.push_back(&weights[l]);
    out.push_back(&biases[l]);
  }
  return out;
}

static void check_layer_sizes(const std::vector<int>& sizes) {
  if (sizes.size() < 2) {
    throw ConfigError("net needs at least input and output sizes");
  }
  for (int s : sizes) {
    if (s < 1) throw ConfigError("layer sizes must be positive");
  }
}

FeedForwardNet FeedForwardNet::make(const std::vector<int>& layer_sizes,
                                    Rng& rng) {
  check_layer_sizes(layer_sizes);
  FeedForwardNet net;
  net.layer_sizes = layer_sizes;
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    const int fan_in = layer_sizes[l];
    const int fan_out = layer_sizes[l + 1];
    const float bound = std::sqrt(6.0f / static_cast<float>(fan_in + fan_out));
    DenseMatrix w(fan_in, fan_out);
    for (auto& v : w.data) {
      v = static_cast<float>(rng.uniform(-bound, bound));
    }
    net.weights.push_back(std::move(w));
    net.biases.emplace_back(1, fan_out);
  }
  return net;
}

FeedForwardNet FeedForwardNet::make_zero(const std::vector<int>& layer_sizes) {
  check_layer_sizes(layer_sizes);
  FeedForwardNet net;
  net.layer_sizes = layer_sizes;
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    net.weights.emplace_back(layer_sizes[l], layer_sizes[l + 1]);
    net.biases.emplace_back(1, layer_sizes[l + 1]);
  }
  return net;
}

std::vector<const DenseMatrix*> GradientTape::grads() const {
  std::vector<const DenseMatrix*> out;
  out.reserve(2 * weight_grads.size());
  for (std::size_t l = 0; l < weight_grads.size(); ++l) {
    out.push_back(&weight_grads[l]);
    out.push_back(&bias_grads[l]);
  }
  return out;
}

DenseMatrix forward(const FeedForwardNet& net, const DenseMatrix& input,
                    GradientTape* tape) {
  if (input.cols != net.input_dim()) {
    throw ShapeError("forward: input has " + std::to_string(input.cols) +
                     " cols, net expects " + std::to_string(net.input_dim()));
  }
  if (tape) {
    *tape = GradientTape{};
    tape->layer_sizes = net.layer_sizes;
    tape->activations.push_back(input);
  }
  DenseMatrix a = input;
  const int L = net.num_layers();
  for (int l = 0; l < L; ++l) {
    DenseMatrix z = matmul(a, net.weights[l]);
    add_row_broadcast(z, net.biases[l]);
    if (l + 1 < L) tanh_inplace(z);  // identity on the output layer
    a = std::move(z);
    if (tape) tape->activations.push_back(a);
  }
  return a;
}

void backward(const FeedForwardNet& net, GradientTape& tape,
              const DenseMatrix& output_grad) {
  const int L = net.num_layers();
  if (tape.layer_sizes != net.layer_sizes ||
      tape.activations.size() != static_cast<std::size_t>(L) + 1) {
    throw StateError("backward: tape does not match net");
  }
  if (output_grad.rows != tape.activations.back().rows ||
      output_grad.cols != net.output_dim()) {
    throw ShapeError("backward: output_grad shape mismatch");
  }

  tape.weight_grads.assign(net.weights.begin(), net.weights.end());
  tape.bias_grads.assign(net.biases.begin(), net.biases.end());
  for (auto& g : tape.weight_grads) std::fill(g.data.begin(), g.data.end(), 0.0f);
  for (auto& g : tape.bias_grads) std::fill(g.data.begin(), g.data.end(), 0.0f);

  // delta starts as d(loss)/d(pre-activation) of the identity output layer
  DenseMatrix delta = output_grad;
  for (int l = L - 1; l >= 0; --l) {
    if (l < L - 1) {
      // tanh': activations[l+1] holds tanh(z), so dz = da * (1 - a^2)
      const DenseMatrix& a = tape.activations[l + 1];
      for (std::size_t i = 0; i < delta.data.size(); ++i) {
        delta.data[i] *= 1.0f - a.data[i] * a.data[i];
      }
    }
    tape.weight_grads[l] = matmul_at(tape.activations[l], delta);
    tape.bias_grads[l] = column_sums(delta);
    if (l > 0) delta = matmul_bt(delta, net.weights[l]);
  }
  tape.has_grads = true;
}

}  // namespace kdp
