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

#ifndef KDP_NET_HPP_
#define KDP_NET_HPP_

#include <vector>

#include "kdp/matrix.hpp"
#include "kdp/rng.hpp"

namespace kdp {

// Fixed-topology feedforward network: tanh on hidden layers, identity output.
// Weights are (in x out) so a row-major batch composes as x * W + b.
struct FeedForwardNet {
  std::vector<int> layer_sizes;  // [in, hidden..., out]
  std::vector<DenseMatrix> weights;
  std::vector<DenseMatrix> biases;  // each 1 x out

  int input_dim() const { return layer_sizes.front(); }
  int output_dim() const { return layer_sizes.back(); }
  int num_layers() const { return static_cast<int>(weights.size()); }
  std::size_t num_params() const;

  // parameter list in checkpoint order: W0, b0, W1, b1, ...
  std::vector<DenseMatrix*> params();
  std::vector<const DenseMatrix*> params() const;

  // Xavier-uniform initialization
  static FeedForwardNet make(const std::vector<int>& layer_sizes, Rng& rng);
  static FeedForwardNet make_zero(const std::vector<int>& layer_sizes);
};

// Per-call forward record plus the parameter gradients filled in by
// backward(). Gradient shapes mirror parameter shapes exactly.
struct GradientTape {
  std::vector<int> layer_sizes;           // of the net that produced it
  std::vector<DenseMatrix> activations;   // a0 = input, a1..aL = layer outputs
  std::vector<DenseMatrix> weight_grads;  // populated by backward()
  std::vector<DenseMatrix> bias_grads;
  bool has_grads = false;

  std::vector<const DenseMatrix*> grads() const;  // W0, b0, W1, b1, ...
};

// batch forward; when tape is non-null, records activations for backward()
DenseMatrix forward(const FeedForwardNet& net, const DenseMatrix& input,
                    GradientTape* tape = nullptr);

// Reverse-mode accumulation: given d(loss)/d(output), fills the tape with
// d(loss)/d(parameter) for every parameter. The tape must come from a
// matching forward() on the same net.
void backward(const FeedForwardNet& net, GradientTape& tape,
              const DenseMatrix& output_grad);

}  // namespace kdp

#endif  // KDP_NET_HPP_
