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

#include "kdp/adam.hpp"

#include <cmath>
#include <string>

#include "kdp/error.hpp"

namespace kdp {

void adam_step(const std::vector<DenseMatrix*>& params,
               const std::vector<const DenseMatrix*>& grads, AdamState& state) {
  if (params.size() != grads.size()) {
    throw ShapeError("adam_step: " + std::to_string(params.size()) +
                     " params vs " + std::to_string(grads.size()) + " grads");
  }
  if (state.m.empty()) {
    for (const auto* p : params) {
      state.m.emplace_back(p->rows, p->cols);
      state.v.emplace_back(p->rows, p->cols);
    }
  }
  if (state.m.size() != params.size()) {
    throw StateError("adam_step: state sized for a different parameter list");
  }

  for (std::size_t k = 0; k < params.size(); ++k) {
    if (!same_shape(*params[k], *grads[k]) ||
        !same_shape(*params[k], state.m[k])) {
      throw ShapeError("adam_step: shape mismatch at parameter " +
                       std::to_string(k));
    }
    if (!all_finite(*grads[k])) {
      throw TrainingError("adam_step: non-finite gradient at parameter " +
                          std::to_string(k) + " (step " +
                          std::to_string(state.step + 1) + ")");
    }
  }

  state.step += 1;
  const float t = static_cast<float>(state.step);
  const float bc1 = 1.0f - std::pow(state.beta1, t);
  const float bc2 = 1.0f - std::pow(state.beta2, t);

  for (std::size_t k = 0; k < params.size(); ++k) {
    auto& p = params[k]->data;
    const auto& g = grads[k]->data;
    auto& m = state.m[k].data;
    auto& v = state.v[k].data;
    for (std::size_t i = 0; i < p.size(); ++i) {
      m[i] = state.beta1 * m[i] + (1.0f - state.beta1) * g[i];
      v[i] = state.beta2 * v[i] + (1.0f - state.beta2) * g[i] * g[i];
      const float mhat = m[i] / bc1;
      const float vhat = v[i] / bc2;
      p[i] -= state.lr * mhat / (std::sqrt(vhat) + state.eps);
    }
  }
}

void adam_step(FeedForwardNet& net, const GradientTape& tape, AdamState& state) {
  if (!tape.has_grads) {
    throw StateError("adam_step: tape has no gradients (run backward first)");
  }
  adam_step(net.params(), tape.grads(), state);
}

}  // namespace kdp
