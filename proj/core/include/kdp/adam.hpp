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

#ifndef KDP_ADAM_HPP_
#define KDP_ADAM_HPP_

#include <cstdint>
#include <vector>

#include "kdp/matrix.hpp"
#include "kdp/net.hpp"

namespace kdp {

// Bias-corrected Adam. Moment buffers are allocated lazily on the first step
// and mirror parameter shapes from then on.
struct AdamState {
  float lr = 3e-4f;
  float beta1 = 0.9f;
  float beta2 = 0.999f;
  float eps = 1e-8f;
  std::int64_t step = 0;
  std::vector<DenseMatrix> m;
  std::vector<DenseMatrix> v;
};

void adam_step(const std::vector<DenseMatrix*>& params,
               const std::vector<const DenseMatrix*>& grads, AdamState& state);

// convenience for the common net + tape pairing
void adam_step(FeedForwardNet& net, const GradientTape& tape, AdamState& state);

}  // namespace kdp

#endif  // KDP_ADAM_HPP_
