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

#include "kdp/window.hpp"

#include <cmath>
#include <string>

#include "kdp/error.hpp"

namespace kdp {

void validate_spec(const ConditionSpec& spec, const WindowShape& shape) {
  if (static_cast<int>(spec.start_state.size()) != shape.state_dim) {
    throw SpecError("condition has " + std::to_string(spec.start_state.size()) +
                    " dims, state_dim is " + std::to_string(shape.state_dim));
  }
  if (spec.has_goal()) {
    if (spec.goal.size() != spec.goal_indices.size()) {
      throw SpecError("goal values and goal indices differ in length");
    }
    if (spec.goal_time < 0 || spec.goal_time >= shape.horizon) {
      throw SpecError("goal timestep " + std::to_string(spec.goal_time) +
                      " outside horizon " + std::to_string(shape.horizon));
    }
    for (int idx : spec.goal_indices) {
      if (idx < 0 || idx >= shape.state_dim) {
        throw SpecError("goal index " + std::to_string(idx) +
                        " outside state block");
      }
    }
  }
}

void clamp_inplace(TrajectoryWindow& x, const ConditionSpec& spec) {
  validate_spec(spec, x.shape);
  auto s0 = x.state(0);
  for (int i = 0; i < x.shape.state_dim; ++i) s0[i] = spec.start_state[i];
  if (spec.has_goal()) {
    for (std::size_t k = 0; k < spec.goal_indices.size(); ++k) {
      x.values.at(spec.goal_time, spec.goal_indices[k]) = spec.goal[k];
    }
  }
}

TrajectoryWindow clamp(const TrajectoryWindow& x, const ConditionSpec& spec) {
  TrajectoryWindow out = x;
  clamp_inplace(out, spec);
  return out;
}

ConstraintMask constraint_mask(const WindowShape& shape,
                               const ConditionSpec& spec) {
  validate_spec(spec, shape);
  ConstraintMask mask;
  mask.m = DenseMatrix::filled(shape.horizon, shape.row_dim(), 1.0f);
  for (int i = 0; i < shape.state_dim; ++i) mask.m.at(0, i) = 0.0f;
  if (spec.has_goal()) {
    for (int idx : spec.goal_indices) mask.m.at(spec.goal_time, idx) = 0.0f;
  }
  return mask;
}

std::vector<float> key(const TrajectoryWindow& x) {
  auto s0 = x.state(0);
  return {s0.begin(), s0.end()};
}

static float euclidean(std::span<const float> a, std::span<const float> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    acc += d * d;
  }
  return static_cast<float>(std::sqrt(acc));
}

float key_distance(const TrajectoryWindow& x, const TrajectoryWindow& y) {
  if (!(x.shape == y.shape)) throw ShapeError("key_distance: shape mismatch");
  return euclidean(x.state(0), y.state(0));
}

float full_window_distance(const TrajectoryWindow& x,
                           const TrajectoryWindow& y) {
  if (!(x.shape == y.shape)) {
    throw ShapeError("full_window_distance: shape mismatch");
  }
  return euclidean(x.values.data, y.values.data);
}

static void check_stats(const NormStats& stats, int row_dim) {
  if (static_cast<int>(stats.mean.size()) != row_dim ||
      static_cast<int>(stats.std.size()) != row_dim) {
    throw ShapeError("norm stats sized for a different row dimension");
  }
}

TrajectoryWindow normalize(const TrajectoryWindow& x, const NormStats& stats) {
  check_stats(stats, x.shape.row_dim());
  TrajectoryWindow out = x;
  for (int t = 0; t < x.shape.horizon; ++t) {
    auto row = out.values.row(t);
    for (int d = 0; d < x.shape.row_dim(); ++d) {
      row[d] = (row[d] - stats.mean[d]) / stats.std[d];
    }
  }
  return out;
}

TrajectoryWindow denormalize(const TrajectoryWindow& x, const NormStats& stats) {
  check_stats(stats, x.shape.row_dim());
  TrajectoryWindow out = x;
  for (int t = 0; t < x.shape.horizon; ++t) {
    auto row = out.values.row(t);
    for (int d = 0; d < x.shape.row_dim(); ++d) {
      row[d] = row[d] * stats.std[d] + stats.mean[d];
    }
  }
  return out;
}

std::vector<float> normalize_state(std::span<const float> s,
                                   const NormStats& stats) {
  std::vector<float> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i] = (s[i] - stats.mean[i]) / stats.std[i];
  }
  return out;
}

std::vector<float> denormalize_action(std::span<const float> a,
                                      const NormStats& stats, int state_dim) {
  std::vector<float> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t d = state_dim + i;
    out[i] = a[i] * stats.std[d] + stats.mean[d];
  }
  return out;
}

ConditionSpec normalize_spec(const ConditionSpec& spec, const NormStats& stats) {
  ConditionSpec out = spec;
  for (std::size_t i = 0; i < out.start_state.size(); ++i) {
    out.start_state[i] = (out.start_state[i] - stats.mean[i]) / stats.std[i];
  }
  for (std::size_t k = 0; k < out.goal.size(); ++k) {
    const int d = out.goal_indices[k];
    out.goal[k] = (out.goal[k] - stats.mean[d]) / stats.std[d];
  }
  return out;
}

}  // namespace kdp
