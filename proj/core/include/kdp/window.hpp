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

#ifndef KDP_WINDOW_HPP_
#define KDP_WINDOW_HPP_

#include <optional>
#include <vector>

#include "kdp/matrix.hpp"

namespace kdp {

// H timesteps, each row a (state, action) pair: [0:d_s) state, [d_s:D) action
struct WindowShape {
  int horizon = 0;   // H
  int state_dim = 0; // d_s
  int action_dim = 0;// d_a

  int row_dim() const { return state_dim + action_dim; }  // D
  int flat_dim() const { return horizon * row_dim(); }
  bool operator==(const WindowShape&) const = default;
};

struct TrajectoryWindow {
  WindowShape shape;
  DenseMatrix values;  // H x D

  TrajectoryWindow() = default;
  explicit TrajectoryWindow(const WindowShape& s)
      : shape(s), values(s.horizon, s.row_dim()) {}

  std::span<float> state(int t) {
    return values.row(t).subspan(0, shape.state_dim);
  }
  std::span<const float> state(int t) const {
    return values.row(t).subspan(0, shape.state_dim);
  }
  std::span<float> action(int t) {
    return values.row(t).subspan(shape.state_dim, shape.action_dim);
  }
  std::span<const float> action(int t) const {
    return values.row(t).subspan(shape.state_dim, shape.action_dim);
  }
};

// Clamp specification: the window must start at state `c`; optionally the
// state coordinates `goal_indices` at timestep `goal_time` must equal `goal`.
struct ConditionSpec {
  std::vector<float> start_state;          // c, length d_s
  std::vector<float> goal;                 // values over goal_indices
  std::vector<int> goal_indices;           // subset of [0, d_s)
  int goal_time = -1;                      // t_g, valid iff goal present

  bool has_goal() const { return !goal.empty(); }
};

// 1 = free, 0 = clamped
struct ConstraintMask {
  DenseMatrix m;  // H x D binary
};

// per-dimension statistics over all rows of a dataset; std floored at 1e-6
struct NormStats {
  std::vector<float> mean;  // length D
  std::vector<float> std;   // length D
};

inline constexpr float kStdFloor = 1e-6f;

// throws SpecError if the spec does not fit the shape
void validate_spec(const ConditionSpec& spec, const WindowShape& shape);

// Hard constraint: overwrites state(x)[0] with c and, when a goal is present,
// the goal coordinates at goal_time. Every other entry is untouched.
TrajectoryWindow clamp(const TrajectoryWindow& x, const ConditionSpec& spec);
void clamp_inplace(TrajectoryWindow& x, const ConditionSpec& spec);

ConstraintMask constraint_mask(const WindowShape& shape,
                               const ConditionSpec& spec);

// key map: the initial state block
std::vector<float> key(const TrajectoryWindow& x);

// Euclidean distance between keys
float key_distance(const TrajectoryWindow& x, const TrajectoryWindow& y);

// Euclidean distance over all H x D entries (the no-keying comparator)
float full_window_distance(const TrajectoryWindow& x, const TrajectoryWindow& y);

TrajectoryWindow normalize(const TrajectoryWindow& x, const NormStats& stats);
TrajectoryWindow denormalize(const TrajectoryWindow& x, const NormStats& stats);

std::vector<float> normalize_state(std::span<const float> s,
                                   const NormStats& stats);
std::vector<float> denormalize_action(std::span<const float> a,
                                      const NormStats& stats, int state_dim);

// spec with start/goal values mapped into normalized units
ConditionSpec normalize_spec(const ConditionSpec& spec, const NormStats& stats);

}  // namespace kdp

#endif  // KDP_WINDOW_HPP_
