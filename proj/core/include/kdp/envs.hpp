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

#ifndef KDP_ENVS_HPP_
#define KDP_ENVS_HPP_

#include <array>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kdp/dataset.hpp"
#include "kdp/rng.hpp"

namespace kdp {

struct EpisodeLog {
  std::vector<std::vector<double>> states;   // length T+1
  std::vector<std::vector<double>> actions;  // length T
  std::vector<double> rewards;               // length T
  bool terminal = false;

  int steps() const { return static_cast<int>(actions.size()); }
};

// 1-D double integrator-free toy: s' = s + 0.1 a. The scripted data policy
// commits to one of two action modes (+1 or -1) per episode, so the
// conditional action distribution at every state is cleanly bimodal.
class Bimodal1D {
 public:
  struct Config {
    int config_version = 1;
    double gain = 0.1;          // s' = s + gain * a
    double mode_noise = 0.05;   // sigma around the +-1 modes
    double start_low = -1.0;
    double start_high = 1.0;
    int episode_steps = 24;
  };

  static constexpr int kStateDim = 1;
  static constexpr int kActionDim = 1;

  Bimodal1D() = default;
  explicit Bimodal1D(const Config& cfg) : cfg_(cfg) {}

  const Config& config() const { return cfg_; }
  std::vector<double> reset(Rng& rng) const;
  // reward is identically 0
  std::pair<std::vector<double>, double> step(std::span<const double> state,
                                              std::span<const double> action) const;
  bool success_final(std::span<const double>) const { return true; }

 private:
  Config cfg_;
};

// Planar point mass with velocity-Verlet integration, drag, inelastic walls,
// and one rectangular obstacle between the start region and the goal. The
// scripted data policies pass the obstacle on either side (two homotopy
// classes) in roughly equal proportion.
class PointMaze2D {
 public:
  struct Config {
    int config_version = 1;
    double dt = 0.05;
    double drag = 0.1;
    double bounds_lo = 0.0;
    double bounds_hi = 10.0;
    // obstacle rectangle [x_lo, x_hi] x [y_lo, y_hi]
    double obs_x_lo = 4.5;
    double obs_x_hi = 5.5;
    double obs_y_lo = 2.5;
    double obs_y_hi = 7.5;
    // start positions sampled uniformly from this box, zero velocity
    double start_x_lo = 0.8;
    double start_x_hi = 2.2;
    double start_y_lo = 4.0;
    double start_y_hi = 6.0;
    double goal_x = 8.5;
    double goal_y = 5.0;
    double goal_radius = 0.5;  // closed ball
    int episode_steps = 160;
  };

  static constexpr int kStateDim = 4;   // [x, y, vx, vy]
  static constexpr int kActionDim = 2;  // [ax, ay], clipped to [-1, 1]

  PointMaze2D() = default;
  explicit PointMaze2D(const Config& cfg) : cfg_(cfg) {}

  const Config& config() const { return cfg_; }
  std::vector<double> reset(Rng& rng) const;
  // reward is -distance(position, goal) after the transition
  std::pair<std::vector<double>, double> step(std::span<const double> state,
                                              std::span<const double> action) const;
  bool success_final(std::span<const double> final_state) const;

  double distance_to_goal(std::span<const double> state) const;
  bool inside_obstacle(double x, double y) const;

 private:
  Config cfg_;
};

// name-addressable wrapper so tools can pick an environment at runtime
class Env {
 public:
  enum class Kind { kBimodal1d, kPointMaze2d };

  Env() : impl_(Bimodal1D{}) {}
  explicit Env(Bimodal1D e) : impl_(std::move(e)) {}
  explicit Env(PointMaze2D e) : impl_(std::move(e)) {}

  // throws ConfigError for unknown names
  static Env by_name(const std::string& name);
  static std::vector<std::string> known_names();

  std::string name() const;
  Kind kind() const;
  int state_dim() const;
  int action_dim() const;
  int default_horizon() const;
  int episode_steps() const;

  std::vector<double> reset(Rng& rng) const;
  std::pair<std::vector<double>, double> step(std::span<const double> state,
                                              std::span<const double> action) const;
  bool success_final(std::span<const double> final_state) const;

  const Bimodal1D* bimodal() const { return std::get_if<Bimodal1D>(&impl_); }
  const PointMaze2D* maze() const { return std::get_if<PointMaze2D>(&impl_); }

 private:
  std::variant<Bimodal1D, PointMaze2D> impl_;
};

bool success(const Env& env, const EpisodeLog& episode);

struct CollectConfig {
  int episodes = 1000;
  std::uint64_t seed = 0;
  int horizon = 8;  // window length H
};

// Runs the scripted data policies and slices episodes into stride-1 windows.
// Episodes shorter than the horizon are dropped. Deterministic per seed.
WindowDataset collect_dataset(const Env& env, const CollectConfig& cfg);

// scripted per-episode controller used by collect_dataset; exposed for tests
EpisodeLog run_scripted_episode(const Env& env, Rng& rng, int* mode_out);

}  // namespace kdp

#endif  // KDP_ENVS_HPP_
