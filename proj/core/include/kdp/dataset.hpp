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

#ifndef KDP_DATASET_HPP_
#define KDP_DATASET_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "kdp/window.hpp"

namespace kdp {

// provenance sidecar, written as <dataset>.manifest.json
struct DatasetManifest {
  std::string environment;
  std::uint64_t seed = 0;
  std::string policy_id;
  bool has_rewards = false;
  // free-form numeric facts (episode counts, class proportions, ...)
  std::map<std::string, double> stats;
};

// N trajectory windows of a shared shape, raw (unnormalized) units.
// `norm` holds the per-dimension statistics of exactly these windows.
struct WindowDataset {
  WindowShape shape;
  std::vector<TrajectoryWindow> windows;
  std::vector<std::vector<float>> rewards;  // N x H, empty when absent
  NormStats norm;
  DatasetManifest manifest;

  std::size_t size() const { return windows.size(); }
  bool has_rewards() const { return !rewards.empty(); }
};

// mean/std over all N*H rows, std floored at kStdFloor
NormStats compute_norm_stats(const std::vector<TrajectoryWindow>& windows);

// Dataset file ("KDPW"):
//   magic "KDPW" | version u32 | H u32 | d_s u32 | d_a u32 | N u64 |
//   flags u32 (bit 0 = rewards present) | mean f32[D] | std f32[D] |
//   windows f32[N*H*D] LE | rewards f32[N*H] (iff flag) | CRC32
// The manifest travels in a JSON sidecar next to the file.
inline constexpr std::uint32_t kDatasetVersion = 1;

void save_dataset(const WindowDataset& ds, const std::filesystem::path& path);
WindowDataset load_dataset(const std::filesystem::path& path);

}  // namespace kdp

#endif  // KDP_DATASET_HPP_
