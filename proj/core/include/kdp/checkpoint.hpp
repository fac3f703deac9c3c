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

#ifndef KDP_CHECKPOINT_HPP_
#define KDP_CHECKPOINT_HPP_

#include <filesystem>

#include "kdp/net.hpp"

namespace kdp {

// Parameter checkpoint file ("KDPN"):
//   magic "KDPN" | version u32 | layer count u32 | layer sizes u32[] |
//   parameters f32 LE (W0 row-major, b0, W1, b1, ...) | CRC32
inline constexpr std::uint32_t kCheckpointVersion = 1;

void save_net(const FeedForwardNet& net, const std::filesystem::path& path);
FeedForwardNet load_net(const std::filesystem::path& path);

}  // namespace kdp

#endif  // KDP_CHECKPOINT_HPP_
