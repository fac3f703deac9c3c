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

#include "kdp/checkpoint.hpp"

#include <vector>

#include "binio.hpp"
#include "kdp/error.hpp"

namespace kdp {

void save_net(const FeedForwardNet& net, const std::filesystem::path& path) {
  binio::Writer w;
  w.magic("KDPN");
  w.u32(kCheckpointVersion);
  w.u32(static_cast<std::uint32_t>(net.layer_sizes.size()));
  for (int s : net.layer_sizes) w.u32(static_cast<std::uint32_t>(s));
  for (const auto* p : net.params()) w.f32s(p->data.data(), p->size());
  w.finish_with_crc();
  w.write_file(path);
}

FeedForwardNet load_net(const std::filesystem::path& path) {
  auto r = binio::Reader::from_file(path);
  const std::string what = "checkpoint " + path.string();
  r.expect_magic("KDPN", what);
  const std::uint32_t version = r.u32(what);
  if (version != kCheckpointVersion) {
    throw VersionError(what + ": unsupported version " + std::to_string(version));
  }
  const std::uint32_t n_layers = r.u32(what);
  if (n_layers < 2 || n_layers > 64) {
    throw IoError(what + ": implausible layer count");
  }
  std::vector<int> sizes(n_layers);
  for (auto& s : sizes) {
    s = static_cast<int>(r.u32(what));
    if (s < 1) throw IoError(what + ": bad layer size");
  }
  FeedForwardNet net = FeedForwardNet::make_zero(sizes);
  for (auto* p : net.params()) r.f32s(p->data.data(), p->size(), what);
  r.expect_end(what);
  r.check_crc(what);
  return net;
}

}  // namespace kdp
