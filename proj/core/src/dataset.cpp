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

#include "kdp/dataset.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "binio.hpp"
#include "kdp/error.hpp"

namespace kdp {

namespace {

std::filesystem::path manifest_path(const std::filesystem::path& dataset_path) {
  auto p = dataset_path;
  p += ".manifest.json";
  return p;
}

void save_manifest(const DatasetManifest& m, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["environment"] = m.environment;
  j["seed"] = m.seed;
  j["policy_id"] = m.policy_id;
  j["has_rewards"] = m.has_rewards;
  j["stats"] = m.stats;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write manifest: " + path.string());
  out << j.dump(2) << "\n";
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
  DatasetManifest m;
  std::ifstream in(path);
  if (!in) return m;  // sidecar is optional on load
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed manifest " + path.string() + ": " + e.what());
  }
  m.environment = j.value("environment", std::string{});
  m.seed = j.value("seed", std::uint64_t{0});
  m.policy_id = j.value("policy_id", std::string{});
  m.has_rewards = j.value("has_rewards", false);
  if (j.contains("stats")) {
    for (auto& [k, v] : j["stats"].items()) {
      m.stats[k] = v.get<double>();
    }
  }
  return m;
}

}  // namespace

NormStats compute_norm_stats(const std::vector<TrajectoryWindow>& windows) {
  if (windows.empty()) throw ConfigError("norm stats over empty window set");
  const int dim = windows.front().shape.row_dim();
  const int horizon = windows.front().shape.horizon;
  // reductions span N*H terms, accumulate in double
  std::vector<double> sum(dim, 0.0), sumsq(dim, 0.0);
  for (const auto& w : windows) {
    for (int t = 0; t < horizon; ++t) {
      auto row = w.values.row(t);
      for (int d = 0; d < dim; ++d) {
        sum[d] += row[d];
        sumsq[d] += static_cast<double>(row[d]) * row[d];
      }
    }
  }
  const double n = static_cast<double>(windows.size()) * horizon;
  NormStats stats;
  stats.mean.resize(dim);
  stats.std.resize(dim);
  for (int d = 0; d < dim; ++d) {
    const double mean = sum[d] / n;
    const double var = std::max(0.0, sumsq[d] / n - mean * mean);
    stats.mean[d] = static_cast<float>(mean);
    stats.std[d] = std::max(kStdFloor, static_cast<float>(std::sqrt(var)));
  }
  return stats;
}

void save_dataset(const WindowDataset& ds, const std::filesystem::path& path) {
  const int dim = ds.shape.row_dim();
  binio::Writer w;
  w.magic("KDPW");
  w.u32(kDatasetVersion);
  w.u32(static_cast<std::uint32_t>(ds.shape.horizon));
  w.u32(static_cast<std::uint32_t>(ds.shape.state_dim));
  w.u32(static_cast<std::uint32_t>(ds.shape.action_dim));
  w.u64(ds.windows.size());
  w.u32(ds.has_rewards() ? 1u : 0u);
  w.f32s(ds.norm.mean.data(), static_cast<std::size_t>(dim));
  w.f32s(ds.norm.std.data(), static_cast<std::size_t>(dim));
  for (const auto& win : ds.windows) {
    if (!(win.shape == ds.shape)) {
      throw ShapeError("dataset window shape mismatch on save");
    }
    w.f32s(win.values.data.data(), win.values.size());
  }
  if (ds.has_rewards()) {
    if (ds.rewards.size() != ds.windows.size()) {
      throw ShapeError("rewards count differs from window count");
    }
    for (const auto& r : ds.rewards) {
      if (static_cast<int>(r.size()) != ds.shape.horizon) {
        throw ShapeError("reward row length differs from horizon");
      }
      w.f32s(r.data(), r.size());
    }
  }
  w.finish_with_crc();
  w.write_file(path);
  save_manifest(ds.manifest, manifest_path(path));
}

WindowDataset load_dataset(const std::filesystem::path& path) {
  auto r = binio::Reader::from_file(path);
  const std::string what = "dataset " + path.string();
  r.expect_magic("KDPW", what);
  const std::uint32_t version = r.u32(what);
  if (version != kDatasetVersion) {
    throw VersionError(what + ": unsupported version " + std::to_string(version));
  }
  WindowDataset ds;
  ds.shape.horizon = static_cast<int>(r.u32(what));
  ds.shape.state_dim = static_cast<int>(r.u32(what));
  ds.shape.action_dim = static_cast<int>(r.u32(what));
  if (ds.shape.horizon < 1 || ds.shape.state_dim < 1 || ds.shape.action_dim < 1) {
    throw IoError(what + ": bad shape header");
  }
  const std::uint64_t n = r.u64(what);
  const std::uint32_t flags = r.u32(what);
  const int dim = ds.shape.row_dim();
  ds.norm.mean.resize(dim);
  ds.norm.std.resize(dim);
  r.f32s(ds.norm.mean.data(), static_cast<std::size_t>(dim), what);
  r.f32s(ds.norm.std.data(), static_cast<std::size_t>(dim), what);
  ds.windows.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    TrajectoryWindow win(ds.shape);
    r.f32s(win.values.data.data(), win.values.size(), what);
    ds.windows.push_back(std::move(win));
  }
  if (flags & 1u) {
    ds.rewards.resize(n);
    for (auto& row : ds.rewards) {
      row.resize(ds.shape.horizon);
      r.f32s(row.data(), row.size(), what);
    }
  }
  r.expect_end(what);
  r.check_crc(what);
  ds.manifest = load_manifest(manifest_path(path));
  return ds;
}

}  // namespace kdp
