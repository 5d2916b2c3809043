// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tetherhop::cli {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// One manifest per run: the resolved config snapshot plus seeds is
/// enough to reproduce every output byte-identically; wall-clock timings
/// live here and only here.
struct RunManifest {
  std::string subcommand;
  nlohmann::json config;
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
  std::map<std::string, double> timings_s;

  nlohmann::json to_json() const;
  /// Writes <out_dir>/manifest.json and returns its path.
  std::string write(const std::string& out_dir) const;
};

}  // namespace tetherhop::cli
