// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/cli/manifest.hpp"

#include <filesystem>

#include "tetherhop/io/csv.hpp"

namespace tetherhop::cli {

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["artifact_version"] = kArtifactVersion;
  j["subcommand"] = subcommand;
  j["config"] = config;
  j["seed"] = seed;
  j["outputs"] = outputs;
  j["timings_s"] = timings_s;
  return j;
}

std::string RunManifest::write(const std::string& out_dir) const {
  const std::string path =
      (std::filesystem::path(out_dir) / "manifest.json").string();
  io::write_text_file(path, to_json().dump(2) + "\n");
  return path;
}

}  // namespace tetherhop::cli
