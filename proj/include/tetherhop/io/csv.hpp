// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace tetherhop::io {

/// Shortest round-trip decimal form of a double; stable across runs.
std::string fmt(double value);

/// Minimal CSV emitter with a fixed header.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void begin_row();
  void field(const std::string& value);
  void field(double value);
  void field(long value);
  void field(int value) { field(static_cast<long>(value)); }
  void end_row();

 private:
  std::ofstream out_;
  bool first_in_row_ = true;
  std::size_t columns_ = 0;
  std::size_t written_ = 0;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace tetherhop::io
