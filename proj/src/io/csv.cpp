// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/io/csv.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace tetherhop::io {

std::string fmt(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path), columns_(header.size()) {
  if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::begin_row() {
  first_in_row_ = true;
  written_ = 0;
}

void CsvWriter::field(const std::string& value) {
  if (!first_in_row_) out_ << ',';
  out_ << value;
  first_in_row_ = false;
  ++written_;
}

void CsvWriter::field(double value) { field(fmt(value)); }

void CsvWriter::field(long value) { field(std::to_string(value)); }

void CsvWriter::end_row() {
  if (written_ != columns_)
    throw std::logic_error("CsvWriter: row width does not match header");
  out_ << '\n';
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_text_file: cannot open " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_text_file: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tetherhop::io
