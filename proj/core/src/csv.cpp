/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/csv.hpp"

#include <cstdio>
#include <fstream>

#include "loopda/errors.hpp"

namespace loopda {

CsvWriter::CsvWriter(std::string path, std::vector<std::string> header)
    : path_(std::move(path)), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += header[i];
  }
  buffer_ += '\n';
}

std::string CsvWriter::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_) {
    throw ConfigError("CsvWriter: row width mismatch in " + path_);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += format(values[i]);
  }
  buffer_ += '\n';
}

void CsvWriter::row_strings(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) {
    throw ConfigError("CsvWriter: row width mismatch in " + path_);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += cells[i];
  }
  buffer_ += '\n';
}

CsvWriter::~CsvWriter() {
  std::ofstream out(path_, std::ios::binary);
  out << buffer_;
}

}  // namespace loopda
