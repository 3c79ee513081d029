/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <string>
#include <vector>

namespace loopda {

/// Minimal CSV emitter: comma separator, header row, '.' decimal, LF,
/// 17 significant digits so re-runs reproduce files bitwise.
class CsvWriter {
 public:
  CsvWriter(std::string path, std::vector<std::string> header);

  void row(const std::vector<double>& values);
  void row_strings(const std::vector<std::string>& cells);

  static std::string format(double v);

 private:
  std::string path_;
  std::string buffer_;
  std::size_t columns_;

 public:
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;
};

}  // namespace loopda
