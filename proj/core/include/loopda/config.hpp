/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace loopda {

/// Flat `key = value` configuration file. Lines starting with '#' and
/// blank lines are ignored. Keys are case-sensitive.
class Config {
 public:
  Config() = default;

  static Config parse(std::istream& in);
  static Config load(const std::string& path);

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& dflt) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double dflt) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int dflt) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, int value);

  const std::map<std::string, std::string>& entries() const { return map_; }

  void write(std::ostream& out) const;

 private:
  std::map<std::string, std::string> map_;
};

}  // namespace loopda
