/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/config.hpp"

#include <fstream>
#include <sstream>

#include "loopda/errors.hpp"

namespace loopda {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse(std::istream& in) {
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value, got '" + t + "'");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key");
    }
    cfg.map_[key] = value;
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse(in);
}

bool Config::has(const std::string& key) const { return map_.count(key) > 0; }

std::string Config::get_string(const std::string& key) const {
  const auto it = map_.find(key);
  if (it == map_.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

std::string Config::get_string(const std::string& key,
                               const std::string& dflt) const {
  const auto it = map_.find(key);
  return it == map_.end() ? dflt : it->second;
}

double Config::get_double(const std::string& key) const {
  const std::string v = get_string(key);
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": not a number: '" + v + "'");
  }
}

double Config::get_double(const std::string& key, double dflt) const {
  return has(key) ? get_double(key) : dflt;
}

int Config::get_int(const std::string& key) const {
  const double d = get_double(key);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) {
    throw ConfigError("config key " + key + ": not an integer");
  }
  return i;
}

int Config::get_int(const std::string& key, int dflt) const {
  return has(key) ? get_int(key) : dflt;
}

std::uint64_t Config::get_u64(const std::string& key,
                              std::uint64_t dflt) const {
  if (!has(key)) return dflt;
  const std::string v = get_string(key);
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": not an unsigned integer");
  }
}

bool Config::get_bool(const std::string& key, bool dflt) const {
  if (!has(key)) return dflt;
  const std::string v = get_string(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key " + key + ": not a boolean: '" + v + "'");
}

void Config::set(const std::string& key, const std::string& value) {
  map_[key] = value;
}

void Config::set(const std::string& key, double value) {
  std::ostringstream ss;
  ss.precision(17);
  ss << value;
  map_[key] = ss.str();
}

void Config::set(const std::string& key, int value) {
  map_[key] = std::to_string(value);
}

void Config::write(std::ostream& out) const {
  for (const auto& [k, v] : map_) out << k << " = " << v << '\n';
}

}  // namespace loopda
