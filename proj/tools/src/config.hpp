// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wetbeam::tools {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Plain-text key=value configuration ('#' starts a comment, blank lines
/// ignored). Values are kept as strings until a command reads them.
class Config {
 public:
  Config() = default;

  static Config parse_file(const std::string& path);
  static Config parse_text(const std::string& text);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Typed, schema-checked view of a Config. Every get_* marks its key as
/// known; finish() rejects unknown keys so typos fail loudly.
class ConfigReader {
 public:
  explicit ConfigReader(const Config& cfg) : cfg_(cfg) {}

  std::uint64_t require_u64(const std::string& key);
  double get_double(const std::string& key, double def);
  std::size_t get_size(const std::string& key, std::size_t def);
  std::string get_string(const std::string& key, const std::string& def);
  std::string require_string(const std::string& key);
  std::vector<double> get_double_list(const std::string& key,
                                      const std::vector<double>& def);

  /// Like get_size, but the key is execution-only (worker count and the
  /// like): it is accepted and parsed, yet kept out of the provenance echo
  /// so it cannot change output bytes.
  std::size_t get_execution_size(const std::string& key, std::size_t def);

  /// Declares a key handled elsewhere (e.g. out).
  void declare(const std::string& key) { known_.insert(key); }

  /// Throws ConfigError when the config carries keys never declared or read.
  void finish() const;

  /// Effective "key=value" pairs (defaults applied), sorted by key, for the
  /// provenance header. Execution-only keys are not recorded.
  std::vector<std::string> echo() const;

 private:
  const std::string* find(const std::string& key);

  const Config& cfg_;
  std::set<std::string> known_;
  std::map<std::string, std::string> effective_;
};

}  // namespace wetbeam::tools
