// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wetbeam/format.hpp"

namespace wetbeam::tools {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

Config Config::parse_text(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    }
    cfg.set(key, value);
  }
  return cfg;
}

void Config::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

const std::string* ConfigReader::find(const std::string& key) {
  known_.insert(key);
  const auto it = cfg_.values().find(key);
  return it == cfg_.values().end() ? nullptr : &it->second;
}

std::uint64_t ConfigReader::require_u64(const std::string& key) {
  const std::string* raw = find(key);
  if (raw == nullptr) {
    throw ConfigError("missing required config key '" + key + "'");
  }
  std::uint64_t value = 0;
  const char* begin = raw->data();
  const char* end = begin + raw->size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || raw->empty()) {
    throw ConfigError("config key '" + key + "': expected unsigned integer, got '" +
                      *raw + "'");
  }
  effective_[key] = *raw;
  return value;
}

double ConfigReader::get_double(const std::string& key, double def) {
  const std::string* raw = find(key);
  double value = def;
  if (raw != nullptr) {
    try {
      value = parse_double(*raw);
    } catch (const std::invalid_argument&) {
      throw ConfigError("config key '" + key + "': expected number, got '" + *raw +
                        "'");
    }
  }
  effective_[key] = format_double(value);
  return value;
}

std::size_t ConfigReader::get_size(const std::string& key, std::size_t def) {
  const std::string* raw = find(key);
  std::size_t value = def;
  if (raw != nullptr) {
    std::size_t parsed = 0;
    const char* begin = raw->data();
    const char* end = begin + raw->size();
    const auto [ptr, ec] = std::from_chars(begin, end, parsed);
    if (ec != std::errc() || ptr != end || raw->empty()) {
      throw ConfigError("config key '" + key + "': expected unsigned integer, got '" +
                        *raw + "'");
    }
    value = parsed;
  }
  effective_[key] = std::to_string(value);
  return value;
}

std::string ConfigReader::get_string(const std::string& key, const std::string& def) {
  const std::string* raw = find(key);
  const std::string value = raw != nullptr ? *raw : def;
  effective_[key] = value;
  return value;
}

std::string ConfigReader::require_string(const std::string& key) {
  const std::string* raw = find(key);
  if (raw == nullptr || raw->empty()) {
    throw ConfigError("missing required config key '" + key + "'");
  }
  effective_[key] = *raw;
  return *raw;
}

std::vector<double> ConfigReader::get_double_list(const std::string& key,
                                                  const std::vector<double>& def) {
  const std::string* raw = find(key);
  std::vector<double> values;
  if (raw == nullptr) {
    values = def;
  } else {
    std::istringstream ss(*raw);
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        values.push_back(parse_double(trim(token)));
      } catch (const std::invalid_argument&) {
        throw ConfigError("config key '" + key + "': expected comma-separated numbers");
      }
    }
    if (values.empty()) {
      throw ConfigError("config key '" + key + "': empty list");
    }
  }
  std::string echo;
  for (std::size_t i = 0; i < values.size(); ++i) {
    echo += (i != 0 ? "," : "") + format_double(values[i]);
  }
  effective_[key] = echo;
  return values;
}

std::size_t ConfigReader::get_execution_size(const std::string& key, std::size_t def) {
  const std::size_t value = get_size(key, def);
  effective_.erase(key);
  return value;
}

void ConfigReader::finish() const {
  for (const auto& [key, value] : cfg_.values()) {
    if (known_.count(key) == 0) {
      std::string allowed;
      for (const auto& k : known_) {
        allowed += (allowed.empty() ? "" : ", ") + k;
      }
      throw ConfigError("unknown config key '" + key + "' (known keys: " + allowed +
                        ")");
    }
  }
}

std::vector<std::string> ConfigReader::echo() const {
  std::vector<std::string> out;
  out.reserve(effective_.size());
  for (const auto& [key, value] : effective_) {
    out.push_back(key + "=" + value);
  }
  return out;
}

}  // namespace wetbeam::tools
