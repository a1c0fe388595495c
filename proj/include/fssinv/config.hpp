#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fssinv {

/// One `[section]` of a plain-text key=value configuration file.  Sections
/// may repeat (the sweep format uses one [row] section per sweep row).
struct ConfigSection {
  std::string name;
  int line = 0;
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* find(std::string_view key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

/// Parses `[section]` / `key=value` text.  `#` starts a comment; blank lines
/// are skipped.  Errors name the offending line.
inline std::vector<ConfigSection> parse_config_text(std::istream& in,
                                                    const std::string& origin) {
  std::vector<ConfigSection> sections;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = detail::trim(line);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']')
        throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                 ": malformed section header");
      sections.push_back({detail::trim(text.substr(1, text.size() - 2)), lineno, {}});
      continue;
    }
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": expected key=value");
    if (sections.empty())
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": key=value before any [section]");
    sections.back().entries.emplace_back(detail::trim(text.substr(0, eq)),
                                         detail::trim(text.substr(eq + 1)));
  }
  return sections;
}

inline std::vector<ConfigSection> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_config_text(in, path);
}

inline double config_double(const ConfigSection& sec, std::string_view key) {
  const std::string* raw = sec.find(key);
  if (!raw)
    throw std::runtime_error("config section [" + sec.name + "] missing key '" +
                             std::string(key) + "'");
  std::size_t pos = 0;
  const double v = std::stod(*raw, &pos);
  if (pos != raw->size())
    throw std::runtime_error("config key '" + std::string(key) +
                             "': trailing junk in '" + *raw + "'");
  return v;
}

inline double config_double_or(const ConfigSection& sec, std::string_view key,
                               double fallback) {
  return sec.find(key) ? config_double(sec, key) : fallback;
}

/// Parses a whitespace- or comma-separated list of doubles.
inline std::vector<double> parse_double_list(const std::string& raw) {
  std::string cleaned = raw;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<double> values;
  double v;
  while (in >> v) values.push_back(v);
  if (!in.eof())
    throw std::runtime_error("malformed numeric list: '" + raw + "'");
  return values;
}

inline std::vector<double> config_double_list(const ConfigSection& sec,
                                              std::string_view key) {
  const std::string* raw = sec.find(key);
  if (!raw)
    throw std::runtime_error("config section [" + sec.name + "] missing key '" +
                             std::string(key) + "'");
  return parse_double_list(*raw);
}

}  // namespace fssinv
