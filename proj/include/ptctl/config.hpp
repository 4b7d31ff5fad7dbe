#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptctl/synthesis.hpp"

namespace ptctl {

/// Plain-text configuration: `[section]` headers over `key = value` lines.
/// `#` and `;` start comments; blank lines are ignored; keys are unique per
/// section; order is preserved for deterministic round-trips.
struct Config {
  using Section = std::vector<std::pair<std::string, std::string>>;

  std::vector<std::pair<std::string, Section>> sections;

  bool has(const std::string& section, const std::string& key) const;
  /// Throws config_error when absent.
  const std::string& get(const std::string& section,
                         const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  void set(const std::string& section, const std::string& key,
           const std::string& value);
  void set_double(const std::string& section, const std::string& key,
                  double value);
};

/// Parses config text. Throws config_error with a line number on malformed
/// input (text before any section header, missing '=', duplicate keys).
Config parse_config(std::string_view text);

/// Reads and parses a config file. Throws config_error if unreadable.
Config load_config(const std::string& path);

/// Serializes with one `[section]` block per entry, `key = value` lines,
/// Unix newlines. parse_config(write_config(c)) == c.
std::string write_config(const Config& config);

/// Controller <-> config round-trip. Sections: [timescale] Tc, alpha;
/// [basis] rho, beta; [aux] kind plus the builder's parameters; [terminal]
/// kind, its parameters, and delta. Only stock auxiliary/terminal kinds
/// serialize; custom closures raise config_error.
Config controller_to_config(const SynthesizedController& ctrl);
SynthesizedController controller_from_config(const Config& config);

}  // namespace ptctl
