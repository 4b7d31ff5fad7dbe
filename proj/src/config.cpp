#include "ptctl/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ptctl/errors.hpp"

namespace ptctl {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& where, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw config_error(where + ": '" + text + "' is not a number");
  }
  return v;
}

}  // namespace

bool Config::has(const std::string& section, const std::string& key) const {
  for (const auto& [name, entries] : sections) {
    if (name != section) continue;
    for (const auto& [k, v] : entries) {
      if (k == key) return true;
    }
  }
  return false;
}

const std::string& Config::get(const std::string& section,
                               const std::string& key) const {
  for (const auto& [name, entries] : sections) {
    if (name != section) continue;
    for (const auto& [k, v] : entries) {
      if (k == key) return v;
    }
  }
  throw config_error("missing key '" + key + "' in section [" + section + "]");
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

double Config::get_double(const std::string& section,
                          const std::string& key) const {
  return parse_double("[" + section + "] " + key, get(section, key));
}

double Config::get_double_or(const std::string& section,
                             const std::string& key, double fallback) const {
  if (!has(section, key)) return fallback;
  return get_double(section, key);
}

void Config::set(const std::string& section, const std::string& key,
                 const std::string& value) {
  for (auto& [name, entries] : sections) {
    if (name != section) continue;
    for (auto& [k, v] : entries) {
      if (k == key) {
        v = value;
        return;
      }
    }
    entries.emplace_back(key, value);
    return;
  }
  sections.emplace_back(section, Section{{key, value}});
}

void Config::set_double(const std::string& section, const std::string& key,
                        double value) {
  set(section, key, fmt_double(value));
}

Config parse_config(std::string_view text) {
  Config cfg;
  Config::Section* current = nullptr;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    // Strip comments introduced by '#' or ';'.
    const size_t hash = raw.find_first_of("#;");
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw config_error("line " + std::to_string(line_no) +
                           ": malformed section header");
      }
      const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (name.empty()) {
        throw config_error("line " + std::to_string(line_no) +
                           ": empty section name");
      }
      cfg.sections.emplace_back(name, Config::Section{});
      current = &cfg.sections.back().second;
      continue;
    }

    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw config_error("line " + std::to_string(line_no) +
                         ": expected key = value");
    }
    if (current == nullptr) {
      throw config_error("line " + std::to_string(line_no) +
                         ": key outside any [section]");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      throw config_error("line " + std::to_string(line_no) + ": empty key");
    }
    for (const auto& [k, v] : *current) {
      if (k == key) {
        throw config_error("line " + std::to_string(line_no) +
                           ": duplicate key '" + key + "'");
      }
    }
    current->emplace_back(key, value);
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string write_config(const Config& config) {
  std::string out;
  bool first = true;
  for (const auto& [name, entries] : config.sections) {
    if (!first) out += "\n";
    first = false;
    out += "[" + name + "]\n";
    for (const auto& [k, v] : entries) {
      out += k + " = " + v + "\n";
    }
  }
  return out;
}

Config controller_to_config(const SynthesizedController& ctrl) {
  Config cfg;
  cfg.set_double("timescale", "Tc", ctrl.ts.Tc);
  cfg.set_double("timescale", "alpha", ctrl.ts.alpha);
  cfg.set_double("basis", "rho", ctrl.basis.rho);
  cfg.set_double("basis", "beta", ctrl.beta);

  if (ctrl.aux.kind == "custom") {
    throw config_error("a custom auxiliary law cannot be serialized");
  }
  cfg.set("aux", "kind", ctrl.aux.kind);
  if (ctrl.aux.kind == "linear") {
    cfg.set_double("aux", "n", ctrl.aux.n);
  }
  for (const auto& [k, v] : ctrl.aux.params) {
    cfg.set_double("aux", k, v);
  }

  const auto& term = ctrl.terminal;
  if (term.kind == "custom") {
    throw config_error("a custom terminal law cannot be serialized");
  }
  cfg.set("terminal", "kind", term.kind);
  if (term.kind == "sign-relay") {
    cfg.set_double("terminal", "magnitude", term.magnitude);
  } else if (term.kind == "sliding") {
    for (const auto& [k, v] : term.sliding.params) {
      cfg.set_double("terminal", k, v);
    }
  }
  cfg.set_double("terminal", "delta", ctrl.delta);
  return cfg;
}

namespace {

AuxController aux_from_config(const Config& cfg) {
  const std::string kind = cfg.get("aux", "kind");
  if (kind == "poly-fixed-time") {
    PolyParams p;
    p.a = cfg.get_double("aux", "a");
    p.b = cfg.get_double("aux", "b");
    p.p = cfg.get_double("aux", "p");
    p.q = cfg.get_double("aux", "q");
    p.k = cfg.get_double("aux", "k");
    p.zeta = cfg.get_double_or("aux", "zeta", 0.0);
    return poly_fixed_time(p);
  }
  if (kind == "second-order-sliding") {
    return second_order_sliding(
        cfg.get_double("aux", "a1"), cfg.get_double("aux", "b1"),
        cfg.get_double("aux", "a2"), cfg.get_double("aux", "b2"),
        cfg.get_double("aux", "p"), cfg.get_double("aux", "q"),
        cfg.get_double("aux", "k"), cfg.get_double("aux", "Tf1"),
        cfg.get_double("aux", "Tf2"), cfg.get_double_or("aux", "zeta", 0.0));
  }
  if (kind == "linear") {
    const int n = static_cast<int>(cfg.get_double("aux", "n"));
    if (n < 1) throw config_error("[aux] n must be at least 1");
    std::vector<double> gains;
    gains.reserve(n);
    for (int i = 1; i <= n; ++i) {
      gains.push_back(cfg.get_double("aux", "g" + std::to_string(i)));
    }
    return linear_controller(std::move(gains));
  }
  if (kind == "bounded-exp") {
    return bounded_exp_controller(cfg.get_double("aux", "c"));
  }
  throw config_error("unknown auxiliary law kind '" + kind + "'");
}

std::optional<TerminalController> terminal_from_config(const Config& cfg) {
  if (!cfg.has("terminal", "kind")) return std::nullopt;
  const std::string kind = cfg.get("terminal", "kind");
  if (kind == "sign-relay") {
    return sign_relay_terminal(cfg.get_double("terminal", "magnitude"));
  }
  if (kind == "sliding") {
    return sliding_terminal(second_order_sliding(
        cfg.get_double("terminal", "a1"), cfg.get_double("terminal", "b1"),
        cfg.get_double("terminal", "a2"), cfg.get_double("terminal", "b2"),
        cfg.get_double("terminal", "p"), cfg.get_double("terminal", "q"),
        cfg.get_double("terminal", "k"), cfg.get_double("terminal", "Tf1"),
        cfg.get_double("terminal", "Tf2"),
        cfg.get_double_or("terminal", "zeta", 0.0)));
  }
  if (kind == "zero-hold") {
    return zero_hold_terminal();
  }
  throw config_error("unknown terminal law kind '" + kind + "'");
}

}  // namespace

SynthesizedController controller_from_config(const Config& cfg) {
  // Validation failures inside the factories (bad polynomial exponents,
  // nonpositive horizons, ...) concern config content here, so they
  // surface as config_error like every other malformed-config problem.
  try {
    AuxController aux = aux_from_config(cfg);
    const double Tc = cfg.get_double("timescale", "Tc");
    const double alpha = cfg.get_double("timescale", "alpha");
    const double rho = cfg.get_double("basis", "rho");
    std::optional<double> beta;
    if (cfg.has("basis", "beta")) beta = cfg.get_double("basis", "beta");
    const double delta = cfg.get_double_or("terminal", "delta", 0.0);
    std::optional<TerminalController> terminal = terminal_from_config(cfg);
    return synthesize(std::move(aux), Tc, alpha, rho, beta,
                      std::move(terminal), delta);
  } catch (const std::invalid_argument& e) {
    throw config_error(std::string("invalid controller config: ") + e.what());
  } catch (const std::domain_error& e) {
    throw config_error(std::string("invalid controller config: ") + e.what());
  }
}

}  // namespace ptctl
