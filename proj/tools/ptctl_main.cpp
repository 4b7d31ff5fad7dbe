// ptctl: command-line front end for the predefined-time controller toolkit.
//
//   ptctl run <scenario> [--set key=value ...] [--out DIR]
//   ptctl sweep-energy --config FILE --alphas LIST --x0 LIST
//   ptctl probe-uniform --config FILE --td LIST --x0 LIST [--height H]
//                       [--width W] [--plant-sin AMP]
//   ptctl plot CSV --spec NAME [--out FILE]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ptctl/config.hpp"
#include "ptctl/errors.hpp"
#include "ptctl/experiments.hpp"
#include "ptctl/simulate.hpp"

namespace {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& text,
                               const std::string& what) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string cell =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      throw ptctl::config_error(what + ": '" + cell + "' is not a number");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ptctl::config_error(what + ": empty list");
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_sets(
    const std::vector<std::string>& sets) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& s : sets) {
    const size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ptctl::config_error("--set expects key=value, got '" + s + "'");
    }
    out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
  }
  return out;
}

/// Optional [sim] section of a controller config file:
/// h, horizon, stride, settle_eps, sign_layer, method (euler | rk4).
ptctl::SimConfig sim_from_config(const ptctl::Config& cfg,
                                 double default_horizon) {
  ptctl::SimConfig sim;
  sim.horizon = default_horizon;
  sim.h = cfg.get_double_or("sim", "h", sim.h);
  sim.horizon = cfg.get_double_or("sim", "horizon", sim.horizon);
  sim.record_stride = static_cast<int>(
      cfg.get_double_or("sim", "stride", sim.record_stride));
  sim.settle_eps = cfg.get_double_or("sim", "settle_eps", sim.settle_eps);
  sim.sign_layer = cfg.get_double_or("sim", "sign_layer", sim.sign_layer);
  const std::string method = cfg.get_or("sim", "method", "euler");
  if (method == "euler") {
    sim.method = ptctl::SimConfig::Method::euler;
  } else if (method == "rk4") {
    sim.method = ptctl::SimConfig::Method::rk4;
  } else {
    throw ptctl::config_error("[sim] method must be euler or rk4, got '" +
                              method + "'");
  }
  return sim;
}

int cmd_run(const std::string& scenario, const std::vector<std::string>& sets,
            const std::string& out_dir) {
  const ptctl::ScenarioResult result =
      ptctl::run_scenario(scenario, parse_sets(sets), out_dir);
  for (const std::string& artifact : result.artifacts) {
    std::cout << artifact << "\n";
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& alphas_text,
              const std::string& x0_text) {
  const ptctl::Config cfg = ptctl::load_config(config_path);
  const auto ctrl = ptctl::controller_from_config(cfg);
  const std::vector<double> alphas = parse_list(alphas_text, "--alphas");
  const std::vector<double> x0 = parse_list(x0_text, "--x0");
  const ptctl::SimConfig sim = sim_from_config(cfg, ctrl.ts.Tc);

  const ptctl::SweepResult sweep =
      ptctl::energy_sweep(ctrl, alphas, x0, sim);
  std::cout << "alpha,energy,sup_u,settling,kappa_max\n";
  for (const ptctl::SweepRow& row : sweep.rows) {
    std::cout << fmt12(row.alpha) << "," << fmt12(row.energy) << ","
              << fmt12(row.sup_u) << ","
              << (row.settling ? fmt12(*row.settling) : std::string()) << ","
              << fmt12(row.kappa_max) << "\n";
  }
  return 0;
}

int cmd_probe(const std::string& config_path, const std::string& td_text,
              const std::string& x0_text, double height, double width,
              double plant_sin) {
  const ptctl::Config cfg = ptctl::load_config(config_path);
  const auto ctrl = ptctl::controller_from_config(cfg);
  const std::vector<double> t_d = parse_list(td_text, "--td");
  const std::vector<double> x0 = parse_list(x0_text, "--x0");
  ptctl::SimConfig sim = sim_from_config(cfg, 1.05 * ctrl.ts.Tc);
  if (width == 0.0) width = 0.001 * ctrl.ts.Tc;

  const ptctl::Disturbance plant =
      plant_sin != 0.0 ? ptctl::sinusoid_disturbance(plant_sin, 1.0)
                       : ptctl::zero_disturbance();
  const auto peaks =
      ptctl::uniform_stability_probe(ctrl, x0, t_d, height, width, sim, plant);
  std::cout << "t_d,peak\n";
  for (const ptctl::PeakRow& row : peaks) {
    std::cout << fmt12(row.t_d) << "," << fmt12(row.peak) << "\n";
  }
  return 0;
}

int cmd_plot(const std::string& csv, const std::string& spec,
             std::string out) {
  if (out.empty()) {
    out = std::filesystem::path(csv).replace_extension(".svg").string();
  }
  ptctl::export_svg(csv, spec, out);
  std::cout << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Synthesis and simulation toolkit for predefined-time controllers "
      "with bounded time-varying gains on perturbed integrator chains."};
  app.require_subcommand(1);

  // run ----------------------------------------------------------------
  auto* run = app.add_subcommand(
      "run", "Run a named scenario and write its CSV/SVG artifacts");
  std::string scenario;
  std::vector<std::string> sets;
  std::string out_dir = "out";
  run->add_option("scenario", scenario,
                  "one of: motivating-first-order, fig2-linear-tstop, "
                  "fig3-kamal-tstop, fig5-energy-sweep, "
                  "fig6-second-order-compare, fig7-prescribed-pulse, "
                  "fig8-bounded-gain-pulse")
      ->required();
  run->add_option("--set", sets, "scenario override key=value (repeatable)");
  run->add_option("--out", out_dir, "output directory (default: out)");

  // sweep-energy ---------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep-energy",
      "Re-synthesize a controller across alphas and tabulate control "
      "energy, peak control, settling and the gain bound (CSV on stdout)");
  std::string sweep_config, sweep_alphas, sweep_x0;
  sweep->add_option("--config", sweep_config, "controller config file")
      ->required();
  sweep->add_option("--alphas", sweep_alphas, "comma-separated alpha list")
      ->required();
  sweep->add_option("--x0", sweep_x0, "comma-separated initial state")
      ->required();

  // probe-uniform ----------------------------------------------------------
  auto* probe = app.add_subcommand(
      "probe-uniform",
      "Inject a near-terminal measurement pulse at each onset time and "
      "tabulate the peak |x_n| response (CSV on stdout)");
  std::string probe_config, probe_td, probe_x0;
  double probe_height = 0.1;
  double probe_width = 0.0;
  double probe_plant_sin = 0.0;
  probe->add_option("--config", probe_config, "controller config file")
      ->required();
  probe->add_option("--td", probe_td, "comma-separated pulse onset times")
      ->required();
  probe->add_option("--x0", probe_x0, "comma-separated initial state")
      ->required();
  probe->add_option("--height", probe_height, "pulse height (default 0.1)");
  probe->add_option("--width", probe_width,
                    "pulse width (default Tc/1000; must be >= 2h)");
  probe->add_option("--plant-sin", probe_plant_sin,
                    "amplitude of an additional sin(t) plant disturbance");

  // plot -------------------------------------------------------------
  auto* plot = app.add_subcommand(
      "plot", "Render a CSV artifact as a deterministic SVG line plot");
  std::string plot_csv, plot_spec, plot_out;
  plot->add_option("csv", plot_csv, "input CSV file")->required();
  plot->add_option("--spec", plot_spec,
                   "states | control | gain | energy | energy-log | series")
      ->required();
  plot->add_option("--out", plot_out,
                   "output SVG path (default: CSV path with .svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints the message or requested help
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(scenario, sets, out_dir);
    if (sweep->parsed()) return cmd_sweep(sweep_config, sweep_alphas, sweep_x0);
    if (probe->parsed()) {
      return cmd_probe(probe_config, probe_td, probe_x0, probe_height,
                       probe_width, probe_plant_sin);
    }
    if (plot->parsed()) return cmd_plot(plot_csv, plot_spec, plot_out);
    std::cerr << "no subcommand given\n";
    return 2;
  } catch (const ptctl::numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const ptctl::config_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
}
