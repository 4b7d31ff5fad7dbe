#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptctl/simulate.hpp"
#include "ptctl/synthesis.hpp"

namespace ptctl {

/// Result of a named scenario run: the artifact files written (CSV tables
/// and any derived SVG plots), in write order.
struct ScenarioResult {
  std::string name;
  std::vector<std::string> artifacts;
};

/// The named studies this tool reproduces. Each is fully deterministic:
/// fixed grids, fixed parameters, no randomness; two runs produce
/// byte-identical artifacts.
///
///   motivating-first-order   scalar prescribed-time law u = -kappa(t) x
///   fig2-linear-tstop        stop-early study of the same law: x(t_stop)
///                            scales linearly with x0
///   fig3-kamal-tstop         stop-early study of the bounded-magnitude
///                            exponential law: x(t_stop) grows with x0
///   fig5-energy-sweep        energy-vs-alpha sweep of the first-order
///                            polynomial fixed-time redesign
///   fig6-second-order-compare  second-order sliding design, autonomous vs
///                            bounded-time-varying-gain redesign under
///                            d = sin t
///   fig7-prescribed-pulse    near-terminal measurement-pulse probe of the
///                            unbounded-gain second-order law
///   fig8-bounded-gain-pulse  the same probe on the bounded-gain design
std::vector<std::string> scenario_names();

/// Runs one scenario into out_dir (created if missing). `overrides` are
/// scenario-specific key=value pairs (e.g. Tc, h, x0); an unknown key or
/// unknown scenario raises config_error.
ScenarioResult run_scenario(const std::string& name,
                            const std::vector<std::pair<std::string, std::string>>&
                                overrides,
                            const std::string& out_dir);

/// One row of an energy sweep.
struct SweepRow {
  double alpha = 0.0;
  double energy = 0.0;   ///< E at the end of the run
  double sup_u = 0.0;
  std::optional<double> settling;  ///< observed settling time, if reached
  double kappa_max = 0.0;          ///< closed-form gain bound for this alpha
};

struct SweepResult {
  std::vector<SweepRow> rows;  ///< sorted by alpha
};

/// Re-synthesizes the base controller for each alpha (same aux law, same Tc
/// and rho, default beta, Delta = 0), simulates from x0, and collects
/// energy / sup|u| / settling / gain-bound metrics. Requires a finite
/// auxiliary horizon and a positive, sorted alpha list. A failure in any
/// per-alpha run aborts with the offending alpha in the message.
SweepResult energy_sweep(const SynthesizedController& base,
                         const std::vector<double>& alphas,
                         std::span<const double> x0, const SimConfig& cfg);

/// One row of a measurement-pulse probe.
struct PeakRow {
  double t_d = 0.0;
  double peak = 0.0;  ///< peak |x_n| after the pulse onset, full step rate
};

/// For each onset time t_d (strictly increasing, all < Tc), runs the closed
/// loop from x0 with a rectangular pulse of the given height and width
/// injected into the controller's first measurement --
/// u = phi(x + (mu(t), 0, ...), t) -- while the plant integrates the true
/// state, and records the peak |x_n| over all steps after the onset.
/// `plant_dist` perturbs the plant itself (default none). Pulse widths below
/// 2h are refused (invalid_argument).
std::vector<PeakRow> uniform_stability_probe(
    const SynthesizedController& ctrl, std::span<const double> x0,
    const std::vector<double>& t_d_list, double height, double width,
    const SimConfig& cfg, const Disturbance& plant_dist = zero_disturbance());

/// Renders a CSV artifact as a deterministic 800x400 SVG line plot.
///
/// Specs for trajectory CSVs (header t,x1,...,xn,u,kappa,E): "states" (one
/// polyline per state), "control", "gain", "energy" (plots sqrt(E)),
/// "energy-log" (sqrt(E) on a log axis). Spec "series" renders any CSV as
/// one polyline per column against the first column. Malformed CSV, unknown
/// spec, or a CSV without data rows raise config_error.
void export_svg(const std::string& csv_path, const std::string& spec,
                const std::string& out_path);

}  // namespace ptctl
