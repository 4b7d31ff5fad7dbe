#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptctl/errors.hpp"
#include "ptctl/experiments.hpp"

namespace ptctl {

namespace {

namespace fs = std::filesystem;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_override(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw config_error("override " + key + "=" + text + " is not a number");
  }
  return v;
}

/// Shared knobs every scenario accepts, plus a per-scenario whitelist of
/// extra keys. Unknown keys are a configuration error, not a silent no-op.
struct Overrides {
  std::map<std::string, double> values;

  static Overrides parse(
      const std::string& scenario,
      const std::vector<std::pair<std::string, std::string>>& raw,
      const std::vector<std::string>& allowed) {
    Overrides o;
    for (const auto& [key, text] : raw) {
      const bool known =
          key == "h" || key == "stride" ||
          std::find(allowed.begin(), allowed.end(), key) != allowed.end();
      if (!known) {
        throw config_error("scenario '" + scenario +
                           "' has no override named '" + key + "'");
      }
      if (!o.values.emplace(key, parse_override(key, text)).second) {
        throw config_error("override '" + key + "' given twice");
      }
    }
    return o;
  }

  double get(const std::string& key, double fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }

  void apply_sim(SimConfig& cfg) const {
    cfg.h = get("h", cfg.h);
    cfg.record_stride = static_cast<int>(get("stride", cfg.record_stride));
  }
};

/// Collects artifact paths and owns the output directory.
struct Emitter {
  fs::path dir;
  std::vector<std::string> artifacts;

  explicit Emitter(const std::string& out_dir) : dir(out_dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      throw config_error("cannot create output directory " + out_dir + ": " +
                         ec.message());
    }
  }

  std::string path(const std::string& name) const {
    return (dir / name).string();
  }

  void trajectory(const std::string& name, const Trajectory& traj) {
    const std::string p = path(name);
    std::ofstream os(p, std::ios::binary);
    if (!os) throw config_error("cannot write " + p);
    write_csv(traj, os);
    artifacts.push_back(p);
  }

  /// Writes a small summary table; cells are preformatted strings so a row
  /// can hold labels and blanks (e.g. "never settled") next to numbers.
  void table(const std::string& name, const std::string& header,
             const std::vector<std::vector<std::string>>& rows) {
    const std::string p = path(name);
    std::ofstream os(p, std::ios::binary);
    if (!os) throw config_error("cannot write " + p);
    os << header << "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << row[i];
      }
      os << "\n";
    }
    artifacts.push_back(p);
  }

  void svg(const std::string& csv_name, const std::string& spec,
           const std::string& svg_name) {
    const std::string out = path(svg_name);
    export_svg(path(csv_name), spec, out);
    artifacts.push_back(out);
  }
};

std::string opt_cell(const std::optional<double>& v) {
  return v ? fmt12(*v) : std::string();
}

// ---------------------------------------------------------------------------
// motivating-first-order: u = -kappa(t) x on the scalar plant, three starts.
// The gain is the unbounded prescribed-time one (linear auxiliary law, so
// the stretched system only settles asymptotically and eta = 1).
// ---------------------------------------------------------------------------
ScenarioResult run_motivating(const Overrides& o, Emitter& em) {
  const double Tc = o.get("Tc", 1.0);
  const double alpha = o.get("alpha", 1.0);
  const auto ctrl = synthesize(linear_controller({1.0}), Tc, alpha, 0.0,
                               std::nullopt, zero_hold_terminal());

  SimConfig cfg;
  cfg.h = 1e-5;
  cfg.horizon = 1.2 * Tc;
  o.apply_sim(cfg);

  std::vector<std::vector<std::string>> rows;
  const std::vector<std::pair<double, std::string>> starts = {
      {5.0, "5"}, {-5.0, "m5"}, {100.0, "100"}};
  for (const auto& [x0, label] : starts) {
    const double state[] = {x0};
    const Trajectory traj = simulate(ctrl, state, zero_disturbance(), cfg);
    em.trajectory("motivating_x0_" + label + ".csv", traj);
    rows.push_back({fmt12(x0), fmt12(ctrl.predicted_settling_bound(state)),
                    opt_cell(detect_settling(traj, cfg.settle_eps)),
                    fmt12(traj.sup_u), fmt12(traj.energy.back())});
  }
  em.table("motivating_summary.csv",
           "x0,predicted_bound,observed_settling,sup_u,energy", rows);
  em.svg("motivating_x0_100.csv", "states", "motivating_states.svg");
  em.svg("motivating_x0_100.csv", "gain", "motivating_gain.svg");
  return {"motivating-first-order", std::move(em.artifacts)};
}

// ---------------------------------------------------------------------------
// fig2-linear-tstop: stop the run at t_stop < Tc and report the residual
// x(t_stop). For the linear law the residual is exactly proportional to x0
// (ratio = 1 - t_stop/Tc), which is what makes the regulation non-uniform:
// any fixed stop time leaves an error that scales with the start.
// ---------------------------------------------------------------------------
ScenarioResult run_fig2(const Overrides& o, Emitter& em) {
  const double Tc = 1.0;
  const double t_stop = o.get("t_stop", 0.9);
  if (!(t_stop > 0.0) || !(t_stop < Tc)) {
    throw config_error("t_stop must lie strictly inside (0, Tc)");
  }
  const auto ctrl = synthesize(linear_controller({1.0}), Tc, 1.0, 0.0,
                               std::nullopt, zero_hold_terminal());

  SimConfig cfg;
  cfg.h = 1e-5;
  cfg.horizon = t_stop;
  o.apply_sim(cfg);

  std::vector<std::vector<std::string>> rows;
  for (int x0 = 1; x0 <= 10; ++x0) {
    const double state[] = {static_cast<double>(x0)};
    const Trajectory traj = simulate(ctrl, state, zero_disturbance(), cfg);
    const double residual = traj.state(traj.rows() - 1)[0];
    rows.push_back({fmt12(x0), fmt12(residual), fmt12(residual / x0)});
    if (x0 == 10) em.trajectory("fig2_x0_10.csv", traj);
  }
  em.table("fig2_residuals.csv", "x0,x_stop,ratio", rows);
  em.svg("fig2_residuals.csv", "series", "fig2_residuals.svg");
  return {"fig2-linear-tstop", std::move(em.artifacts)};
}

// ---------------------------------------------------------------------------
// fig3-kamal-tstop: the same stop-early study for the bounded-magnitude
// exponential law u = -kappa(t) c (1 - e^-|x|) sign x. Because |v| < c, the
// loop can shed at most ~c units of ln|x| before t_stop; the residual
// therefore grows without bound in x0 instead of scaling linearly.
// ---------------------------------------------------------------------------
ScenarioResult run_fig3(const Overrides& o, Emitter& em) {
  const double Tc = 1.0;
  const double t_stop = o.get("t_stop", 0.9);
  const double c = o.get("c", 10.0);
  if (!(t_stop > 0.0) || !(t_stop < Tc)) {
    throw config_error("t_stop must lie strictly inside (0, Tc)");
  }
  const auto ctrl = synthesize(bounded_exp_controller(c), Tc, 1.0, 0.0,
                               std::nullopt, zero_hold_terminal());

  SimConfig cfg;
  cfg.h = 1e-5;
  cfg.horizon = t_stop;
  o.apply_sim(cfg);

  std::vector<std::vector<std::string>> rows;
  for (const double x0 : {1.0, 5.0, 10.0, 25.0, 50.0, 100.0}) {
    const double state[] = {x0};
    const Trajectory traj = simulate(ctrl, state, zero_disturbance(), cfg);
    const double residual = traj.state(traj.rows() - 1)[0];
    rows.push_back({fmt12(x0), fmt12(residual)});
    if (x0 == 100.0) em.trajectory("fig3_x0_100.csv", traj);
  }
  em.table("fig3_residuals.csv", "x0,x_stop", rows);
  em.svg("fig3_residuals.csv", "series", "fig3_residuals.svg");
  return {"fig3-kamal-tstop", std::move(em.artifacts)};
}

// ---------------------------------------------------------------------------
// fig5-energy-sweep: control energy of the first-order polynomial redesign
// as a function of alpha. Small alpha wastes energy (the gain is frozen near
// its initial value), large alpha buys little and explodes the gain bound;
// the interesting regime is the interior minimum.
// ---------------------------------------------------------------------------
ScenarioResult run_fig5(const Overrides& o, Emitter& em) {
  const double x0 = o.get("x0", 100.0);
  PolyParams params;
  params.a = 4.0;
  params.b = 0.25;
  params.p = 0.9;
  params.q = 1.1;
  params.k = 1.0;
  params.zeta = 0.0;
  const auto base = synthesize(poly_fixed_time(params), 1.0, 0.5, 0.0);

  SimConfig cfg;
  cfg.h = 1e-4;
  cfg.horizon = base.ts.Tc;
  o.apply_sim(cfg);

  const std::vector<double> alphas = {0.001, 0.1, 0.5, 1.0, 1.5};
  const double state[] = {x0};
  const SweepResult sweep = energy_sweep(base, alphas, state, cfg);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> energy_rows;
  for (const SweepRow& r : sweep.rows) {
    rows.push_back({fmt12(r.alpha), fmt12(r.energy), fmt12(r.sup_u),
                    opt_cell(r.settling), fmt12(r.kappa_max)});
    energy_rows.push_back({fmt12(r.alpha), fmt12(r.energy)});
  }
  em.table("fig5_sweep.csv", "alpha,energy,sup_u,settling,kappa_max", rows);
  em.table("fig5_energy.csv", "alpha,energy", energy_rows);
  em.svg("fig5_energy.csv", "series", "fig5_energy.svg");
  return {"fig5-energy-sweep", std::move(em.artifacts)};
}

// ---------------------------------------------------------------------------
// fig6-second-order-compare: the stock second-order sliding law run as-is
// (fixed-time, horizon Tf = 10) against its bounded-gain redesign
// (alpha = 0.5, rho = n = 2, Tc = 10), both under d = sin t from (50, 50).
// The redesign spends a fraction of the energy and peak control.
// ---------------------------------------------------------------------------
ScenarioResult run_fig6(const Overrides& o, Emitter& em) {
  const AuxController aux =
      second_order_sliding(4.0, 0.25, 4.0, 0.25, 0.5, 1.0, 1.5, 5.0, 5.0, 1.0);
  const double Tc = 10.0;
  // Autonomous leg: alpha = 0 makes the time scale the identity (up to the
  // Tf/Tc = 1 factor), so the hybrid runs the auxiliary law in real time;
  // the terminal keeps running it after Tc.
  const auto autonomous =
      synthesize(aux, Tc, 0.0, 2.0, std::nullopt,
                 custom_terminal([aux](std::span<const double> x) {
                   return aux.eval(x);
                 }),
                 1.0);
  const auto redesigned = synthesize(aux, Tc, 0.5, 2.0, std::nullopt,
                                     zero_hold_terminal(), 1.0);

  SimConfig cfg;
  cfg.h = 1e-4;
  cfg.horizon = Tc;
  cfg.record_stride = 10;
  cfg.settle_eps = 1e-2;
  o.apply_sim(cfg);

  const double x0[] = {50.0, 50.0};
  const Disturbance d = sinusoid_disturbance(1.0, 1.0);
  const Trajectory t_auto = simulate(autonomous, x0, d, cfg);
  const Trajectory t_red = simulate(redesigned, x0, d, cfg);
  em.trajectory("fig6_autonomous.csv", t_auto);
  em.trajectory("fig6_redesigned.csv", t_red);

  auto summary_row = [&](const char* name, const Trajectory& traj,
                         const SynthesizedController& ctrl) {
    return std::vector<std::string>{
        name, fmt12(traj.energy.back()), fmt12(traj.sup_u),
        opt_cell(detect_settling(traj, cfg.settle_eps)),
        fmt12(ctrl.predicted_settling_bound(x0))};
  };
  const std::vector<std::vector<std::string>> rows = {
      summary_row("autonomous", t_auto, autonomous),
      summary_row("redesigned", t_red, redesigned)};
  em.table("fig6_summary.csv",
           "design,energy,sup_u,observed_settling,predicted_bound", rows);
  em.svg("fig6_autonomous.csv", "control", "fig6_autonomous_control.svg");
  em.svg("fig6_redesigned.csv", "control", "fig6_redesigned_control.svg");
  em.svg("fig6_autonomous.csv", "energy", "fig6_autonomous_energy.svg");
  em.svg("fig6_redesigned.csv", "energy", "fig6_redesigned_energy.svg");
  return {"fig6-second-order-compare", std::move(em.artifacts)};
}

void write_peaks(Emitter& em, const std::string& name,
                 const std::vector<PeakRow>& peaks) {
  std::vector<std::vector<std::string>> rows;
  for (const PeakRow& r : peaks) {
    rows.push_back(
        {fmt12(r.t_d), fmt12(r.peak), fmt12(r.peak / peaks.front().peak)});
  }
  em.table(name + ".csv", "t_d,peak,peak_over_first", rows);
  em.svg(name + ".csv", "series", name + ".svg");
}

// ---------------------------------------------------------------------------
// fig7-prescribed-pulse: near-terminal measurement pulses against the
// unbounded-gain (prescribed-time) double-integrator law. The peak response
// grows without bound as the onset approaches Tc -- the loop is not
// uniformly stable in the onset time. The last two grid rows push the onset
// close enough to Tc to make the growth unmistakable.
// ---------------------------------------------------------------------------
ScenarioResult run_fig7(const Overrides& o, Emitter& em) {
  const double Tc = 10.0;
  const auto ctrl = synthesize(linear_controller({18.0, 9.0}), Tc, 1.0, 0.0,
                               std::nullopt, zero_hold_terminal());

  SimConfig cfg;
  cfg.h = 1e-5;
  cfg.horizon = 1.05 * Tc;
  o.apply_sim(cfg);

  const double x0[] = {10.0, 10.0};
  const std::vector<double> onsets = {9.95, 9.96, 9.97, 9.98, 9.99, 9.995};
  const auto peaks = uniform_stability_probe(ctrl, x0, onsets,
                                             o.get("height", 0.1),
                                             o.get("width", 0.001 * Tc), cfg);
  write_peaks(em, "fig7_peaks", peaks);
  return {"fig7-prescribed-pulse", std::move(em.artifacts)};
}

// ---------------------------------------------------------------------------
// fig8-bounded-gain-pulse: the same probe against the bounded-gain redesign
// (the fig6 controller), with the plant also carrying d = sin t. The peaks
// stay within a factor ~2 across the onset grid: bounded gain restores
// uniform robustness near the terminal time.
// ---------------------------------------------------------------------------
ScenarioResult run_fig8(const Overrides& o, Emitter& em) {
  const double Tc = 10.0;
  const AuxController aux =
      second_order_sliding(4.0, 0.25, 4.0, 0.25, 0.5, 1.0, 1.5, 5.0, 5.0, 1.0);
  const auto ctrl = synthesize(aux, Tc, 0.5, 2.0, std::nullopt,
                               zero_hold_terminal(), 1.0);

  SimConfig cfg;
  cfg.h = 1e-5;
  cfg.horizon = 1.02 * Tc;
  o.apply_sim(cfg);

  const double x0[] = {10.0, 10.0};
  const std::vector<double> onsets = {9.95, 9.96, 9.97, 9.98};
  const auto peaks = uniform_stability_probe(
      ctrl, x0, onsets, o.get("height", 0.1), o.get("width", 0.001 * Tc), cfg,
      sinusoid_disturbance(1.0, 1.0));
  write_peaks(em, "fig8_peaks", peaks);
  return {"fig8-bounded-gain-pulse", std::move(em.artifacts)};
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"motivating-first-order", "fig2-linear-tstop",
          "fig3-kamal-tstop",       "fig5-energy-sweep",
          "fig6-second-order-compare", "fig7-prescribed-pulse",
          "fig8-bounded-gain-pulse"};
}

ScenarioResult run_scenario(
    const std::string& name,
    const std::vector<std::pair<std::string, std::string>>& overrides,
    const std::string& out_dir) {
  Emitter em(out_dir);
  if (name == "motivating-first-order") {
    return run_motivating(Overrides::parse(name, overrides, {"Tc", "alpha"}),
                          em);
  }
  if (name == "fig2-linear-tstop") {
    return run_fig2(Overrides::parse(name, overrides, {"t_stop"}), em);
  }
  if (name == "fig3-kamal-tstop") {
    return run_fig3(Overrides::parse(name, overrides, {"t_stop", "c"}), em);
  }
  if (name == "fig5-energy-sweep") {
    return run_fig5(Overrides::parse(name, overrides, {"x0"}), em);
  }
  if (name == "fig6-second-order-compare") {
    return run_fig6(Overrides::parse(name, overrides, {}), em);
  }
  if (name == "fig7-prescribed-pulse") {
    return run_fig7(Overrides::parse(name, overrides, {"height", "width"}),
                    em);
  }
  if (name == "fig8-bounded-gain-pulse") {
    return run_fig8(Overrides::parse(name, overrides, {"height", "width"}),
                    em);
  }
  throw config_error("unknown scenario '" + name +
                     "'; available: motivating-first-order, "
                     "fig2-linear-tstop, fig3-kamal-tstop, fig5-energy-sweep, "
                     "fig6-second-order-compare, fig7-prescribed-pulse, "
                     "fig8-bounded-gain-pulse");
}

SweepResult energy_sweep(const SynthesizedController& base,
                         const std::vector<double>& alphas,
                         std::span<const double> x0, const SimConfig& cfg) {
  if (!base.aux.Tf.is_finite()) {
    throw std::invalid_argument(
        "energy sweep needs a finite auxiliary horizon (the gain bound "
        "kappa_max is infinite otherwise)");
  }
  if (alphas.empty()) {
    throw std::invalid_argument("energy sweep needs at least one alpha");
  }
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0) || !std::isfinite(alphas[i])) {
      throw std::invalid_argument("sweep alphas must be positive and finite");
    }
    if (i > 0 && !(alphas[i] > alphas[i - 1])) {
      throw std::invalid_argument("sweep alphas must be strictly increasing");
    }
  }

  SweepResult result;
  for (const double alpha : alphas) {
    const std::string where = "energy sweep at alpha=" + fmt12(alpha) + ": ";
    try {
      const auto ctrl =
          synthesize(base.aux, base.ts.Tc, alpha, base.basis.rho, std::nullopt,
                     base.terminal, base.delta);
      const Trajectory traj = simulate(ctrl, x0, zero_disturbance(), cfg);
      result.rows.push_back({alpha, traj.energy.back(), traj.sup_u,
                             detect_settling(traj, cfg.settle_eps),
                             ctrl.ts.kappa_max()});
    } catch (const numeric_error& e) {
      throw numeric_error(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    } catch (const std::domain_error& e) {
      throw std::domain_error(where + e.what());
    }
  }
  return result;
}

std::vector<PeakRow> uniform_stability_probe(
    const SynthesizedController& ctrl, std::span<const double> x0,
    const std::vector<double>& t_d_list, double height, double width,
    const SimConfig& cfg, const Disturbance& plant_dist) {
  cfg.validate();
  if (t_d_list.empty()) {
    throw std::invalid_argument("probe needs at least one onset time");
  }
  for (size_t i = 0; i < t_d_list.size(); ++i) {
    if (!(t_d_list[i] >= 0.0) || !(t_d_list[i] < ctrl.ts.Tc)) {
      throw std::invalid_argument("pulse onsets must lie in [0, Tc)");
    }
    if (i > 0 && !(t_d_list[i] > t_d_list[i - 1])) {
      throw std::invalid_argument("pulse onsets must be strictly increasing");
    }
  }
  if (!(width >= 2.0 * cfg.h)) {
    throw std::invalid_argument(
        "pulse width below two integration steps would be invisible to the "
        "fixed-step scheme; refusing to probe with it");
  }
  if (!std::isfinite(height)) {
    throw std::invalid_argument("pulse height must be finite");
  }

  const int n = ctrl.basis.n;
  std::vector<PeakRow> peaks;
  peaks.reserve(t_d_list.size());
  std::vector<double> perturbed(static_cast<size_t>(n), 0.0);

  for (const double t_d : t_d_list) {
    // The pulse corrupts the first measurement only; the plant state is
    // untouched. After Tc the terminal law sees the true state.
    const ControlLaw law = [&](std::span<const double> x, double t) {
      if (t >= ctrl.ts.Tc) return ctrl.terminal.eval(x);
      std::copy(x.begin(), x.end(), perturbed.begin());
      if (t_d <= t && t < t_d + width) perturbed[0] += height;
      return ctrl.eval_phi(perturbed, t);
    };

    double peak = 0.0;
    const StepObserver observer = [&](long step, double /*t_next*/,
                                      std::span<const double> x,
                                      double /*u*/) {
      // Measure strictly after the onset; the comparison uses the time of
      // the state the step advanced FROM, so the first post-onset step is
      // the one launched at t > t_d.
      const double t_from = static_cast<double>(step - 1) * cfg.h;
      if (t_from > t_d) peak = std::max(peak, std::fabs(x[x.size() - 1]));
    };

    simulate_law(n, law, x0, plant_dist, cfg, nullptr, observer);
    peaks.push_back({t_d, peak});
  }
  return peaks;
}

}  // namespace ptctl
