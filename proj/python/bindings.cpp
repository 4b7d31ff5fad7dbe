// Python bindings for the predefined-time controller toolkit.
//
// The module mirrors the C++ surface: time-scale construction, the stock
// auxiliary laws and their settling constants, controller synthesis, the
// fixed-step simulator, and the experiment layer (scenarios, energy sweep,
// pulse probe, SVG export).

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ptctl/config.hpp"
#include "ptctl/errors.hpp"
#include "ptctl/experiments.hpp"
#include "ptctl/simulate.hpp"
#include "ptctl/synthesis.hpp"

namespace py = pybind11;
using namespace ptctl;

namespace {

ControlLaw wrap_law(const py::function& f) {
  return [f](std::span<const double> x, double t) {
    const std::vector<double> state(x.begin(), x.end());
    return f(state, t).cast<double>();
  };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Synthesis and simulation of predefined-time controllers with bounded "
      "time-varying gains on perturbed integrator chains.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<config_error>(m, "ConfigError");
  py::register_exception<numeric_error>(m, "NumericError");

  // --- time scale -----------------------------------------------------
  py::class_<TimeScale>(m, "TimeScale")
      .def_readonly("Tc", &TimeScale::Tc)
      .def_readonly("alpha", &TimeScale::alpha)
      .def_readonly("eta", &TimeScale::eta)
      .def_property_readonly(
          "Tf", [](const TimeScale& ts) { return ts.Tf.value_or_infinity(); })
      .def("trivial", &TimeScale::trivial)
      .def("phi", &TimeScale::phi, py::arg("t"))
      .def("phi_inv", &TimeScale::phi_inv, py::arg("tau"))
      .def("kappa", &TimeScale::kappa, py::arg("t"))
      .def("kappa_max", &TimeScale::kappa_max)
      .def("settling_map", &TimeScale::settling_map, py::arg("tau"));

  m.def(
      "make_timescale",
      [](double Tc, double alpha, double Tf) {
        return make_timescale(Tc, alpha, Tf);
      },
      py::arg("Tc"), py::arg("alpha"),
      py::arg("Tf") = std::numeric_limits<double>::infinity(),
      "Time scale for terminal time Tc, growth rate alpha and auxiliary "
      "horizon Tf (infinite Tf gives the unbounded-gain prescribed case).");

  // --- auxiliary laws ----------------------------------------------------
  py::class_<AuxController>(m, "AuxController")
      .def_readonly("n", &AuxController::n)
      .def_readonly("kind", &AuxController::kind)
      .def_readonly("delta_tolerance", &AuxController::delta_tolerance)
      .def_readonly("discontinuous", &AuxController::discontinuous)
      .def_readonly("params", &AuxController::params)
      .def_property_readonly(
          "Tf",
          [](const AuxController& a) { return a.Tf.value_or_infinity(); })
      .def(
          "__call__",
          [](const AuxController& a, const std::vector<double>& z) {
            return a.eval(z);
          },
          py::arg("z"));

  m.def(
      "poly_fixed_time",
      [](double a, double b, double p, double q, double k, double zeta) {
        PolyParams prm;
        prm.a = a;
        prm.b = b;
        prm.p = p;
        prm.q = q;
        prm.k = k;
        prm.zeta = zeta;
        return poly_fixed_time(prm);
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"),
      py::arg("k") = 1.0, py::arg("zeta") = 0.0,
      "First-order polynomial fixed-time law "
      "v(x) = -((a|x|^p + b|x|^q)^k + zeta) sign x.");
  m.def("second_order_sliding", &second_order_sliding, py::arg("a1"),
        py::arg("b1"), py::arg("a2"), py::arg("b2"), py::arg("p"),
        py::arg("q"), py::arg("k"), py::arg("Tf1"), py::arg("Tf2"),
        py::arg("zeta"));
  m.def("linear_controller", &linear_controller, py::arg("gains"));
  m.def("bounded_exp_controller", &bounded_exp_controller, py::arg("c"));

  m.def(
      "gamma_first_order",
      [](double a, double b, double k, double p, double q) {
        return gamma_first_order(a, b, k, p, q);
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("p"), py::arg("q"),
      "Exact settling-time supremum of the polynomial fixed-time law.");
  m.def(
      "gamma_pair_second_order",
      [](double a1, double b1, double a2, double b2, double p, double q,
         double k) {
        PolyParams prm;
        prm.a = a2;
        prm.b = b2;
        prm.p = p;
        prm.q = q;
        prm.k = k;
        return gamma_pair_second_order(a1, b1, prm);
      },
      py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"),
      py::arg("p"), py::arg("q"), py::arg("k"),
      "(gamma1, gamma2) settling constants of the second-order design.");
  m.def("gamma_positive", &gamma_positive, py::arg("x"),
        "Gamma function for x > 0 (Lanczos).");

  // --- terminal laws ----------------------------------------------------
  py::class_<TerminalController>(m, "TerminalController")
      .def_readonly("kind", &TerminalController::kind)
      .def_readonly("magnitude", &TerminalController::magnitude)
      .def(
          "__call__",
          [](const TerminalController& t, const std::vector<double>& x) {
            return t.eval(x);
          },
          py::arg("x"));
  m.def("sign_relay_terminal", &sign_relay_terminal, py::arg("magnitude"));
  m.def("sliding_terminal", &sliding_terminal, py::arg("sos"));
  m.def("zero_hold_terminal", &zero_hold_terminal);
  m.def(
      "custom_terminal",
      [](const py::function& f) {
        return custom_terminal([f](std::span<const double> x) {
          const std::vector<double> state(x.begin(), x.end());
          return f(state).cast<double>();
        });
      },
      py::arg("fn"));

  // --- synthesis -----------------------------------------------------------
  py::class_<GainBasis>(m, "GainBasis")
      .def_readonly("n", &GainBasis::n)
      .def_readonly("rho", &GainBasis::rho)
      .def_readonly("alpha", &GainBasis::alpha)
      .def_readonly("feedback_row", &GainBasis::feedback_row)
      .def_readonly("d_exponents", &GainBasis::d_exponents);

  m.def("build_basis", &build_basis, py::arg("n"), py::arg("rho"),
        py::arg("alpha"));
  m.def(
      "z_from_x",
      [](const GainBasis& basis, double beta, double kappa,
         const std::vector<double>& x) {
        return z_from_x(basis, beta, kappa, x);
      },
      py::arg("basis"), py::arg("beta"), py::arg("kappa"), py::arg("x"));
  m.def(
      "x_from_z",
      [](const GainBasis& basis, double beta, double kappa,
         const std::vector<double>& z) {
        return x_from_z(basis, beta, kappa, z);
      },
      py::arg("basis"), py::arg("beta"), py::arg("kappa"), py::arg("z"));

  py::class_<SynthesizedController>(m, "SynthesizedController")
      .def_readonly("ts", &SynthesizedController::ts)
      .def_readonly("basis", &SynthesizedController::basis)
      .def_readonly("aux", &SynthesizedController::aux)
      .def_readonly("beta", &SynthesizedController::beta)
      .def_readonly("delta", &SynthesizedController::delta)
      .def_readonly("terminal", &SynthesizedController::terminal)
      .def("beta_lower_bound", &SynthesizedController::beta_lower_bound)
      .def(
          "eval_phi",
          [](const SynthesizedController& c, const std::vector<double>& x,
             double t) { return c.eval_phi(x, t); },
          py::arg("x"), py::arg("t"))
      .def(
          "eval_hybrid",
          [](const SynthesizedController& c, const std::vector<double>& x,
             double t) { return c.eval_hybrid(x, t); },
          py::arg("x"), py::arg("t"))
      .def(
          "predicted_settling_bound",
          [](const SynthesizedController& c, const std::vector<double>& x0) {
            return c.predicted_settling_bound(x0);
          },
          py::arg("x0"));

  m.def(
      "synthesize",
      [](AuxController aux, double Tc, double alpha, double rho,
         std::optional<double> beta, std::optional<TerminalController> term,
         double delta) {
        return synthesize(std::move(aux), Tc, alpha, rho, beta,
                          std::move(term), delta);
      },
      py::arg("aux"), py::arg("Tc"), py::arg("alpha"), py::arg("rho"),
      py::arg("beta") = std::nullopt, py::arg("terminal") = std::nullopt,
      py::arg("delta") = 0.0);

  // --- simulation -----------------------------------------------------
  py::enum_<SimConfig::Method>(m, "Method")
      .value("euler", SimConfig::Method::euler)
      .value("rk4", SimConfig::Method::rk4);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("h", &SimConfig::h)
      .def_readwrite("horizon", &SimConfig::horizon)
      .def_readwrite("sign_layer", &SimConfig::sign_layer)
      .def_readwrite("settle_eps", &SimConfig::settle_eps)
      .def_readwrite("record_stride", &SimConfig::record_stride)
      .def_readwrite("method", &SimConfig::method);

  py::class_<Disturbance>(m, "Disturbance")
      .def_readonly("delta", &Disturbance::delta)
      .def("__call__", &Disturbance::value, py::arg("t"));
  m.def("zero_disturbance", &zero_disturbance);
  m.def("sinusoid_disturbance", &sinusoid_disturbance, py::arg("amplitude"),
        py::arg("frequency") = 1.0);
  m.def("constant_disturbance", &constant_disturbance, py::arg("value"));
  m.def("make_pulse", &make_pulse, py::arg("t_d"), py::arg("width"),
        py::arg("height"));
  m.def("user_disturbance", &user_disturbance, py::arg("fn"),
        py::arg("delta"));

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("n", &Trajectory::n)
      .def_readonly("times", &Trajectory::times)
      .def_readonly("states", &Trajectory::states)
      .def_readonly("controls", &Trajectory::controls)
      .def_readonly("gains", &Trajectory::gains)
      .def_readonly("energy", &Trajectory::energy)
      .def_readonly("sup_u", &Trajectory::sup_u)
      .def("rows", &Trajectory::rows)
      .def(
          "state",
          [](const Trajectory& t, size_t row) {
            const auto s = t.state(row);
            return std::vector<double>(s.begin(), s.end());
          },
          py::arg("row"));

  m.def(
      "simulate",
      [](const SynthesizedController& ctrl, const std::vector<double>& x0,
         const Disturbance& dist, const SimConfig& cfg) {
        return simulate(ctrl, x0, dist, cfg);
      },
      py::arg("ctrl"), py::arg("x0"), py::arg("dist"), py::arg("cfg"));
  m.def(
      "simulate_law",
      [](int n, const py::function& law, const std::vector<double>& x0,
         const Disturbance& dist, const SimConfig& cfg) {
        return simulate_law(n, wrap_law(law), x0, dist, cfg);
      },
      py::arg("n"), py::arg("law"), py::arg("x0"), py::arg("dist"),
      py::arg("cfg"),
      "Closed loop under an arbitrary Python law u(x, t); slow (one Python "
      "call per step) but handy for prototyping.");
  m.def("detect_settling", &detect_settling, py::arg("traj"), py::arg("eps"));
  m.def("energy_at", &energy_at, py::arg("traj"), py::arg("t"));
  m.def(
      "write_csv",
      [](const Trajectory& traj, const std::string& path) {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw config_error("cannot write " + path);
        write_csv(traj, os);
      },
      py::arg("traj"), py::arg("path"));
  m.def(
      "csv_string",
      [](const Trajectory& traj) {
        std::ostringstream os;
        write_csv(traj, os);
        return os.str();
      },
      py::arg("traj"));

  // --- experiments ------------------------------------------------------
  py::class_<ScenarioResult>(m, "ScenarioResult")
      .def_readonly("name", &ScenarioResult::name)
      .def_readonly("artifacts", &ScenarioResult::artifacts);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("alpha", &SweepRow::alpha)
      .def_readonly("energy", &SweepRow::energy)
      .def_readonly("sup_u", &SweepRow::sup_u)
      .def_readonly("settling", &SweepRow::settling)
      .def_readonly("kappa_max", &SweepRow::kappa_max);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("rows", &SweepResult::rows);

  py::class_<PeakRow>(m, "PeakRow")
      .def_readonly("t_d", &PeakRow::t_d)
      .def_readonly("peak", &PeakRow::peak);

  m.def("scenario_names", &scenario_names);
  m.def(
      "run_scenario",
      [](const std::string& name,
         const std::map<std::string, std::string>& overrides,
         const std::string& out_dir) {
        const std::vector<std::pair<std::string, std::string>> ov(
            overrides.begin(), overrides.end());
        return run_scenario(name, ov, out_dir);
      },
      py::arg("name"), py::arg("overrides") = std::map<std::string,
                                                       std::string>{},
      py::arg("out_dir") = "out");
  m.def(
      "energy_sweep",
      [](const SynthesizedController& base, const std::vector<double>& alphas,
         const std::vector<double>& x0, const SimConfig& cfg) {
        return energy_sweep(base, alphas, x0, cfg);
      },
      py::arg("base"), py::arg("alphas"), py::arg("x0"), py::arg("cfg"));
  m.def(
      "uniform_stability_probe",
      [](const SynthesizedController& ctrl, const std::vector<double>& x0,
         const std::vector<double>& t_d_list, double height, double width,
         const SimConfig& cfg, const Disturbance& plant_dist) {
        return uniform_stability_probe(ctrl, x0, t_d_list, height, width,
                                       cfg, plant_dist);
      },
      py::arg("ctrl"), py::arg("x0"), py::arg("t_d_list"), py::arg("height"),
      py::arg("width"), py::arg("cfg"),
      py::arg("plant_dist") = zero_disturbance());
  m.def("export_svg", &export_svg, py::arg("csv_path"), py::arg("spec"),
        py::arg("out_path"));

  // --- config round-trip ---------------------------------------------------
  m.def(
      "save_controller",
      [](const SynthesizedController& ctrl, const std::string& path) {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw config_error("cannot write " + path);
        os << write_config(controller_to_config(ctrl));
      },
      py::arg("ctrl"), py::arg("path"));
  m.def(
      "load_controller",
      [](const std::string& path) {
        return controller_from_config(load_config(path));
      },
      py::arg("path"));
  m.def(
      "controller_config_string",
      [](const SynthesizedController& ctrl) {
        return write_config(controller_to_config(ctrl));
      },
      py::arg("ctrl"));
  m.def(
      "controller_from_config_string",
      [](const std::string& text) {
        return controller_from_config(parse_config(text));
      },
      py::arg("text"));
}
