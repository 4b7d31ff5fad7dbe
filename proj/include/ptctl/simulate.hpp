#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptctl/synthesis.hpp"

namespace ptctl {

/// Fixed-step integration settings.
///
/// The default scheme is explicit Euler at h = 1e-5 -- the scheme all
/// reported numbers use. A classical 4-stage Runge-Kutta method is available
/// for convergence studies only.
struct SimConfig {
  enum class Method { euler, rk4 };

  double h = 1e-5;          ///< step size, > 0
  double horizon = 1.0;     ///< final time, >= h
  double sign_layer = 0.0;  ///< eps_s: sign() boundary layer, 0 = pure sign
  double settle_eps = 1e-3; ///< default threshold for settling detection
  int record_stride = 100;  ///< store every record_stride-th step
  Method method = Method::euler;

  /// Throws std::invalid_argument on violated invariants.
  void validate() const;
};

/// A disturbance signal d(t) with a declared magnitude bound. Every
/// evaluation asserts |d(t)| <= bound; a violation raises numeric_error.
struct Disturbance {
  enum class Kind { zero, sinusoid, constant, pulse, user };

  Kind kind = Kind::zero;
  double delta = 0.0;  ///< declared bound on |d|
  // sinusoid: amplitude * sin(frequency * t)
  double amplitude = 0.0;
  double frequency = 1.0;
  // constant: value
  double value_c = 0.0;
  // pulse: height on [t_d, t_d + width), else 0
  double t_d = 0.0;
  double width = 0.0;
  double height = 0.0;
  std::function<double(double)> user_fn;

  double value(double t) const;
};

Disturbance zero_disturbance();
Disturbance sinusoid_disturbance(double amplitude, double frequency);
Disturbance constant_disturbance(double value);
/// Rectangular pulse: height on [t_d, t_d + width), 0 elsewhere (left-closed
/// interval). Requires width > 0 and t_d >= 0.
Disturbance make_pulse(double t_d, double width, double height);
Disturbance user_disturbance(std::function<double(double)> fn, double delta);

/// A recorded closed-loop run. States are stored row-major with one row per
/// recorded time (every record_stride-th step plus the final one); energy
/// and sup_u accumulate at full step rate.
struct Trajectory {
  int n = 1;
  std::vector<double> times;
  std::vector<double> states;    ///< row-major, rows() x n
  std::vector<double> controls;  ///< u at each recorded time
  std::vector<double> gains;     ///< kappa at each recorded time (0 once t >= Tc)
  std::vector<double> energy;    ///< E(t) = integral of u^2, trapezoidal
  double sup_u = 0.0;            ///< max |u| over all steps

  size_t rows() const { return times.size(); }
  std::span<const double> state(size_t row) const {
    return {states.data() + row * static_cast<size_t>(n),
            static_cast<size_t>(n)};
  }
};

/// Arbitrary control law u(x, t) for ad-hoc closed loops (stop-early
/// studies, measurement-perturbed probes). The library's own scenarios are
/// built on this entry point.
using ControlLaw = std::function<double(std::span<const double>, double)>;

/// Optional per-step hook, called after each accepted step with the step
/// index k+1, time t_{k+1}, the new state, and the control just applied.
using StepObserver =
    std::function<void(long, double, std::span<const double>, double)>;

/// Integrates the chain dx_i/dt = x_{i+1}, dx_n/dt = law(x,t) + d(t) from
/// x0 over [0, horizon]. Grid times are t_k = k*h (computed by
/// multiplication, not accumulation, for determinism). gain_fn, when given,
/// fills the kappa column of the recording.
Trajectory simulate_law(int n, const ControlLaw& law,
                        std::span<const double> x0, const Disturbance& dist,
                        const SimConfig& cfg,
                        const std::function<double(double)>& gain_fn = nullptr,
                        const StepObserver& observer = nullptr);

/// Closed loop under a synthesized controller (eval_hybrid). Records kappa(t)
/// on the time-varying branch and 0 from Tc on. Warns on stderr when the
/// disturbance bound exceeds the bound the controller was synthesized for.
Trajectory simulate(const SynthesizedController& ctrl,
                    std::span<const double> x0, const Disturbance& dist,
                    const SimConfig& cfg);

/// Earliest recorded time t* such that ||x(t)||_inf <= eps for every
/// recorded t >= t*; nullopt if the trajectory never stays inside the ball.
std::optional<double> detect_settling(const Trajectory& traj, double eps);

/// E(t) by linear interpolation between recorded rows. Throws
/// std::domain_error outside the recorded span.
double energy_at(const Trajectory& traj, double t);

/// Writes the trajectory as CSV: header "t,x1,...,xn,u,kappa,E", one row per
/// recorded time, 12 significant digits, Unix newlines.
void write_csv(const Trajectory& traj, std::ostream& os);

}  // namespace ptctl
