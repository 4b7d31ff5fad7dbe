#include "ptctl/synthesis.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <utility>

namespace ptctl {

double TerminalController::eval(std::span<const double> x) const {
  if (kind == "sign-relay") {
    return -magnitude * sgn(x[0]);
  }
  if (kind == "sliding") {
    return sliding.eval(x);
  }
  if (kind == "zero-hold") {
    return 0.0;
  }
  if (kind == "custom") {
    return custom_fn(x);
  }
  throw std::logic_error("unknown terminal controller kind: " + kind);
}

TerminalController sign_relay_terminal(double magnitude) {
  if (!(magnitude >= 0.0) || !std::isfinite(magnitude)) {
    throw std::invalid_argument("relay magnitude must be nonnegative");
  }
  TerminalController t;
  t.kind = "sign-relay";
  t.magnitude = magnitude;
  return t;
}

TerminalController sliding_terminal(AuxController sos) {
  if (sos.n != 2) {
    throw std::invalid_argument("sliding terminal needs an n = 2 law");
  }
  TerminalController t;
  t.kind = "sliding";
  t.sliding = std::move(sos);
  return t;
}

TerminalController zero_hold_terminal() {
  TerminalController t;
  t.kind = "zero-hold";
  return t;
}

TerminalController custom_terminal(
    std::function<double(std::span<const double>)> fn) {
  if (!fn) throw std::invalid_argument("custom terminal needs a callable");
  TerminalController t;
  t.kind = "custom";
  t.custom_fn = std::move(fn);
  return t;
}

double SynthesizedController::beta_lower_bound() const {
  const double exponent = static_cast<double>(basis.n) - basis.rho;
  if (exponent == 0.0) return 1.0;
  return std::pow(ts.alpha * ts.Tc / ts.eta, exponent);
}

double SynthesizedController::eval_phi(std::span<const double> x,
                                       double t) const {
  if (static_cast<int>(x.size()) != basis.n) {
    throw std::invalid_argument("eval_phi: state dimension mismatch");
  }
  const double kap = ts.kappa(t);  // enforces the domain eta*t < Tc
  const GainDiagonal kd = k_diag(basis, kap);

  std::vector<double> z(basis.n, 0.0);
  for (int i = 0; i < basis.n; ++i) {
    double s = 0.0;
    for (int j = 0; j <= i; ++j) {
      s += basis.Q(i, j) * kd.inverse[j] * x[j];
    }
    z[i] = s / beta;
  }
  const double v = aux.eval(z);

  double fb = 0.0;
  for (int j = 0; j < basis.n; ++j) {
    fb += basis.feedback_row[j] * kd.inverse[j] * x[j];
  }

  const double exponent = static_cast<double>(basis.n) - basis.rho;
  return beta * std::pow(kap, exponent) * (v - fb / beta);
}

double SynthesizedController::eval_hybrid(std::span<const double> x,
                                          double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::domain_error("time must be nonnegative and finite");
  }
  if (t < ts.Tc) {
    return eval_phi(x, t);
  }
  if (static_cast<int>(x.size()) != basis.n) {
    throw std::invalid_argument("eval_hybrid: state dimension mismatch");
  }
  return terminal.eval(x);
}

double SynthesizedController::predicted_settling_bound(
    std::span<const double> x0) const {
  if (static_cast<int>(x0.size()) != basis.n) {
    throw std::invalid_argument(
        "predicted_settling_bound: state dimension mismatch");
  }
  double norm = 0.0;
  for (double v : x0) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("initial state must be finite");
    }
    norm = std::max(norm, std::fabs(v));
  }
  if (norm == 0.0) return 0.0;
  if (aux.settling_fn) {
    const std::vector<double> z0 = z_from_x(basis, beta, ts.kappa(0.0), x0);
    return ts.settling_map(aux.settling_fn(z0));
  }
  return ts.settling_map(aux.Tf.value_or_infinity());
}

SynthesizedController synthesize(AuxController aux, double Tc, double alpha,
                                 double rho, std::optional<double> beta,
                                 std::optional<TerminalController> terminal,
                                 double delta) {
  if (!aux.eval_fn) {
    throw std::invalid_argument("auxiliary controller has no evaluation");
  }
  if (!aux.admissible) {
    throw std::invalid_argument(
        "auxiliary controller is not flagged admissible");
  }
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("disturbance bound must be >= 0");
  }
  if (delta > 0.0 && aux.delta_tolerance < delta) {
    throw std::invalid_argument(
        "auxiliary controller rejects less disturbance than requested");
  }

  SynthesizedController ctrl;
  ctrl.ts = make_timescale(Tc, alpha, aux.Tf);
  ctrl.basis = build_basis(aux.n, rho, alpha);
  ctrl.aux = std::move(aux);
  ctrl.delta = delta;

  const double bound = ctrl.beta_lower_bound();
  if (beta.has_value()) {
    if (!(*beta > 0.0) || !std::isfinite(*beta)) {
      throw std::invalid_argument("beta must be positive and finite");
    }
    // Hard error below the bound: the disturbance-attenuation argument of
    // the redesign needs it, so silently accepting would be unsound.
    if (*beta < bound * (1.0 - 1e-12)) {
      throw std::invalid_argument("beta is below its synthesis lower bound");
    }
    ctrl.beta = *beta;
  } else {
    ctrl.beta = std::max(1.0, bound);
  }

  if (terminal.has_value()) {
    ctrl.terminal = std::move(*terminal);
  } else if (ctrl.basis.n == 1) {
    ctrl.terminal = sign_relay_terminal(delta + 0.1);
  } else if (ctrl.basis.n == 2) {
    // Nominally the state is already at the origin when this engages, so
    // the phase horizons are arbitrary; Tc each keeps them scale-matched.
    ctrl.terminal = sliding_terminal(second_order_sliding(
        4.0, 0.25, 4.0, 0.25, 0.5, 1.0, 1.5, Tc, Tc, delta + 0.1));
  } else {
    std::cerr << "ptctl: no stock terminal law for order n >= 3; "
                 "holding u = 0 after Tc (valid only when the disturbance "
                 "vanishes)\n";
    ctrl.terminal = zero_hold_terminal();
  }
  return ctrl;
}

}  // namespace ptctl
