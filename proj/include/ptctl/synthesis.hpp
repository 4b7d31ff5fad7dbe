#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "ptctl/aux_controllers.hpp"
#include "ptctl/gain_basis.hpp"
#include "ptctl/timescale.hpp"

namespace ptctl {

/// The robust terminal law w(x; Delta) applied after the time-varying phase
/// ends at Tc. Its only job is to keep the state at the origin against the
/// residual disturbance.
struct TerminalController {
  /// One of "sign-relay" (n=1), "sliding" (n=2), "zero-hold", "custom".
  std::string kind = "zero-hold";
  double magnitude = 0.0;  ///< relay magnitude for "sign-relay"
  AuxController sliding;   ///< second-order sliding law for "sliding"
  std::function<double(std::span<const double>)> custom_fn;

  double eval(std::span<const double> x) const;
};

/// -magnitude * sign(x1) relay; requires magnitude >= 0.
TerminalController sign_relay_terminal(double magnitude);
/// Second-order sliding terminal built from an n=2 auxiliary law.
TerminalController sliding_terminal(AuxController sos);
/// u = 0 hold (only safe when Delta = 0).
TerminalController zero_hold_terminal();
/// Arbitrary user law.
TerminalController custom_terminal(
    std::function<double(std::span<const double>)> fn);

/// A fully assembled predefined-time controller for the perturbed integrator
/// chain dx_i/dt = x_{i+1}, dx_n/dt = u + d(t):
///
///   u(x, t) = phi(x, t)   for t in [0, Tc)
///             w(x; Delta) otherwise,
///
/// where the time-varying branch pulls the auxiliary law back through the
/// gain basis,
///
///   phi(x,t) = beta kappa^(n-rho) [ v(z) - (1/beta) f^T K^-1 x ],
///   z = (1/beta) Q K^-1 x,  f = feedback_row,  K = K(kappa(t)).
///
/// Immutable after synthesis; eval_phi / eval_hybrid are pure, so concurrent
/// batch evaluation is safe.
struct SynthesizedController {
  TimeScale ts;
  GainBasis basis;
  AuxController aux;
  double beta = 1.0;
  double delta = 0.0;
  TerminalController terminal;

  /// The stability-proof lower bound for beta: (alpha Tc / eta)^(n-rho),
  /// with the degenerate exponent n-rho = 0 giving 1.
  double beta_lower_bound() const;

  /// Time-varying branch. Domain: t >= 0, eta*t < Tc. Throws
  /// std::domain_error outside, std::invalid_argument on size mismatch.
  double eval_phi(std::span<const double> x, double t) const;

  /// Full hybrid law: eval_phi for t < Tc, terminal for t >= Tc.
  double eval_hybrid(std::span<const double> x, double t) const;

  /// Settling-time bound for a start at x0: 0 at the origin; through the
  /// auxiliary pointwise bound when the aux law exposes one,
  ///   t = settling_map( T_aux( z_from_x(x0, t=0) ) ),
  /// otherwise the uniform bound settling_map(Tf) = Tc (exactly Tc in the
  /// unbounded-horizon prescribed case).
  double predicted_settling_bound(std::span<const double> x0) const;
};

/// Assembles a controller: wraps an auxiliary stretched-time law in the
/// bounded time-varying gain redesign.
///
/// * Tc > 0: terminal time. alpha >= 0: gain growth rate. 0 <= rho <= n.
/// * beta defaults to max(1, beta_lower_bound()); an explicit beta below the
///   bound is a hard error (the disturbance-attenuation argument needs it).
/// * delta: disturbance bound the closed loop must reject; requires
///   aux.delta_tolerance >= delta when delta > 0.
/// * terminal defaults by order: n=1 sign relay of magnitude delta + 0.1;
///   n=2 second-order sliding with the stock parameters a1=a2=4, b1=b2=1/4,
///   p=1/2, q=1, k=3/2, zeta = delta + 0.1, reaching horizons Tc each;
///   n>=3 zero-hold with a logged warning (no generic robust terminal law is
///   provided for higher orders).
SynthesizedController synthesize(
    AuxController aux, double Tc, double alpha, double rho,
    std::optional<double> beta = std::nullopt,
    std::optional<TerminalController> terminal = std::nullopt,
    double delta = 0.0);

}  // namespace ptctl
