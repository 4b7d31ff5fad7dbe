#pragma once

#include <stdexcept>

namespace ptctl {

/// Settling horizon of an auxiliary controller in the stretched time
/// variable: either a finite bound or unbounded (merely asymptotic
/// convergence). A dedicated type instead of an infinity sentinel keeps the
/// unbounded case exact -- e.g. the gain normalizer eta is stored as exactly
/// 1.0 rather than computed from a degenerate formula.
class TauHorizon {
 public:
  /// Unbounded horizon (asymptotic convergence only).
  constexpr TauHorizon() = default;

  /// A finite horizon; requires v > 0 and finite.
  static TauHorizon finite(double v);

  static constexpr TauHorizon unbounded() { return TauHorizon(); }

  constexpr bool is_finite() const { return finite_; }

  /// The finite horizon value. Throws std::domain_error if unbounded.
  double value() const;

  /// The horizon as a double, +infinity when unbounded.
  double value_or_infinity() const;

 private:
  double v_ = 0.0;
  bool finite_ = false;
};

/// The time-scale transformation underlying all controllers in this library.
///
/// It maps plant time t in [0, Tc/eta) onto an unbounded auxiliary time
///     tau = phi(t) = -(1/alpha) * log(1 - eta*t/Tc),
/// with derivative (the time-varying gain)
///     kappa(t) = dtau/dt = eta / (alpha*(Tc - eta*t)).
/// The normalizer eta = 1 - exp(-alpha*Tf) < 1 for a finite auxiliary
/// horizon Tf keeps kappa bounded on [0, Tc]; eta = 1 when Tf is unbounded
/// (then kappa blows up exactly at Tc).
///
/// alpha == 0 selects the trivial scaling tau = (Tf/Tc)*t with constant gain
/// kappa = Tf/Tc; this branch is exact, not a numerical limit, and is
/// defined for all t >= 0. It requires a finite Tf.
struct TimeScale {
  double Tc = 1.0;     ///< terminal time of the time-varying phase
  double alpha = 1.0;  ///< gain growth rate (0 = trivial constant scaling)
  TauHorizon Tf;       ///< auxiliary settling horizon
  double eta = 1.0;    ///< gain normalizer, 1 - exp(-alpha*Tf)

  /// True for the alpha == 0 constant-gain branch.
  bool trivial() const { return alpha == 0.0; }

  /// Auxiliary time tau for plant time t. Domain: t >= 0 and eta*t < Tc
  /// (all t >= 0 in the trivial branch).
  double phi(double t) const;

  /// Plant time t for auxiliary time tau >= 0. Inverse of phi.
  double phi_inv(double tau) const;

  /// Time-varying gain kappa(t) = dphi/dt. Same domain as phi.
  double kappa(double t) const;

  /// Supremum of kappa on [0, Tc): (exp(alpha*Tf)-1)/(alpha*Tc) for finite
  /// Tf, Tf/Tc in the trivial branch. Throws std::domain_error when Tf is
  /// unbounded (the gain is then unbounded).
  double kappa_max() const;

  /// Plant-time settling bound corresponding to an auxiliary-time settling
  /// bound tau (tau may be +infinity, giving Tc/eta). Equals phi_inv(tau)
  /// for finite tau; in particular settling_map(Tf) == Tc exactly.
  double settling_map(double tau) const;
};

/// Validates and assembles a TimeScale. Requirements: Tc > 0 finite,
/// alpha >= 0 finite, and a finite Tf whenever alpha == 0.
TimeScale make_timescale(double Tc, double alpha,
                         TauHorizon Tf = TauHorizon::unbounded());

/// Convenience overload: Tf may be +infinity for an unbounded horizon.
TimeScale make_timescale(double Tc, double alpha, double Tf);

}  // namespace ptctl
