#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptctl/timescale.hpp"

namespace ptctl {

/// sign(x) with sign(0) = 0 (single-valued surrogate for the set-valued
/// sign in discontinuous laws). When a simulation installs a boundary layer
/// eps_s > 0 (see SimConfig), this evaluates the continuous saturation
/// clamp(x/eps_s, -1, 1) instead.
double sgn(double x);

/// |x|^r * sign(x), with 0 at x = 0 for any r > 0. r may be non-integer.
double signed_power(double x, double r);

/// Gamma function for positive real arguments via the Lanczos approximation
/// (g = 7, 9 coefficients). Self-contained; relative error below 1e-10 over
/// (0, 30]. Throws std::domain_error for x <= 0.
double gamma_positive(double x);

/// Parameters of the polynomial fixed-time law
///     v(x) = -((a|x|^p + b|x|^q)^k + zeta) * sign(x).
/// Constraints: a, b > 0; p < q; k > 0 with k*p < 1 < k*q; zeta >= 0.
struct PolyParams {
  double a = 1.0;
  double b = 1.0;
  double p = 0.5;
  double q = 1.5;
  double k = 1.0;
  double zeta = 0.0;

  /// Throws std::domain_error if the constraints above are violated.
  void validate() const;
};

/// Exact supremum of the settling time of dx/dtau = -((a|x|^p+b|x|^q)^k) sign x:
///     gamma = Gamma(m_p) Gamma(m_q) / (a^k Gamma(k) (q-p)) * (a/b)^(m_p),
/// with m_p = (1-kp)/(q-p), m_q = (kq-1)/(q-p).
double gamma_first_order(const PolyParams& params);
double gamma_first_order(double a, double b, double k, double p, double q);

/// The pair of settling constants of the second-order sliding design:
/// gamma1 = Gamma(1/4)^2 / (2 sqrt(a1) Gamma(1/2)) * (a1/b1)^(1/4) for the
/// reaching phase governed by (a1, b1), and gamma2 = gamma_first_order of
/// the sliding-variable law. Tf of the assembled controller is Tf1 + Tf2.
std::pair<double, double> gamma_pair_second_order(double a1, double b1,
                                                  const PolyParams& params);

/// An auxiliary controller v(z) acting on the stretched-time system
/// dz/dtau = J z + b_n v(z). Carries the metadata the synthesis layer needs:
/// settling horizon Tf in tau-time, the disturbance magnitude it rejects,
/// and (optionally) a pointwise settling-time bound.
struct AuxController {
  int n = 1;
  std::function<double(std::span<const double>)> eval_fn;
  TauHorizon Tf = TauHorizon::unbounded();
  double delta_tolerance = 0.0;  ///< disturbance bound the law rejects
  bool discontinuous = false;
  bool admissible = true;
  /// Optional pointwise settling bound T(z0) in tau-time; improves the
  /// predicted bound over the uniform horizon Tf when provided.
  std::function<double(std::span<const double>)> settling_fn;
  std::string kind = "custom";  ///< builder tag for config round-trips
  std::vector<std::pair<std::string, double>> params;

  /// Evaluates v(z). Throws std::invalid_argument on a size mismatch.
  double eval(std::span<const double> z) const;
};

/// First-order polynomial fixed-time controller (n = 1) with
/// Tf = gamma_first_order(params) and delta_tolerance = zeta.
AuxController poly_fixed_time(const PolyParams& params);

/// Second-order sliding controller (n = 2). Drives the sliding variable
///     sigma = x2 + spow( spow(x2,2) + 2*gamma1^2/Tf1^2 *
///                        (a1*spow(x1,1) + b1*spow(x1,3)), 1/2 )
/// to zero within Tf2, then the origin is reached within Tf1 more; the
/// assembled horizon is Tf = Tf1 + Tf2 (spow is the signed power). Rejects
/// disturbances bounded by zeta.
AuxController second_order_sliding(double a1, double b1, double a2, double b2,
                                   double p, double q, double k, double Tf1,
                                   double Tf2, double zeta);

/// Linear state feedback v(z) = -gains . z (asymptotic only, Tf unbounded).
/// The caller is responsible for choosing stabilizing gains.
AuxController linear_controller(std::vector<double> gains);

/// Bounded scalar controller v(x) = -c (1 - exp(-|x|)) sign(x), c >= 1.
/// |v| < c everywhere; asymptotic only (Tf unbounded).
AuxController bounded_exp_controller(double c);

namespace detail {
/// RAII installer for the sgn() boundary layer; used by the simulator.
class SignBoundaryLayer {
 public:
  explicit SignBoundaryLayer(double eps);
  ~SignBoundaryLayer();
  SignBoundaryLayer(const SignBoundaryLayer&) = delete;
  SignBoundaryLayer& operator=(const SignBoundaryLayer&) = delete;

 private:
  double saved_;
};
}  // namespace detail

}  // namespace ptctl
