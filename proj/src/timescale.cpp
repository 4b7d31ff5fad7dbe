#include "ptctl/timescale.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ptctl {

namespace {

[[noreturn]] void bad_time(const char* what, double v) {
  throw std::domain_error(std::string(what) + " " + std::to_string(v) +
                          " is outside the transform domain");
}

}  // namespace

TauHorizon TauHorizon::finite(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument("finite settling horizon must be positive");
  }
  TauHorizon h;
  h.v_ = v;
  h.finite_ = true;
  return h;
}

double TauHorizon::value() const {
  if (!finite_) {
    throw std::domain_error("settling horizon is unbounded");
  }
  return v_;
}

double TauHorizon::value_or_infinity() const {
  return finite_ ? v_ : std::numeric_limits<double>::infinity();
}

double TimeScale::phi(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) bad_time("time", t);
  if (trivial()) {
    return Tf.value() / Tc * t;
  }
  if (!(eta * t < Tc)) bad_time("time", t);
  // -log1p keeps full precision for small eta*t/Tc.
  return -std::log1p(-eta * t / Tc) / alpha;
}

double TimeScale::phi_inv(double tau) const {
  if (!(tau >= 0.0) || !std::isfinite(tau)) bad_time("auxiliary time", tau);
  if (trivial()) {
    return Tc / Tf.value() * tau;
  }
  // Ordered so that phi_inv(Tf) == Tc exactly: -expm1(-alpha*Tf) == eta.
  return Tc * (-std::expm1(-alpha * tau)) / eta;
}

double TimeScale::kappa(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) bad_time("time", t);
  if (trivial()) {
    return Tf.value() / Tc;
  }
  if (!(eta * t < Tc)) bad_time("time", t);
  return eta / (alpha * (Tc - eta * t));
}

double TimeScale::kappa_max() const {
  if (trivial()) {
    return Tf.value() / Tc;
  }
  if (!Tf.is_finite()) {
    throw std::domain_error(
        "gain is unbounded when the auxiliary horizon is infinite");
  }
  return std::expm1(alpha * Tf.value()) / (alpha * Tc);
}

double TimeScale::settling_map(double tau) const {
  if (std::isinf(tau) && tau > 0.0) {
    if (trivial()) return std::numeric_limits<double>::infinity();
    return Tc / eta;
  }
  return phi_inv(tau);
}

TimeScale make_timescale(double Tc, double alpha, TauHorizon Tf) {
  if (!(Tc > 0.0) || !std::isfinite(Tc)) {
    throw std::invalid_argument("terminal time must be positive and finite");
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("growth rate must be nonnegative and finite");
  }
  if (alpha == 0.0 && !Tf.is_finite()) {
    throw std::invalid_argument(
        "the constant-gain branch (alpha = 0) needs a finite settling "
        "horizon");
  }
  TimeScale ts;
  ts.Tc = Tc;
  ts.alpha = alpha;
  ts.Tf = Tf;
  if (alpha == 0.0 || !Tf.is_finite()) {
    ts.eta = 1.0;  // exact; the trivial branch never consumes eta
  } else {
    ts.eta = -std::expm1(-alpha * Tf.value());
  }
  return ts;
}

TimeScale make_timescale(double Tc, double alpha, double Tf) {
  if (std::isinf(Tf) && Tf > 0.0) {
    return make_timescale(Tc, alpha, TauHorizon::unbounded());
  }
  return make_timescale(Tc, alpha, TauHorizon::finite(Tf));
}

}  // namespace ptctl
