#include "ptctl/aux_controllers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptctl {

namespace {

// Active sign() boundary layer; 0 means the pure sign(0)=0 selection.
// Installed by the simulator (RAII) so discontinuous laws can be smoothed
// for chattering studies without threading a policy through every closure.
thread_local double g_sign_layer = 0.0;

}  // namespace

double sgn(double x) {
  const double eps = g_sign_layer;
  if (eps > 0.0) {
    return std::clamp(x / eps, -1.0, 1.0);
  }
  return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
}

double signed_power(double x, double r) {
  if (!(r > 0.0)) throw std::domain_error("signed power needs r > 0");
  if (x == 0.0) return 0.0;
  return std::pow(std::fabs(x), r) * (x > 0.0 ? 1.0 : -1.0);
}

namespace detail {

SignBoundaryLayer::SignBoundaryLayer(double eps) : saved_(g_sign_layer) {
  g_sign_layer = eps > 0.0 ? eps : 0.0;
}

SignBoundaryLayer::~SignBoundaryLayer() { g_sign_layer = saved_; }

}  // namespace detail

double gamma_positive(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("gamma_positive needs a positive argument");
  }
  // Lanczos approximation, g = 7, 9 coefficients.
  static const double coeff[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection keeps the series argument in its accurate range.
    return M_PI / (std::sin(M_PI * x) * gamma_positive(1.0 - x));
  }
  const double z = x - 1.0;
  double a = coeff[0];
  for (int i = 1; i < 9; ++i) {
    a += coeff[i] / (z + static_cast<double>(i));
  }
  const double t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

void PolyParams::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("polynomial law needs a > 0 and b > 0");
  }
  if (!(p > 0.0) || !(q > p)) {
    throw std::domain_error("polynomial law needs 0 < p < q");
  }
  if (!(k > 0.0) || !(k * p < 1.0) || !(k * q > 1.0)) {
    throw std::domain_error(
        "polynomial law needs k > 0 with k*p < 1 < k*q");
  }
  if (!(zeta >= 0.0)) {
    throw std::domain_error("discontinuous margin zeta must be >= 0");
  }
}

double gamma_first_order(const PolyParams& params) {
  params.validate();
  const double mp = (1.0 - params.k * params.p) / (params.q - params.p);
  const double mq = (params.k * params.q - 1.0) / (params.q - params.p);
  return gamma_positive(mp) * gamma_positive(mq) /
         (std::pow(params.a, params.k) * gamma_positive(params.k) *
          (params.q - params.p)) *
         std::pow(params.a / params.b, mp);
}

double gamma_first_order(double a, double b, double k, double p, double q) {
  PolyParams params;
  params.a = a;
  params.b = b;
  params.p = p;
  params.q = q;
  params.k = k;
  return gamma_first_order(params);
}

std::pair<double, double> gamma_pair_second_order(double a1, double b1,
                                                  const PolyParams& params) {
  if (!(a1 > 0.0) || !(b1 > 0.0)) {
    throw std::domain_error("reaching-phase gains a1, b1 must be positive");
  }
  const double g14 = gamma_positive(0.25);
  const double gamma1 = g14 * g14 / (2.0 * std::sqrt(a1) * gamma_positive(0.5)) *
                        std::pow(a1 / b1, 0.25);
  return {gamma1, gamma_first_order(params)};
}

double AuxController::eval(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != n) {
    throw std::invalid_argument("auxiliary controller: state size mismatch");
  }
  return eval_fn(z);
}

AuxController poly_fixed_time(const PolyParams& params) {
  params.validate();
  AuxController c;
  c.n = 1;
  c.Tf = TauHorizon::finite(gamma_first_order(params));
  c.delta_tolerance = params.zeta;
  c.discontinuous = true;
  c.kind = "poly-fixed-time";
  c.params = {{"a", params.a}, {"b", params.b},     {"p", params.p},
              {"q", params.q}, {"k", params.k},     {"zeta", params.zeta}};
  c.eval_fn = [params](std::span<const double> z) {
    const double x = z[0];
    if (x == 0.0) return 0.0;
    const double ax = std::fabs(x);
    const double mag =
        std::pow(params.a * std::pow(ax, params.p) +
                     params.b * std::pow(ax, params.q),
                 params.k) +
        params.zeta;
    return -mag * sgn(x);
  };
  return c;
}

AuxController second_order_sliding(double a1, double b1, double a2, double b2,
                                   double p, double q, double k, double Tf1,
                                   double Tf2, double zeta) {
  PolyParams inner;
  inner.a = a2;
  inner.b = b2;
  inner.p = p;
  inner.q = q;
  inner.k = k;
  inner.validate();
  if (!(Tf1 > 0.0) || !(Tf2 > 0.0)) {
    throw std::domain_error("phase horizons Tf1, Tf2 must be positive");
  }
  if (!(zeta >= 0.0)) {
    throw std::domain_error("disturbance margin zeta must be >= 0");
  }
  const auto [gamma1, gamma2] = gamma_pair_second_order(a1, b1, inner);

  AuxController c;
  c.n = 2;
  c.Tf = TauHorizon::finite(Tf1 + Tf2);
  c.delta_tolerance = zeta;
  c.discontinuous = true;
  c.kind = "second-order-sliding";
  c.params = {{"a1", a1},   {"b1", b1},   {"a2", a2},   {"b2", b2},
              {"p", p},     {"q", q},     {"k", k},     {"Tf1", Tf1},
              {"Tf2", Tf2}, {"zeta", zeta}};
  c.eval_fn = [=](std::span<const double> z) {
    const double z1 = z[0];
    const double z2 = z[1];
    const double c1 = 2.0 * gamma1 * gamma1 / (Tf1 * Tf1);
    const double sigma =
        z2 + signed_power(signed_power(z2, 2.0) +
                              c1 * (a1 * z1 + b1 * signed_power(z1, 3.0)),
                          0.5);
    if (sigma == 0.0) return 0.0;
    const double as = std::fabs(sigma);
    const double mag =
        gamma2 / Tf2 *
            std::pow(a2 * std::pow(as, p) + b2 * std::pow(as, q), k) +
        gamma1 * gamma1 / (2.0 * Tf1 * Tf1) * (a1 + 3.0 * b1 * z1 * z1) +
        zeta;
    return -mag * sgn(sigma);
  };
  return c;
}

AuxController linear_controller(std::vector<double> gains) {
  if (gains.empty()) {
    throw std::invalid_argument("linear controller needs at least one gain");
  }
  AuxController c;
  c.n = static_cast<int>(gains.size());
  c.Tf = TauHorizon::unbounded();
  c.discontinuous = false;
  c.kind = "linear";
  for (size_t i = 0; i < gains.size(); ++i) {
    c.params.emplace_back("g" + std::to_string(i + 1), gains[i]);
  }
  c.eval_fn = [gains = std::move(gains)](std::span<const double> z) {
    double s = 0.0;
    for (size_t i = 0; i < gains.size(); ++i) s += gains[i] * z[i];
    return -s;
  };
  return c;
}

AuxController bounded_exp_controller(double c_gain) {
  if (!(c_gain >= 1.0)) {
    throw std::invalid_argument("bounded exponential law needs c >= 1");
  }
  AuxController c;
  c.n = 1;
  c.Tf = TauHorizon::unbounded();
  c.discontinuous = false;
  c.kind = "bounded-exp";
  c.params = {{"c", c_gain}};
  c.eval_fn = [c_gain](std::span<const double> z) {
    const double x = z[0];
    if (x == 0.0) return 0.0;
    return -c_gain * (1.0 - std::exp(-std::fabs(x))) * sgn(x);
  };
  return c;
}

}  // namespace ptctl
