#include "ptctl/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <ostream>
#include <string>

#include "ptctl/errors.hpp"

namespace ptctl {

void SimConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("step size must be positive and finite");
  }
  if (!(horizon >= h) || !std::isfinite(horizon)) {
    throw std::invalid_argument("horizon must be at least one step");
  }
  if (!(settle_eps > 0.0)) {
    throw std::invalid_argument("settling threshold must be positive");
  }
  if (record_stride < 1) {
    throw std::invalid_argument("record stride must be at least 1");
  }
  if (!(sign_layer >= 0.0)) {
    throw std::invalid_argument("sign boundary layer must be >= 0");
  }
}

double Disturbance::value(double t) const {
  double d = 0.0;
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::sinusoid:
      d = amplitude * std::sin(frequency * t);
      break;
    case Kind::constant:
      d = value_c;
      break;
    case Kind::pulse:
      d = (t >= t_d && t < t_d + width) ? height : 0.0;
      break;
    case Kind::user:
      d = user_fn(t);
      break;
  }
  if (std::fabs(d) > delta + 1e-12 * (1.0 + std::fabs(delta))) {
    throw numeric_error("disturbance exceeded its declared bound " +
                        std::to_string(delta) + " at t = " +
                        std::to_string(t));
  }
  return d;
}

Disturbance zero_disturbance() { return Disturbance{}; }

Disturbance sinusoid_disturbance(double amplitude, double frequency) {
  Disturbance d;
  d.kind = Disturbance::Kind::sinusoid;
  d.amplitude = amplitude;
  d.frequency = frequency;
  d.delta = std::fabs(amplitude);
  return d;
}

Disturbance constant_disturbance(double value) {
  Disturbance d;
  d.kind = Disturbance::Kind::constant;
  d.value_c = value;
  d.delta = std::fabs(value);
  return d;
}

Disturbance make_pulse(double t_d, double width, double height) {
  if (!(width > 0.0)) throw std::invalid_argument("pulse width must be > 0");
  if (!(t_d >= 0.0)) throw std::invalid_argument("pulse onset must be >= 0");
  Disturbance d;
  d.kind = Disturbance::Kind::pulse;
  d.t_d = t_d;
  d.width = width;
  d.height = height;
  d.delta = std::fabs(height);
  return d;
}

Disturbance user_disturbance(std::function<double(double)> fn, double delta) {
  if (!fn) throw std::invalid_argument("user disturbance needs a callable");
  if (!(delta >= 0.0)) throw std::invalid_argument("bound must be >= 0");
  Disturbance d;
  d.kind = Disturbance::Kind::user;
  d.user_fn = std::move(fn);
  d.delta = delta;
  return d;
}

namespace {

void check_state(const std::vector<double>& x, long step, double t) {
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw numeric_error("state became non-finite at step " +
                          std::to_string(step) + ", t = " + std::to_string(t));
    }
  }
}

double checked_control(const ControlLaw& law, const std::vector<double>& x,
                       double t, long step) {
  const double u = law(x, t);
  if (!std::isfinite(u)) {
    throw numeric_error("control became non-finite at step " +
                        std::to_string(step) + ", t = " + std::to_string(t));
  }
  return u;
}

// dx/dt for the chain: upshift plus control+disturbance on the last state.
void chain_rhs(int n, const std::vector<double>& x, double ud,
               std::vector<double>& out) {
  for (int i = 0; i + 1 < n; ++i) out[i] = x[i + 1];
  out[n - 1] = ud;
}

}  // namespace

Trajectory simulate_law(int n, const ControlLaw& law,
                        std::span<const double> x0, const Disturbance& dist,
                        const SimConfig& cfg,
                        const std::function<double(double)>& gain_fn,
                        const StepObserver& observer) {
  cfg.validate();
  if (n < 1) throw std::invalid_argument("chain order must be at least 1");
  if (static_cast<int>(x0.size()) != n) {
    throw std::invalid_argument("initial state dimension mismatch");
  }
  for (double v : x0) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("initial state must be finite");
    }
  }
  if (dist.kind == Disturbance::Kind::pulse && dist.width < 2.0 * cfg.h) {
    throw std::invalid_argument(
        "pulse width below two integration steps is not resolvable");
  }

  const detail::SignBoundaryLayer layer(cfg.sign_layer);
  const long steps = std::lround(cfg.horizon / cfg.h);

  Trajectory traj;
  traj.n = n;
  const size_t expected =
      static_cast<size_t>(steps / cfg.record_stride) + 2;
  traj.times.reserve(expected);
  traj.states.reserve(expected * static_cast<size_t>(n));
  traj.controls.reserve(expected);
  traj.gains.reserve(expected);
  traj.energy.reserve(expected);

  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> rhs(n, 0.0);
  std::vector<double> stage(n, 0.0);  // rk4 scratch
  std::vector<double> acc(n, 0.0);

  double energy = 0.0;
  double u = checked_control(law, x, 0.0, 0);
  traj.sup_u = std::fabs(u);

  auto record = [&](double t) {
    traj.times.push_back(t);
    traj.states.insert(traj.states.end(), x.begin(), x.end());
    traj.controls.push_back(u);
    traj.gains.push_back(gain_fn ? gain_fn(t) : 0.0);
    traj.energy.push_back(energy);
  };
  record(0.0);

  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * cfg.h;
    const double t_next = static_cast<double>(k + 1) * cfg.h;

    if (cfg.method == SimConfig::Method::euler) {
      chain_rhs(n, x, u + dist.value(t), rhs);
      for (int i = 0; i < n; ++i) x[i] += cfg.h * rhs[i];
    } else {
      // Classical 4-stage method; stages re-evaluate the law and the
      // disturbance at the stage times.
      auto eval_rhs = [&](const std::vector<double>& xs, double ts,
                          std::vector<double>& out) {
        chain_rhs(n, xs, law(xs, ts) + dist.value(ts), out);
      };
      eval_rhs(x, t, rhs);  // k1
      for (int i = 0; i < n; ++i) {
        acc[i] = rhs[i];
        stage[i] = x[i] + 0.5 * cfg.h * rhs[i];
      }
      eval_rhs(stage, t + 0.5 * cfg.h, rhs);  // k2
      for (int i = 0; i < n; ++i) {
        acc[i] += 2.0 * rhs[i];
        stage[i] = x[i] + 0.5 * cfg.h * rhs[i];
      }
      eval_rhs(stage, t + 0.5 * cfg.h, rhs);  // k3
      for (int i = 0; i < n; ++i) {
        acc[i] += 2.0 * rhs[i];
        stage[i] = x[i] + cfg.h * rhs[i];
      }
      eval_rhs(stage, t_next, rhs);  // k4
      for (int i = 0; i < n; ++i) {
        acc[i] += rhs[i];
        x[i] += cfg.h / 6.0 * acc[i];
      }
    }
    check_state(x, k + 1, t_next);

    const double u_next = checked_control(law, x, t_next, k + 1);
    energy += 0.5 * cfg.h * (u * u + u_next * u_next);
    u = u_next;
    traj.sup_u = std::max(traj.sup_u, std::fabs(u));
    if (observer) observer(k + 1, t_next, x, u);
    if ((k + 1) % cfg.record_stride == 0 || k + 1 == steps) {
      record(t_next);
    }
  }
  return traj;
}

Trajectory simulate(const SynthesizedController& ctrl,
                    std::span<const double> x0, const Disturbance& dist,
                    const SimConfig& cfg) {
  if (dist.delta > ctrl.delta + 1e-12 * (1.0 + ctrl.delta)) {
    std::cerr << "ptctl: disturbance bound " << dist.delta
              << " exceeds the bound " << ctrl.delta
              << " the controller was synthesized for\n";
  }
  const ControlLaw law = [&ctrl](std::span<const double> x, double t) {
    return ctrl.eval_hybrid(x, t);
  };
  const auto gain_fn = [&ctrl](double t) {
    return t < ctrl.ts.Tc ? ctrl.ts.kappa(t) : 0.0;
  };
  return simulate_law(ctrl.basis.n, law, x0, dist, cfg, gain_fn);
}

std::optional<double> detect_settling(const Trajectory& traj, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("threshold must be positive");
  if (traj.rows() == 0) return std::nullopt;

  auto inside = [&](size_t row) {
    const auto x = traj.state(row);
    for (double v : x) {
      if (std::fabs(v) > eps) return false;
    }
    return true;
  };

  // Walk backward over the recorded grid to find the earliest time from
  // which the trajectory never leaves the ball again.
  size_t row = traj.rows();
  while (row > 0 && inside(row - 1)) --row;
  if (row == traj.rows()) return std::nullopt;
  return traj.times[row];
}

double energy_at(const Trajectory& traj, double t) {
  if (traj.rows() == 0 || t < traj.times.front() || t > traj.times.back()) {
    throw std::domain_error("time is outside the recorded span");
  }
  const auto it =
      std::lower_bound(traj.times.begin(), traj.times.end(), t);
  const size_t hi = static_cast<size_t>(it - traj.times.begin());
  if (traj.times[hi] == t || hi == 0) return traj.energy[hi];
  const size_t lo = hi - 1;
  const double w = (t - traj.times[lo]) / (traj.times[hi] - traj.times[lo]);
  return traj.energy[lo] + w * (traj.energy[hi] - traj.energy[lo]);
}

void write_csv(const Trajectory& traj, std::ostream& os) {
  os << "t";
  for (int i = 1; i <= traj.n; ++i) os << ",x" << i;
  os << ",u,kappa,E\n";
  char buf[32];
  auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    os << buf << sep;
  };
  for (size_t r = 0; r < traj.rows(); ++r) {
    put(traj.times[r], ',');
    const auto x = traj.state(r);
    for (double v : x) put(v, ',');
    put(traj.controls[r], ',');
    put(traj.gains[r], ',');
    std::snprintf(buf, sizeof buf, "%.12g", traj.energy[r]);
    os << buf << '\n';
  }
}

}  // namespace ptctl
