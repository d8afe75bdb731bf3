#include "ard/solver.hpp"

#include <algorithm>
#include <cmath>

#include "ard/errors.hpp"

namespace ard {

void SolverConfig::validate() const {
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw ConfigError(msg);
  };
  require(alpha > Rational(0) && alpha <= Rational(2), "alpha must be in (0, 2]");
  require(nu > Rational(0), "nu must be positive");
  require(n >= 64, "need at least 64 cells");
  require(x_min > 0.0 && x_min < x_max, "need 0 < x_min < x_max");
  require(t0 > 0.0 && t0 < t_end, "need 0 < t0 < t_end");
  require(cfl > 0.0 && cfl <= 1.0, "cfl must be in (0, 1]");
  require(ic != IcKind::plateau_tanh || (ic_x_c > x_min && ic_x_c < x_max),
          "plateau center must lie inside the domain");
  require(ic != IcKind::plateau_tanh || ic_width > 0.0, "plateau width must be positive");
  require(ic != IcKind::point_mass_gaussian || ic_s > 0.0, "gaussian width must be positive");
  require(0.0 < level_h && level_h < 1.0, "level h must be in (0, 1)");
  require(0.0 < tail_lo && tail_lo < tail_hi && tail_hi < 1.0, "bad tail window");
  for (double ts : snapshot_times) {
    require(ts >= t0 && ts <= t_end, "snapshot time outside [t0, t_end]");
  }
}

FieldState initial_state(const SolverConfig& config) {
  config.validate();
  Solver s(config);
  return s.state();
}

Solver::Solver(const SolverConfig& config) : cfg_(config) {
  cfg_.validate();
  const int n = cfg_.n;
  face_.resize(n + 1);
  if (cfg_.grid == GridKind::uniform) {
    double h = (cfg_.x_max - cfg_.x_min) / n;
    for (int j = 0; j <= n; ++j) face_[j] = cfg_.x_min + h * j;
  } else {
    double lr = std::log(cfg_.x_max / cfg_.x_min) / n;
    for (int j = 0; j <= n; ++j) face_[j] = cfg_.x_min * std::exp(lr * j);
  }
  state_.x.resize(n);
  dx_.resize(n);
  for (int i = 0; i < n; ++i) {
    state_.x[i] = cfg_.grid == GridKind::uniform ? 0.5 * (face_[i] + face_[i + 1])
                                                 : std::sqrt(face_[i] * face_[i + 1]);
    dx_[i] = face_[i + 1] - face_[i];
    min_rel_dx_ = std::min(min_rel_dx_, dx_[i] / state_.x[i]);
  }

  const double e = 1.0 - cfg_.alpha.to_double() / 2.0;  // exponent 1 - a/2
  wcell_.resize(n);
  qweight_.resize(n);
  for (int i = 0; i < n; ++i) {
    wcell_[i] = std::pow(state_.x[i], e);
    qweight_[i] = dx_[i] / wcell_[i];
  }
  gface_.assign(n + 1, 0.0);  // zero-flux outer faces
  for (int j = 1; j < n; ++j) {
    gface_[j] = std::pow(face_[j], e) / (state_.x[j] - state_.x[j - 1]);
  }

  state_.u.assign(n, 0.0);
  state_.t = cfg_.t0;
  if (cfg_.ic == IcKind::plateau_tanh) {
    double cut = cfg_.ic_x_c + 10.0 * cfg_.ic_width;
    for (int i = 0; i < n; ++i) {
      state_.u[i] = state_.x[i] > cut
                        ? 0.0
                        : 0.5 * (1.0 - std::tanh((state_.x[i] - cfg_.ic_x_c) / cfg_.ic_width));
    }
  } else {
    double norm = 1.0 / (cfg_.ic_s * std::sqrt(2.0 * M_PI));
    for (int i = 0; i < n; ++i) {
      double z = (state_.x[i] - cfg_.ic_x0) / cfg_.ic_s;
      state_.u[i] = norm * std::exp(-0.5 * z * z);
    }
  }
  state_.dt = next_dt();

  rhs_.resize(n);
  diag_.resize(n);
  lower_.resize(n);
  upper_.resize(n);
}

void Solver::set_field(std::vector<double> u) {
  if (static_cast<int>(u.size()) != cfg_.n) throw ConfigError("field size mismatch");
  state_.u = std::move(u);
}

double Solver::kappa(double t) const {
  double p = (cfg_.nu * cfg_.alpha).to_double() - 1.0;
  return p == 0.0 ? 1.0 : std::pow(t, p);
}

double Solver::next_dt() const {
  // Transport is implicit and A-stable, so only the reaction scale, the
  // resolution of the t^(nu a - 1) factor, and the front-crossing scale of
  // the finest relative cell limit the step.
  double dt = std::min(0.05 * state_.t, min_rel_dx_ * state_.t);
  if (cfg_.reaction) dt = std::min(dt, 1.0);
  return cfg_.cfl * dt;
}

void Solver::apply_reaction(double dt) {
  for (double& u : state_.u) {
    double k1 = u * (1.0 - u);
    double um = u + 0.5 * dt * k1;
    u += dt * um * (1.0 - um);
  }
}

void Solver::step() {
  const int n = cfg_.n;
  const double tail_before = tail_max();
  double dt = next_dt();
  const double ka = 0.5 * dt * kappa(state_.t);
  const double kb = 0.5 * dt * kappa(state_.t + dt);

  // Increment form of Crank-Nicolson: (I - kb M) d = (ka + kb) M u, u' = u + d.
  // M u vanishes exactly on constants, so homogeneous states are exact fixed
  // points of the solve.
  for (int i = 0; i < n; ++i) {
    double up = i + 1 < n ? state_.u[i + 1] : state_.u[i];
    double um = i > 0 ? state_.u[i - 1] : state_.u[i];
    double flux = gface_[i + 1] * (up - state_.u[i]) - gface_[i] * (state_.u[i] - um);
    rhs_[i] = (ka + kb) * wcell_[i] * flux / dx_[i];
  }
  for (int i = 0; i < n; ++i) {
    double c = kb * wcell_[i] / dx_[i];
    lower_[i] = -c * gface_[i];
    upper_[i] = -c * gface_[i + 1];
    diag_[i] = 1.0 + c * (gface_[i] + gface_[i + 1]);
  }
  // Thomas sweep
  for (int i = 1; i < n; ++i) {
    if (std::fabs(diag_[i - 1]) < 1e-300) throw StepFailure("singular tridiagonal system");
    double f = lower_[i] / diag_[i - 1];
    diag_[i] -= f * upper_[i - 1];
    rhs_[i] -= f * rhs_[i - 1];
  }
  if (std::fabs(diag_[n - 1]) < 1e-300) throw StepFailure("singular tridiagonal system");
  rhs_[n - 1] /= diag_[n - 1];
  state_.u[n - 1] += rhs_[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    rhs_[i] = (rhs_[i] - upper_[i] * rhs_[i + 1]) / diag_[i];
    state_.u[i] += rhs_[i];
  }

  if (cfg_.reaction) apply_reaction(dt);

  for (double& u : state_.u) {
    if (u < 0.0) {
      if (u < -1e-12) {
        throw StepFailure("negative undershoot " + std::to_string(u) + " at t = " +
                          std::to_string(state_.t));
      }
      u = 0.0;
    }
    if (cfg_.reaction && u > 1.0) {
      if (u > 1.0 + 1e-9) {
        throw StepFailure("overshoot above the stable state at t = " + std::to_string(state_.t));
      }
      u = 1.0;
    }
  }

  state_.t += dt;
  state_.dt = dt;
  // Crossing event: the support arrived at the guarded outer 5% of cells.
  if (tail_before <= 1e-8 && tail_max() > 1e-8) {
    throw DomainExhausted("solution reached the outer 5% of the grid at t = " +
                          std::to_string(state_.t));
  }
}

double Solver::mass() const {
  double m = 0.0;
  for (int i = 0; i < cfg_.n; ++i) m += qweight_[i] * state_.u[i];
  return m;
}

double Solver::tail_max() const {
  double m = 0.0;
  for (int i = cfg_.n - std::max(1, cfg_.n / 20); i < cfg_.n; ++i) {
    m = std::max(m, state_.u[i]);
  }
  return m;
}

double conserved_mass(const FieldState& state, const Rational& alpha) {
  // Midpoint quadrature of x^(a/2-1) u over the cells. This is the pullback
  // of the mapped heat mass and is exactly constant for pure transport.
  const double e = alpha.to_double() / 2.0 - 1.0;
  double m = 0.0;
  const size_t n = state.x.size();
  for (size_t i = 0; i < n; ++i) {
    double left = i == 0 ? state.x[0] - 0.5 * (state.x[1] - state.x[0])
                         : 0.5 * (state.x[i - 1] + state.x[i]);
    double right = i + 1 == n ? state.x[n - 1] + 0.5 * (state.x[n - 1] - state.x[n - 2])
                              : 0.5 * (state.x[i] + state.x[i + 1]);
    m += std::pow(state.x[i], e) * state.u[i] * (right - left);
  }
  return m;
}

RunResult run(const SolverConfig& config) {
  config.validate();
  Solver solver(config);
  RunResult result;
  result.series.level_h = config.level_h;

  std::vector<double> snaps = config.snapshot_times;
  std::sort(snaps.begin(), snaps.end());
  size_t next_snap = 0;

  auto record = [&](const FieldState& s) {
    result.diagnostics.t.push_back(s.t);
    result.diagnostics.dt.push_back(s.dt);
    result.diagnostics.mass.push_back(conserved_mass(s, config.alpha));
    double tail = 0.0;
    for (size_t i = s.u.size() - std::max<size_t>(1, s.u.size() / 20); i < s.u.size(); ++i) {
      tail = std::max(tail, s.u[i]);
    }
    result.diagnostics.tail.push_back(tail);
    try {
      double pos = front_position(s, config.level_h);
      double lam = front_width(s, config.tail_lo, config.tail_hi);
      result.series.records.push_back({s.t, pos, lam});
    } catch (const DomainFailure&) {
      // nothing measurable yet (flat state or undeveloped tail)
    }
  };

  while (next_snap < snaps.size() && snaps[next_snap] <= solver.state().t) {
    result.snapshots.push_back(solver.state());
    result.snapshots.back().t = snaps[next_snap];
    ++next_snap;
  }
  record(solver.state());
  const double log_step = std::pow(10.0, 0.01);
  double next_record = solver.state().t * log_step;

  FieldState prev = solver.state();
  while (solver.state().t < config.t_end) {
    prev = solver.state();
    solver.step();  // StepFailure / DomainExhausted carry the failure time

    while (next_snap < snaps.size() && snaps[next_snap] <= solver.state().t) {
      // linear interpolation in t between the bracketing steps
      const FieldState& cur = solver.state();
      double w = (snaps[next_snap] - prev.t) / (cur.t - prev.t);
      FieldState s = cur;
      s.t = snaps[next_snap];
      for (size_t i = 0; i < s.u.size(); ++i) {
        s.u[i] = (1.0 - w) * prev.u[i] + w * cur.u[i];
      }
      result.snapshots.push_back(std::move(s));
      ++next_snap;
    }
    if (solver.state().t >= next_record || solver.state().t >= config.t_end) {
      record(solver.state());
      while (next_record <= solver.state().t) next_record *= log_step;
    }
    ++result.steps;
  }
  return result;
}

}  // namespace ard
