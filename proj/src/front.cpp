#include "ard/front.hpp"

#include <algorithm>
#include <cmath>

#include "ard/errors.hpp"
#include "ard/solver.hpp"

namespace ard {

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

}  // namespace

double front_position(const FieldState& state, double h) {
  if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("level h must be in (0, 1)");
  const auto& u = state.u;
  const auto& x = state.x;
  int crossing = -1;
  int count = 0;
  for (size_t i = 0; i + 1 < u.size(); ++i) {
    if ((u[i] - h) * (u[i + 1] - h) < 0.0 || (u[i] == h && u[i + 1] != h)) {
      ++count;
      crossing = static_cast<int>(i);
    }
  }
  if (count == 0) throw NoCrossing("no crossing of level " + std::to_string(h));
  if (count > 1) throw MultipleCrossings("level " + std::to_string(h) + " crossed " +
                                         std::to_string(count) + " times");
  const int i = crossing;
  if (u[i] == h) return x[i];
  if (u[i] > 0.0 && u[i + 1] > 0.0) {
    double l0 = std::log(u[i]);
    double l1 = std::log(u[i + 1]);
    return x[i] + (x[i + 1] - x[i]) * (std::log(h) - l0) / (l1 - l0);
  }
  return x[i] + (x[i + 1] - x[i]) * (h - u[i]) / (u[i + 1] - u[i]);
}

double front_width(const FieldState& state, double u_lo, double u_hi) {
  // Tail cells to the right of the maximum, values inside the window.
  size_t peak = std::distance(state.u.begin(), std::max_element(state.u.begin(), state.u.end()));
  std::vector<double> xs, ys;
  for (size_t i = peak; i < state.u.size(); ++i) {
    if (state.u[i] >= u_lo && state.u[i] <= u_hi) {
      xs.push_back(state.x[i]);
      ys.push_back(std::log(state.u[i]));
    }
  }
  if (xs.size() < 8) {
    throw InsufficientTail("only " + std::to_string(xs.size()) + " cells in the tail window");
  }
  LineFit fit = least_squares(xs, ys);
  if (!(fit.slope < 0.0)) throw InsufficientTail("tail is not decaying");
  return -1.0 / fit.slope;
}

FitResult fit_scaling(const FrontSeries& series, double t_lo, double t_hi) {
  if (!(t_hi >= 10.0 * t_lo)) throw WindowTooShort("fit window must span at least one decade");
  std::vector<double> lt, lx, ll;
  for (const auto& rec : series.records) {
    if (rec.t < t_lo || rec.t > t_hi) continue;
    if (!(rec.position > 0.0) || !(rec.width > 0.0)) continue;
    lt.push_back(std::log(rec.t));
    lx.push_back(std::log(rec.position));
    ll.push_back(std::log(rec.width));
  }
  if (lt.size() < 4) throw WindowTooShort("fewer than 4 series records inside the window");
  if (series.records.empty() || series.records.front().t > t_lo ||
      series.records.back().t < t_hi) {
    throw WindowTooShort("fit window outside the series range");
  }
  LineFit width_fit = least_squares(lt, ll);
  LineFit pos_fit = least_squares(lt, lx);
  FitResult out;
  out.delta_hat = width_fit.slope;
  out.delta_hat_position = pos_fit.slope - 1.0;
  out.lambda0_hat = std::exp(width_fit.intercept);
  out.c0_hat = std::exp(pos_fit.intercept);
  out.rms_width = width_fit.rms;
  out.rms_position = pos_fit.rms;
  out.t_lo = t_lo;
  out.t_hi = t_hi;
  return out;
}

Rational predict_delta(const Rational& alpha, const Rational& nu) {
  if (alpha.is_zero()) throw std::invalid_argument("alpha must be nonzero");
  return nu + Rational(1) / alpha - Rational(1);
}

Prediction predict_front(const Rational& alpha, const Rational& delta, std::optional<double> c0) {
  if (!(alpha > Rational(0))) throw std::invalid_argument("alpha must be positive");
  if (!(delta > Rational(-1))) throw std::invalid_argument("delta must exceed -1");
  const double a = alpha.to_double();
  const double d = delta.to_double();
  Prediction out;
  out.delta = delta;
  out.c0_min = std::pow(2.0 / (1.0 + d), 2.0 / a);
  out.omega0 = std::pow(2.0 / (1.0 + d), 1.0 - 2.0 / a);
  if (c0) {
    if (*c0 < out.c0_min * (1.0 - 1e-12)) {
      throw OscillatorySpeed("c0 = " + std::to_string(*c0) + " below the minimal speed " +
                             std::to_string(out.c0_min));
    }
    double disc = std::max(0.0, 1.0 - 4.0 / (std::pow(*c0, a) * (1.0 + d) * (1.0 + d)));
    double pre = (1.0 + d) / (2.0 * std::pow(*c0, 1.0 - a));
    out.omega_plus = pre * (1.0 + std::sqrt(disc));
    out.omega_minus = pre * (1.0 - std::sqrt(disc));
  }
  return out;
}

std::pair<double, double> fkpp_dimensional(double D, double eps) {
  if (!(D > 0.0) || !(eps > 0.0)) throw std::invalid_argument("D and eps must be positive");
  return {std::sqrt(D / eps), std::sqrt(4.0 * eps * D)};
}

double collapse_metric(const std::vector<FieldState>& snapshots, const Rational& alpha,
                       const Rational& nu) {
  if (snapshots.size() < 2) throw std::invalid_argument("collapse needs at least two snapshots");
  const double a = alpha.to_double();
  const double n_exp = (alpha * nu).to_double();  // zeta = x^a / t^(a nu)
  const double amp = n_exp / 2.0;                 // profile = t^(a nu / 2) u

  struct Profile {
    std::vector<double> zeta, phi;
  };
  std::vector<Profile> profiles;
  double zeta_max = 1e300;
  for (const auto& s : snapshots) {
    Profile p;
    double tn = std::pow(s.t, n_exp);
    double ta = std::pow(s.t, amp);
    for (size_t i = 0; i < s.x.size(); ++i) {
      p.zeta.push_back(std::pow(s.x[i], a) / tn);
      p.phi.push_back(ta * s.u[i]);
    }
    zeta_max = std::min(zeta_max, p.zeta.back());
    profiles.push_back(std::move(p));
  }
  zeta_max = std::min(zeta_max, 20.0);
  double zeta_min = 0.0;
  for (const auto& p : profiles) zeta_min = std::max(zeta_min, p.zeta.front());
  if (!(zeta_min < zeta_max)) throw GridMismatch("snapshot zeta ranges do not overlap");

  const int grid_n = 256;
  auto sample = [&](const Profile& p, double z) {
    auto it = std::lower_bound(p.zeta.begin(), p.zeta.end(), z);
    if (it == p.zeta.begin()) return p.phi.front();
    if (it == p.zeta.end()) return p.phi.back();
    size_t hi = std::distance(p.zeta.begin(), it);
    double w = (z - p.zeta[hi - 1]) / (p.zeta[hi] - p.zeta[hi - 1]);
    return (1.0 - w) * p.phi[hi - 1] + w * p.phi[hi];
  };

  double metric = 0.0;
  for (size_t i = 0; i < profiles.size(); ++i) {
    double sup_i = 0.0;
    for (double v : profiles[i].phi) sup_i = std::max(sup_i, std::fabs(v));
    for (size_t j = i + 1; j < profiles.size(); ++j) {
      double sup_diff = 0.0;
      for (int k = 0; k <= grid_n; ++k) {
        double z = zeta_min + (zeta_max - zeta_min) * k / grid_n;
        sup_diff = std::max(sup_diff, std::fabs(sample(profiles[i], z) - sample(profiles[j], z)));
      }
      if (sup_i > 0.0) metric = std::max(metric, sup_diff / sup_i);
    }
  }
  return metric;
}

}  // namespace ard
