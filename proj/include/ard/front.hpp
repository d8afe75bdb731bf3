#ifndef ARD_FRONT_HPP
#define ARD_FRONT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ard/rational.hpp"

namespace ard {

struct FieldState;

struct FrontRecord {
  double t;
  double position;  // X_h(t)
  double width;     // tail width lambda(t)
};

struct FrontSeries {
  double level_h = 0.5;
  std::vector<FrontRecord> records;
};

struct FitResult {
  double delta_hat = 0.0;            // from the width series
  double delta_hat_position = 0.0;   // from the position series, minus one
  double c0_hat = 0.0;
  double lambda0_hat = 0.0;
  double rms_width = 0.0;
  double rms_position = 0.0;
  double t_lo = 0.0, t_hi = 0.0;
};

struct Prediction {
  Rational delta;
  double c0_min = 0.0;
  double omega0 = 0.0;
  std::optional<double> omega_plus;
  std::optional<double> omega_minus;
};

// x where u crosses h, by linear interpolation of ln u between the
// bracketing cells. NoCrossing / MultipleCrossings as the names say.
double front_position(const FieldState& state, double h);

// lambda = -1 / slope of ln u against x over cells with u in [u_lo, u_hi]
// to the right of the front; InsufficientTail below 8 cells.
double front_width(const FieldState& state, double u_lo, double u_hi);

// Log-log fits of X_h ~ c0 t^(1+delta) and lambda ~ lambda0 t^delta over
// [t_lo, t_hi] (must span a decade).
FitResult fit_scaling(const FrontSeries& series, double t_lo, double t_hi);

// delta = nu + 1/alpha - 1
Rational predict_delta(const Rational& alpha, const Rational& nu);

// Kolmogorov selection: c0_min = (2/(1+delta))^(2/alpha), omega0 at the
// minimal speed, and the dispersion roots omega_+- for a supplied c0.
Prediction predict_front(const Rational& alpha, const Rational& delta,
                         std::optional<double> c0 = std::nullopt);

// Dimensional FKPP front: lambda = sqrt(D/eps), v = sqrt(4 eps D).
std::pair<double, double> fkpp_dimensional(double D, double eps);

// Self-similarity defect of pure-diffusion snapshots: profiles
// t^{a nu / 2} u against zeta = x^a / t^{a nu} are interpolated onto a shared
// zeta grid and compared pairwise in the sup norm.
double collapse_metric(const std::vector<FieldState>& snapshots, const Rational& alpha,
                       const Rational& nu);

}  // namespace ard

#endif
