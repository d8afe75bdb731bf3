#ifndef ARD_SOLVER_HPP
#define ARD_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ard/front.hpp"
#include "ard/rational.hpp"

namespace ard {

enum class GridKind { uniform, log };
enum class IcKind { plateau_tanh, point_mass_gaussian };

struct SolverConfig {
  Rational alpha = 2;      // 0 < alpha <= 2
  Rational nu = Rational(1, 2);  // > 0
  bool reaction = true;
  GridKind grid = GridKind::log;
  int n = 1024;            // >= 64 cells
  double x_min = 0.01;     // > 0
  double x_max = 100.0;
  double t0 = 1.0;         // > 0
  double t_end = 10.0;
  double cfl = 0.4;
  std::vector<double> snapshot_times;
  IcKind ic = IcKind::plateau_tanh;
  double ic_x_c = 1.0;     // plateau center
  double ic_width = 0.1;   // plateau ramp width
  double ic_x0 = 1.0;      // gaussian center
  double ic_s = 0.2;       // gaussian std deviation
  // analysis knobs recorded with every run
  double level_h = 0.5;
  double tail_lo = 1e-6;
  double tail_hi = 1e-2;

  void validate() const;  // ConfigError on violations
};

struct FieldState {
  std::vector<double> x;   // cell centers
  std::vector<double> u;
  double t = 0.0;
  double dt = 0.0;
};

struct Diagnostics {
  std::vector<double> t, dt, mass, tail;
};

struct RunResult {
  std::vector<FieldState> snapshots;
  FrontSeries series;
  Diagnostics diagnostics;
  long long steps = 0;
};

// Crank-Nicolson transport on the flux form x^{1-a/2} d/dx [x^{1-a/2} u_x]
// scaled by t^{nu a - 1}, with explicit-midpoint logistic reaction. Zero-flux
// faces at both ends; a tail monitor raises DomainExhausted before the front
// can touch the right boundary.
class Solver {
 public:
  explicit Solver(const SolverConfig& config);

  const FieldState& state() const { return state_; }
  void set_field(std::vector<double> u);  // warm start from a snapshot
  void step();
  double next_dt() const;

  // weighted mass sum_i x_i^{a/2-1} u_i dx_i (exactly conserved by transport)
  double mass() const;
  double tail_max() const;  // max u over the outer 5% of cells

 private:
  SolverConfig cfg_;
  FieldState state_;
  std::vector<double> face_;      // N+1 faces
  std::vector<double> dx_;        // cell widths
  std::vector<double> wcell_;     // x_i^{1-a/2}
  std::vector<double> gface_;     // face conductances
  std::vector<double> qweight_;   // x_i^{a/2-1} dx_i
  double min_rel_dx_ = 1.0;
  // scratch
  std::vector<double> rhs_, diag_, lower_, upper_;

  double kappa(double t) const;   // t^{nu a - 1}
  void apply_reaction(double dt);
};

FieldState initial_state(const SolverConfig& config);
RunResult run(const SolverConfig& config);

double conserved_mass(const FieldState& state, const Rational& alpha);

}  // namespace ard

#endif
