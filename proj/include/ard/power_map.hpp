#ifndef ARD_POWER_MAP_HPP
#define ARD_POWER_MAP_HPP

#include "ard/equation.hpp"

namespace ard {

// Projectable coordinate change
//   sigma = c_sigma t^gamma,  y = c_y x^p t^q,  w = c_w x^r t^s e^{Kt} u.
// Unit coefficients give the plain power family; the coefficients are what a
// diffusion-constant normalization needs (see ad_to_heat). gamma, p and the
// coefficients must be nonzero.
struct PowerMap {
  Rational gamma = 1, p = 1, q = 0, r = 0, s = 0, K = 0;
  Rational c_sigma = 1, c_y = 1, c_w = 1;

  static PowerMap identity() { return {}; }

  // sigma = t, y = x^2/t, v = x u  (the adapted coordinates of the heat
  // scaling x d/dx + 2 t d/dt - u d/du).
  static PowerMap heat_adapted();

  // Solution-preserving map from the anomalous-diffusion family onto
  // w_sigma = w_yy exactly: sigma = (alpha/(4 nu)) t^(alpha nu), y = x^(alpha/2), w = u.
  static PowerMap ad_to_heat(const Rational& alpha, const Rational& nu);

  // sigma = t, y = x/t^delta, w = e^{Kt} u  (front-adapted coordinates).
  static PowerMap front_adapted(const Rational& delta, const Rational& K);

  void validate() const;
};

// Rewrites u_t = F(x,t,u,...) over (sigma, y, w) jets, solved for w_sigma.
// Throws NotRepresentable when a required coefficient power or exponential
// factor leaves the monomial algebra, NotEvolutionForm if the w_sigma
// coefficient vanishes.
EvolutionEquation transform(const EvolutionEquation& eq, const PowerMap& m);

// Closed-form inverse; NotRepresentable when an exact rational coefficient
// does not exist.
PowerMap inverse(const PowerMap& m);

// Sets w_sigma (and its derivatives) to zero and returns the reduced
// expression; when every term carries the same sigma power that power is
// divided out, which makes exact-symmetry reductions sigma-free.
JetPoly reduce_invariant(const EvolutionEquation& eq_in_adapted_coords);

}  // namespace ard

#endif
