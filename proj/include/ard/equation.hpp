#ifndef ARD_EQUATION_HPP
#define ARD_EQUATION_HPP

#include <optional>
#include <string>

#include "ard/jet.hpp"

namespace ard {

enum class Family { heat, fkpp, anomalous_diffusion, anomalous_reaction_diffusion, custom };

// Which names the jets carry when printed: (x,t,u) or adapted (y,s,w).
enum class Coords { original, adapted };

// u_t = F(x, t, u, u_x, u_xx); F carries no t-derivatives and order <= 2.
class EvolutionEquation {
 public:
  explicit EvolutionEquation(JetPoly F, Coords coords = Coords::original);

  static EvolutionEquation heat();
  static EvolutionEquation fkpp();
  // u_t = t^(nu*alpha-1) [ x^(2-alpha) u_xx + (1-alpha/2) x^(1-alpha) u_x ]
  static EvolutionEquation anomalous_diffusion(const Rational& alpha, const Rational& nu);
  // the diffusion part above plus logistic growth u(1-u)
  static EvolutionEquation anomalous_reaction_diffusion(const Rational& alpha, const Rational& nu);

  const JetPoly& rhs() const { return rhs_; }
  JetPoly residual() const;  // u_t - F
  Coords coords() const { return coords_; }
  Family family() const { return family_; }
  std::optional<Rational> alpha() const { return alpha_; }
  std::optional<Rational> nu() const { return nu_; }

  friend bool operator==(const EvolutionEquation& a, const EvolutionEquation& b) {
    return a.rhs_ == b.rhs_;
  }

 private:
  JetPoly rhs_;
  Coords coords_ = Coords::original;
  Family family_ = Family::custom;
  std::optional<Rational> alpha_;
  std::optional<Rational> nu_;
};

// Substitutes u_t -> F and every mixed/higher t-derivative by the total
// derivatives of F, recursively until no t-derivatives remain.
JetPoly restrict_to_solution_manifold(const JetPoly& p, const EvolutionEquation& eq);

}  // namespace ard

#endif
