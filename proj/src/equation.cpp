#include "ard/equation.hpp"

#include <map>

#include "ard/errors.hpp"

namespace ard {

EvolutionEquation::EvolutionEquation(JetPoly F, Coords coords)
    : rhs_(std::move(F)), coords_(coords) {
  if (has_t_derivatives(rhs_)) {
    throw std::invalid_argument("evolution right-hand side contains t-derivatives");
  }
  if (max_derivative_order(rhs_) > 2) {
    throw std::invalid_argument("evolution right-hand side has derivative order > 2");
  }
}

EvolutionEquation EvolutionEquation::heat() {
  EvolutionEquation eq(JetPoly::var(kUxx));
  eq.family_ = Family::heat;
  return eq;
}

EvolutionEquation EvolutionEquation::fkpp() {
  JetPoly u = JetPoly::var(kU);
  EvolutionEquation eq(JetPoly::var(kUxx) + u - u * u);
  eq.family_ = Family::fkpp;
  return eq;
}

EvolutionEquation EvolutionEquation::anomalous_diffusion(const Rational& alpha,
                                                         const Rational& nu) {
  Rational tp = nu * alpha - 1;
  JetPoly F = JetPoly::monomial(1, Rational(2) - alpha, tp) * JetPoly::var(kUxx) +
              JetPoly::monomial(Rational(1) - alpha / 2, Rational(1) - alpha, tp) *
                  JetPoly::var(kUx);
  EvolutionEquation eq(std::move(F));
  eq.family_ = Family::anomalous_diffusion;
  eq.alpha_ = alpha;
  eq.nu_ = nu;
  return eq;
}

EvolutionEquation EvolutionEquation::anomalous_reaction_diffusion(const Rational& alpha,
                                                                  const Rational& nu) {
  EvolutionEquation diff = anomalous_diffusion(alpha, nu);
  JetPoly u = JetPoly::var(kU);
  EvolutionEquation eq(diff.rhs() + u - u * u);
  eq.family_ = Family::anomalous_reaction_diffusion;
  eq.alpha_ = alpha;
  eq.nu_ = nu;
  return eq;
}

JetPoly EvolutionEquation::residual() const { return JetPoly::var(kUt) - rhs_; }

namespace {

// Fully restricted substitution target for u_{x^i t^j} (j >= 1): the total
// derivative D_x^i D_t^{j-1} F evaluated on the solution manifold.
class SubstitutionTable {
 public:
  explicit SubstitutionTable(const EvolutionEquation& eq) : eq_(eq) {}

  const JetPoly& get(JetVar v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    JetPoly value;
    if (v.dt == 1) {
      value = eq_.rhs();
      for (int i = 0; i < v.dx; ++i) value = total_derivative(value, Dir::x);
    } else {
      JetPoly lower = get(JetVar{v.dx, v.dt - 1});
      value = restrict_once(total_derivative(lower, Dir::t));
    }
    return cache_.emplace(v, std::move(value)).first->second;
  }

  // Eliminates one t-derivative layer; `get` guarantees the replacement is
  // t-derivative free, so a single sweep per variable terminates.
  JetPoly restrict_once(JetPoly p) {
    while (true) {
      JetVar target{0, 0};
      bool found = false;
      for (const auto& term : p.terms()) {
        for (int i = 0; i < JetVar::kCount; ++i) {
          if (term.jetpows[i] == 0) continue;
          JetVar v = JetVar::from_index(i);
          if (v.dt >= 1) {
            target = v;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return p;
      p = substitute(p, target, get(target));
    }
  }

 private:
  const EvolutionEquation& eq_;
  std::map<JetVar, JetPoly> cache_;
};

}  // namespace

JetPoly restrict_to_solution_manifold(const JetPoly& p, const EvolutionEquation& eq) {
  SubstitutionTable table(eq);
  return table.restrict_once(p);
}

}  // namespace ard
