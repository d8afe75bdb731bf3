#ifndef ARD_SCALING_HPP
#define ARD_SCALING_HPP

#include <optional>
#include <vector>

#include "ard/equation.hpp"

namespace ard {

// X = a x d/dx + b t d/dt + c u d/du.
struct ScalingGenerator {
  Rational a, b, c;

  ScalingGenerator(Rational a_, Rational b_, Rational c_);
};

// Behavior of one equation term under the scaling flow, after dividing out
// the overall u_t weight.
struct FlowEntry {
  JetTerm term;
  Rational lambda_exponent;          // meaningful for kind == power
  enum class Kind { power, super_decay, super_growth } kind = Kind::power;
};

struct FlowResult {
  std::vector<FlowEntry> entries;    // entries for -F; u_t itself carries exponent 0
  std::optional<EvolutionEquation> limit;
};

// Pure scaling weight of a single term (no normalization).
Rational term_scaling_weight(const JetTerm& term, const ScalingGenerator& g);

// Per-term lambda exponents of e^{lambda Y} (u_t - F), normalized so the u_t
// term carries exponent 0. Fills `limit` when every exponent is <= 0.
FlowResult scaling_flow(const EvolutionEquation& eq, const ScalingGenerator& g);

// Keeps exponent-0 terms, drops negative ones and superpolynomially decaying
// exponential factors; NoLimit if any term grows.
EvolutionEquation asymptotic_limit(const FlowResult& fr);

// Pushforward of a scaling generator through a power map with K = 0
// (exponential factors in the map break pure scalings).
struct PowerMap;
ScalingGenerator push_scaling(const ScalingGenerator& g, const PowerMap& m);

}  // namespace ard

#endif
