#include "ard/scaling.hpp"

#include "ard/errors.hpp"
#include "ard/power_map.hpp"

namespace ard {

ScalingGenerator::ScalingGenerator(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) {
    throw std::invalid_argument("scaling generator must not be zero");
  }
}

Rational term_scaling_weight(const JetTerm& term, const ScalingGenerator& g) {
  Rational w = g.a * term.xpow + g.b * term.tpow;
  for (int i = 0; i < JetVar::kCount; ++i) {
    if (term.jetpows[i] == 0) continue;
    JetVar v = JetVar::from_index(i);
    Rational per = g.c - g.a * Rational(v.dx) - g.b * Rational(v.dt);
    w += per * Rational(term.jetpows[i]);
  }
  return w;
}

FlowResult scaling_flow(const EvolutionEquation& eq, const ScalingGenerator& g) {
  const Rational w_ut = g.c - g.b;  // weight of the u_t term, divided out
  FlowResult fr;
  bool limit_exists = true;
  std::vector<JetTerm> surviving;

  const JetPoly residual = eq.residual();
  for (const auto& term : residual.terms()) {
    FlowEntry entry;
    entry.term = term;
    entry.lambda_exponent = term_scaling_weight(term, g) - w_ut;
    if (!term.exprate.is_zero() && !g.b.is_zero()) {
      // e^{kt} becomes e^{k exp(lambda b) t}: superpolynomial along b > 0,
      // flattening to 1 along b < 0.
      if (g.b > Rational(0)) {
        entry.kind = (term.exprate < Rational(0)) ? FlowEntry::Kind::super_decay
                                                  : FlowEntry::Kind::super_growth;
      }
    }
    switch (entry.kind) {
      case FlowEntry::Kind::super_growth:
        limit_exists = false;
        break;
      case FlowEntry::Kind::super_decay:
        break;
      case FlowEntry::Kind::power:
        if (entry.lambda_exponent > Rational(0)) {
          limit_exists = false;
        } else if (entry.lambda_exponent.is_zero()) {
          JetTerm kept = term;
          if (!g.b.is_zero() && g.b < Rational(0)) kept.exprate = 0;
          surviving.push_back(kept);
        }
        break;
    }
    fr.entries.push_back(std::move(entry));
  }

  if (limit_exists) {
    JetPoly residual_limit = JetPoly::from_terms(std::move(surviving));
    JetPoly F_limit = JetPoly::var(kUt) - residual_limit;
    fr.limit = EvolutionEquation(F_limit, eq.coords());
  }
  return fr;
}

EvolutionEquation asymptotic_limit(const FlowResult& fr) {
  if (!fr.limit) {
    for (const auto& e : fr.entries) {
      if (e.kind == FlowEntry::Kind::super_growth || e.lambda_exponent > Rational(0)) {
        throw NoLimit("flow diverges: a term carries lambda exponent " +
                      e.lambda_exponent.str());
      }
    }
    throw NoLimit("flow diverges");
  }
  return *fr.limit;
}

ScalingGenerator push_scaling(const ScalingGenerator& g, const PowerMap& m) {
  if (!m.K.is_zero()) {
    throw NotRepresentable("maps with exponential factors do not carry scalings to scalings");
  }
  return ScalingGenerator(m.p * g.a + m.q * g.b, m.gamma * g.b,
                          m.r * g.a + m.s * g.b + g.c);
}

}  // namespace ard
