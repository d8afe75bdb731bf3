#include "ard/power_map.hpp"

#include "ard/errors.hpp"

namespace ard {

namespace {

Rational pow_or_throw(const Rational& base, const Rational& e, const char* what) {
  auto v = rational_pow_exact(base, e);
  if (!v) {
    throw NotRepresentable(std::string(what) + ": " + base.str() + "^" + e.str() +
                           " is not rational");
  }
  return *v;
}

}  // namespace

PowerMap PowerMap::heat_adapted() {
  PowerMap m;
  m.p = 2;
  m.q = -1;
  m.r = 1;
  return m;
}

PowerMap PowerMap::ad_to_heat(const Rational& alpha, const Rational& nu) {
  if (alpha.is_zero() || nu.is_zero()) throw std::invalid_argument("alpha, nu must be nonzero");
  PowerMap m;
  m.gamma = alpha * nu;
  m.p = alpha / 2;
  m.c_sigma = alpha / (nu * 4);
  return m;
}

PowerMap PowerMap::front_adapted(const Rational& delta, const Rational& K) {
  PowerMap m;
  m.q = -delta;
  m.K = K;
  return m;
}

void PowerMap::validate() const {
  if (gamma.is_zero() || p.is_zero()) {
    throw std::invalid_argument("power map needs gamma != 0 and p != 0");
  }
  if (c_sigma.is_zero() || c_y.is_zero() || c_w.is_zero()) {
    throw std::invalid_argument("power map coefficients must be nonzero");
  }
}

EvolutionEquation transform(const EvolutionEquation& eq, const PowerMap& m) {
  m.validate();
  const JetPoly w = JetPoly::var(kU);
  const JetPoly wy = JetPoly::var(kUx);
  const JetPoly wyy = JetPoly::var(kUxx);
  const JetPoly wsig = JetPoly::var(kUt);

  // u = (1/c_w) x^-r t^-s e^{-Kt} w; derivatives of y, sigma, and the prefactor.
  const Rational inv_cw = Rational(1) / m.c_w;
  const JetTerm P(inv_cw, -m.r, -m.s, -m.K);
  const JetTerm Px(inv_cw * -m.r, -m.r - 1, -m.s, -m.K);
  const JetPoly Pt = JetPoly::from_terms(
      {JetTerm(inv_cw * -m.s, -m.r, -m.s - 1, -m.K), JetTerm(inv_cw * -m.K, -m.r, -m.s, -m.K)});
  const JetTerm Pxx(inv_cw * m.r * (m.r + 1), -m.r - 2, -m.s, -m.K);
  const JetTerm yx(m.c_y * m.p, m.p - 1, m.q);
  const JetTerm yxx(m.c_y * m.p * (m.p - 1), m.p - 2, m.q);
  const JetTerm yt(m.c_y * m.q, m.p, m.q - 1);
  const JetTerm sigt(m.c_sigma * m.gamma, 0, m.gamma - 1);

  const JetPoly U = w.times(P);
  const JetPoly UX = w.times(Px) + wy.times(P.times(yx));
  const JetPoly UXX = w.times(Pxx) + wy.times(Px.times(yx)).scale(2) +
                      wyy.times(P.times(yx.times(yx))) + wy.times(P.times(yxx));
  const JetPoly UT = Pt * w + wy.times(P.times(yt)) + wsig.times(P.times(sigt));

  // Simultaneous substitution u -> U, u_x -> UX, u_xx -> UXX. Sequential
  // passes would alias: the replacements live in the same jet slots.
  JetPoly F;
  {
    std::vector<JetPoly> u_pows = {JetPoly::constant(1)};
    std::vector<JetPoly> ux_pows = {JetPoly::constant(1)};
    std::vector<JetPoly> uxx_pows = {JetPoly::constant(1)};
    auto power = [](std::vector<JetPoly>& cache, const JetPoly& base, int m) -> const JetPoly& {
      while (static_cast<int>(cache.size()) <= m) cache.push_back(cache.back() * base);
      return cache[m];
    };
    for (const auto& term : eq.rhs().terms()) {
      JetTerm base = term;
      const int m0 = term.jetpows[kU.index()];
      const int m1 = term.jetpows[kUx.index()];
      const int m2 = term.jetpows[kUxx.index()];
      base.jetpows[kU.index()] = 0;
      base.jetpows[kUx.index()] = 0;
      base.jetpows[kUxx.index()] = 0;
      JetPoly piece = JetPoly::from_terms({base});
      piece = piece * power(u_pows, U, m0);
      piece = piece * power(ux_pows, UX, m1);
      piece = piece * power(uxx_pows, UXX, m2);
      F = F + piece;
    }
  }

  // u_t - F = 0 is linear in w_sigma with single-term coefficient P*sigma_t.
  const JetTerm wsig_coeff = P.times(sigt);
  if (wsig_coeff.coeff.is_zero()) throw NotEvolutionForm("w_sigma coefficient vanishes");
  JetTerm inv = wsig_coeff;
  inv.coeff = Rational(1) / inv.coeff;
  inv.xpow = -inv.xpow;
  inv.tpow = -inv.tpow;
  inv.exprate = -inv.exprate;
  JetPoly rest = UT - wsig.times(wsig_coeff);  // the w-independent part of u_t
  JetPoly F_mixed = (F - rest).times(inv);

  // Convert x^a t^b e^{kt} monomials to the (y, sigma) chart:
  //   x = (y/c_y)^{1/p} t^{-q/p},  t = (sigma/c_sigma)^{1/gamma}.
  std::vector<JetTerm> converted;
  for (JetTerm term : F_mixed.terms()) {
    const Rational a = term.xpow;
    const Rational b = term.tpow - m.q * a / m.p;
    Rational coeff = term.coeff;
    coeff *= pow_or_throw(m.c_y, -(a / m.p), "transform");
    coeff *= pow_or_throw(m.c_sigma, -(b / m.gamma), "transform");
    term.coeff = coeff;
    term.xpow = a / m.p;
    term.tpow = b / m.gamma;
    if (!term.exprate.is_zero()) {
      if (!(m.gamma == Rational(1))) {
        throw NotRepresentable("exponential factor survives a nonlinear time power");
      }
      term.exprate = term.exprate / m.c_sigma;
    }
    converted.push_back(std::move(term));
  }
  return EvolutionEquation(JetPoly::from_terms(std::move(converted)),
                           eq.coords() == Coords::original ? Coords::adapted : Coords::original);
}

PowerMap inverse(const PowerMap& m) {
  m.validate();
  PowerMap inv;
  inv.gamma = Rational(1) / m.gamma;
  inv.p = Rational(1) / m.p;
  inv.q = -m.q / (m.p * m.gamma);
  inv.r = -m.r / m.p;
  inv.s = (m.q * m.r / m.p - m.s) / m.gamma;
  if (!m.K.is_zero()) {
    if (!(m.gamma == Rational(1))) {
      throw NotRepresentable("inverse of an exponential factor under t^gamma, gamma != 1");
    }
    inv.K = -m.K / m.c_sigma;
  }
  inv.c_sigma = pow_or_throw(m.c_sigma, -inv.gamma, "inverse");
  inv.c_y = pow_or_throw(m.c_y, -inv.p, "inverse") *
            pow_or_throw(m.c_sigma, m.q / (m.p * m.gamma), "inverse");
  inv.c_w = (Rational(1) / m.c_w) * pow_or_throw(m.c_y, m.r / m.p, "inverse") *
            pow_or_throw(m.c_sigma, (m.s - m.q * m.r / m.p) / m.gamma, "inverse");
  return inv;
}

JetPoly reduce_invariant(const EvolutionEquation& eq_in_adapted_coords) {
  // The right-hand side never holds sigma-derivatives, so imposing w_sigma = 0
  // leaves it unchanged; a shared power of sigma is divided out.
  const JetPoly& F = eq_in_adapted_coords.rhs();
  if (F.is_zero()) return F;
  const Rational common = F.terms().front().tpow;
  for (const auto& term : F.terms()) {
    if (!(term.tpow == common)) return F;
  }
  if (common.is_zero()) return F;
  std::vector<JetTerm> shifted = F.terms();
  for (auto& term : shifted) term.tpow = 0;
  return JetPoly::from_terms(std::move(shifted));
}

}  // namespace ard
