#ifndef ARD_VECTOR_FIELD_HPP
#define ARD_VECTOR_FIELD_HPP

#include "ard/jet.hpp"

namespace ard {

// X = xi d/dx + tau d/dt + phi d/du; coefficients depend on (x, t, u) only.
struct VectorField {
  JetPoly xi;
  JetPoly tau;
  JetPoly phi;

  VectorField() = default;
  VectorField(JetPoly xi, JetPoly tau, JetPoly phi);

  friend VectorField operator+(const VectorField& a, const VectorField& b) {
    return {a.xi + b.xi, a.tau + b.tau, a.phi + b.phi};
  }
  VectorField scale(const Rational& c) const { return {xi.scale(c), tau.scale(c), phi.scale(c)}; }
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

// Second prolongation: base field plus Psi coefficients for u_x..u_tt.
struct ProlongedField {
  VectorField base;
  JetPoly psi_x, psi_t, psi_xx, psi_xt, psi_tt;

  const JetPoly& psi(JetVar v) const;
};

// Computes Psi_J = D_J(Q) + xi u_{J,x} + tau u_{J,t} with Q = phi - xi u_x - tau u_t.
// The order-3 intermediates must cancel; survivors raise CancellationFailure.
ProlongedField prolong(const VectorField& X);

// Y acting as a derivation: xi p_x + tau p_t + phi p_u + sum Psi_J p_{u_J}.
// Requires p of derivative order <= 2.
JetPoly apply(const ProlongedField& Y, const JetPoly& p);

}  // namespace ard

#endif
