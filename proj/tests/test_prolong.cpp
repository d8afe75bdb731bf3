#include <doctest.h>

#include <cmath>

#include "ard/equation.hpp"
#include "ard/front.hpp"
#include "ard/errors.hpp"
#include "ard/symmetry.hpp"
#include "ard/vector_field.hpp"

using namespace ard;

namespace {

VectorField scaling_field(const Rational& a, const Rational& b, const Rational& c) {
  return VectorField(JetPoly::monomial(a, 1, 0) * JetPoly::constant(1),
                     JetPoly::monomial(b, 0, 1), JetPoly::var(kU).scale(c));
}

}  // namespace

TEST_CASE("vector field coefficients must be point functions") {
  CHECK_THROWS_AS(VectorField(JetPoly::var(kUx), JetPoly(), JetPoly()), std::invalid_argument);
}

TEST_CASE("prolongation of u d/du is the identity lift") {
  VectorField X(JetPoly(), JetPoly(), JetPoly::var(kU));
  ProlongedField Y = prolong(X);
  CHECK(Y.psi_x == JetPoly::var(kUx));
  CHECK(Y.psi_t == JetPoly::var(kUt));
  CHECK(Y.psi_xx == JetPoly::var(kUxx));
  CHECK(Y.psi_xt == JetPoly::var(kUxt));
  CHECK(Y.psi_tt == JetPoly::var(kUtt));
}

TEST_CASE("prolongation of the front translation field d/dx + (1/(l0 t^d)) d/du") {
  // delta = 1/2, lambda0 = 2
  Rational delta(1, 2), lambda0(2);
  Rational L = Rational(1) / lambda0;
  VectorField X1(JetPoly::constant(1), JetPoly(),
                 JetPoly::monomial(L, 0, -delta));
  ProlongedField Y = prolong(X1);
  CHECK(Y.psi_x.is_zero());
  CHECK(Y.psi_t == JetPoly::monomial(-delta * L, 0, -(Rational(1) + delta)));
  CHECK(Y.psi_xx.is_zero());
  CHECK(Y.psi_xt.is_zero());
  CHECK(Y.psi_tt ==
        JetPoly::monomial(delta * L * (Rational(1) + delta), 0, -(Rational(2) + delta)));
}

TEST_CASE("prolongation of the front scaling field (x d + c0 t^(1+d)) d/dx + t d/dt") {
  Rational delta(1, 2), c0(3, 2);
  VectorField X0(JetPoly::monomial(delta, 1, 0) + JetPoly::monomial(c0, 0, Rational(1) + delta),
                 JetPoly::monomial(1, 0, 1), JetPoly());
  ProlongedField Y = prolong(X0);
  CHECK(Y.psi_x == JetPoly::var(kUx).scale(-delta));
  CHECK(Y.psi_t == JetPoly::monomial(-(Rational(1) + delta) * c0, 0, delta) * JetPoly::var(kUx) -
                       JetPoly::var(kUt));
  CHECK(Y.psi_xx == JetPoly::var(kUxx).scale(Rational(-2) * delta));
}

TEST_CASE("prolongation is linear in the field") {
  VectorField X1(JetPoly::monomial(1, 1, 0), JetPoly::monomial(2, 0, 1),
                 JetPoly::var(kU).scale(-1));
  VectorField X2(JetPoly::constant(1), JetPoly(), JetPoly::monomial(1, 0, Rational(-1, 2)));
  Rational a(2, 3), b(-5, 7);
  VectorField combo = X1.scale(a) + X2.scale(b);
  ProlongedField Ya = prolong(X1), Yb = prolong(X2), Yc = prolong(combo);
  for (JetVar v : {kUx, kUt, kUxx, kUxt, kUtt}) {
    CHECK(Yc.psi(v) == Ya.psi(v).scale(a) + Yb.psi(v).scale(b));
  }
}

TEST_CASE("apply: scaling weight of the heat residual") {
  // (x dx + 2t dt - u du) applied to (u_t - u_xx) gives -3 (u_t - u_xx)
  VectorField X = scaling_field(1, 2, -1);
  JetPoly residual = JetPoly::var(kUt) - JetPoly::var(kUxx);
  CHECK(apply(prolong(X), residual) == residual.scale(-3));
}

TEST_CASE("apply: translation kills the FKPP residual") {
  VectorField dx(JetPoly::constant(1), JetPoly(), JetPoly());
  CHECK(apply(prolong(dx), EvolutionEquation::fkpp().residual()).is_zero());
}

TEST_CASE("exact heat symmetries") {
  EvolutionEquation heat = EvolutionEquation::heat();
  VectorField dx(JetPoly::constant(1), JetPoly(), JetPoly());
  VectorField dt(JetPoly(), JetPoly::constant(1), JetPoly());
  VectorField u_du(JetPoly(), JetPoly(), JetPoly::var(kU));
  for (const auto& X : {dx, dt, u_du, scaling_field(1, 2, -1)}) {
    CHECK(is_symmetry(X, heat));
  }
}

TEST_CASE("symmetry checks on families") {
  CHECK(is_symmetry(VectorField(JetPoly::constant(1), JetPoly(), JetPoly()),
                    EvolutionEquation::fkpp()));
  CHECK(is_symmetry(VectorField(JetPoly(), JetPoly::constant(1), JetPoly()),
                    EvolutionEquation::fkpp()));
  // the generalized scaling field of the observed solution is not a symmetry
  Rational alpha(1), nu(1), K(1);
  Rational delta = predict_delta(alpha, nu);
  VectorField X(JetPoly::monomial(delta, 1, 0), JetPoly::monomial(1, 0, 1),
                JetPoly::monomial(-K, 0, 1) * JetPoly::var(kU));
  CHECK_FALSE(is_symmetry(X, EvolutionEquation::anomalous_reaction_diffusion(alpha, nu)));
}

TEST_CASE("non-evolution symmetry checks on the traveling-wave ODE") {
  // w'' + 2w' + w = 0 written over the x-jet
  JetPoly ode = JetPoly::var(kUxx) + JetPoly::var(kUx).scale(2) + JetPoly::var(kU);
  VectorField u_du(JetPoly(), JetPoly(), JetPoly::var(kU));
  VectorField dx(JetPoly::constant(1), JetPoly(), JetPoly());
  VectorField x_dx(JetPoly::monomial(1, 1, 0), JetPoly(), JetPoly());
  CHECK(is_symmetry_general(ode, kUxx, u_du));
  CHECK(is_symmetry_general(ode, kUxx, dx));
  CHECK_FALSE(is_symmetry_general(ode, kUxx, x_dx));
  CHECK_THROWS_AS(is_symmetry_general(JetPoly::var(kU), kUxx, dx), NotSolvable);
}

TEST_CASE("linearized FKPP admits scaling and translations") {
  // u_t = u_xx + u
  EvolutionEquation lin(JetPoly::var(kUxx) + JetPoly::var(kU));
  CHECK(is_symmetry(VectorField(JetPoly(), JetPoly(), JetPoly::var(kU)), lin));
  CHECK(is_symmetry(VectorField(JetPoly::constant(1), JetPoly(), JetPoly()), lin));
  CHECK(is_symmetry(VectorField(JetPoly(), JetPoly::constant(1), JetPoly()), lin));
}

TEST_CASE("group action on the traveling-wave solution coordinates") {
  auto [a1, a2] = linear_front_group_action(1.0, 0.0, 0.3, 0.7);
  CHECK(a1 == doctest::Approx(std::exp(1.0)));
  CHECK(a2 == 0.0);
  auto [b1, b2] = linear_front_group_action(0.4, -0.2, 0.0, 0.0);
  CHECK(b1 == doctest::Approx(0.4));
  CHECK(b2 == doctest::Approx(-0.2));
  auto [c1, c2] = linear_front_group_action(0.0, 1.0, 0.0, 1.0);
  CHECK(c1 == doctest::Approx(std::exp(1.0)));
  CHECK(c2 == doctest::Approx(std::exp(1.0)));
}
