#include "ard/vector_field.hpp"

#include "ard/errors.hpp"

namespace ard {

namespace {

void require_point_coefficients(const JetPoly& p, const char* what) {
  if (max_derivative_order(p) >= 1) {
    throw std::invalid_argument(std::string(what) + " must depend on (x, t, u) only");
  }
}

}  // namespace

VectorField::VectorField(JetPoly xi_, JetPoly tau_, JetPoly phi_)
    : xi(std::move(xi_)), tau(std::move(tau_)), phi(std::move(phi_)) {
  require_point_coefficients(xi, "xi");
  require_point_coefficients(tau, "tau");
  require_point_coefficients(phi, "phi");
}

const JetPoly& ProlongedField::psi(JetVar v) const {
  if (v == kUx) return psi_x;
  if (v == kUt) return psi_t;
  if (v == kUxx) return psi_xx;
  if (v == kUxt) return psi_xt;
  if (v == kUtt) return psi_tt;
  throw std::out_of_range("no prolongation coefficient for " + v.name());
}

ProlongedField prolong(const VectorField& X) {
  const JetPoly Q = X.phi - X.xi * JetPoly::var(kUx) - X.tau * JetPoly::var(kUt);

  auto psi = [&](std::initializer_list<Dir> dirs, JetVar J) {
    JetPoly p = Q;
    for (Dir d : dirs) p = total_derivative(p, d);
    p = p + X.xi * JetPoly::var(J.derived(Dir::x)) + X.tau * JetPoly::var(J.derived(Dir::t));
    if (max_derivative_order(p) > J.order()) {
      throw CancellationFailure("prolongation coefficient for " + J.name() +
                                " kept order-" + std::to_string(max_derivative_order(p)) +
                                " variables");
    }
    return p;
  };

  ProlongedField Y;
  Y.base = X;
  Y.psi_x = psi({Dir::x}, kUx);
  Y.psi_t = psi({Dir::t}, kUt);
  Y.psi_xx = psi({Dir::x, Dir::x}, kUxx);
  Y.psi_xt = psi({Dir::x, Dir::t}, kUxt);
  Y.psi_tt = psi({Dir::t, Dir::t}, kUtt);
  return Y;
}

JetPoly apply(const ProlongedField& Y, const JetPoly& p) {
  if (max_derivative_order(p) > 2) {
    throw std::invalid_argument("apply() expects a polynomial of derivative order <= 2");
  }
  JetPoly out = Y.base.xi * partial_x(p) + Y.base.tau * partial_t(p) +
                Y.base.phi * partial_jet(p, kU);
  for (JetVar v : {kUx, kUt, kUxx, kUxt, kUtt}) {
    if (depends_on(p, v)) out = out + Y.psi(v) * partial_jet(p, v);
  }
  return out;
}

}  // namespace ard
