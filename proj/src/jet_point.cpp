#include "ard/jet_point.hpp"

#include <cmath>

#include "ard/errors.hpp"

namespace ard {

namespace {

double pow_checked(double base, const Rational& e, const char* which) {
  if (e.is_zero()) return 1.0;
  if (e.is_integer()) return std::pow(base, static_cast<double>(e.num()));
  if (base <= 0.0) {
    throw EvalDomainError(std::string(which) + " <= 0 with fractional power " + e.str());
  }
  return std::pow(base, e.to_double());
}

}  // namespace

double evaluate(const JetPoly& p, const JetPoint& pt) {
  double sum = 0.0;
  for (const auto& term : p.terms()) {
    double v = term.coeff.to_double();
    v *= pow_checked(pt.x, term.xpow, "x");
    v *= pow_checked(pt.t, term.tpow, "t");
    if (!term.exprate.is_zero()) v *= std::exp(term.exprate.to_double() * pt.t);
    for (int i = 0; i < JetVar::kCount; ++i) {
      for (int k = 0; k < term.jetpows[i]; ++k) v *= pt.jets[i];
    }
    sum += v;
  }
  return sum;
}

TaylorJet TaylorJet::constant(double c) {
  TaylorJet j;
  j.c_[0][0] = c;
  return j;
}

TaylorJet TaylorJet::var_x(double x0) {
  TaylorJet j;
  j.c_[0][0] = x0;
  j.c_[1][0] = 1.0;
  return j;
}

TaylorJet TaylorJet::var_t(double t0) {
  TaylorJet j;
  j.c_[0][0] = t0;
  j.c_[0][1] = 1.0;
  return j;
}

double TaylorJet::derivative(int i, int j) const {
  static const double fact[] = {1, 1, 2, 6, 24};
  return c_[i][j] * fact[i] * fact[j];
}

TaylorJet operator+(const TaylorJet& a, const TaylorJet& b) {
  TaylorJet r;
  for (int i = 0; i <= TaylorJet::kOrder; ++i) {
    for (int j = 0; i + j <= TaylorJet::kOrder; ++j) r.c_[i][j] = a.c_[i][j] + b.c_[i][j];
  }
  return r;
}

TaylorJet operator-(const TaylorJet& a, const TaylorJet& b) {
  TaylorJet r;
  for (int i = 0; i <= TaylorJet::kOrder; ++i) {
    for (int j = 0; i + j <= TaylorJet::kOrder; ++j) r.c_[i][j] = a.c_[i][j] - b.c_[i][j];
  }
  return r;
}

TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
  TaylorJet r;
  for (int i = 0; i <= TaylorJet::kOrder; ++i) {
    for (int j = 0; i + j <= TaylorJet::kOrder; ++j) {
      if (a.c_[i][j] == 0.0) continue;
      for (int k = 0; i + k <= TaylorJet::kOrder; ++k) {
        for (int l = 0; i + j + k + l <= TaylorJet::kOrder; ++l) {
          r.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
        }
      }
    }
  }
  return r;
}

TaylorJet operator*(double s, const TaylorJet& a) {
  TaylorJet r = a;
  for (int i = 0; i <= TaylorJet::kOrder; ++i) {
    for (int j = 0; i + j <= TaylorJet::kOrder; ++j) r.c_[i][j] *= s;
  }
  return r;
}

TaylorJet TaylorJet::operator-() const { return -1.0 * *this; }

TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) { return a * b.recip(); }

namespace {

// Composes the analytic series g(z) = sum g_k z^k with the zero-constant jet s.
TaylorJet compose_series(const TaylorJet& s, const std::array<double, TaylorJet::kOrder + 1>& g) {
  TaylorJet out = TaylorJet::constant(g[0]);
  TaylorJet p = TaylorJet::constant(1.0);
  for (int k = 1; k <= TaylorJet::kOrder; ++k) {
    p = p * s;
    out = out + g[k] * p;
  }
  return out;
}

}  // namespace

TaylorJet TaylorJet::recip() const {
  const double f0 = c_[0][0];
  if (f0 == 0.0) throw EvalDomainError("Taylor reciprocal at a zero");
  TaylorJet s = *this - constant(f0);  // zero constant part
  // 1/(f0+z) = (1/f0) sum (-z/f0)^k
  std::array<double, kOrder + 1> g{};
  double c = 1.0 / f0;
  for (int k = 0; k <= kOrder; ++k) {
    g[k] = c;
    c *= -1.0 / f0;
  }
  return compose_series(s, g);
}

TaylorJet TaylorJet::exp() const {
  const double f0 = c_[0][0];
  TaylorJet s = *this - constant(f0);
  std::array<double, kOrder + 1> g{};
  double e0 = std::exp(f0);
  double fact = 1.0;
  for (int k = 0; k <= kOrder; ++k) {
    g[k] = e0 / fact;
    fact *= (k + 1);
  }
  return compose_series(s, g);
}

TaylorJet TaylorJet::pow(double r) const {
  const double f0 = c_[0][0];
  if (f0 <= 0.0) throw EvalDomainError("Taylor power with non-positive base");
  TaylorJet s = *this - constant(f0);
  // (f0+z)^r = f0^r sum C(r,k) (z/f0)^k
  std::array<double, kOrder + 1> g{};
  double c = std::pow(f0, r);
  g[0] = c;
  for (int k = 1; k <= kOrder; ++k) {
    c *= (r - (k - 1)) / (k * f0);
    g[k] = c;
  }
  return compose_series(s, g);
}

TaylorJet TaylorJet::pow_int(int n) const {
  if (n < 0) return recip().pow_int(-n);
  TaylorJet out = constant(1.0);
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

JetPoint jet_point_from(const TaylorJet& f, double x, double t) {
  JetPoint pt;
  pt.x = x;
  pt.t = t;
  for (int i = 0; i < JetVar::kCount; ++i) {
    JetVar v = JetVar::from_index(i);
    pt.jets[i] = f.derivative(v.dx, v.dt);
  }
  return pt;
}

TaylorJet CatalogFn::taylor(double x, double t) const {
  TaylorJet X = TaylorJet::var_x(x);
  TaylorJet T = TaylorJet::var_t(t);
  switch (kind) {
    case Kind::gaussian: {
      // (A/sqrt(2t)) * exp(-4x^2/t)
      TaylorJet amp = A * (2.0 * T).pow(-0.5);
      TaylorJet arg = -4.0 * (X * X) / T;
      return amp * arg.exp();
    }
    case Kind::front: {
      // A * exp(-(x - 2t))
      TaylorJet arg = -(X - 2.0 * T);
      return A * arg.exp();
    }
    case Kind::theorem1_rational: {
      // (2-a)(1+K) / ((2-a) - (4-a) K t + K^2 t^2), a function of t only
      double a = alpha.to_double();
      double k = K.to_double();
      TaylorJet den = TaylorJet::constant(2.0 - a) - (4.0 - a) * k * T + (k * k) * (T * T);
      return ((2.0 - a) * (1.0 + k)) * den.recip();
    }
    case Kind::constant:
      return TaylorJet::constant(value);
  }
  throw std::logic_error("unreachable catalog kind");
}

JetPoint jet_point_of(const CatalogFn& f, double x, double t) {
  return jet_point_from(f.taylor(x, t), x, t);
}

}  // namespace ard
