#ifndef ARD_JET_POINT_HPP
#define ARD_JET_POINT_HPP

#include <array>
#include <functional>

#include "ard/jet.hpp"

namespace ard {

// Numeric assignment to x, t, u and all derivatives up to order 4.
struct JetPoint {
  double x = 1.0;
  double t = 1.0;
  std::array<double, JetVar::kCount> jets{};

  double& operator[](JetVar v) { return jets[v.index()]; }
  double operator[](JetVar v) const { return jets[v.index()]; }
};

// Term-by-term evaluation in double precision. Fractional powers require
// x > 0 (resp. t > 0); violations raise EvalDomainError.
double evaluate(const JetPoly& p, const JetPoint& pt);

// Truncated bivariate Taylor expansion of order 4 around a point; used to fill
// jet points of the closed-form catalog functions without hand-differentiating.
class TaylorJet {
 public:
  static constexpr int kOrder = 4;

  TaylorJet() = default;
  static TaylorJet constant(double c);
  static TaylorJet var_x(double x0);  // x0 + dx
  static TaylorJet var_t(double t0);  // t0 + dt

  double coeff(int i, int j) const { return c_[i][j]; }
  double& coeff(int i, int j) { return c_[i][j]; }
  double value() const { return c_[0][0]; }
  double derivative(int i, int j) const;  // d^{i+j} f / dx^i dt^j

  friend TaylorJet operator+(const TaylorJet& a, const TaylorJet& b);
  friend TaylorJet operator-(const TaylorJet& a, const TaylorJet& b);
  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b);
  friend TaylorJet operator*(double s, const TaylorJet& a);
  friend TaylorJet operator/(const TaylorJet& a, const TaylorJet& b);
  TaylorJet operator-() const;

  TaylorJet recip() const;            // 1/f, f(0) != 0
  TaylorJet exp() const;              // e^f
  TaylorJet pow(double r) const;      // f^r, f(0) > 0
  TaylorJet pow_int(int n) const;

 private:
  // c_[i][j] multiplies dx^i dt^j; entries with i+j > 4 stay zero.
  std::array<std::array<double, kOrder + 1>, kOrder + 1> c_{};
};

JetPoint jet_point_from(const TaylorJet& f, double x, double t);

// Catalog of closed-form test functions.
struct CatalogFn {
  enum class Kind { gaussian, front, theorem1_rational, constant } kind;
  double A = 1.0;       // amplitude (gaussian, front)
  Rational alpha = 1;   // theorem1_rational
  Rational K = 1;       // theorem1_rational
  double value = 1.0;   // constant

  static CatalogFn gaussian(double A = 1.0) { return {Kind::gaussian, A}; }
  static CatalogFn front(double A = 1.0) { return {Kind::front, A}; }
  static CatalogFn theorem1_rational(const Rational& alpha, const Rational& K) {
    CatalogFn f{Kind::theorem1_rational};
    f.alpha = alpha;
    f.K = K;
    return f;
  }
  static CatalogFn constant_fn(double v) {
    CatalogFn f{Kind::constant};
    f.value = v;
    return f;
  }

  TaylorJet taylor(double x, double t) const;
};

JetPoint jet_point_of(const CatalogFn& f, double x, double t);

}  // namespace ard

#endif
