#ifndef ARD_JET_HPP
#define ARD_JET_HPP

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "ard/rational.hpp"

namespace ard {

// Direction of a total/partial derivative.
enum class Dir { x = 0, t = 1 };

// Dependent variable u and its derivatives u_{x^i t^j} up to order 4.
// Mixed indices are stored sorted (all x's first), so u_xt == u_tx.
struct JetVar {
  int dx = 0;
  int dt = 0;

  static constexpr int kMaxOrder = 4;
  static constexpr int kCount = 15;  // (i,j) with i+j <= 4

  int order() const { return dx + dt; }
  int index() const;  // dense index, ordered by (order, dt)
  static JetVar from_index(int idx);

  // u_{J,dir}; throws OrderOverflow beyond order 4.
  JetVar derived(Dir dir) const;

  std::string name(bool adapted = false) const;  // "u_xt" or "w_ys"

  friend bool operator==(const JetVar&, const JetVar&) = default;
  friend std::strong_ordering operator<=>(const JetVar& a, const JetVar& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.dt <=> b.dt;
  }
};

inline constexpr JetVar kU{0, 0};
inline constexpr JetVar kUx{1, 0};
inline constexpr JetVar kUt{0, 1};
inline constexpr JetVar kUxx{2, 0};
inline constexpr JetVar kUxt{1, 1};
inline constexpr JetVar kUtt{0, 2};

// One monomial: coeff * x^xpow * t^tpow * e^(exprate*t) * prod u_J^m_J.
struct JetTerm {
  Rational coeff = 0;
  Rational xpow = 0;
  Rational tpow = 0;
  Rational exprate = 0;
  std::array<int, JetVar::kCount> jetpows{};

  JetTerm() = default;
  JetTerm(Rational c, Rational xp = 0, Rational tp = 0, Rational er = 0)
      : coeff(std::move(c)), xpow(std::move(xp)), tpow(std::move(tp)), exprate(std::move(er)) {}

  JetTerm& with(JetVar v, int power = 1);

  int jet_degree() const;       // sum of jet exponents
  int max_order() const;        // highest derivative order present (-1 if none incl. u)
  bool has_t_derivative() const;
  JetTerm times(const JetTerm& o) const;

  // Orders by (exprate, xpow, tpow, jetpows); coefficient excluded.
  static std::strong_ordering cmp_signature(const JetTerm& a, const JetTerm& b);
};

// Canonical sum of terms: sorted by signature, unique signatures, no zeros.
class JetPoly {
 public:
  JetPoly() = default;  // the zero polynomial

  static JetPoly from_terms(std::vector<JetTerm> terms);
  static JetPoly constant(const Rational& c);
  static JetPoly var(JetVar v);
  static JetPoly monomial(const Rational& coeff, const Rational& xpow, const Rational& tpow,
                          const Rational& exprate = Rational(0));

  const std::vector<JetTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  JetPoly operator-() const;
  friend JetPoly operator+(const JetPoly& a, const JetPoly& b);
  friend JetPoly operator-(const JetPoly& a, const JetPoly& b);
  friend JetPoly operator*(const JetPoly& a, const JetPoly& b);
  JetPoly scale(const Rational& c) const;
  JetPoly times(const JetTerm& t) const;
  JetPoly pow(int m) const;  // m >= 0

  friend bool operator==(const JetPoly& a, const JetPoly& b);

  std::string debug_str() const;

 private:
  std::vector<JetTerm> terms_;
};

// D_x / D_t (power rule, Leibniz, exprate, jet chain rule). OrderOverflow if an
// order-5 variable would appear.
JetPoly total_derivative(const JetPoly& p, Dir dir);

// Partial derivatives: explicit x, explicit t (including the e^{kt} factor),
// and a single jet coordinate.
JetPoly partial_x(const JetPoly& p);
JetPoly partial_t(const JetPoly& p);
JetPoly partial_jet(const JetPoly& p, JetVar v);

// Replaces every occurrence of v by repl.
JetPoly substitute(const JetPoly& p, JetVar v, const JetPoly& repl);

int max_derivative_order(const JetPoly& p);
bool depends_on(const JetPoly& p, JetVar v);
bool has_t_derivatives(const JetPoly& p);
bool has_derivatives(const JetPoly& p);  // any u_J with order >= 1

}  // namespace ard

#endif
