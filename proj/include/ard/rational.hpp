#ifndef ARD_RATIONAL_HPP
#define ARD_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ard {

// Exact rational on 64-bit words, always in lowest terms with positive
// denominator. Intermediate products run through 128-bit arithmetic and
// overflow raises std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  // Accepts "p", "-p", "p/q", and decimal literals like "0.25" (exact).
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational pow(long long e) const;  // integer exponent; 0^negative throws

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  long long num_ = 0;
  long long den_ = 1;
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact k-th root (k >= 1) if it exists in the rationals.
std::optional<Rational> rational_root(const Rational& base, long long k);

// Exact base^e for rational e if the result is rational; base must be > 0
// unless e is an integer.
std::optional<Rational> rational_pow_exact(const Rational& base, const Rational& e);

}  // namespace ard

template <>
struct std::hash<ard::Rational> {
  size_t operator()(const ard::Rational& r) const noexcept {
    return std::hash<long long>()(r.num()) * 1000003u ^ std::hash<long long>()(r.den());
  }
};

#endif
