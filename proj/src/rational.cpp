#include "ard/rational.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace ard {

namespace {

using i128 = __int128;

constexpr long long kMax = INT64_MAX;

long long narrow(i128 v) {
  if (v > static_cast<i128>(kMax) || v < -static_cast<i128>(kMax)) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = narrow(-static_cast<i128>(num_));
    den_ = narrow(-static_cast<i128>(den_));
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(std::string_view text) {
  size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("bad rational literal: " + std::string(text)); };
  if (text.empty()) fail();
  bool neg = false;
  if (text[pos] == '-' || text[pos] == '+') {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
  i128 num = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    num = num * 10 + (text[pos] - '0');
    if (num > kMax) fail();
    ++pos;
  }
  i128 den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
    den = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      den = den * 10 + (text[pos] - '0');
      if (den > kMax) fail();
      ++pos;
    }
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      if (num > kMax || den > kMax) fail();
      ++pos;
    }
  }
  if (pos != text.size() || den == 0) fail();
  return Rational(neg ? -narrow(num) : narrow(num), narrow(den));
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("0 raised to a negative power");
    return Rational(0);
  }
  Rational base = *this;
  if (e < 0) {
    base = Rational(1) / base;
    e = -e;
  }
  Rational out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base = (e > 1) ? base * base : base;
    e >>= 1;
  }
  return out;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = narrow(-static_cast<i128>(r.num_));
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
  i128 d = static_cast<i128>(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  i128 n = static_cast<i128>(num_) * o.num_;
  i128 d = static_cast<i128>(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

// Integer k-th root by rounding the floating estimate and checking neighbors.
std::optional<long long> int_root(long long v, long long k) {
  if (v < 0) return std::nullopt;  // callers handle signs
  if (v <= 1 || k == 1) return v;
  long long guess = static_cast<long long>(std::llround(std::pow(static_cast<double>(v), 1.0 / static_cast<double>(k))));
  for (long long c = std::max(1LL, guess - 2); c <= guess + 2; ++c) {
    i128 p = 1;
    bool over = false;
    for (long long i = 0; i < k; ++i) {
      p *= c;
      if (p > static_cast<i128>(kMax)) {
        over = true;
        break;
      }
    }
    if (!over && p == v) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rational> rational_root(const Rational& base, long long k) {
  if (k < 1) return std::nullopt;
  if (k == 1) return base;
  bool neg = base.is_negative();
  if (neg && k % 2 == 0) return std::nullopt;
  auto rn = int_root(neg ? -base.num() : base.num(), k);
  auto rd = int_root(base.den(), k);
  if (!rn || !rd) return std::nullopt;
  return Rational(neg ? -*rn : *rn, *rd);
}

std::optional<Rational> rational_pow_exact(const Rational& base, const Rational& e) {
  if (e.is_integer()) {
    if (base.is_zero() && e.is_negative()) return std::nullopt;
    return base.pow(e.num());
  }
  if (base.is_negative() || base.is_zero()) return std::nullopt;
  auto root = rational_root(base, e.den());
  if (!root) return std::nullopt;
  return root->pow(e.num());
}

}  // namespace ard
