#include "ard/jet.hpp"

#include <algorithm>
#include <sstream>

#include "ard/errors.hpp"

namespace ard {

int JetVar::index() const {
  // (order, dt)-ordered dense enumeration: order n starts at n(n+1)/2.
  int n = order();
  return n * (n + 1) / 2 + dt;
}

JetVar JetVar::from_index(int idx) {
  for (int n = 0; n <= kMaxOrder; ++n) {
    int base = n * (n + 1) / 2;
    if (idx < base + n + 1) return JetVar{n - (idx - base), idx - base};
  }
  throw std::out_of_range("jet variable index");
}

JetVar JetVar::derived(Dir dir) const {
  if (order() >= kMaxOrder) {
    throw OrderOverflow("derivative of " + name() + " exceeds order " + std::to_string(kMaxOrder));
  }
  return dir == Dir::x ? JetVar{dx + 1, dt} : JetVar{dx, dt + 1};
}

std::string JetVar::name(bool adapted) const {
  const char u = adapted ? 'w' : 'u';
  const char xs = adapted ? 'y' : 'x';
  const char ts = adapted ? 's' : 't';
  if (order() == 0) return std::string(1, u);
  std::string s(1, u);
  s += '_';
  s.append(dx, xs);
  s.append(dt, ts);
  return s;
}

JetTerm& JetTerm::with(JetVar v, int power) {
  jetpows[v.index()] += power;
  return *this;
}

int JetTerm::jet_degree() const {
  int d = 0;
  for (int e : jetpows) d += e;
  return d;
}

int JetTerm::max_order() const {
  int m = -1;
  for (int i = 0; i < JetVar::kCount; ++i) {
    if (jetpows[i] > 0) m = std::max(m, JetVar::from_index(i).order());
  }
  return m;
}

bool JetTerm::has_t_derivative() const {
  for (int i = 0; i < JetVar::kCount; ++i) {
    if (jetpows[i] > 0 && JetVar::from_index(i).dt > 0) return true;
  }
  return false;
}

JetTerm JetTerm::times(const JetTerm& o) const {
  JetTerm r(coeff * o.coeff, xpow + o.xpow, tpow + o.tpow, exprate + o.exprate);
  for (int i = 0; i < JetVar::kCount; ++i) r.jetpows[i] = jetpows[i] + o.jetpows[i];
  return r;
}

std::strong_ordering JetTerm::cmp_signature(const JetTerm& a, const JetTerm& b) {
  if (auto c = a.exprate <=> b.exprate; c != 0) return c;
  if (auto c = a.xpow <=> b.xpow; c != 0) return c;
  if (auto c = a.tpow <=> b.tpow; c != 0) return c;
  return a.jetpows <=> b.jetpows;
}

JetPoly JetPoly::from_terms(std::vector<JetTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const JetTerm& a, const JetTerm& b) {
    return JetTerm::cmp_signature(a, b) < 0;
  });
  JetPoly out;
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!out.terms_.empty() && JetTerm::cmp_signature(out.terms_.back(), t) == 0) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

JetPoly JetPoly::constant(const Rational& c) {
  return from_terms({JetTerm(c)});
}

JetPoly JetPoly::var(JetVar v) {
  JetTerm t{Rational(1)};
  t.with(v);
  return from_terms({t});
}

JetPoly JetPoly::monomial(const Rational& coeff, const Rational& xpow, const Rational& tpow,
                          const Rational& exprate) {
  return from_terms({JetTerm(coeff, xpow, tpow, exprate)});
}

JetPoly JetPoly::operator-() const { return scale(Rational(-1)); }

JetPoly operator+(const JetPoly& a, const JetPoly& b) {
  std::vector<JetTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return JetPoly::from_terms(std::move(terms));
}

JetPoly operator-(const JetPoly& a, const JetPoly& b) { return a + (-b); }

JetPoly operator*(const JetPoly& a, const JetPoly& b) {
  std::vector<JetTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) terms.push_back(ta.times(tb));
  }
  return JetPoly::from_terms(std::move(terms));
}

JetPoly JetPoly::scale(const Rational& c) const {
  if (c.is_zero()) return {};
  JetPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

JetPoly JetPoly::times(const JetTerm& t) const {
  std::vector<JetTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& a : terms_) terms.push_back(a.times(t));
  return from_terms(std::move(terms));
}

JetPoly JetPoly::pow(int m) const {
  if (m < 0) throw std::domain_error("negative polynomial power");
  JetPoly out = constant(1);
  for (int i = 0; i < m; ++i) out = out * *this;
  return out;
}

bool operator==(const JetPoly& a, const JetPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (JetTerm::cmp_signature(a.terms_[i], b.terms_[i]) != 0) return false;
    if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string JetPoly::debug_str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff << ")";
    if (!t.xpow.is_zero()) os << "*x^" << t.xpow;
    if (!t.tpow.is_zero()) os << "*t^" << t.tpow;
    if (!t.exprate.is_zero()) os << "*exp(" << t.exprate << "t)";
    for (int i = 0; i < JetVar::kCount; ++i) {
      if (t.jetpows[i] == 0) continue;
      os << "*" << JetVar::from_index(i).name();
      if (t.jetpows[i] != 1) os << "^" << t.jetpows[i];
    }
  }
  return os.str();
}

JetPoly total_derivative(const JetPoly& p, Dir dir) {
  std::vector<JetTerm> out;
  for (const auto& t : p.terms()) {
    // explicit power factor
    if (dir == Dir::x) {
      if (!t.xpow.is_zero()) {
        JetTerm d = t;
        d.coeff *= t.xpow;
        d.xpow -= 1;
        out.push_back(d);
      }
    } else {
      if (!t.tpow.is_zero()) {
        JetTerm d = t;
        d.coeff *= t.tpow;
        d.tpow -= 1;
        out.push_back(d);
      }
      if (!t.exprate.is_zero()) {
        JetTerm d = t;
        d.coeff *= t.exprate;
        out.push_back(d);
      }
    }
    // jet chain rule
    for (int i = 0; i < JetVar::kCount; ++i) {
      if (t.jetpows[i] == 0) continue;
      JetVar v = JetVar::from_index(i);
      JetVar vd = v.derived(dir);
      JetTerm d = t;
      d.coeff *= Rational(t.jetpows[i]);
      d.jetpows[i] -= 1;
      d.jetpows[vd.index()] += 1;
      out.push_back(d);
    }
  }
  return JetPoly::from_terms(std::move(out));
}

JetPoly partial_x(const JetPoly& p) {
  std::vector<JetTerm> out;
  for (const auto& t : p.terms()) {
    if (t.xpow.is_zero()) continue;
    JetTerm d = t;
    d.coeff *= t.xpow;
    d.xpow -= 1;
    out.push_back(d);
  }
  return JetPoly::from_terms(std::move(out));
}

JetPoly partial_t(const JetPoly& p) {
  std::vector<JetTerm> out;
  for (const auto& t : p.terms()) {
    if (!t.tpow.is_zero()) {
      JetTerm d = t;
      d.coeff *= t.tpow;
      d.tpow -= 1;
      out.push_back(d);
    }
    if (!t.exprate.is_zero()) {
      JetTerm d = t;
      d.coeff *= t.exprate;
      out.push_back(d);
    }
  }
  return JetPoly::from_terms(std::move(out));
}

JetPoly partial_jet(const JetPoly& p, JetVar v) {
  const int idx = v.index();
  std::vector<JetTerm> out;
  for (const auto& t : p.terms()) {
    if (t.jetpows[idx] == 0) continue;
    JetTerm d = t;
    d.coeff *= Rational(t.jetpows[idx]);
    d.jetpows[idx] -= 1;
    out.push_back(d);
  }
  return JetPoly::from_terms(std::move(out));
}

JetPoly substitute(const JetPoly& p, JetVar v, const JetPoly& repl) {
  const int idx = v.index();
  // Group by the exponent of v, then inject repl^m.
  JetPoly out;
  std::vector<JetPoly> repl_pows = {JetPoly::constant(1)};
  std::vector<JetTerm> untouched;
  for (const auto& t : p.terms()) {
    int m = t.jetpows[idx];
    if (m == 0) {
      untouched.push_back(t);
      continue;
    }
    while (static_cast<int>(repl_pows.size()) <= m) {
      repl_pows.push_back(repl_pows.back() * repl);
    }
    JetTerm rest = t;
    rest.jetpows[idx] = 0;
    out = out + repl_pows[m].times(rest);
  }
  return out + JetPoly::from_terms(std::move(untouched));
}

int max_derivative_order(const JetPoly& p) {
  int m = -1;
  for (const auto& t : p.terms()) m = std::max(m, t.max_order());
  return m;
}

bool depends_on(const JetPoly& p, JetVar v) {
  const int idx = v.index();
  for (const auto& t : p.terms()) {
    if (t.jetpows[idx] > 0) return true;
  }
  return false;
}

bool has_t_derivatives(const JetPoly& p) {
  for (const auto& t : p.terms()) {
    if (t.has_t_derivative()) return true;
  }
  return false;
}

bool has_derivatives(const JetPoly& p) {
  for (const auto& t : p.terms()) {
    if (t.max_order() >= 1) return true;
  }
  return false;
}

}  // namespace ard
