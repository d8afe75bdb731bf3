#include "ard/text.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <vector>

#include "ard/errors.hpp"

namespace ard {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

namespace {

std::string print_exponent(const Rational& e) {
  if (e.is_integer() && !e.is_negative()) return "^" + e.str();
  return "^(" + e.str() + ")";
}

std::string print_term(const JetTerm& t, Coords coords) {
  const bool adapted = coords == Coords::adapted;
  std::vector<std::string> factors;
  Rational mag = t.coeff.is_negative() ? -t.coeff : t.coeff;
  if (!t.xpow.is_zero()) {
    std::string f(1, adapted ? 'y' : 'x');
    if (!t.xpow.is_one()) f += print_exponent(t.xpow);
    factors.push_back(f);
  }
  if (!t.tpow.is_zero()) {
    std::string f(1, adapted ? 's' : 't');
    if (!t.tpow.is_one()) f += print_exponent(t.tpow);
    factors.push_back(f);
  }
  if (!t.exprate.is_zero()) {
    factors.push_back("exp(" + t.exprate.str() + "*" + (adapted ? "s" : "t") + ")");
  }
  for (int i = 0; i < JetVar::kCount; ++i) {
    if (t.jetpows[i] == 0) continue;
    std::string f = JetVar::from_index(i).name(adapted);
    if (t.jetpows[i] != 1) f += "^" + std::to_string(t.jetpows[i]);
    factors.push_back(f);
  }
  std::string out;
  if (factors.empty() || !mag.is_one()) out = mag.str();
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

}  // namespace

std::string print_expression(const JetPoly& p, Coords coords) {
  if (p.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < p.terms().size(); ++i) {
    const auto& t = p.terms()[i];
    if (i == 0) {
      if (t.coeff.is_negative()) out += "-";
    } else {
      out += t.coeff.is_negative() ? " - " : " + ";
    }
    out += print_term(t, coords);
  }
  return out;
}

std::string print_equation(const EvolutionEquation& eq) {
  const bool adapted = eq.coords() == Coords::adapted;
  return std::string(adapted ? "w_s" : "u_t") + " = " + print_expression(eq.rhs(), eq.coords());
}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, eq, semi, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string text) { out.push_back({k, std::move(text), line, col}); };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    int start_col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '.')) {
        ++j;
      }
      out.push_back({Tok::number, src.substr(i, j - i), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::ident, src.substr(i, j - i), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    switch (c) {
      case '+': push(Tok::plus, "+"); break;
      case '-': push(Tok::minus, "-"); break;
      case '*': push(Tok::star, "*"); break;
      case '/': push(Tok::slash, "/"); break;
      case '^': push(Tok::caret, "^"); break;
      case '(': push(Tok::lparen, "("); break;
      case ')': push(Tok::rparen, ")"); break;
      case '=': push(Tok::eq, "="); break;
      case ';': push(Tok::semi, ";"); break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", line, col);
    }
    ++col;
    ++i;
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

// Two spellings of the same jet chart.
struct Alphabet {
  char xc, tc, uc;
};
constexpr Alphabet kOriginal{'x', 't', 'u'};
constexpr Alphabet kAdapted{'y', 's', 'w'};

class Parser {
 public:
  Parser(const std::string& src, const SymbolTable& symbols)
      : tokens_(tokenize(src)), symbols_(symbols) {}

  JetPoly parse_expr_only() {
    JetPoly p = expr();
    expect(Tok::end, "end of input");
    return p;
  }

  EvolutionEquation parse_equation() {
    const Token& lhs = peek();
    if (lhs.kind != Tok::ident || (lhs.text != "u_t" && lhs.text != "w_s")) {
      fail("'u_t' or 'w_s' on the left-hand side");
    }
    Coords coords = lhs.text == "u_t" ? Coords::original : Coords::adapted;
    alphabet_ = lhs.text == "u_t" ? &kOriginal : &kAdapted;
    advance();
    expect(Tok::eq, "'='");
    JetPoly rhs = expr();
    expect(Tok::end, "end of input");
    return EvolutionEquation(rhs, coords);
  }

  VectorField parse_field() {
    JetPoly comps[3];
    const char* names[3] = {"xi", "tau", "phi"};
    for (int i = 0; i < 3; ++i) {
      const Token& name = peek();
      if (name.kind != Tok::ident || name.text != names[i]) {
        fail(std::string("'") + names[i] + "='");
      }
      advance();
      expect(Tok::eq, "'='");
      comps[i] = expr();
      if (i < 2) expect(Tok::semi, "';'");
    }
    if (peek().kind == Tok::semi) advance();
    expect(Tok::end, "end of input");
    return VectorField(comps[0], comps[1], comps[2]);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError("expected " + expected + ", got " + got, t.line, t.col);
  }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(what);
    if (kind != Tok::end) advance();
  }

  Rational number_token() {
    if (peek().kind != Tok::number) fail("a number");
    Rational v = Rational::parse(peek().text);
    advance();
    return v;
  }

  // rational := ["-"] int ["/" int] | decimal
  Rational rational(bool allow_sign) {
    bool neg = false;
    if (allow_sign && (peek().kind == Tok::minus || peek().kind == Tok::plus)) {
      neg = peek().kind == Tok::minus;
      advance();
    }
    Rational v = number_token();
    if (peek().kind == Tok::slash) {
      advance();
      Rational d = number_token();
      if (d.is_zero()) fail("a nonzero denominator");
      v /= d;
    }
    return neg ? -v : v;
  }

  Rational exponent() {
    if (peek().kind == Tok::lparen) {
      advance();
      Rational e = rational(true);
      expect(Tok::rparen, "')'");
      return e;
    }
    return rational(true);
  }

  void use_alphabet(const Alphabet* a) {
    if (alphabet_ == nullptr) {
      alphabet_ = a;
    } else if (alphabet_ != a) {
      fail("variables from a single coordinate chart");
    }
  }

  // Returns the parsed variable as a term factor, or nullopt if the
  // identifier is a symbol-table constant.
  JetTerm var_factor(const Token& tok) {
    const std::string& s = tok.text;
    for (const Alphabet* a : {&kOriginal, &kAdapted}) {
      if (s.size() == 1 && s[0] == a->xc) {
        use_alphabet(a);
        return JetTerm(1, 1, 0);
      }
      if (s.size() == 1 && s[0] == a->tc) {
        use_alphabet(a);
        return JetTerm(1, 0, 1);
      }
      if (s[0] == a->uc && (s.size() == 1 || s[1] == '_')) {
        int dx = 0, dt = 0;
        bool ok = true;
        for (size_t i = 2; i < s.size(); ++i) {
          if (s[i] == a->xc) {
            ++dx;
          } else if (s[i] == a->tc) {
            ++dt;
          } else {
            ok = false;
            break;
          }
        }
        if (s.size() >= 2 && s[1] != '_') ok = false;
        if (ok && dx + dt <= JetVar::kMaxOrder && (s.size() == 1 || dx + dt >= 1)) {
          use_alphabet(a);
          JetTerm t(1);
          t.with(JetVar{dx, dt});
          return t;
        }
      }
    }
    fail("a variable, constant, or number");
  }

  // powfactor | rational ; exp(k*t) handled here as well.
  JetPoly factor() {
    const Token& tok = peek();
    if (tok.kind == Tok::number) {
      return JetPoly::constant(rational(false));
    }
    if (tok.kind != Tok::ident) fail("a factor");
    if (tok.text == "exp") {
      advance();
      expect(Tok::lparen, "'('");
      Rational k = rational(true);
      expect(Tok::star, "'*'");
      const Token& tv = peek();
      if (tv.kind != Tok::ident || tv.text.size() != 1 ||
          (tv.text[0] != kOriginal.tc && tv.text[0] != kAdapted.tc)) {
        fail("'t' or 's'");
      }
      use_alphabet(tv.text[0] == kOriginal.tc ? &kOriginal : &kAdapted);
      advance();
      expect(Tok::rparen, "')'");
      JetPoly base = JetPoly::monomial(1, 0, 0, k);
      return maybe_power(base, true);
    }
    if (auto it = symbols_.find(tok.text); it != symbols_.end()) {
      advance();
      return maybe_power(JetPoly::constant(it->second), false);
    }
    JetTerm t = var_factor(tok);
    advance();
    return maybe_power(JetPoly::from_terms({t}), false);
  }

  JetPoly maybe_power(JetPoly base, bool is_exp) {
    if (peek().kind != Tok::caret) return base;
    advance();
    Rational e = exponent();
    if (base.size() != 1) throw std::logic_error("power of a non-monomial");
    JetTerm t = base.terms()[0];
    if (is_exp) {
      t.exprate *= e;
      return JetPoly::from_terms({t});
    }
    if (t.jet_degree() > 0) {
      if (!e.is_integer() || e.is_negative()) {
        fail("a nonnegative integer exponent on a jet variable");
      }
      JetTerm out(1);
      for (int i = 0; i < JetVar::kCount; ++i) {
        out.jetpows[i] = t.jetpows[i] * static_cast<int>(e.num());
      }
      return JetPoly::from_terms({out});
    }
    t.xpow *= e;
    t.tpow *= e;
    if (t.xpow.is_zero() && t.tpow.is_zero() && !t.coeff.is_one()) {
      // constant^e: keep exact when possible
      auto v = rational_pow_exact(t.coeff, e);
      if (!v) fail("an exactly representable constant power");
      t.coeff = *v;
    }
    return JetPoly::from_terms({t});
  }

  JetPoly term() {
    JetPoly p = factor();
    while (peek().kind == Tok::star) {
      advance();
      p = p * factor();
    }
    return p;
  }

  JetPoly expr() {
    bool neg = false;
    if (peek().kind == Tok::minus) {
      neg = true;
      advance();
    }
    JetPoly p = term();
    if (neg) p = -p;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = peek().kind == Tok::minus;
      advance();
      JetPoly q = term();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  const SymbolTable& symbols_;
  const Alphabet* alphabet_ = nullptr;
};

}  // namespace

JetPoly parse_expression(const std::string& src, const SymbolTable& symbols) {
  return Parser(src, symbols).parse_expr_only();
}

EvolutionEquation parse_equation(const std::string& src, const SymbolTable& symbols) {
  return Parser(src, symbols).parse_equation();
}

VectorField parse_vector_field(const std::string& src, const SymbolTable& symbols) {
  return Parser(src, symbols).parse_field();
}

}  // namespace ard
