#include <doctest.h>

#include <algorithm>
#include <set>

#include "ard/errors.hpp"
#include "ard/scaling.hpp"
#include "ard/symmetry.hpp"

using namespace ard;

namespace {

std::multiset<Rational> exponent_multiset(const FlowResult& fr) {
  std::multiset<Rational> out;
  for (const auto& e : fr.entries) {
    REQUIRE(e.kind == FlowEntry::Kind::power);
    out.insert(e.lambda_exponent);
  }
  return out;
}

}  // namespace

TEST_CASE("FKPP flow at the paper normalization (a,b,c) = (-1/2,-1,-1)") {
  FlowResult fr = scaling_flow(EvolutionEquation::fkpp(),
                               ScalingGenerator(Rational(-1, 2), -1, -1));
  std::multiset<Rational> expect = {Rational(0), Rational(0), Rational(-1), Rational(-2)};
  CHECK(exponent_multiset(fr) == expect);
  REQUIRE(fr.limit.has_value());
  CHECK(*fr.limit == EvolutionEquation::heat());
  CHECK(asymptotic_limit(fr) == EvolutionEquation::heat());
}

TEST_CASE("general FKPP bracket exponents are b-2a, b, b+c") {
  Rational a(2, 3), b(-5, 2), c(1, 3);
  FlowResult fr = scaling_flow(EvolutionEquation::fkpp(), ScalingGenerator(a, b, c));
  std::multiset<Rational> expect = {Rational(0), b - a * 2, b, b + c};
  CHECK(exponent_multiset(fr) == expect);
}

TEST_CASE("heat is a fixed point of its own scaling flow") {
  for (const auto& g : {ScalingGenerator(1, 2, 0), ScalingGenerator(1, 2, -1),
                        ScalingGenerator(Rational(-1, 2), -1, 3)}) {
    FlowResult fr = scaling_flow(EvolutionEquation::heat(), g);
    for (const auto& e : fr.entries) CHECK(e.lambda_exponent == Rational(0));
    CHECK(asymptotic_limit(fr) == EvolutionEquation::heat());
  }
}

TEST_CASE("sign-flipped FKPP flow diverges") {
  FlowResult fr = scaling_flow(EvolutionEquation::fkpp(),
                               ScalingGenerator(Rational(1, 2), 1, 1));
  CHECK_FALSE(fr.limit.has_value());
  CHECK_THROWS_AS(asymptotic_limit(fr), NoLimit);
}

TEST_CASE("weights add under term products") {
  Rng rng(11);
  ScalingGenerator g(Rational(1, 2), -1, Rational(2, 3));
  for (int i = 0; i < 50; ++i) {
    JetTerm t1(1, Rational(static_cast<long long>(rng.next() % 7) - 3),
               Rational(static_cast<long long>(rng.next() % 7) - 3));
    JetTerm t2(1, Rational(static_cast<long long>(rng.next() % 5) - 2), Rational(1, 2));
    t1.jetpows[rng.next() % JetVar::kCount] = static_cast<int>(rng.next() % 3);
    t2.jetpows[rng.next() % JetVar::kCount] = static_cast<int>(rng.next() % 3);
    CHECK(term_scaling_weight(t1.times(t2), g) ==
          term_scaling_weight(t1, g) + term_scaling_weight(t2, g));
  }
}

TEST_CASE("all-zero exponents exactly when the generator is an exact symmetry") {
  std::vector<ScalingGenerator> gens = {
      ScalingGenerator(1, 2, -1),          ScalingGenerator(1, 2, 5),
      ScalingGenerator(1, 1, 0),           ScalingGenerator(Rational(1, 2), 1, Rational(-1, 4)),
      ScalingGenerator(0, 1, 0),           ScalingGenerator(1, 0, 0),
  };
  for (const auto& eq : {EvolutionEquation::heat(), EvolutionEquation::fkpp(),
                         EvolutionEquation::anomalous_diffusion(Rational(2, 3), Rational(3, 2))}) {
    for (const auto& g : gens) {
      FlowResult fr = scaling_flow(eq, g);
      bool all_zero = std::all_of(fr.entries.begin(), fr.entries.end(), [](const FlowEntry& e) {
        return e.kind == FlowEntry::Kind::power && e.lambda_exponent.is_zero();
      });
      VectorField X(JetPoly::monomial(g.a, 1, 0), JetPoly::monomial(g.b, 0, 1),
                    JetPoly::var(kU).scale(g.c));
      CHECK(all_zero == is_symmetry(X, eq));
    }
  }
}

TEST_CASE("exponential factors dominate any power along the flow") {
  // w_s = w_yy + (K+1) w - e^{-Ks} w^2 style equation: under b > 0 the
  // exponential term must be classified superpolynomially decaying.
  JetPoly w = JetPoly::var(kU);
  JetPoly F = JetPoly::var(kUxx) + w.scale(2) -
              JetPoly::monomial(1, 0, 0, Rational(-1)) * w * w;
  EvolutionEquation eq(F, Coords::adapted);
  FlowResult fr = scaling_flow(eq, ScalingGenerator(1, 2, 0));
  bool saw_super_decay = false;
  for (const auto& e : fr.entries) {
    if (!e.term.exprate.is_zero()) {
      CHECK(e.kind == FlowEntry::Kind::super_decay);
      saw_super_decay = true;
    }
  }
  CHECK(saw_super_decay);

  // flipped rate grows superpolynomially and kills the limit
  JetPoly G = JetPoly::var(kUxx) + JetPoly::monomial(1, 0, 0, Rational(1)) * w * w;
  FlowResult fr2 = scaling_flow(EvolutionEquation(G, Coords::adapted), ScalingGenerator(1, 2, 0));
  CHECK_THROWS_AS(asymptotic_limit(fr2), NoLimit);
}
