// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Numerical runs are deterministic, so reruns print
// identical values.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "ard/config.hpp"
#include "ard/errors.hpp"
#include "ard/power_map.hpp"
#include "ard/report_io.hpp"
#include "ard/scaling.hpp"
#include "ard/symmetry.hpp"
#include "ard/text.hpp"

using namespace ard;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [failed: " << what << "]";
    }
  }
};

VectorField scaling_field(const Rational& a, const Rational& b, const Rational& c) {
  return VectorField(JetPoly::monomial(a, 1, 0), JetPoly::monomial(b, 0, 1),
                     JetPoly::var(kU).scale(c));
}

VectorField generalized_scaling_field(const Rational& delta, const Rational& K) {
  return VectorField(JetPoly::monomial(delta, 1, 0), JetPoly::monomial(1, 0, 1),
                     JetPoly::monomial(-K, 0, 1) * JetPoly::var(kU));
}

// ---------------------------------------------------------------- criterion 1
void criterion_flow(Check& c) {
  FlowResult fr =
      scaling_flow(EvolutionEquation::fkpp(), ScalingGenerator(Rational(-1, 2), -1, -1));
  std::multiset<Rational> exponents;
  for (const auto& e : fr.entries) {
    c.require(e.kind == FlowEntry::Kind::power, "non-power flow entry");
    exponents.insert(e.lambda_exponent);
  }
  std::multiset<Rational> expect = {Rational(0), Rational(0), Rational(-1), Rational(-2)};
  c.require(exponents == expect, "exponent multiset is not {0, 0, -1, -2}");
  c.require(asymptotic_limit(fr) == EvolutionEquation::heat(), "limit is not u_t = u_xx");
  c.note << "exponents {0,0,-1,-2}, limit u_t = u_xx";
}

// ---------------------------------------------------------------- criterion 2
void criterion_ad_to_heat(Check& c) {
  for (auto [a, n] : {std::pair<Rational, Rational>{Rational(2, 3), Rational(3, 2)},
                      {Rational(2), Rational(1, 2)}}) {
    EvolutionEquation mapped =
        transform(EvolutionEquation::anomalous_diffusion(a, n), PowerMap::ad_to_heat(a, n));
    c.require(mapped.rhs() == JetPoly::var(kUxx),
              "map of the alpha=" + a.str() + " member is not w_s = w_yy");
  }
  c.note << "both members map canonically onto w_s = w_yy "
            "(sigma carries the diffusion normalization alpha/(4 nu))";
}

// ---------------------------------------------------------------- criterion 3
void criterion_heat_adapted(Check& c) {
  EvolutionEquation mapped = transform(EvolutionEquation::heat(), PowerMap::heat_adapted());
  // s v_s = 4 y v_yy + (y - 2) v_y + (2/y) v; coefficients certified by the
  // chain-rule oracle below rather than taken from any display.
  JetPoly expect = JetPoly::monomial(4, 1, -1) * JetPoly::var(kUxx) +
                   (JetPoly::monomial(1, 1, -1) + JetPoly::monomial(-2, 0, -1)) *
                       JetPoly::var(kUx) +
                   JetPoly::monomial(2, -1, -1) * JetPoly::var(kU);
  c.require(mapped.rhs() == expect, "transformed heat equation has unexpected coefficients");

  // oracle: exact heat solutions u = 1, u = x and the fundamental solution
  // must annihilate the transformed residual pointwise
  auto check_witness = [&](const std::function<TaylorJet(const TaylorJet&, const TaylorJet&)>& v,
                           const char* what) {
    for (double y : {0.4, 1.1, 2.9}) {
      JetPoint pw = jet_point_from(v(TaylorJet::var_x(y), TaylorJet::var_t(1.7)), y, 1.7);
      double r = evaluate(mapped.residual(), pw);
      c.require(std::fabs(r) < 1e-9, std::string("witness ") + what + " fails the residual");
    }
  };
  check_witness([](const TaylorJet& y, const TaylorJet& s) { return (y * s).pow(0.5); }, "u=1");
  check_witness([](const TaylorJet& y, const TaylorJet& s) { return y * s; }, "u=x");
  check_witness(
      [](const TaylorJet& y, const TaylorJet& s) {
        return y.pow(0.5) * (-0.25 * y).exp() + 0.0 * s;
      },
      "kernel");

  JetPoly reduced = reduce_invariant(mapped);
  bool sigma_free = true;
  for (const auto& term : reduced.terms()) sigma_free = sigma_free && term.tpow.is_zero();
  c.require(sigma_free, "reduction does not drop sigma");
  c.note << "v_s-form matches the chain-rule oracle on three exact-solution witnesses; "
         << "reduced equation is sigma-free";
}

// ---------------------------------------------------------------- criterion 4
void criterion_theorem1(Check& c) {
  struct Sample {
    Rational a, nu, K;
  };
  const Sample samples[] = {
      {Rational(1, 2), 1, 1},           {Rational(3, 2), 1, 1},
      {Rational(2, 3), Rational(3, 2), 2}, {Rational(5, 4), 2, Rational(-3, 2)},
      {Rational(1, 3), 1, Rational(1, 2)},
  };
  for (const auto& s : samples) {
    Rational d = predict_delta(s.a, s.nu);
    EvolutionEquation eq = EvolutionEquation::anomalous_reaction_diffusion(s.a, s.nu);
    VectorField X = generalized_scaling_field(d, s.K);
    JetPoly delta1 = restrict_to_solution_manifold(apply(prolong(X), eq.residual()), eq);

    Rational one(1), two(2);
    JetPoly expected1 =
        JetPoly::monomial(one - s.a, two - s.a, s.a * d - (two - s.a)) * JetPoly::var(kUxx) +
        JetPoly::monomial((s.a - one) * (s.a - two) / 2, one - s.a,
                          s.a * d - one - (one - s.a)) *
            JetPoly::var(kUx) -
        (JetPoly::var(kU).scale(one + s.K) - JetPoly::var(kU) * JetPoly::var(kU) +
         JetPoly::monomial(s.K, 0, 1) * JetPoly::var(kU) * JetPoly::var(kU));
    c.require(delta1 == expected1, "Delta_1 mismatch at alpha=" + s.a.str());

    SymmetryReport rep = partial_symmetry_chain(X, eq, 4, 8, 3);
    JetPoly u = JetPoly::var(kU);
    JetPoly u2 = u * u;
    JetPoly expected2 = u2.scale(two - s.a) + JetPoly::monomial((s.a - 4) * s.K, 0, 1) * u2 +
                        JetPoly::monomial(s.K * s.K, 0, 2) * u2 +
                        u.scale((s.a - two) * (s.K + one));
    if (!(s.a == one)) {  // the u_xx elimination degenerates at alpha = 1
      c.require(rep.chain.size() >= 3 && rep.chain[2] == expected2,
                "Delta_2 mismatch at alpha=" + s.a.str());
    }
  }

  // Residual decay on the nontrivial algebraic root over t in [10, 1000].
  // The root's subleading terms scale like (4 - alpha)/(K t), so moderate K
  // keeps the fit window inside the asymptotic regime.
  auto ts = geometric_t_values(10.0, 1000.0, 25);
  for (const auto& s : {Sample{Rational(1, 2), 1, 10}, Sample{Rational(3, 2), 1, 10}}) {
    Rational d = predict_delta(s.a, s.nu);
    EvolutionEquation eq = EvolutionEquation::anomalous_reaction_diffusion(s.a, s.nu);
    VectorField X = generalized_scaling_field(d, s.K);
    JetPoly delta1 = restrict_to_solution_manifold(apply(prolong(X), eq.residual()), eq);
    CatalogFn root = CatalogFn::theorem1_rational(s.a, s.K);
    double s0 = decay_exponent(eq.residual(), root, ts);
    double s1 = decay_exponent(delta1, root, ts);
    c.require(std::fabs(s0 + 2.0) < 0.05, "Delta~_0 decay is not -2.00 +- 0.05");
    c.require(std::fabs(s1 + 2.0) < 0.05, "Delta~_1 decay is not -2.00 +- 0.05");
    c.note << " decay(a=" << s.a.str() << ", K=" << s.K.str() << "): " << format_double(s0)
           << ", " << format_double(s1) << ";";
  }
}

// ---------------------------------------------------------------- criterion 5
void criterion_theorem3(Check& c) {
  struct Inst {
    Rational a, nu, c0, lambda0;
  };
  const Inst insts[] = {
      {Rational(3, 2), 1, Rational(3, 2), 2},
      {Rational(1, 2), 1, 2, 1},
      {Rational(2, 3), Rational(3, 2), Rational(8, 27), Rational(4, 9)},
  };
  auto terminated = [](const SymmetryReport& r) {
    if (r.classification == SymmetryClass::exact) return true;
    if (r.classification != SymmetryClass::partial) return false;
    if (r.chain.back().is_zero()) return true;
    return !r.membership.empty() && r.membership.back().solved >= 10 &&
           r.membership.back().max_rel_residual < 1e-9;
  };
  for (const auto& in : insts) {
    Rational delta = predict_delta(in.a, in.nu);
    Rational L = Rational(1) / in.lambda0;
    EvolutionEquation eq = EvolutionEquation::anomalous_reaction_diffusion(in.a, in.nu);
    VectorField X1(JetPoly::constant(1), JetPoly(), JetPoly::monomial(L, 0, -delta));
    VectorField X0(JetPoly::monomial(delta, 1, 0) +
                       JetPoly::monomial(in.c0, 0, Rational(1) + delta),
                   JetPoly::monomial(1, 0, 1), JetPoly());
    VectorField X2(JetPoly(), JetPoly::monomial(in.lambda0, 0, Rational(1) + delta),
                   JetPoly::monomial(-delta, 1, 0) +
                       JetPoly::monomial(-in.c0, 0, Rational(1) + delta));
    const std::pair<const char*, VectorField> fields[] = {{"X1", X1}, {"X0", X0}, {"X2", X2}};
    for (const auto& [name, X] : fields) {
      SymmetryReport rep = partial_symmetry_chain(X, eq, 4, 20, 17);
      bool ok = terminated(rep);
      if (!ok && std::string(name) == "X1" && rep.chain.size() == 5 &&
          !has_derivatives(rep.chain[4]) && !depends_on(rep.chain[4], kU)) {
        c.note << " [X1 bottoms out in the nonvanishing function "
               << print_expression(rep.chain[4]) << " of (x,t) alone]";
      }
      c.require(ok, std::string(name) + " chain does not terminate at alpha=" + in.a.str());
    }
  }
  c.note << " X0 closes (order <= 4, membership residual 0 on the steady-state branch); "
            "X1 and X2 do not terminate under the chain protocol";
}

// ---------------------------------------------------------------- criterion 6
void criterion_fkpp(Check& c) {
  SolverConfig cfg;
  cfg.alpha = 2;
  cfg.nu = Rational(1, 2);
  cfg.reaction = true;
  cfg.grid = GridKind::uniform;
  cfg.n = 4096;
  cfg.x_min = 0.01;
  cfg.x_max = 600.0;
  cfg.t0 = 1.0;
  cfg.t_end = 200.0;
  cfg.ic = IcKind::plateau_tanh;
  cfg.ic_x_c = 1.0;
  cfg.ic_width = 2.0;  // start at the selected width to shorten transients
  cfg.snapshot_times = {200.0};
  RunResult r = run(cfg);
  double speed = front_position(r.snapshots.back(), 0.5) / 200.0;
  double lambda = front_width(r.snapshots.back(), cfg.tail_lo, cfg.tail_hi);
  FitResult fit = fit_scaling(r.series, 20.0, 200.0);
  c.require(speed >= 1.9 && speed <= 2.0, "speed outside [1.9, 2.0]");
  c.require(lambda >= 0.9 && lambda <= 1.15, "width outside [0.9, 1.15]");
  c.require(std::fabs(fit.delta_hat) <= 0.05, "delta_hat outside [-0.05, 0.05]");
  c.note << "speed " << format_double(speed) << ", width " << format_double(lambda)
         << ", delta_hat " << format_double(fit.delta_hat) << " (position-based "
         << format_double(fit.delta_hat_position) << ")";
}

// ---------------------------------------------------------------- criterion 7
void criterion_exponent_law(Check& c) {
  struct Case {
    Rational a, nu;
    double x_max;
  };
  for (const Case& k : {Case{2, 1, 3.0e4}, Case{1, 1, 4.0e5}}) {
    SolverConfig cfg;
    cfg.alpha = k.a;
    cfg.nu = k.nu;
    cfg.reaction = true;
    cfg.grid = GridKind::log;
    cfg.n = 24576;
    cfg.x_min = 0.01;
    cfg.x_max = k.x_max;
    cfg.t0 = 1.0;
    cfg.t_end = 300.0;
    cfg.ic = IcKind::plateau_tanh;
    cfg.ic_x_c = 1.0;
    cfg.ic_width = 2.0;
    // shallow tail window: the deep tail relaxes slowest and contaminates the
    // finite-horizon slope; both windows are recorded with the fit
    cfg.tail_lo = 1e-3;
    cfg.tail_hi = 2e-1;
    RunResult r = run(cfg);
    FitResult fit = fit_scaling(r.series, 30.0, 300.0);
    double predicted = predict_delta(k.a, k.nu).to_double();
    double tol = 0.05 * (1.0 + predicted);
    c.require(std::fabs(fit.delta_hat - predicted) <= tol,
              "delta_hat off by more than 0.05 (1 + delta) for alpha=" + k.a.str());
    c.note << " (a=" << k.a.str() << ", nu=" << k.nu.str() << "): delta_hat "
           << format_double(fit.delta_hat) << " vs " << format_double(predicted)
           << " +- " << format_double(tol) << ", estimator gap "
           << format_double(std::fabs(fit.delta_hat - fit.delta_hat_position)) << ";";
  }
}

// ---------------------------------------------------------------- criterion 8
void criterion_collapse(Check& c) {
  SolverConfig cfg;
  cfg.alpha = Rational(2, 3);
  cfg.nu = Rational(3, 2);
  cfg.reaction = false;
  cfg.grid = GridKind::log;
  cfg.n = 3072;
  cfg.x_min = 1e-3;
  cfg.x_max = 8e5;
  cfg.t0 = 1.0;
  cfg.t_end = 410.0;
  cfg.ic = IcKind::point_mass_gaussian;
  cfg.ic_x0 = 1.0;
  cfg.ic_s = 0.2;
  cfg.snapshot_times = {100.0, 400.0};
  RunResult r = run(cfg);
  double metric = collapse_metric(r.snapshots, cfg.alpha, cfg.nu);
  c.require(metric < 0.05, "collapse metric >= 0.05 between t and 4t");
  double m0 = r.diagnostics.mass.front();
  double drift = 0.0;
  for (double m : r.diagnostics.mass) drift = std::max(drift, std::fabs(m - m0) / m0);
  double decades = std::log10(cfg.t_end / cfg.t0);
  c.require(drift / decades < 0.005, "mass drift >= 0.5% per decade");
  c.note << "collapse " << format_double(metric) << ", mass drift "
         << format_double(drift / decades * 100.0) << "% per decade";
}

// ---------------------------------------------------------------- criterion 9
void criterion_predictor(Check& c) {
  for (auto [a, d, c0] : std::vector<std::tuple<Rational, Rational, double>>{
           {2, 0, 2.0},
           {2, 0, 3.5},
           {1, 1, 1.25},
           {Rational(1, 2), 3, 1.1},
           {Rational(3, 2), Rational(1, 4), 2.0},
           {Rational(2, 3), 2, 1.5}}) {
    Prediction p = predict_front(a, d, c0);
    double av = a.to_double(), dv = d.to_double();
    for (double w : {*p.omega_plus, *p.omega_minus}) {
      double poly = std::pow(c0, 2.0 - av) * w * w - c0 * (1.0 + dv) * w + 1.0;
      c.require(std::fabs(poly) <= 1e-12, "omega is not a root of the dispersion polynomial");
    }
    Prediction at_min = predict_front(a, d, p.c0_min);
    c.require(std::fabs(*at_min.omega_plus - *at_min.omega_minus) <= 1e-9,
              "roots not degenerate at the minimal speed");
    c.require(std::fabs(*at_min.omega_plus - p.omega0) <= 1e-9,
              "degenerate root differs from omega0");
  }
  Prediction fk = predict_front(2, 0);
  c.require(std::fabs(fk.c0_min - 2.0) <= 1e-14 && std::fabs(fk.omega0 - 1.0) <= 1e-14,
            "FKPP predictor is not (c0, omega0) = (2, 1)");
  c.note << "dispersion roots exact to 1e-12; (alpha=2, delta=0) gives (c0, omega0) = (2, 1), "
            "matching the measured FKPP speed window";
}

// --------------------------------------------------------------- criterion 10
void criterion_properties(Check& c) {
  Rng rng(314);
  auto random_poly = [&](int max_order) {
    std::vector<JetTerm> terms;
    int n = 1 + static_cast<int>(rng.next() % 4);
    for (int i = 0; i < n; ++i) {
      JetTerm t(Rational(static_cast<long long>(rng.next() % 9) - 4,
                         1 + static_cast<long long>(rng.next() % 3)),
                Rational(static_cast<long long>(rng.next() % 7) - 3,
                         1 + static_cast<long long>(rng.next() % 2)),
                Rational(static_cast<long long>(rng.next() % 7) - 3,
                         1 + static_cast<long long>(rng.next() % 2)),
                Rational(static_cast<long long>(rng.next() % 3) - 1));
      for (int k = 0; k < 2; ++k) {
        int idx = static_cast<int>(rng.next() % JetVar::kCount);
        if (JetVar::from_index(idx).order() <= max_order && rng.next() % 2 == 0) {
          t.jetpows[idx] += 1;
        }
      }
      terms.push_back(t);
    }
    return JetPoly::from_terms(std::move(terms));
  };

  for (int i = 0; i < 40; ++i) {
    JetPoly p = random_poly(2), q = random_poly(1);
    c.require(total_derivative(total_derivative(p, Dir::x), Dir::t) ==
                  total_derivative(total_derivative(p, Dir::t), Dir::x),
              "derivative commutation");
    for (Dir d : {Dir::x, Dir::t}) {
      c.require(total_derivative(p * q, d) ==
                    total_derivative(p, d) * q + p * total_derivative(q, d),
                "Leibniz rule");
    }
  }

  // finite-difference consistency at 1e-6 relative
  const double h = 1e-5;
  JetPoly probe = JetPoly::var(kU) * JetPoly::var(kUx) +
                  JetPoly::monomial(Rational(3, 2), Rational(1, 2), 1);
  for (const auto& f : {CatalogFn::gaussian(0.9), CatalogFn::front(1.2)}) {
    double exact = evaluate(total_derivative(probe, Dir::x), jet_point_of(f, 1.2, 1.6));
    double fd = (evaluate(probe, jet_point_of(f, 1.2 + h, 1.6)) -
                 evaluate(probe, jet_point_of(f, 1.2 - h, 1.6))) /
                (2 * h);
    c.require(std::fabs(exact - fd) <= 1e-6 * std::max(1.0, std::fabs(exact)),
              "finite-difference consistency");
  }

  // exact heat symmetries
  for (const auto& X :
       {VectorField(JetPoly::constant(1), JetPoly(), JetPoly()),
        VectorField(JetPoly(), JetPoly::constant(1), JetPoly()),
        VectorField(JetPoly(), JetPoly(), JetPoly::var(kU)), scaling_field(1, 2, -1)}) {
    c.require(is_symmetry(X, EvolutionEquation::heat()), "exact heat symmetry");
  }

  // transform round-trips
  for (const auto& m : {PowerMap::heat_adapted(), PowerMap::front_adapted(Rational(1, 2), 1),
                        PowerMap::ad_to_heat(Rational(2, 3), Rational(3, 2))}) {
    EvolutionEquation eq = EvolutionEquation::anomalous_reaction_diffusion(2, 1);
    if (m.p == Rational(1, 3)) eq = EvolutionEquation::anomalous_diffusion(Rational(2, 3),
                                                                           Rational(3, 2));
    c.require(transform(transform(eq, m), inverse(m)).rhs() == eq.rhs(), "transform round-trip");
  }

  // print/parse round-trips
  for (int i = 0; i < 50; ++i) {
    JetPoly p = random_poly(3);
    c.require(parse_expression(print_expression(p)) == p, "print/parse round-trip");
  }

  // deterministic reruns: identical configs give byte-identical CSV output
  SolverConfig cfg;
  cfg.alpha = 2;
  cfg.nu = Rational(1, 2);
  cfg.reaction = true;
  cfg.grid = GridKind::uniform;
  cfg.n = 256;
  cfg.x_min = 0.01;
  cfg.x_max = 40.0;
  cfg.t0 = 1.0;
  cfg.t_end = 5.0;
  cfg.ic = IcKind::plateau_tanh;
  cfg.ic_x_c = 1.0;
  cfg.ic_width = 0.5;
  cfg.snapshot_times = {5.0};
  RunResult r1 = run(cfg);
  RunResult r2 = run(cfg);
  c.require(snapshot_csv(r1.snapshots.back()) == snapshot_csv(r2.snapshots.back()) &&
                diagnostics_csv(r1.diagnostics) == diagnostics_csv(r2.diagnostics) &&
                series_csv(r1.series) == series_csv(r2.series),
            "deterministic rerun");
  c.note << "commutation, Leibniz, finite differences, heat symmetries, round-trips, "
            "deterministic reruns";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> fn;
  };
  const Criterion criteria[] = {
      {1, "scaling flow of FKPP and its heat-equation limit", criterion_flow},
      {2, "solution-preserving map of the diffusion family onto the heat equation",
       criterion_ad_to_heat},
      {3, "heat equation in scaling-adapted coordinates and its sigma-free reduction",
       criterion_heat_adapted},
      {4, "chain of the generalized scaling field: closed forms and residual decay",
       criterion_theorem1},
      {5, "partial-symmetry chains of the front fields X1, X0, X2", criterion_theorem3},
      {6, "FKPP front speed, width, and constant-exponent fit", criterion_fkpp},
      {7, "front exponent law delta = nu + 1/alpha - 1 at (2,1) and (1,1)",
       criterion_exponent_law},
      {8, "self-similar collapse and mass conservation of pure diffusion", criterion_collapse},
      {9, "front predictor: dispersion roots and Kolmogorov minimal speed", criterion_predictor},
      {10, "property suites", criterion_properties},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      crit.fn(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.note << " [exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (check.ok ? "[PASS] " : "[FAIL] ") << "criterion " << crit.id << ": "
              << crit.title << " (" << format_double(secs) << " s)";
    std::string note = check.note.str();
    if (!note.empty()) std::cout << " -- " << note;
    std::cout << "\n";
    if (!check.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                            " criterion(s) failed")
            << "\n";
  return failures;
}
