#include "ard/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ard/errors.hpp"
#include "ard/text.hpp"

namespace ard {

uint64_t Rng::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
  double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

bool is_symmetry(const VectorField& X, const EvolutionEquation& eq) {
  return restrict_to_solution_manifold(apply(prolong(X), eq.residual()), eq).is_zero();
}

bool is_symmetry_general(const JetPoly& p, JetVar solve_for, const VectorField& X) {
  JetPoly A = partial_jet(p, solve_for);
  if (A.is_zero() || depends_on(A, solve_for)) {
    throw NotSolvable("equation is not linear in " + solve_for.name());
  }
  if (A.size() != 1) {
    throw NotSolvable("coefficient of " + solve_for.name() + " is not a monomial");
  }
  JetPoly rest = p - A * JetPoly::var(solve_for);
  JetTerm inv = A.terms()[0];
  inv.coeff = Rational(1) / inv.coeff;
  inv.xpow = -inv.xpow;
  inv.tpow = -inv.tpow;
  inv.exprate = -inv.exprate;
  for (auto& e : inv.jetpows) e = -e;
  JetPoly solved = (-rest).times(inv);
  JetPoly applied = apply(prolong(X), p);
  return substitute(applied, solve_for, solved).is_zero();
}

namespace {

double term_magnitude_scale(const JetPoly& p, const JetPoint& pt) {
  double scale = 0.0;
  for (const auto& term : p.terms()) {
    JetPoly single = JetPoly::from_terms({term});
    scale += std::fabs(evaluate(single, pt));
  }
  return scale;
}

// Solves the k x k linear system in place; returns false on a tiny pivot.
bool solve_dense(std::vector<std::vector<double>>& A, std::vector<double>& b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
    }
    if (std::fabs(A[piv][col]) < 1e-13) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int i = 0; i < n; ++i) b[i] /= A[i][i];
  return true;
}

struct NewtonOutcome {
  bool converged = false;
  JetPoint point;
};

// Damped Newton against fixed per-constraint scales (term magnitudes at the
// sample's base point); after convergence, unknowns within roundoff of zero
// are snapped to exact zero when the constraints allow it, so roots on the
// zero-derivative section evaluate exactly.
NewtonOutcome damped_newton(const std::vector<JetPoly>& constraints,
                            const std::vector<std::vector<JetPoly>>& jacobian,
                            const std::vector<JetVar>& unknowns,
                            const std::vector<double>& scales, JetPoint start) {
  const int k = static_cast<int>(constraints.size());
  JetPoint pt = start;

  auto norm = [&](const JetPoint& q) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) {
      double r = evaluate(constraints[i], q) / scales[i];
      s += r * r;
    }
    return std::sqrt(s);
  };

  double f = norm(pt);
  for (int iter = 0; iter < 80 && f > 1e-13; ++iter) {
    std::vector<std::vector<double>> J(k, std::vector<double>(k));
    std::vector<double> r(k);
    for (int i = 0; i < k; ++i) {
      r[i] = -evaluate(constraints[i], pt);
      for (int j = 0; j < k; ++j) J[i][j] = evaluate(jacobian[i][j], pt);
    }
    if (!solve_dense(J, r)) return {};
    double lambda = 1.0;
    bool improved = false;
    while (lambda > 1e-4) {
      JetPoint trial = pt;
      for (int j = 0; j < k; ++j) trial.jets[unknowns[j].index()] += lambda * r[j];
      double ft = norm(trial);
      if (ft < f * (1.0 - 0.25 * lambda) || ft < 1e-14) {
        pt = trial;
        f = ft;
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) break;
  }
  if (f > 1e-11) return {};

  for (const auto& v : unknowns) {
    if (pt.jets[v.index()] != 0.0 && std::fabs(pt.jets[v.index()]) < 1e-9) {
      JetPoint snapped = pt;
      snapped.jets[v.index()] = 0.0;
      if (norm(snapped) <= std::max(f * 4.0, 1e-13)) pt = snapped;
    }
  }
  return {true, pt};
}

}  // namespace

MembershipStats pointwise_membership_check(const std::vector<JetPoly>& chain, int samples,
                                           uint64_t seed) {
  if (chain.empty()) throw std::invalid_argument("membership check needs a nonempty chain");
  MembershipStats stats;
  stats.samples = samples;
  const JetPoly& target = chain.back();
  std::vector<JetPoly> constraints(chain.begin(), chain.end() - 1);
  const int k = static_cast<int>(constraints.size());

  // Unknowns: as many jet variables as constraints, chosen so every
  // constraint depends on at least one selected variable (otherwise the
  // Newton systems are structurally singular), topped up highest order first.
  std::vector<JetVar> unknowns;
  auto selected = [&](JetVar v) {
    for (const auto& u : unknowns) {
      if (u == v) return true;
    }
    return false;
  };
  for (const auto& c : constraints) {
    bool covered = false;
    for (const auto& u : unknowns) covered = covered || depends_on(c, u);
    if (covered) continue;
    for (int i = JetVar::kCount - 1; i >= 0; --i) {
      JetVar v = JetVar::from_index(i);
      if (!selected(v) && depends_on(c, v)) {
        unknowns.push_back(v);
        break;
      }
    }
  }
  for (int i = JetVar::kCount - 1; i >= 0 && static_cast<int>(unknowns.size()) < k; --i) {
    JetVar v = JetVar::from_index(i);
    if (selected(v)) continue;
    for (const auto& c : constraints) {
      if (depends_on(c, v)) {
        unknowns.push_back(v);
        break;
      }
    }
  }
  const bool solvable = static_cast<int>(unknowns.size()) == k;
  if (!solvable) unknowns.clear();

  std::vector<std::vector<JetPoly>> jacobian(k);
  for (int i = 0; i < k; ++i) {
    for (const auto& v : unknowns) jacobian[i].push_back(partial_jet(constraints[i], v));
  }

  Rng rng(seed);
  double sum = 0.0;
  int measured = 0;
  for (int s = 0; s < samples; ++s) {
    JetPoint base;
    base.x = rng.uniform(0.6, 2.5);
    base.t = rng.uniform(0.6, 2.5);
    for (auto& j : base.jets) j = rng.uniform(-1.5, 1.5);

    std::vector<double> scales;
    for (const auto& c : constraints) scales.push_back(term_magnitude_scale(c, base) + 1e-300);

    std::vector<JetPoint> roots;
    if (k == 0) {
      roots.push_back(base);
    } else if (solvable) {
      for (int attempt = 0; attempt < 10; ++attempt) {
        JetPoint start = base;
        for (const auto& v : unknowns) {
          start.jets[v.index()] = rng.uniform(-1.5, 1.5) * std::pow(0.5, attempt % 4);
        }
        auto out = damped_newton(constraints, jacobian, unknowns, scales, start);
        if (!out.converged) continue;
        bool duplicate = false;
        for (const auto& r : roots) {
          double d = 0.0;
          for (const auto& v : unknowns) {
            d += std::fabs(r.jets[v.index()] - out.point.jets[v.index()]);
          }
          if (d < 1e-7) {
            duplicate = true;
            break;
          }
        }
        if (!duplicate) roots.push_back(out.point);
      }
    }

    if (roots.empty()) {
      ++stats.root_failures;
      continue;
    }
    ++stats.solved;
    double worst = 0.0;
    for (const auto& r : roots) {
      double scale = term_magnitude_scale(target, r) + 1e-30;
      worst = std::max(worst, std::fabs(evaluate(target, r)) / scale);
    }
    stats.max_rel_residual = std::max(stats.max_rel_residual, worst);
    sum += worst;
    ++measured;
  }
  stats.mean_rel_residual = measured > 0 ? sum / measured : 0.0;
  return stats;
}

namespace {

struct SolvedVar {
  JetVar var;
  JetPoly expr;  // depends only on lower-ranked variables
};

JetPoly apply_solved(JetPoly p, const std::vector<SolvedVar>& solved) {
  // Solved entries are triangular, so one descending pass per entry suffices.
  std::vector<SolvedVar> ordered = solved;
  std::sort(ordered.begin(), ordered.end(),
            [](const SolvedVar& a, const SolvedVar& b) { return b.var < a.var; });
  for (const auto& s : ordered) p = substitute(p, s.var, s.expr);
  return p;
}

std::optional<SolvedVar> try_solve(const JetPoly& member) {
  // Highest jet variable present.
  std::optional<JetVar> top;
  for (int i = JetVar::kCount - 1; i >= 0 && !top; --i) {
    JetVar v = JetVar::from_index(i);
    if (depends_on(member, v)) top = v;
  }
  if (!top) return std::nullopt;
  for (const auto& term : member.terms()) {
    if (term.jetpows[top->index()] > 1) return std::nullopt;  // not linear
  }
  JetPoly A = partial_jet(member, *top);
  if (A.size() != 1) return std::nullopt;  // coefficient is not a monomial
  JetPoly rest = member - A * JetPoly::var(*top);
  // Triangularity: the solved expression may touch lower variables only.
  for (const auto& term : rest.terms()) {
    for (int i = top->index(); i < JetVar::kCount; ++i) {
      if (term.jetpows[i] > 0) return std::nullopt;
    }
  }
  JetTerm inv = A.terms()[0];
  inv.coeff = Rational(1) / inv.coeff;
  inv.xpow = -inv.xpow;
  inv.tpow = -inv.tpow;
  inv.exprate = -inv.exprate;
  return SolvedVar{*top, (-rest).times(inv)};
}

// Splits an algebraic member c_hi(x,t) u^n + c_lo(x,t) u^m (n = m+1) and
// returns jets of the nontrivial root u = -c_lo / c_hi as a function of (x,t).
struct AlgebraicRoot {
  JetPoly num;  // -c_lo
  JetPoly den;  // c_hi

  JetPoint jets(double x, double t) const {
    auto lift = [&](const JetPoly& p) {
      TaylorJet acc = TaylorJet::constant(0.0);
      TaylorJet X = TaylorJet::var_x(x);
      TaylorJet T = TaylorJet::var_t(t);
      for (const auto& term : p.terms()) {
        TaylorJet f = TaylorJet::constant(term.coeff.to_double());
        if (!term.xpow.is_zero()) f = f * X.pow(term.xpow.to_double());
        if (!term.tpow.is_zero()) f = f * T.pow(term.tpow.to_double());
        if (!term.exprate.is_zero()) f = f * (term.exprate.to_double() * T).exp();
        acc = acc + f;
      }
      return acc;
    };
    return jet_point_from(lift(num) / lift(den), x, t);
  }
};

std::optional<AlgebraicRoot> nontrivial_root(const JetPoly& member) {
  std::map<int, std::vector<JetTerm>> by_power;
  for (const auto& term : member.terms()) {
    if (term.max_order() >= 1) return std::nullopt;
    JetTerm stripped = term;
    int m = term.jetpows[kU.index()];
    stripped.jetpows[kU.index()] = 0;
    by_power[m].push_back(stripped);
  }
  if (by_power.size() != 2) return std::nullopt;
  auto lo = by_power.begin();
  auto hi = std::next(lo);
  if (hi->first != lo->first + 1) return std::nullopt;
  return AlgebraicRoot{-JetPoly::from_terms(lo->second), JetPoly::from_terms(hi->second)};
}

}  // namespace

SymmetryReport partial_symmetry_chain(const VectorField& X, const EvolutionEquation& eq,
                                      int max_p, int membership_samples, uint64_t seed) {
  if (max_p > 6) throw std::invalid_argument("chain cap above 6");
  SymmetryReport report;
  ProlongedField Y = prolong(X);
  report.chain.push_back(eq.residual());

  std::vector<SolvedVar> solved;
  for (int k = 1; k <= max_p; ++k) {
    JetPoly next = restrict_to_solution_manifold(apply(Y, report.chain.back()), eq);
    next = apply_solved(next, solved);
    report.chain.push_back(next);

    if (next.is_zero()) {
      report.classification = k == 1 ? SymmetryClass::exact : SymmetryClass::partial;
      report.order = k;
      break;
    }
    if (auto s = try_solve(next)) solved.push_back(*s);

    if (k >= 2) {
      std::vector<JetPoly> link(report.chain.begin() + 1, report.chain.end());
      MembershipStats stats =
          pointwise_membership_check(link, membership_samples, seed + static_cast<uint64_t>(k));
      report.membership.push_back(stats);
      if (stats.solved > 0 && stats.max_rel_residual < 1e-9) {
        report.classification = SymmetryClass::partial;
        report.order = k;
        break;
      }
    }
  }

  // Asymptotic diagnostics: the first purely algebraic member and the decay of
  // the earlier members on its nontrivial root.
  for (size_t i = 1; i < report.chain.size(); ++i) {
    const JetPoly& m = report.chain[i];
    if (!m.is_zero() && !has_derivatives(m) && depends_on(m, kU)) {
      if (auto root = nontrivial_root(m)) {
        report.algebraic_index = static_cast<int>(i);
        auto jets = [root](double x, double t) { return root->jets(x, t); };
        auto ts = geometric_t_values(10.0, 1000.0, 25);
        for (size_t j = 0; j < i; ++j) {
          try {
            report.root_decay_slopes.push_back(decay_exponent(report.chain[j], jets, ts));
          } catch (const DegenerateFit&) {
            report.root_decay_slopes.push_back(0.0);
          }
        }
        JetPoint probe = root->jets(1.0, 10.0);
        double r0 = std::fabs(evaluate(report.chain[0], probe));
        report.root_is_common_solution = r0 < 1e-9 * (term_magnitude_scale(report.chain[0], probe) + 1e-30);
      }
      break;
    }
  }

  switch (report.classification) {
    case SymmetryClass::exact:
      report.verdict = "exact symmetry";
      break;
    case SymmetryClass::partial:
      report.verdict = "partial symmetry (chain closes at order " + std::to_string(report.order) + ")";
      break;
    case SymmetryClass::inconclusive: {
      bool decaying = !report.root_decay_slopes.empty();
      for (double s : report.root_decay_slopes) decaying = decaying && s < -0.5;
      if (decaying && !report.root_is_common_solution) {
        report.verdict = "asymptotic partial symmetry (chain open; residuals on the nontrivial root decay)";
      } else {
        report.verdict = "inconclusive";
      }
      break;
    }
  }
  return report;
}

std::string SymmetryReport::to_text(Coords coords) const {
  std::ostringstream os;
  os << "classification: ";
  switch (classification) {
    case SymmetryClass::exact:
      os << "exact";
      break;
    case SymmetryClass::partial:
      os << "partial (order " << order << ")";
      break;
    case SymmetryClass::inconclusive:
      os << "inconclusive";
      break;
  }
  os << "\n";
  for (size_t i = 0; i < chain.size(); ++i) {
    os << "Delta_" << i << ": " << print_expression(chain[i], coords) << "\n";
  }
  for (size_t i = 0; i < membership.size(); ++i) {
    const auto& m = membership[i];
    os << "membership[p=" << i + 2 << "]: samples=" << m.samples << " solved=" << m.solved
       << " max_rel_residual=" << format_double(m.max_rel_residual) << "\n";
  }
  if (algebraic_index) {
    os << "algebraic member: Delta_" << *algebraic_index
       << (root_is_common_solution ? " (root is a common solution)"
                                   : " (nontrivial root is not a common solution)")
       << "\n";
    for (size_t j = 0; j < root_decay_slopes.size(); ++j) {
      os << "residual decay of Delta_" << j << " on root: t^" << format_double(root_decay_slopes[j])
         << "\n";
    }
  }
  os << "verdict: " << verdict << "\n";
  return os.str();
}

double decay_exponent(const JetPoly& p, const CatalogFn& family,
                      const std::vector<double>& t_values) {
  return decay_exponent(
      p, [&](double x, double t) { return jet_point_of(family, x, t); }, t_values);
}

double decay_exponent(const JetPoly& p, const std::function<JetPoint(double, double)>& jets,
                      const std::vector<double>& t_values) {
  if (t_values.size() < 2 || t_values.back() < t_values.front() * 100.0) {
    throw std::invalid_argument("decay fit needs t values spanning at least two decades");
  }
  if (p.is_zero()) throw DegenerateFit("zero polynomial has no decay exponent");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(t_values.size());
  for (double t : t_values) {
    double v = std::fabs(evaluate(p, jets(1.0, t)));
    if (!(v > 1e-300) || !std::isfinite(v)) {
      throw DegenerateFit("evaluation underflow in decay fit");
    }
    double lx = std::log(t);
    double ly = std::log(v);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> geometric_t_values(double t_lo, double t_hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (n - 1)));
  }
  return out;
}

std::pair<double, double> linear_front_group_action(double c1, double c2, double alpha,
                                                    double beta) {
  double g = std::exp(alpha + beta);
  return {g * (c1 + beta * c2), g * c2};
}

}  // namespace ard
