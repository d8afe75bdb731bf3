#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ard/config.hpp"
#include "ard/errors.hpp"
#include "ard/power_map.hpp"
#include "ard/report_io.hpp"
#include "ard/scaling.hpp"
#include "ard/symmetry.hpp"
#include "ard/text.hpp"

namespace {

using namespace ard;

// "heat", "fkpp", "ad:alpha=2/3,nu=3/2", "ard:alpha=1,nu=1", or a literal
// "u_t = ..." / "w_s = ..." equation.
EvolutionEquation equation_from_spec(const std::string& spec, const SymbolTable& symbols) {
  if (spec.find('=') != std::string::npos && spec.find(':') == std::string::npos) {
    return parse_equation(spec, symbols);
  }
  auto colon = spec.find(':');
  std::string family = spec.substr(0, colon);
  Rational alpha(2), nu(1, 2);
  bool have_alpha = false, have_nu = false;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
      auto eq = item.find('=');
      if (eq == std::string::npos) throw ConfigError("bad family parameter '" + item + "'");
      std::string key = item.substr(0, eq);
      Rational value = Rational::parse(item.substr(eq + 1));
      if (key == "alpha" || key == "a") {
        alpha = value;
        have_alpha = true;
      } else if (key == "nu") {
        nu = value;
        have_nu = true;
      } else {
        throw ConfigError("unknown family parameter '" + key + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (family == "heat") return EvolutionEquation::heat();
  if (family == "fkpp") return EvolutionEquation::fkpp();
  if (family == "ad" || family == "ard") {
    if (!have_alpha || !have_nu) {
      throw ConfigError("family '" + family + "' needs alpha=..,nu=..");
    }
    return family == "ad" ? EvolutionEquation::anomalous_diffusion(alpha, nu)
                          : EvolutionEquation::anomalous_reaction_diffusion(alpha, nu);
  }
  throw ConfigError("unknown equation spec '" + spec + "'");
}

PowerMap map_from_spec(const std::string& spec, const EvolutionEquation& eq,
                       std::optional<Rational> delta, std::optional<Rational> K) {
  if (spec == "heat-adapted") return PowerMap::heat_adapted();
  if (spec == "ad-to-heat") {
    if (!eq.alpha() || !eq.nu()) {
      throw ConfigError("ad-to-heat needs an ad:/ard: family equation");
    }
    return PowerMap::ad_to_heat(*eq.alpha(), *eq.nu());
  }
  if (spec == "front-adapted") {
    Rational d = delta ? *delta
                       : (eq.alpha() && eq.nu() ? predict_delta(*eq.alpha(), *eq.nu())
                                                : throw ConfigError(
                                                      "front-adapted needs --delta or a family "
                                                      "equation"));
    return PowerMap::front_adapted(d, K.value_or(Rational(0)));
  }
  // literal "gamma=..,p=..,q=..,r=..,s=..,K=..,c_sigma=..,c_y=..,c_w=.."
  PowerMap m;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string item =
        spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eqs = item.find('=');
    if (eqs == std::string::npos) throw ConfigError("bad map parameter '" + item + "'");
    std::string key = item.substr(0, eqs);
    Rational value = Rational::parse(item.substr(eqs + 1));
    if (key == "gamma") m.gamma = value;
    else if (key == "p") m.p = value;
    else if (key == "q") m.q = value;
    else if (key == "r") m.r = value;
    else if (key == "s") m.s = value;
    else if (key == "K") m.K = value;
    else if (key == "c_sigma") m.c_sigma = value;
    else if (key == "c_y") m.c_y = value;
    else if (key == "c_w") m.c_w = value;
    else throw ConfigError("unknown map parameter '" + key + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  m.validate();
  return m;
}

std::string resolve_output_dir(const std::string& configured) {
  if (const char* env = std::getenv("ARD_OUTPUT_DIR")) {
    if (*env) return env;
  }
  return configured;
}

SymbolTable symbols_from(const std::optional<Rational>& K, const std::optional<Rational>& delta,
                         const std::optional<Rational>& c0,
                         const std::optional<Rational>& lambda0) {
  SymbolTable sym;
  if (K) sym["K"] = *K;
  if (delta) sym["delta"] = *delta;
  if (c0) sym["c0"] = *c0;
  if (lambda0) sym["lambda0"] = *lambda0;
  return sym;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"asymptotic-symmetry toolkit for anomalous reaction-diffusion equations"};
  app.require_subcommand(1);

  // shared options
  std::string eq_spec, field_spec, map_spec, gen_spec, config_path, series_path, out_dir;
  std::string alpha_s, nu_s, delta_s, K_s, c0_s, lambda0_s;
  double c0_value = 0.0;
  bool have_c0_value = false;
  int max_p = 4, samples = 20;
  uint64_t seed = 1;
  double t_lo = 0.0, t_hi = 0.0;

  auto rational_opt = [](const std::string& s) -> std::optional<Rational> {
    if (s.empty()) return std::nullopt;
    return Rational::parse(s);
  };

  auto* predict = app.add_subcommand("predict", "closed-form front exponents and speeds");
  predict->add_option("--alpha", alpha_s)->required();
  predict->add_option("--nu", nu_s);
  predict->add_option("--delta", delta_s);
  predict->add_option("--c0", c0_value)->each([&](const std::string&) { have_c0_value = true; });

  auto* flow = app.add_subcommand("flow", "scaling flow of an equation in equation space");
  flow->add_option("--eq", eq_spec)->required();
  flow->add_option("--gen", gen_spec, "a,b,c of a x d/dx + b t d/dt + c u d/du")->required();

  auto* checksym = app.add_subcommand("check-symmetry", "exact/partial symmetry chain report");
  checksym->add_option("--eq", eq_spec)->required();
  checksym->add_option("--field", field_spec, "xi=..; tau=..; phi=..")->required();
  checksym->add_option("--K", K_s);
  checksym->add_option("--delta", delta_s);
  checksym->add_option("--c0", c0_s);
  checksym->add_option("--lambda0", lambda0_s);
  checksym->add_option("--max-p", max_p);
  checksym->add_option("--samples", samples);
  checksym->add_option("--seed", seed);

  auto* transform_cmd = app.add_subcommand("transform", "change of variables of an equation");
  transform_cmd->add_option("--eq", eq_spec)->required();
  transform_cmd->add_option("--map", map_spec)->required();
  transform_cmd->add_option("--delta", delta_s);
  transform_cmd->add_option("--K", K_s);

  auto* reduce_cmd = app.add_subcommand("reduce", "reduction to invariant functions (w_s = 0)");
  reduce_cmd->add_option("--eq", eq_spec)->required();
  reduce_cmd->add_option("--map", map_spec, "optional map applied before reducing");
  reduce_cmd->add_option("--delta", delta_s);
  reduce_cmd->add_option("--K", K_s);

  auto* simulate = app.add_subcommand("simulate", "integrate a configured run, write CSV output");
  simulate->add_option("--config", config_path)->required();
  simulate->add_option("--out", out_dir);

  auto* analyze = app.add_subcommand("analyze", "fit front scaling exponents from a series CSV");
  analyze->add_option("--series", series_path);
  analyze->add_option("--config", config_path);
  analyze->add_option("--t-lo", t_lo);
  analyze->add_option("--t-hi", t_hi);
  analyze->add_option("--out", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the flag error
    return code == 0 ? 0 : 2;
  }

  std::optional<Rational> K = rational_opt(K_s), delta = rational_opt(delta_s),
                          c0r = rational_opt(c0_s), lambda0 = rational_opt(lambda0_s);

  if (predict->parsed()) {
    Rational alpha = Rational::parse(alpha_s);
    if (nu_s.empty() && !delta) throw ConfigError("predict needs --nu or --delta");
    Rational d = delta ? *delta : predict_delta(alpha, Rational::parse(nu_s));
    std::cout << "delta = " << d.str() << "\n";
    Prediction pr = predict_front(alpha, d,
                                  have_c0_value ? std::optional<double>(c0_value) : std::nullopt);
    // exact rationals where the closed forms stay rational
    Rational base = Rational(2) / (Rational(1) + d);
    auto c0_exact = rational_pow_exact(base, Rational(2) / alpha);
    auto w0_exact = rational_pow_exact(base, Rational(1) - Rational(2) / alpha);
    std::cout << "c0_min = " << (c0_exact ? c0_exact->str() : format_double(pr.c0_min)) << "\n"
              << "omega0 = " << (w0_exact ? w0_exact->str() : format_double(pr.omega0)) << "\n";
    if (pr.omega_plus) {
      std::cout << "omega_plus = " << format_double(*pr.omega_plus) << "\n"
                << "omega_minus = " << format_double(*pr.omega_minus) << "\n";
    }
    return 0;
  }

  if (flow->parsed()) {
    EvolutionEquation eq = equation_from_spec(eq_spec, {});
    // --gen a,b,c
    std::array<Rational, 3> abc;
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      size_t comma = gen_spec.find(',', pos);
      std::string item = gen_spec.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      abc[i] = Rational::parse(item);
      pos = comma == std::string::npos ? gen_spec.size() : comma + 1;
    }
    ScalingGenerator gen(abc[0], abc[1], abc[2]);
    FlowResult fr = scaling_flow(eq, gen);
    for (const auto& e : fr.entries) {
      std::cout << print_expression(JetPoly::from_terms({e.term}), eq.coords()) << " : ";
      switch (e.kind) {
        case FlowEntry::Kind::power:
          std::cout << "lambda^" << e.lambda_exponent.str();
          break;
        case FlowEntry::Kind::super_decay:
          std::cout << "decays faster than any power";
          break;
        case FlowEntry::Kind::super_growth:
          std::cout << "grows faster than any power";
          break;
      }
      std::cout << "\n";
    }
    std::cout << "limit: " << print_equation(asymptotic_limit(fr)) << "\n";
    return 0;
  }

  if (checksym->parsed()) {
    EvolutionEquation eq = equation_from_spec(eq_spec, {});
    if (!delta && eq.alpha() && eq.nu()) delta = predict_delta(*eq.alpha(), *eq.nu());
    VectorField X = parse_vector_field(field_spec, symbols_from(K, delta, c0r, lambda0));
    if (is_symmetry(X, eq)) {
      std::cout << "classification: exact\nverdict: exact symmetry\n";
      return 0;
    }
    SymmetryReport report = partial_symmetry_chain(X, eq, max_p, samples, seed);
    std::cout << report.to_text(eq.coords());
    return 0;
  }

  if (transform_cmd->parsed()) {
    EvolutionEquation eq = equation_from_spec(eq_spec, {});
    PowerMap m = map_from_spec(map_spec, eq, delta, K);
    std::cout << print_equation(transform(eq, m)) << "\n";
    return 0;
  }

  if (reduce_cmd->parsed()) {
    EvolutionEquation eq = equation_from_spec(eq_spec, {});
    if (!map_spec.empty()) {
      PowerMap m = map_from_spec(map_spec, eq, delta, K);
      eq = transform(eq, m);
    }
    if (eq.coords() != Coords::adapted) {
      throw ConfigError("reduce expects an adapted-coordinates equation (w_s = ...) or --map");
    }
    std::cout << print_expression(reduce_invariant(eq), Coords::adapted) << "\n";
    return 0;
  }

  if (simulate->parsed()) {
    RunConfig cfg = RunConfig::from_file(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    std::string dir = resolve_output_dir(cfg.output_dir);
    RunResult result = run(cfg.solver);
    for (const auto& snap : result.snapshots) {
      write_file(dir + "/" + snapshot_filename(snap.t), snapshot_csv(snap));
    }
    write_file(dir + "/diagnostics.csv", diagnostics_csv(result.diagnostics));
    write_file(dir + "/series.csv", series_csv(result.series));
    write_file(dir + "/config.json", cfg.to_json_text() + "\n");
    std::cout << "steps = " << result.steps << "\n"
              << "snapshots = " << result.snapshots.size() << "\n"
              << "series_records = " << result.series.records.size() << "\n"
              << "output = " << dir << "\n";
    return 0;
  }

  if (analyze->parsed()) {
    std::optional<RunConfig> cfg;
    if (!config_path.empty()) cfg = RunConfig::from_file(config_path);
    std::string dir = resolve_output_dir(!out_dir.empty() ? out_dir
                                         : cfg            ? cfg->output_dir
                                                          : std::string("out"));
    std::string series_file = !series_path.empty() ? series_path : dir + "/series.csv";
    FrontSeries series = series_from_csv(read_file(series_file));
    double lo = t_lo, hi = t_hi;
    if (lo == 0.0 && hi == 0.0) {
      if (cfg && cfg->fit_t_lo && cfg->fit_t_hi) {
        lo = *cfg->fit_t_lo;
        hi = *cfg->fit_t_hi;
      } else if (!series.records.empty()) {
        hi = series.records.back().t;
        lo = std::max(hi / 10.0, series.records.front().t);  // the last decade
      }
    }
    FitResult fit = fit_scaling(series, lo, hi);
    std::string summary = fit_summary(fit);
    write_file(dir + "/fit.txt", summary);
    std::cout << summary;
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ard::InputFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // malformed user-supplied literals (rationals, flags)
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ard::DomainFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
