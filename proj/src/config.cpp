#include "ard/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ard/errors.hpp"

namespace ard {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key())) {
      throw ConfigError("unknown key '" + where + it.key() + "'");
    }
  }
}

Rational rational_field(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const std::exception&) {
  }
  throw ConfigError("'" + where + "' must be an integer or a rational string like \"2/3\"");
}

double number_field(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError("'" + where + "' must be a number");
  return v.get<double>();
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  reject_unknown(doc, {"solver", "analysis", "output", "seed"}, "");

  RunConfig cfg;
  if (!doc.contains("solver")) throw ConfigError("missing 'solver' section");
  const json& s = doc["solver"];
  reject_unknown(s,
                 {"alpha", "nu", "reaction", "grid", "n", "x_min", "x_max", "t0", "t_end", "cfl",
                  "snapshot_times", "ic"},
                 "solver.");
  SolverConfig& sc = cfg.solver;
  if (s.contains("alpha")) sc.alpha = rational_field(s["alpha"], "solver.alpha");
  if (s.contains("nu")) sc.nu = rational_field(s["nu"], "solver.nu");
  if (s.contains("reaction")) {
    if (!s["reaction"].is_boolean()) throw ConfigError("'solver.reaction' must be a boolean");
    sc.reaction = s["reaction"].get<bool>();
  }
  if (s.contains("grid")) {
    std::string g = s["grid"].is_string() ? s["grid"].get<std::string>() : "";
    if (g == "uniform") {
      sc.grid = GridKind::uniform;
    } else if (g == "log") {
      sc.grid = GridKind::log;
    } else {
      throw ConfigError("'solver.grid' must be \"uniform\" or \"log\"");
    }
  }
  if (s.contains("n")) {
    if (!s["n"].is_number_integer()) throw ConfigError("'solver.n' must be an integer");
    sc.n = s["n"].get<int>();
  }
  if (s.contains("x_min")) sc.x_min = number_field(s["x_min"], "solver.x_min");
  if (s.contains("x_max")) sc.x_max = number_field(s["x_max"], "solver.x_max");
  if (s.contains("t0")) sc.t0 = number_field(s["t0"], "solver.t0");
  if (s.contains("t_end")) sc.t_end = number_field(s["t_end"], "solver.t_end");
  if (s.contains("cfl")) sc.cfl = number_field(s["cfl"], "solver.cfl");
  if (s.contains("snapshot_times")) {
    if (!s["snapshot_times"].is_array()) {
      throw ConfigError("'solver.snapshot_times' must be an array");
    }
    sc.snapshot_times.clear();
    for (const auto& v : s["snapshot_times"]) {
      sc.snapshot_times.push_back(number_field(v, "solver.snapshot_times[]"));
    }
  }
  if (s.contains("ic")) {
    const json& ic = s["ic"];
    reject_unknown(ic, {"type", "x_c", "width", "x0", "s"}, "solver.ic.");
    std::string type = ic.contains("type") && ic["type"].is_string()
                           ? ic["type"].get<std::string>()
                           : "";
    if (type == "plateau_tanh") {
      sc.ic = IcKind::plateau_tanh;
      if (ic.contains("x_c")) sc.ic_x_c = number_field(ic["x_c"], "solver.ic.x_c");
      if (ic.contains("width")) sc.ic_width = number_field(ic["width"], "solver.ic.width");
      if (ic.contains("x0") || ic.contains("s")) {
        throw ConfigError("plateau_tanh takes x_c and width only");
      }
    } else if (type == "point_mass_gaussian") {
      sc.ic = IcKind::point_mass_gaussian;
      if (ic.contains("x0")) sc.ic_x0 = number_field(ic["x0"], "solver.ic.x0");
      if (ic.contains("s")) sc.ic_s = number_field(ic["s"], "solver.ic.s");
      if (ic.contains("x_c") || ic.contains("width")) {
        throw ConfigError("point_mass_gaussian takes x0 and s only");
      }
    } else {
      throw ConfigError("'solver.ic.type' must be plateau_tanh or point_mass_gaussian");
    }
  }

  if (doc.contains("analysis")) {
    const json& a = doc["analysis"];
    reject_unknown(a, {"level_h", "tail_window", "fit_window"}, "analysis.");
    if (a.contains("level_h")) sc.level_h = number_field(a["level_h"], "analysis.level_h");
    if (a.contains("tail_window")) {
      const json& w = a["tail_window"];
      if (!w.is_array() || w.size() != 2) {
        throw ConfigError("'analysis.tail_window' must be [u_lo, u_hi]");
      }
      sc.tail_lo = number_field(w[0], "analysis.tail_window[0]");
      sc.tail_hi = number_field(w[1], "analysis.tail_window[1]");
    }
    if (a.contains("fit_window")) {
      const json& w = a["fit_window"];
      if (!w.is_array() || w.size() != 2) {
        throw ConfigError("'analysis.fit_window' must be [t_lo, t_hi]");
      }
      cfg.fit_t_lo = number_field(w[0], "analysis.fit_window[0]");
      cfg.fit_t_hi = number_field(w[1], "analysis.fit_window[1]");
    }
  }
  if (doc.contains("output")) {
    const json& o = doc["output"];
    reject_unknown(o, {"dir"}, "output.");
    if (o.contains("dir")) {
      if (!o["dir"].is_string()) throw ConfigError("'output.dir' must be a string");
      cfg.output_dir = o["dir"].get<std::string>();
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw ConfigError("'seed' must be an integer");
    }
    cfg.seed = doc["seed"].get<uint64_t>();
  }
  cfg.solver.validate();
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string RunConfig::to_json_text() const {
  json ic;
  if (solver.ic == IcKind::plateau_tanh) {
    ic = {{"type", "plateau_tanh"}, {"x_c", solver.ic_x_c}, {"width", solver.ic_width}};
  } else {
    ic = {{"type", "point_mass_gaussian"}, {"x0", solver.ic_x0}, {"s", solver.ic_s}};
  }
  json doc = {
      {"solver",
       {{"alpha", solver.alpha.str()},
        {"nu", solver.nu.str()},
        {"reaction", solver.reaction},
        {"grid", solver.grid == GridKind::uniform ? "uniform" : "log"},
        {"n", solver.n},
        {"x_min", solver.x_min},
        {"x_max", solver.x_max},
        {"t0", solver.t0},
        {"t_end", solver.t_end},
        {"cfl", solver.cfl},
        {"snapshot_times", solver.snapshot_times},
        {"ic", ic}}},
      {"analysis",
       {{"level_h", solver.level_h}, {"tail_window", {solver.tail_lo, solver.tail_hi}}}},
      {"output", {{"dir", output_dir}}},
      {"seed", seed}};
  if (fit_t_lo && fit_t_hi) {
    doc["analysis"]["fit_window"] = {*fit_t_lo, *fit_t_hi};
  }
  return doc.dump(2);
}

}  // namespace ard
