#include "ard/report_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ard/errors.hpp"
#include "ard/text.hpp"

namespace ard {

std::string snapshot_csv(const FieldState& state) {
  std::string out = "x,u\n";
  for (size_t i = 0; i < state.x.size(); ++i) {
    out += format_double(state.x[i]);
    out += ",";
    out += format_double(state.u[i]);
    out += "\n";
  }
  return out;
}

std::string snapshot_filename(double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "snap_t%.6g.csv", t);
  return buf;
}

std::string diagnostics_csv(const Diagnostics& d) {
  std::string out = "t,dt,mass,tail\n";
  for (size_t i = 0; i < d.t.size(); ++i) {
    out += format_double(d.t[i]) + "," + format_double(d.dt[i]) + "," +
           format_double(d.mass[i]) + "," + format_double(d.tail[i]) + "\n";
  }
  return out;
}

std::string series_csv(const FrontSeries& s) {
  std::string out = "t,Xh,lambda\n";
  for (const auto& r : s.records) {
    out += format_double(r.t) + "," + format_double(r.position) + "," +
           format_double(r.width) + "\n";
  }
  return out;
}

std::string fit_summary(const FitResult& fit) {
  std::ostringstream os;
  os << "delta_hat = " << format_double(fit.delta_hat) << "\n"
     << "delta_hat_position = " << format_double(fit.delta_hat_position) << "\n"
     << "c0_hat = " << format_double(fit.c0_hat) << "\n"
     << "lambda0_hat = " << format_double(fit.lambda0_hat) << "\n"
     << "rms_width = " << format_double(fit.rms_width) << "\n"
     << "rms_position = " << format_double(fit.rms_position) << "\n"
     << "fit_window = [" << format_double(fit.t_lo) << ", " << format_double(fit.t_hi) << "]\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputFailure("cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FrontSeries series_from_csv(const std::string& text) {
  FrontSeries series;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line != "t,Xh,lambda") throw ParseError("expected header 't,Xh,lambda'", lineno, 1);
      continue;
    }
    FrontRecord rec{};
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &rec.t, &rec.position, &rec.width) != 3) {
      throw ParseError("expected 't,Xh,lambda' row", lineno, 1);
    }
    series.records.push_back(rec);
  }
  return series;
}

}  // namespace ard
