#ifndef ARD_CONFIG_HPP
#define ARD_CONFIG_HPP

#include <optional>
#include <string>

#include "ard/solver.hpp"

namespace ard {

// A simulate/analyze run loaded from a JSON document. The schema is strict:
// unknown keys are errors, and exact rationals are written as strings ("2/3").
struct RunConfig {
  SolverConfig solver;
  std::optional<double> fit_t_lo;
  std::optional<double> fit_t_hi;
  std::string output_dir = "out";
  uint64_t seed = 1;

  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_file(const std::string& path);
  std::string to_json_text() const;
};

}  // namespace ard

#endif
