#ifndef ARD_ERRORS_HPP
#define ARD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ard {

// Base class for every domain-level failure; callers that need the exit-code
// distinction ("domain error" vs "config/parse error") catch these two roots.
struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// jet_algebra
struct OrderOverflow : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct CancellationFailure : std::logic_error {
  using std::logic_error::logic_error;
};
struct EvalDomainError : DomainFailure {
  using DomainFailure::DomainFailure;
};

// symmetry_engine
struct NoLimit : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct NotEvolutionForm : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct NotRepresentable : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct NotSolvable : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct DegenerateFit : DomainFailure {
  using DomainFailure::DomainFailure;
};

// ard_solver
struct ConfigError : InputFailure {
  using InputFailure::InputFailure;
};
struct StepFailure : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct DomainExhausted : DomainFailure {
  using DomainFailure::DomainFailure;
};

// front_analysis
struct NoCrossing : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct MultipleCrossings : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct InsufficientTail : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct WindowTooShort : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct OscillatorySpeed : DomainFailure {
  using DomainFailure::DomainFailure;
};
struct GridMismatch : DomainFailure {
  using DomainFailure::DomainFailure;
};

// cli
struct ParseError : InputFailure {
  ParseError(const std::string& msg, int line, int column)
      : InputFailure(msg), line(line), column(column) {}
  int line;
  int column;
};

}  // namespace ard

#endif
