#ifndef ARD_SYMMETRY_HPP
#define ARD_SYMMETRY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ard/equation.hpp"
#include "ard/jet_point.hpp"
#include "ard/vector_field.hpp"

namespace ard {

// Deterministic splitmix64 stream; used instead of <random> distributions so
// sampled checks are reproducible byte-for-byte across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  double uniform(double lo, double hi);

 private:
  uint64_t state_;
};

bool is_symmetry(const VectorField& X, const EvolutionEquation& eq);

// Symmetry test for a non-evolution equation p = 0 that is linear in
// `solve_for` with a single-term coefficient.
bool is_symmetry_general(const JetPoly& p, JetVar solve_for, const VectorField& X);

struct MembershipStats {
  int samples = 0;
  int solved = 0;              // samples where at least one root was found
  int root_failures = 0;       // samples with no converged root
  double max_rel_residual = 0.0;
  double mean_rel_residual = 0.0;
};

// Draws random positive (x, t) and jet values, solves the constraints
// chain[0..n-2] = 0 for as many jet unknowns as there are constraints
// (damped Newton, 10 random starts), and reports the relative magnitude of
// the final member chain[n-1] on every root found.
MembershipStats pointwise_membership_check(const std::vector<JetPoly>& chain, int samples,
                                           uint64_t seed);

enum class SymmetryClass { exact, partial, inconclusive };

struct SymmetryReport {
  std::vector<JetPoly> chain;  // Delta_0 (the residual) .. Delta_p
  SymmetryClass classification = SymmetryClass::inconclusive;
  int order = 0;  // chain order p when classification != inconclusive
  std::vector<MembershipStats> membership;  // one entry per tested step, aligned to chain index
  std::optional<int> algebraic_index;       // first member depending on u only
  std::vector<double> root_decay_slopes;    // decay of earlier members on the nontrivial root
  bool root_is_common_solution = false;
  std::string verdict;

  std::string to_text(Coords coords = Coords::original) const;
};

// The chain Delta_{k+1} = [Y(Delta_k)] restricted to the solution manifold and
// simplified by the previous members (triangular elimination where a previous
// member is linear in its top jet variable with a monomial coefficient).
SymmetryReport partial_symmetry_chain(const VectorField& X, const EvolutionEquation& eq,
                                      int max_p = 4, int membership_samples = 20,
                                      uint64_t seed = 1);

// Least-squares slope of log |evaluate(p)| against log t at x = 1.
double decay_exponent(const JetPoly& p, const CatalogFn& family,
                      const std::vector<double>& t_values);
double decay_exponent(const JetPoly& p, const std::function<JetPoint(double, double)>& jets,
                      const std::vector<double>& t_values);

std::vector<double> geometric_t_values(double t_lo, double t_hi, int n);

// Exp[alpha X0 + beta X+] acting on the (c1, c2) front-solution coordinates.
std::pair<double, double> linear_front_group_action(double c1, double c2, double alpha,
                                                    double beta);

}  // namespace ard

#endif
