#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nekrasov/partition_function.hpp"

namespace nekrasov {

// Z has no nonzero coefficient within the search range, so log Z does not exist.
struct VanishingPartitionFunction : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConjectureOptions {
  std::vector<Direction> directions;  // candidates; empty means (1,-3), (2,-5), ...
  int n_directions = 2;
  bool numeric = false;  // sample-point evaluation even when an exact run is available
  // numeric mode
  int n_samples = 3;
  unsigned seed = 20240601;
  double rel_tol = 1e-6;
};

struct CoefficientCheck {
  int lam = 0;                    // exponent after removing the leading power
  std::vector<int> valuation;     // per direction, of the surface coefficient
  std::vector<int> aux_valuation; // per direction, of the combined logarithm
  bool analytic = true;
  bool k_scaling = true;
  bool aux_analytic = true;
  bool direction_independent = true;
  RatFunc limit_surface, limit_c2;                   // exact mode
  std::vector<double> numeric_surface, numeric_c2;   // numeric mode, one entry per sample
};

struct ConjectureReport {
  std::string surface;
  int rank = 0;
  DivisorVector d;
  std::string theory;
  std::string mode;
  int order = 0;
  long k = 1;
  long dimension_offset = 0;  // (1 - r) d.d
  int lambda_offset = 0;      // lowest Lambda exponent with a nonzero coefficient
  std::vector<int> leading_valuation;  // per direction
  std::vector<Direction> directions;
  std::vector<std::vector<Real>> sample_points;
  std::vector<CoefficientCheck> coefficients;
  bool c2_analytic = true;
  bool analytic = true, k_scaling = true, aux_analytic = true;
  bool pass() const { return c2_analytic && analytic && k_scaling && aux_analytic; }
};

ConjectureReport check_instanton_conjecture(const ToricChain& chain, int r, const DivisorVector& d,
                                            const TheorySpec& theory, int order,
                                            const ConjectureOptions& opt = {});

// Exact t -> 0 limits of -eps1 eps2 log Z on C^2, indexed by Lambda exponent 0..order.
std::vector<RatFunc> c2_limit(int r, const TheorySpec& theory, const SymbolTable& tab, int order);

}  // namespace nekrasov
