#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "nekrasov/numeric.hpp"

namespace nekrasov {

// Seiberg-Witten side of 4d pure SU(2): curve Lambda^2 (w + 1/w) = z^2 + u, one-form z dw / (2 pi i w).
// Points lie on the real chamber u < -2 Lambda^2, where all four branch points are real.

struct SWError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SWPoint {
  Real u, lambda;
  Real a, a_dual;
  Real da_du;
  Real inner, outer;  // branch points: cuts [inner, outer] and [-outer, -inner]
};

// Periods from complete elliptic integrals (arithmetic-geometric mean).
SWPoint sw_periods(const Real& u, const Real& lambda);
// The same periods by direct double-exponential quadrature of the cycle integrals.
SWPoint sw_periods_by_quadrature(const Real& u, const Real& lambda);
// A-period with Lambda^2 replaced by a signed value; the period depends on it only through its square.
Real sw_a_period(const Real& u, const Real& lambda_sq);
// u with a(u) = a on the real chamber (Newton from the classical value -a^2).
Real sw_u_for(const Real& a, const Real& lambda);
// Imaginary part of the period ratio (1 / 2 pi i) d a_D / d a.
Real sw_tau_imag(const Real& u, const Real& lambda);

// a_D minus its perturbative part -8 a log(a / Lambda) + 8 (1 - log 2) a.
Real sw_instanton_dual(const Real& u, const Real& lambda);
// Instanton prepotential at a: minus the integral of the instanton dual period from a to infinity.
Real sw_prepotential_inst(const Real& a, const Real& lambda);

struct PrepotentialFit {
  Real a;
  int order = 0;
  std::vector<Real> lambdas, values;
  std::vector<Real> coeffs;  // f_1 .. f_order, multiplying Lambda^4 .. Lambda^{4 order}
  Real tail;                 // the extra Lambda^{4 (order + 1)} coefficient absorbed by the fit
  Real residual;             // max absolute deviation of the fit
  Real condition;            // 1-norm condition number of the normal equations
};

// Fit of the instanton prepotential at fixed a; empty `lambdas` means a * {0.04, 0.06, ..., 0.14}.
PrepotentialFit sw_prepotential_coeffs(const Real& a, std::vector<Real> lambdas, int order);

struct SWComparisonRow {
  long k = 1;
  int lambda_power = 4;
  Real a;
  Real localization, sw, rel_error;
  double tol = 0;
  bool pass = false;
};

struct SWComparison {
  int order = 0;
  int sign = 1;  // sign relating the SW prepotential to the localization limit, fixed on the first row
  std::vector<SWComparisonRow> rows;
  bool pass = false;
};

// Localization limits of the rank-2 pure prepotential on C^2 (k = 1) and F2 (k = 2), evaluated at
// (a1, a2) = (a, -a), against k times the SW fit.
SWComparison compare_with_localization(int order, const std::vector<Real>& a_values, double tol4 = 1e-6,
                                       double tol8 = 1e-5);

}  // namespace nekrasov
