#pragma once
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "nekrasov/geometry.hpp"
#include "nekrasov/numeric.hpp"
#include "nekrasov/partition_function.hpp"

namespace nekrasov {

struct PerturbativeError : std::domain_error {
  using std::domain_error::domain_error;
};

struct GammaEval {
  Real value;
  Real error;  // quadrature and truncation estimate
  Real x, eps1, eps2, lambda;
  Real beta = 0;  // 0 for the four-dimensional function
};

// Coefficients c_{-2}, c_{-1}, c_0 of e^{-tx} / ((e^{e1 t} - 1)(e^{e2 t} - 1)) at t = 0.
std::array<Rational, 3> gamma_kernel_laurent(const Rational& x, const Rational& e1, const Rational& e2);
std::array<Real, 3> gamma_kernel_laurent(const Real& x, const Real& e1, const Real& e2);

// Zeta-regularized log of prod_{i,j >= 0} lambda / (x - i e1 - j e2), for x > 0.
GammaEval gamma4d(const Real& x, const Real& eps1, const Real& eps2, const Real& lambda);
// Five-dimensional version on a circle of circumference beta.
GammaEval gamma5d(const Real& x, const Real& beta, const Real& eps1, const Real& eps2, const Real& lambda);

// eps1 eps2 gamma at eps = 0: -x^2/2 log(x/lambda) + 3/4 x^2.
Real gamma4d_limit(const Real& x, const Real& lambda);
// Five-dimensional counterpart: -beta x^3/12 + x^2/2 log(beta lambda) + Li_3(e^{-beta x}) / beta^2.
Real gamma5d_limit(const Real& x, const Real& beta, const Real& lambda);

// Kernel selection: the 5d theory uses gamma5d, every other theory gamma4d.
GammaEval gamma_for(const TheorySpec& theory, const Real& x, const Real& eps1, const Real& eps2, const Real& lambda);
Real gamma_limit_for(const TheorySpec& theory, const Real& x, const Real& lambda);

struct PertTerm {
  std::string label;  // e.g. "a2-a1", "a1+m1", "m+a2-a1"
  Real x;
  int sign = 1;
  bool ok = false;
  Real value;  // signed contribution including the prefactor
  std::string error;
};

struct PertEval {
  Real prefactor;  // u (u - k w), or eps1 eps2 on C^2
  std::vector<PertTerm> terms;
  bool complete = false;  // every term evaluated
  Real total;             // sum over evaluated terms
};

// Perturbative prepotential at a point (eps1, eps2, a, masses in table order). Terms whose argument is
// not positive are reported with an error and left out of the total.
PertEval f_pert(const ToricChain& chain, const TheorySpec& theory, int r, const std::vector<Real>& point,
                const Real& lambda);

struct PertRun {
  Real u0, w0;
  std::vector<Real> t, values;
  Real extrapolated;
};

struct PertCheck {
  std::string quantity;  // "gamma" or "f_k"
  std::string kernel;
  long k = 0;
  Real x, lambda;
  std::vector<PertRun> runs;
  Real target, limit, rel_error;
  double tol = 0;
  bool pass = false;
};

// eps1 eps2 gamma extrapolated to eps = 0 along two directions.
PertCheck check_gamma_limit(const Real& x, const Real& lambda, const TheorySpec& kernel, double tol = 1e-6);
// u (u - k w)(gamma_{-w,u}(x) + gamma_{w,u-kw}(x)) extrapolated to u = w = 0 against k times the gamma limit.
PertCheck check_pert_limit(long k, const Real& x, const Real& lambda, const TheorySpec& kernel, double tol = 1e-5);

}  // namespace nekrasov
