#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nekrasov/characters.hpp"
#include "nekrasov/classes.hpp"
#include "nekrasov/geometry.hpp"
#include "nekrasov/laurent.hpp"
#include "nekrasov/partitions.hpp"
#include "nekrasov/series.hpp"

namespace nekrasov {

enum class TheoryKind { Pure, Fundamental, Adjoint, FiveD, ChiY, Elliptic };

struct TheorySpec {
  TheoryKind kind = TheoryKind::Pure;
  int n_fund = 0;
  Rational beta, y, q;
  int n_q = 8;

  // pure | fund:NF | adjoint | 5d:BETA | chiy:Y | elliptic:Y,Q
  static TheorySpec parse(const std::string& s);
  std::string to_string() const;

  SymbolTable symbols(int rank) const { return SymbolTable(rank, n_fund, kind == TheoryKind::Adjoint); }
  MultClassSpec tangent_class(const SymbolTable& tab) const;               // A
  std::vector<MultClassSpec> natural_classes(const SymbolTable& tab) const;  // B as a product of classes
  bool exact() const { return kind == TheoryKind::Pure || kind == TheoryKind::Fundamental || kind == TheoryKind::Adjoint; }
};

using ExactSeries = LambdaSeries<RatFunc>;
using NumericSeries = LambdaSeries<Real>;

// One fixed-point contribution coeff * prod L_i^{e_i} at Lambda^lam, with affine L_i.
struct AffineTerm {
  int lam = 0;
  Rational coeff = 1;
  std::vector<std::pair<SparsePoly, int>> factors;
  RatFunc to_ratfunc() const;
};

enum class MFactorKind { Pair, Beta, EulerPair };

// Box products over Y (pair / euler_pair use alpha and beta, Beta uses beta only).
RatFunc m_factor(const PartitionTuple& Y, const MultClassSpec& c, MFactorKind kind, int alpha, int beta,
                 const SymbolTable& tab);
// Edge factors of the master formula for one divisor tuple.
RatFunc l_factors(const ToricChain& chain, const DivisorTuple& D, const TheorySpec& theory, const SymbolTable& tab);

// Contributions at one vertex with tangent weights (w1, w2) and color shifts a_alpha + shifts[alpha],
// for all diagram tuples with 2r|Y| <= order.
std::vector<AffineTerm> c2_terms(const TheorySpec& theory, const SymbolTable& tab, const EpsWeight& w1,
                                 const EpsWeight& w2, const std::vector<EpsWeight>& shifts, int order);
// Edge factor of a divisor tuple as an affine product, with lam = |D|^2.
AffineTerm edge_term(const ToricChain& chain, const DivisorTuple& D, const TheorySpec& theory, const SymbolTable& tab);

ExactSeries z_c2(int r, const TheorySpec& theory, const SymbolTable& tab, int order);
ExactSeries z_master(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                     const SymbolTable& tab, int order);
// Independent route: every fixed point (D, Y) weighted by its full tangent and natural characters.
ExactSeries z_direct(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                     const SymbolTable& tab, int order);
// Sum over d with |d_e| <= dbound of Q^d z_master(d).
ExactSeries z_generating(const ToricChain& chain, int r, const TheorySpec& theory, const SymbolTable& tab,
                         int order, long dbound);

// -u(u - k w) log z, where (w, u, k) is the chain's line at infinity.
ExactSeries f_inst(const ToricChain& chain, const ExactSeries& z, const SymbolTable& tab);

// Numeric evaluation at a point (values for eps1, eps2, a, masses in table order). `magnitude`, when
// given, receives per coefficient the sum of absolute values of the fixed-point terms.
NumericSeries z_c2_numeric(int r, const TheorySpec& theory, const SymbolTable& tab, int order,
                           const std::vector<Real>& point);
NumericSeries z_master_numeric(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                               const SymbolTable& tab, int order, const std::vector<Real>& point,
                               NumericSeries* magnitude = nullptr);

// Directions (1,-3), (2,-5), (3,-7), ...
Direction candidate_direction(int i);

struct LimitResult {
  std::vector<int> lam;
  std::vector<RatFunc> limit;
  std::vector<Direction> directions;
  std::vector<std::vector<int>> valuations;  // [direction][coefficient]
  bool analytic = true;
  bool direction_independent = true;
};

// Per-coefficient t -> 0 behaviour along n_dirs non-resonant directions.
LimitResult eps_limit(const ExactSeries& s, const SymbolTable& tab, int n_dirs = 2);

// Expansion along a direction of a Lambda-dense series assembled from affine terms.
using DirectionVec = std::vector<DirectionSeries>;
DirectionVec c2_along(const TheorySpec& theory, const SymbolTable& tab, const EpsWeight& w1, const EpsWeight& w2,
                      const std::vector<EpsWeight>& shifts, const Direction& dir, int order, int precision);
DirectionVec master_along(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                          const SymbolTable& tab, const Direction& dir, int order, int precision);

}  // namespace nekrasov
