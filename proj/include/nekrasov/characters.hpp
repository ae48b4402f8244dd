#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/geometry.hpp"
#include "nekrasov/partitions.hpp"

namespace nekrasov {

// Laurent polynomial in t1, t2 with integer coefficients; zero coefficients are never stored.
struct TwoVarLaurent {
  std::map<std::pair<long, long>, long> coeffs;
  void add(long i, long j, long c);
  bool operator==(const TwoVarLaurent& o) const { return coeffs == o.coeffs; }
  std::string to_string() const;
};

struct CharacterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Character of H^1(X, O(D - l_inf)) for an edge-supported divisor D, by exact division of the
// localization expression over its common denominator.
TwoVarLaurent h1_character(const ToricChain& chain, const DivisorVector& D);
// Exponents (i, j) of h1_character, repeated by multiplicity, as weights i eps1 + j eps2.
std::vector<EpsWeight> h1_weights(const ToricChain& chain, const DivisorVector& D);

// Closed form of the edge character on F_k for D_beta - D_alpha = -d_diff * l0.
TwoVarLaurent edge_character_closed_form_Fk(long k, long d_diff);

enum class WeightOrigin { Vertex, Edge };

struct Weight {
  LinearForm form;
  WeightOrigin origin;
  int vertex = -1;  // for vertex weights
  int alpha = -1, beta = -1;
};
using WeightMultiset = std::vector<Weight>;

// Torus fixed point on the moduli space: divisors D[alpha] and diagrams Y[v][alpha].
struct FixedPointConfig {
  DivisorTuple D;
  std::vector<PartitionTuple> Y;
};

// Instanton number n of a configuration: total box count plus sum_{a<b} D_a.D_b.
long config_instanton_number(const ToricChain& chain, const FixedPointConfig& c);
DivisorVector config_total_divisor(const FixedPointConfig& c);

WeightMultiset tangent_character(const ToricChain& chain, const FixedPointConfig& c, const SymbolTable& tab);
WeightMultiset natural_character(const ToricChain& chain, const FixedPointConfig& c, const SymbolTable& tab);

}  // namespace nekrasov
