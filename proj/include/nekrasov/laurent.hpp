#pragma once
#include <stdexcept>
#include <vector>

#include "nekrasov/ratfunc.hpp"
#include "nekrasov/symbols.hpp"

namespace nekrasov {

// eps1 -> x1 * t, eps2 -> x2 * t
struct Direction {
  Rational x1, x2;
};

struct ResonantDirection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series in t. coeffs[i] multiplies t^(valuation + i); every exponent below
// `precision` is known exactly. The zero series has valuation == precision.
class DirectionSeries {
 public:
  DirectionSeries() = default;
  static DirectionSeries zero(int precision);
  static DirectionSeries constant(const RatFunc& c, int precision);
  static DirectionSeries monomial(const RatFunc& c, int exponent, int precision);

  int valuation() const { return valuation_; }
  int precision() const { return precision_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  // Coefficient of t^k; zero below the valuation. Throws if k >= precision.
  RatFunc coeff(int k) const;

  DirectionSeries truncated(int precision) const;
  DirectionSeries shifted(int k) const;  // multiply by t^k

  DirectionSeries& operator+=(const DirectionSeries& o);
  DirectionSeries& operator-=(const DirectionSeries& o);
  DirectionSeries& operator*=(const Rational& s);
  DirectionSeries& operator*=(const RatFunc& s);
  friend DirectionSeries operator+(DirectionSeries a, const DirectionSeries& b) { return a += b; }
  friend DirectionSeries operator-(DirectionSeries a, const DirectionSeries& b) { return a -= b; }
  friend DirectionSeries operator*(DirectionSeries a, const Rational& s) { return a *= s; }
  friend DirectionSeries operator*(const DirectionSeries& a, const DirectionSeries& b);
  DirectionSeries inverse() const;  // requires a nonzero series

  // Multiply by (1 + beta t)^k for any integer k, keeping the precision.
  void mul_binomial(const RatFunc& beta, int k);

  friend bool operator==(const DirectionSeries& a, const DirectionSeries& b);

 private:
  DirectionSeries(int v, std::vector<RatFunc> c, int p);
  void trim();
  int valuation_ = 0;
  std::vector<RatFunc> coeffs_;
  int precision_ = 0;
};

// Apply eps1 -> x1 t, eps2 -> x2 t. Throws ResonantDirection if a denominator factor vanishes.
RatFunc substitute_direction(const RatFunc& f, const SymbolTable& tab, const Direction& dir);

// Laurent expansion at t = 0 of a rational function whose t-dependence is explicit; all exponents
// up to and including `order` are returned.
DirectionSeries laurent_at_zero(const RatFunc& f, const SymbolTable& tab, int order);

// Expansion of coeff * prod(L_i^{e_i}) along a direction, where each L_i has total degree one
// (a constant part is allowed). Exponents below abs_precision are exact.
DirectionSeries expand_affine_product(const RatFunc& coeff,
                                      const std::vector<std::pair<SparsePoly, int>>& factors,
                                      const SymbolTable& tab, const Direction& dir,
                                      int abs_precision);

}  // namespace nekrasov
