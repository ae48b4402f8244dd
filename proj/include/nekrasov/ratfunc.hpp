#pragma once
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/poly.hpp"

namespace nekrasov {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// Quotient num / prod(f_i^e_i). Each f_i is non-constant with leading coefficient 1, the list is
// sorted and free of repeats, and no f_i divides num. The overall rational content lives in num.
class RatFunc {
 public:
  using Factor = std::pair<SparsePoly, int>;

  RatFunc() = default;
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT(implicit)
  RatFunc(long c) : num_(Rational(c)) {}   // NOLINT(implicit)
  explicit RatFunc(SparsePoly p) : num_(std::move(p)) {}
  static RatFunc from_factors(SparsePoly num, std::vector<Factor> den);
  static RatFunc quotient(const SparsePoly& num, const SparsePoly& den);

  const SparsePoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  SparsePoly den() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  bool involves(int var) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc& operator*=(const Rational& s);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Rational& s) { return a *= s; }
  friend RatFunc operator-(RatFunc a) { return a *= Rational(-1); }
  RatFunc inverse() const;
  RatFunc pow(int k) const;

  // Mathematical equality (cross multiplication when the stored forms differ).
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  // Equality of stored representations.
  bool identical(const RatFunc& o) const;

  RatFunc substitute(const std::vector<const SparsePoly*>& subs) const;
  Real evaluate(const std::vector<Real>& point) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void normalize();
  SparsePoly num_;
  std::vector<Factor> den_;
};

// Sum of many terms by balanced pairwise reduction (deterministic for a fixed input order).
RatFunc sum_balanced(std::vector<RatFunc> terms);

}  // namespace nekrasov
