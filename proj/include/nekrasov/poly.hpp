#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nekrasov/linear_form.hpp"
#include "nekrasov/numeric.hpp"
#include "nekrasov/rational.hpp"
#include "nekrasov/symbols.hpp"

namespace nekrasov {

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    m.deg = power;
    return m;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
    r.deg = deg + o.deg;
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
    r.deg = deg - o.deg;
    return r;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic comparison; higher generator index weighs more (eps1 < eps2 < a1 < ...).
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

struct PolyTerm {
  Monomial m;
  Rational c;
};

// Sparse multivariate polynomial over Q; terms sorted by decreasing grlex order, no zeros stored.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(const Rational& c);
  static SparsePoly var(int i, int power = 1);
  static SparsePoly from_linear(const LinearForm& f, const Rational& constant = 0);
  static SparsePoly from_terms(std::vector<PolyTerm> terms);  // sorts and combines

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.deg == 0); }
  Rational constant_value() const;  // requires is_constant()
  const std::vector<PolyTerm>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  const PolyTerm& leading() const { return t_.front(); }
  int total_degree() const { return t_.empty() ? -1 : static_cast<int>(t_.front().m.deg); }
  int degree_in(int var) const;
  int min_degree_in(int var) const;
  bool involves(int var) const { return degree_in(var) > 0; }

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& s);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Rational(-1); }
  friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly mul_monomial(const Monomial& m, const Rational& c) const;
  SparsePoly pow(int k) const;

  // Exact division: returns true and sets q when b divides *this.
  bool divide_exact(const SparsePoly& b, SparsePoly& q) const;

  // Replace variable i by *subs[i]; null entries (and indices past the end) keep the variable.
  SparsePoly substitute(const std::vector<const SparsePoly*>& subs) const;
  // Coefficients of powers of one variable: result[k] multiplies var^k.
  std::vector<SparsePoly> coefficients_in(int var) const;

  Real evaluate(const std::vector<Real>& point) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }
  // Total order used to sort denominator factors canonically.
  friend int poly_cmp(const SparsePoly& a, const SparsePoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<PolyTerm> t_;
};

}  // namespace nekrasov
