#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nekrasov/characters.hpp"
#include "nekrasov/linear_form.hpp"
#include "nekrasov/numeric.hpp"
#include "nekrasov/poly.hpp"
#include "nekrasov/rational.hpp"
#include "nekrasov/ratfunc.hpp"
#include "nekrasov/symbols.hpp"

namespace nekrasov {

enum class ClassKind { One, Euler, LinearShift, AhatBeta, ChiY, EllipticYQ };

struct ClassError : std::domain_error {
  using std::domain_error::domain_error;
};

// Multiplicative class given by its one-variable function f.
struct MultClassSpec {
  ClassKind kind = ClassKind::One;
  int shift_symbol = -1;  // LinearShift by a generator; -1 means shift by shift_const
  Rational shift_const;
  Rational beta, y, q;
  int n_q = 8;

  static MultClassSpec one() { return {}; }
  static MultClassSpec euler();
  static MultClassSpec linear_shift(int symbol);
  static MultClassSpec linear_shift(const Rational& c);
  static MultClassSpec ahat(const Rational& beta);
  static MultClassSpec chi_y(const Rational& y);
  static MultClassSpec elliptic(const Rational& y, const Rational& q, int n_q = 8);

  // f is a polynomial of degree <= 1 (usable in the exact engine).
  bool exact() const { return kind == ClassKind::One || kind == ClassKind::Euler || kind == ClassKind::LinearShift; }
  std::string to_string(const SymbolTable& tab) const;
};

std::vector<LinearForm> weight_forms(const WeightMultiset& ws);

// f(w) as a polynomial; exact classes only.
SparsePoly class_factor(const MultClassSpec& c, const LinearForm& w);
// prod f(w) over the multiset; exact classes only.
RatFunc eval_class(const MultClassSpec& c, const std::vector<LinearForm>& weights);

Real eval_form(const LinearForm& w, const std::vector<Real>& point);
// f(x); `point` supplies the value of a symbolic shift.
Real class_f(const MultClassSpec& c, const Real& x, const std::vector<Real>& point = {});
Real eval_class_numeric(const MultClassSpec& c, const std::vector<LinearForm>& weights,
                        const std::vector<Real>& point);

// AhatBeta(beta) evaluated on the multiset, for the beta -> 0 degeneration test.
Real ahat_limit_check(const Rational& beta, const std::vector<LinearForm>& weights, const std::vector<Real>& point);

// Bound on the relative error of the q-truncated elliptic factor at x.
Real elliptic_truncation_bound(const MultClassSpec& c, const Real& x);

}  // namespace nekrasov
