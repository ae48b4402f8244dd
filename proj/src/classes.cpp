#include "nekrasov/classes.hpp"

#include <cmath>

namespace nekrasov {

MultClassSpec MultClassSpec::euler() {
  MultClassSpec c;
  c.kind = ClassKind::Euler;
  return c;
}

MultClassSpec MultClassSpec::linear_shift(int symbol) {
  MultClassSpec c;
  c.kind = ClassKind::LinearShift;
  c.shift_symbol = symbol;
  return c;
}

MultClassSpec MultClassSpec::linear_shift(const Rational& s) {
  MultClassSpec c;
  c.kind = ClassKind::LinearShift;
  c.shift_const = s;
  return c;
}

MultClassSpec MultClassSpec::ahat(const Rational& beta) {
  if (beta <= 0) throw std::invalid_argument("beta must be positive");
  MultClassSpec c;
  c.kind = ClassKind::AhatBeta;
  c.beta = beta;
  return c;
}

MultClassSpec MultClassSpec::chi_y(const Rational& y) {
  MultClassSpec c;
  c.kind = ClassKind::ChiY;
  c.y = y;
  return c;
}

MultClassSpec MultClassSpec::elliptic(const Rational& y, const Rational& q, int n_q) {
  if (y <= 0) throw std::invalid_argument("elliptic class needs y > 0");
  if (q <= 0 || q >= 1) throw std::invalid_argument("elliptic class needs 0 < q < 1");
  if (n_q < 1) throw std::invalid_argument("elliptic truncation must be at least 1");
  MultClassSpec c;
  c.kind = ClassKind::EllipticYQ;
  c.y = y;
  c.q = q;
  c.n_q = n_q;
  return c;
}

std::string MultClassSpec::to_string(const SymbolTable& tab) const {
  switch (kind) {
    case ClassKind::One: return "one";
    case ClassKind::Euler: return "euler";
    case ClassKind::LinearShift:
      return "shift(" + (shift_symbol >= 0 ? tab.name(shift_symbol) : shift_const.get_str()) + ")";
    case ClassKind::AhatBeta: return "ahat(" + beta.get_str() + ")";
    case ClassKind::ChiY: return "chiy(" + y.get_str() + ")";
    case ClassKind::EllipticYQ:
      return "elliptic(" + y.get_str() + "," + q.get_str() + ";" + std::to_string(n_q) + ")";
  }
  return "?";
}

std::vector<LinearForm> weight_forms(const WeightMultiset& ws) {
  std::vector<LinearForm> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.form);
  return out;
}

SparsePoly class_factor(const MultClassSpec& c, const LinearForm& w) {
  switch (c.kind) {
    case ClassKind::One: return SparsePoly(Rational(1));
    case ClassKind::Euler: return SparsePoly::from_linear(w);
    case ClassKind::LinearShift: {
      if (c.shift_symbol < 0) return SparsePoly::from_linear(w, c.shift_const);
      if (c.shift_symbol >= w.dim()) throw ClassError("shift symbol outside the symbol table");
      LinearForm s = w;
      s[c.shift_symbol] += 1;
      return SparsePoly::from_linear(s);
    }
    default: throw ClassError("transcendental class has no exact evaluation");
  }
}

RatFunc eval_class(const MultClassSpec& c, const std::vector<LinearForm>& weights) {
  if (!c.exact()) throw ClassError("transcendental class has no exact evaluation");
  SparsePoly p(Rational(1));
  if (c.kind == ClassKind::One) return RatFunc(p);
  for (const auto& w : weights) p = p * class_factor(c, w);
  return RatFunc(p);
}

Real eval_form(const LinearForm& w, const std::vector<Real>& point) {
  Real s = 0;
  for (int i = 0; i < w.dim(); ++i) {
    if (w[i] == 0) continue;
    if (i >= static_cast<int>(point.size())) throw ClassError("missing numeric value for a symbol");
    s += to_real(w[i]) * point[i];
  }
  return s;
}

namespace {

const Real& small_cutoff() {
  static const Real v("1e-12");
  return v;
}

// x / (1 - e^{-x}), with the removable singularity at 0.
Real todd(const Real& x) {
  if (abs(x) < small_cutoff()) {
    Real x2 = x * x;
    return 1 + x / 2 + x2 / 12 - x2 * x2 / 720;
  }
  return x / (1 - exp(-x));
}

// z / sinh z
Real z_over_sinh(const Real& z) {
  if (abs(z) < small_cutoff()) {
    Real z2 = z * z;
    return 1 - z2 / 6 + 7 * z2 * z2 / 360;
  }
  return z / sinh(z);
}

Real guarded_div(const Real& a, const Real& b) {
  static const Real tiny("1e-40");
  if (abs(b) < tiny) throw ClassError("evaluation at a pole of f");
  return a / b;
}

}  // namespace

Real class_f(const MultClassSpec& c, const Real& x, const std::vector<Real>& point) {
  switch (c.kind) {
    case ClassKind::One: return Real(1);
    case ClassKind::Euler: return x;
    case ClassKind::LinearShift:
      if (c.shift_symbol < 0) return to_real(c.shift_const) + x;
      if (c.shift_symbol >= static_cast<int>(point.size())) throw ClassError("missing numeric value for the shift");
      return point[c.shift_symbol] + x;
    case ClassKind::AhatBeta: {
      Real half = to_real(c.beta) * x / 2;
      return z_over_sinh(half);
    }
    case ClassKind::ChiY: return todd(x) * (1 - to_real(c.y) * exp(-x));
    case ClassKind::EllipticYQ: {
      Real y = to_real(c.y), q = to_real(c.q);
      Real ex = exp(x), emx = exp(-x);
      Real v = todd(x) * (1 - y * emx) / sqrt(y);
      Real qn = 1;  // q^{n-1}
      for (int n = 1; n <= c.n_q; ++n) {
        Real qn1 = qn * q;  // q^n
        if (n > 1) v *= guarded_div(1 - y * qn * emx, 1 - qn * emx);
        v *= guarded_div(1 - qn1 * ex / y, 1 - qn1 * ex);
        qn = qn1;
      }
      return v;
    }
  }
  throw ClassError("unknown class");
}

Real eval_class_numeric(const MultClassSpec& c, const std::vector<LinearForm>& weights,
                        const std::vector<Real>& point) {
  Real p = 1;
  if (c.kind == ClassKind::One) return p;
  for (const auto& w : weights) p *= class_f(c, eval_form(w, point), point);
  return p;
}

Real ahat_limit_check(const Rational& beta, const std::vector<LinearForm>& weights, const std::vector<Real>& point) {
  return eval_class_numeric(MultClassSpec::ahat(beta), weights, point);
}

Real elliptic_truncation_bound(const MultClassSpec& c, const Real& x) {
  if (c.kind != ClassKind::EllipticYQ) return Real(0);
  Real y = to_real(c.y), q = to_real(c.q);
  Real e = exp(abs(x));
  // Omitted factors n > n_q: four terms of size at most (1 + y) q^{n-1} e and (1 + 1/y) q^n e.
  Real qN = pow(q, c.n_q);
  Real s = ((1 + y) * qN + (1 + 1 / y) * qN * q) * e / (1 - q);
  Real zmax = std::max((1 + y) * qN, (1 + 1 / y) * qN * q) * e;
  if (zmax >= 1) return Real(std::numeric_limits<double>::infinity());
  s /= (1 - zmax);
  return exp(s) - 1;
}

}  // namespace nekrasov
