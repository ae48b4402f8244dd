#include "nekrasov/laurent.hpp"

#include <algorithm>

namespace nekrasov {

DirectionSeries::DirectionSeries(int v, std::vector<RatFunc> c, int p)
    : valuation_(v), coeffs_(std::move(c)), precision_(p) {
  trim();
}

void DirectionSeries::trim() {
  int keep = std::max(0, precision_ - valuation_);
  if (static_cast<int>(coeffs_.size()) > keep) coeffs_.resize(keep);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    valuation_ = precision_;
    return;
  }
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    valuation_ += static_cast<int>(lead);
  }
}

DirectionSeries DirectionSeries::zero(int precision) { return DirectionSeries(precision, {}, precision); }

DirectionSeries DirectionSeries::constant(const RatFunc& c, int precision) {
  return monomial(c, 0, precision);
}

DirectionSeries DirectionSeries::monomial(const RatFunc& c, int exponent, int precision) {
  return DirectionSeries(exponent, {c}, precision);
}

RatFunc DirectionSeries::coeff(int k) const {
  if (k >= precision_) throw std::out_of_range("coefficient beyond the known precision");
  int i = k - valuation_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return RatFunc();
  return coeffs_[i];
}

DirectionSeries DirectionSeries::truncated(int precision) const {
  return DirectionSeries(valuation_, coeffs_, std::min(precision, precision_));
}

DirectionSeries DirectionSeries::shifted(int k) const {
  return DirectionSeries(valuation_ + k, coeffs_, precision_ + k);
}

DirectionSeries& DirectionSeries::operator+=(const DirectionSeries& o) {
  int p = std::min(precision_, o.precision_);
  int v = std::min(valuation_, o.valuation_);
  if (p <= v) return *this = zero(p);
  std::vector<RatFunc> c(p - v);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    int k = valuation_ + static_cast<int>(i);
    if (k < p) c[k - v] += coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    int k = o.valuation_ + static_cast<int>(i);
    if (k < p) c[k - v] += o.coeffs_[i];
  }
  return *this = DirectionSeries(v, std::move(c), p);
}

DirectionSeries& DirectionSeries::operator-=(const DirectionSeries& o) {
  DirectionSeries neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

DirectionSeries& DirectionSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

DirectionSeries& DirectionSeries::operator*=(const RatFunc& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

DirectionSeries operator*(const DirectionSeries& a, const DirectionSeries& b) {
  int p = std::min(a.precision_ + b.valuation_, b.precision_ + a.valuation_);
  if (a.is_zero() || b.is_zero()) return DirectionSeries::zero(p);
  int v = a.valuation_ + b.valuation_;
  int n = p - v;
  if (n <= 0) return DirectionSeries::zero(p);
  std::vector<RatFunc> c(n);
  for (int i = 0; i < static_cast<int>(a.coeffs_.size()) && i < n; ++i)
    for (int j = 0; j < static_cast<int>(b.coeffs_.size()) && i + j < n; ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return DirectionSeries(v, std::move(c), p);
}

DirectionSeries DirectionSeries::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of a zero series");
  int rel = precision_ - valuation_;
  std::vector<RatFunc> b(rel);
  RatFunc inv0 = coeffs_[0].inverse();
  b[0] = inv0;
  for (int n = 1; n < rel; ++n) {
    RatFunc acc;
    for (int k = 1; k <= n && k < static_cast<int>(coeffs_.size()); ++k) acc += coeffs_[k] * b[n - k];
    b[n] = -(acc * inv0);
  }
  return DirectionSeries(-valuation_, std::move(b), -valuation_ + rel);
}

void DirectionSeries::mul_binomial(const RatFunc& beta, int k) {
  if (is_zero() || k == 0 || beta.is_zero()) return;
  int n = precision_ - valuation_;
  coeffs_.resize(n);
  if (k > 0) {
    for (int r = 0; r < k; ++r)
      for (int i = n - 1; i >= 1; --i)
        if (!coeffs_[i - 1].is_zero()) coeffs_[i] += beta * coeffs_[i - 1];
  } else {
    for (int r = 0; r < -k; ++r)
      for (int i = 1; i < n; ++i)
        if (!coeffs_[i - 1].is_zero()) coeffs_[i] -= beta * coeffs_[i - 1];
  }
  trim();
}

bool operator==(const DirectionSeries& a, const DirectionSeries& b) {
  if (a.precision_ != b.precision_ || a.valuation_ != b.valuation_ || a.coeffs_.size() != b.coeffs_.size())
    return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

RatFunc substitute_direction(const RatFunc& f, const SymbolTable& tab, const Direction& dir) {
  if (dir.x1 == 0 && dir.x2 == 0) throw std::invalid_argument("direction must be nonzero");
  SparsePoly s1 = SparsePoly::var(tab.t()) * dir.x1;
  SparsePoly s2 = SparsePoly::var(tab.t()) * dir.x2;
  std::vector<const SparsePoly*> subs(kMaxVars, nullptr);
  subs[tab.eps1()] = &s1;
  subs[tab.eps2()] = &s2;
  try {
    return f.substitute(subs);
  } catch (const DivisionByZero&) {
    throw ResonantDirection("denominator vanishes along direction (" + dir.x1.get_str() + ", " +
                            dir.x2.get_str() + ")");
  }
}

namespace {

// Series of a polynomial in t with the lowest power removed; returns that power in `shift`.
DirectionSeries poly_series(const SparsePoly& p, int t_var, int rel_precision, int& shift) {
  auto cs = p.coefficients_in(t_var);
  shift = 0;
  while (shift < static_cast<int>(cs.size()) && cs[shift].is_zero()) ++shift;
  std::vector<RatFunc> c;
  for (std::size_t i = shift; i < cs.size(); ++i) c.emplace_back(cs[i]);
  DirectionSeries s = DirectionSeries::zero(rel_precision);
  for (std::size_t i = 0; i < c.size(); ++i)
    s += DirectionSeries::monomial(c[i], static_cast<int>(i), rel_precision);
  return s;
}

}  // namespace

DirectionSeries laurent_at_zero(const RatFunc& f, const SymbolTable& tab, int order) {
  const int tv = tab.t();
  if (f.is_zero()) return DirectionSeries::zero(order + 1);
  int v = f.num().min_degree_in(tv);
  for (const auto& [p, e] : f.den_factors()) v -= p.min_degree_in(tv) * e;
  int rel = order + 1 - v;
  if (rel <= 0) return DirectionSeries::zero(order + 1);
  int shift = 0;
  DirectionSeries acc = poly_series(f.num(), tv, rel, shift);
  for (const auto& [p, e] : f.den_factors()) {
    DirectionSeries q = poly_series(p, tv, rel, shift).inverse();
    for (int i = 0; i < e; ++i) acc = acc * q;
  }
  return acc.shifted(v);
}

DirectionSeries expand_affine_product(const RatFunc& coeff,
                                      const std::vector<std::pair<SparsePoly, int>>& factors,
                                      const SymbolTable& tab, const Direction& dir, int abs_precision) {
  if (coeff.is_zero()) return DirectionSeries::zero(abs_precision);
  RatFunc prefactor = coeff;
  int v0 = 0;
  std::vector<std::pair<RatFunc, int>> binomials;
  for (const auto& [L, e] : factors) {
    if (e == 0) continue;
    if (L.total_degree() > 1) throw std::invalid_argument("expand_affine_product: factor is not affine");
    Rational beta = 0;
    std::vector<PolyTerm> rest;
    for (const auto& term : L.terms()) {
      if (term.m.deg == 1 && term.m.e[tab.eps1()] == 1)
        beta += term.c * dir.x1;
      else if (term.m.deg == 1 && term.m.e[tab.eps2()] == 1)
        beta += term.c * dir.x2;
      else
        rest.push_back(term);
    }
    SparsePoly c = SparsePoly::from_terms(std::move(rest));
    if (c.is_zero()) {
      if (beta == 0) {
        if (e > 0) return DirectionSeries::zero(abs_precision);
        throw ResonantDirection("factor vanishes identically along the direction");
      }
      v0 += e;
      prefactor *= RatFunc(beta).pow(e);
      continue;
    }
    RatFunc cr(c);
    prefactor *= cr.pow(e);
    if (beta != 0) binomials.emplace_back(cr.inverse() * beta, e);
  }
  int rel = abs_precision - v0;
  if (rel <= 0) return DirectionSeries::zero(abs_precision);
  DirectionSeries s = DirectionSeries::constant(prefactor, rel);
  for (const auto& [g, e] : binomials) s.mul_binomial(g, e);
  return s.shifted(v0);
}

}  // namespace nekrasov
