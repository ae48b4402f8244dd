#include "nekrasov/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace nekrasov {

namespace {

using Factor = RatFunc::Factor;

bool factor_less(const Factor& x, const Factor& y) { return poly_cmp(x.first, y.first) < 0; }

// Sort and merge a factor list; rescale each factor to leading coefficient 1, folding scalars into
// `scale`. Constant factors are absorbed entirely.
std::vector<Factor> canonical_factors(std::vector<Factor> in, Rational& scale) {
  std::vector<Factor> out;
  out.reserve(in.size());
  for (auto& [p, e] : in) {
    if (e == 0) continue;
    if (p.is_zero()) throw DivisionByZero("zero denominator factor");
    if (e < 0) throw std::invalid_argument("negative denominator exponent");
    if (p.is_constant()) {
      Rational c = p.constant_value();
      for (int i = 0; i < e; ++i) scale /= c;
      continue;
    }
    Rational lc = p.leading().c;
    if (lc != 1) {
      p *= Rational(1) / lc;
      for (int i = 0; i < e; ++i) scale /= lc;
    }
    out.emplace_back(std::move(p), e);
  }
  std::sort(out.begin(), out.end(), factor_less);
  std::vector<Factor> merged;
  for (auto& f : out) {
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(std::move(f));
  }
  return merged;
}

// Remove from `den` every power of a factor that divides `num`.
void cancel(SparsePoly& num, std::vector<Factor>& den) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (auto& [p, e] : den) {
    SparsePoly q;
    while (e > 0 && num.total_degree() >= p.total_degree() && num.divide_exact(p, q)) {
      num = std::move(q);
      --e;
    }
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const Factor& f) { return f.second == 0; }),
            den.end());
}

// Split a nonzero polynomial into content, variable powers and a monic cofactor.
std::vector<Factor> split_for_denominator(const SparsePoly& p, Rational& content) {
  std::vector<Factor> out;
  content = p.leading().c;
  SparsePoly rest = p * (Rational(1) / content);
  for (int v = 0; v < kMaxVars; ++v) {
    int k = rest.min_degree_in(v);
    if (k <= 0) continue;
    SparsePoly q;
    rest.divide_exact(SparsePoly::var(v, k), q);
    rest = std::move(q);
    out.emplace_back(SparsePoly::var(v), k);
  }
  if (!rest.is_constant()) out.emplace_back(std::move(rest), 1);
  return out;
}

SparsePoly expand(const std::vector<Factor>& den) {
  SparsePoly d(Rational(1));
  for (const auto& [p, e] : den) d = d * p.pow(e);
  return d;
}

// Product of factors of `l` with exponents reduced by those in `sub` (sub must divide l).
SparsePoly cofactor(const std::vector<Factor>& l, const std::vector<Factor>& sub) {
  SparsePoly d(Rational(1));
  std::size_t j = 0;
  for (const auto& [p, e] : l) {
    int k = e;
    while (j < sub.size() && factor_less(sub[j], {p, 0})) ++j;
    if (j < sub.size() && sub[j].first == p) k -= sub[j].second;
    if (k > 0) d = d * p.pow(k);
  }
  return d;
}

std::vector<Factor> lcm_factors(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  std::vector<Factor> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? 1 : j == b.size() ? -1 : poly_cmp(a[i].first, b[j].first);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  std::vector<Factor> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? 1 : j == b.size() ? -1 : poly_cmp(a[i].first, b[j].first);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RatFunc RatFunc::from_factors(SparsePoly num, std::vector<Factor> den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

RatFunc RatFunc::quotient(const SparsePoly& num, const SparsePoly& den) {
  if (den.is_zero()) throw DivisionByZero("quotient by the zero polynomial");
  Rational content;
  auto factors = split_for_denominator(den, content);
  return from_factors(num * (Rational(1) / content), std::move(factors));
}

void RatFunc::normalize() {
  Rational scale(1);
  den_ = canonical_factors(std::move(den_), scale);
  num_ *= scale;
  cancel(num_, den_);
}

SparsePoly RatFunc::den() const { return expand(den_); }

bool RatFunc::involves(int var) const {
  if (num_.involves(var)) return true;
  for (const auto& f : den_)
    if (f.first.involves(var)) return true;
  return false;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.size() == o.den_.size() &&
      std::equal(den_.begin(), den_.end(), o.den_.begin(),
                 [](const Factor& x, const Factor& y) { return x.second == y.second && x.first == y.first; })) {
    num_ += o.num_;
    cancel(num_, den_);
    return *this;
  }
  auto l = lcm_factors(den_, o.den_);
  SparsePoly n = num_ * cofactor(l, den_) + o.num_ * cofactor(l, o.den_);
  num_ = std::move(n);
  den_ = std::move(l);
  cancel(num_, den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  SparsePoly other_num = o.num_;
  std::vector<Factor> mine = den_, theirs = o.den_;
  cancel(num_, theirs);
  cancel(other_num, mine);
  num_ = num_ * other_num;
  den_ = merge_factors(mine, theirs);
  return *this;
}

RatFunc& RatFunc::operator*=(const Rational& s) {
  if (s == 0) {
    num_ = SparsePoly();
    den_.clear();
  } else {
    num_ *= s;
  }
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Rational content;
  auto factors = split_for_denominator(num_, content);
  return from_factors(den() * (Rational(1) / content), std::move(factors));
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  return *this *= o.inverse();
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return RatFunc(Rational(1));
  RatFunc r;
  r.num_ = num_.pow(k);
  r.den_ = den_;
  for (auto& f : r.den_) f.second *= k;
  return r;
}

bool RatFunc::identical(const RatFunc& o) const {
  if (!(num_ == o.num_) || den_.size() != o.den_.size()) return false;
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (den_[i].second != o.den_[i].second || !(den_[i].first == o.den_[i].first)) return false;
  return true;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.identical(b)) return true;
  return a.num_ * b.den() == b.num_ * a.den();
}

RatFunc RatFunc::substitute(const std::vector<const SparsePoly*>& subs) const {
  std::vector<Factor> den;
  den.reserve(den_.size());
  for (const auto& [p, e] : den_) {
    SparsePoly q = p.substitute(subs);
    if (q.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
    den.emplace_back(std::move(q), e);
  }
  return from_factors(num_.substitute(subs), std::move(den));
}

Real RatFunc::evaluate(const std::vector<Real>& point) const {
  Real d = 1;
  for (const auto& [p, e] : den_) {
    Real v = p.evaluate(point);
    if (v == 0) throw DivisionByZero("denominator vanishes at evaluation point");
    d *= boost::multiprecision::pow(v, e);
  }
  return num_.evaluate(point) / d;
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
  std::string n = num_.to_string(names);
  if (den_.empty()) return n;
  std::ostringstream os;
  os << (num_.size() > 1 ? "(" + n + ")" : n) << "/(";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i) os << "*";
    const auto& [p, e] = den_[i];
    bool wrap = p.size() > 1 || e > 1;
    os << (wrap ? "(" : "") << p.to_string(names) << (wrap ? ")" : "");
    if (e > 1) os << "^" << e;
  }
  os << ")";
  return os.str();
}

RatFunc sum_balanced(std::vector<RatFunc> terms) {
  if (terms.empty()) return RatFunc();
  while (terms.size() > 1) {
    std::vector<RatFunc> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2) next.push_back(std::move(terms.back()));
    terms = std::move(next);
  }
  return std::move(terms.front());
}

}  // namespace nekrasov
