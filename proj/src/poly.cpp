#include "nekrasov/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nekrasov {

namespace {

using TermMap = std::map<Monomial, Rational, GrlexGreater>;

std::vector<PolyTerm> from_map(TermMap& m) {
  std::vector<PolyTerm> out;
  out.reserve(m.size());
  for (auto& [mono, c] : m)
    if (c != 0) out.push_back({mono, std::move(c)});
  return out;
}

}  // namespace

SparsePoly::SparsePoly(const Rational& c) {
  if (c != 0) t_.push_back({Monomial{}, c});
}

SparsePoly SparsePoly::var(int i, int power) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index");
  SparsePoly p;
  p.t_.push_back({Monomial::var(i, power), Rational(1)});
  return p;
}

SparsePoly SparsePoly::from_linear(const LinearForm& f, const Rational& constant) {
  std::vector<PolyTerm> terms;
  for (int i = 0; i < f.dim(); ++i)
    if (f[i] != 0) terms.push_back({Monomial::var(i), f[i]});
  if (constant != 0) terms.push_back({Monomial{}, constant});
  return from_terms(std::move(terms));
}

SparsePoly SparsePoly::from_terms(std::vector<PolyTerm> terms) {
  TermMap m;
  for (auto& t : terms) m[t.m] += t.c;
  SparsePoly p;
  p.t_ = from_map(m);
  return p;
}

Rational SparsePoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return t_.empty() ? Rational(0) : t_[0].c;
}

int SparsePoly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : t_) d = std::max<int>(d, t.m.e[var]);
  return d;
}

int SparsePoly::min_degree_in(int var) const {
  if (t_.empty()) return 0;
  int d = t_[0].m.e[var];
  for (const auto& t : t_) d = std::min<int>(d, t.m.e[var]);
  return d;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.t_.empty()) return *this;
  std::vector<PolyTerm> out;
  out.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = grlex_cmp(t_[i].m, o.t_[j].m);
    if (c > 0) {
      out.push_back(std::move(t_[i++]));
    } else if (c < 0) {
      out.push_back(o.t_[j++]);
    } else {
      Rational s = t_[i].c + o.t_[j].c;
      if (s != 0) out.push_back({t_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i) out.push_back(std::move(t_[i]));
  for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
  t_ = std::move(out);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) { return *this += -o; }

SparsePoly& SparsePoly::operator*=(const Rational& s) {
  if (s == 0) {
    t_.clear();
  } else if (s != 1) {
    for (auto& t : t_) t.c *= s;
  }
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() || b.is_zero()) return SparsePoly();
  if (a.size() == 1) return b.mul_monomial(a.t_[0].m, a.t_[0].c);
  if (b.size() == 1) return a.mul_monomial(b.t_[0].m, b.t_[0].c);
  TermMap m;
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) {
      auto [it, inserted] = m.try_emplace(x.m * y.m);
      it->second += x.c * y.c;
    }
  SparsePoly r;
  r.t_ = from_map(m);
  return r;
}

SparsePoly SparsePoly::mul_monomial(const Monomial& mono, const Rational& c) const {
  SparsePoly r;
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.m * mono, t.c * c});
  return r;
}

SparsePoly SparsePoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  SparsePoly result(Rational(1)), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool SparsePoly::divide_exact(const SparsePoly& b, SparsePoly& q) const {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) {
    q = SparsePoly();
    return true;
  }
  const auto& lb = b.leading();
  if (b.size() == 1) {
    std::vector<PolyTerm> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
      if (!lb.m.divides(t.m)) return false;
      out.push_back({t.m / lb.m, t.c / lb.c});
    }
    q.t_ = std::move(out);
    return true;
  }
  TermMap rem;
  for (const auto& t : t_) rem.emplace(t.m, t.c);
  std::vector<PolyTerm> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->second == 0) {
      rem.erase(it);
      continue;
    }
    if (!lb.m.divides(it->first)) return false;
    Monomial qm = it->first / lb.m;
    Rational qc = it->second / lb.c;
    rem.erase(it);
    for (std::size_t k = 1; k < b.t_.size(); ++k) {
      auto [jt, inserted] = rem.try_emplace(b.t_[k].m * qm);
      jt->second -= b.t_[k].c * qc;
      if (jt->second == 0) rem.erase(jt);
    }
    quot.push_back({qm, std::move(qc)});
  }
  q.t_ = std::move(quot);  // produced in decreasing order
  return true;
}

SparsePoly SparsePoly::substitute(const std::vector<const SparsePoly*>& subs) const {
  std::vector<std::vector<SparsePoly>> powers(subs.size());
  auto power_of = [&](int v, int e) -> const SparsePoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(SparsePoly(Rational(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *subs[v]);
    return cache[e];
  };
  SparsePoly out;
  TermMap acc;
  for (const auto& t : t_) {
    Monomial kept;
    SparsePoly factor(t.c);
    for (int v = 0; v < kMaxVars; ++v) {
      int e = t.m.e[v];
      if (!e) continue;
      if (v < static_cast<int>(subs.size()) && subs[v]) {
        factor = factor * power_of(v, e);
      } else {
        kept.e[v] = static_cast<std::uint16_t>(e);
        kept.deg += e;
      }
    }
    for (const auto& ft : factor.t_) acc[ft.m * kept] += ft.c;
  }
  out.t_ = from_map(acc);
  return out;
}

std::vector<SparsePoly> SparsePoly::coefficients_in(int var) const {
  std::vector<std::vector<PolyTerm>> buckets(degree_in(var) + 1);
  for (const auto& t : t_) {
    Monomial m = t.m;
    int e = m.e[var];
    m.e[var] = 0;
    m.deg -= e;
    buckets[e].push_back({m, t.c});
  }
  std::vector<SparsePoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    SparsePoly p;
    p.t_ = std::move(b);
    std::stable_sort(p.t_.begin(), p.t_.end(),
                     [](const PolyTerm& x, const PolyTerm& y) { return grlex_cmp(x.m, y.m) > 0; });
    out.push_back(std::move(p));
  }
  return out;
}

Real SparsePoly::evaluate(const std::vector<Real>& point) const {
  Real sum = 0;
  for (const auto& t : t_) {
    Real term = to_real(t.c);
    for (int v = 0; v < kMaxVars; ++v)
      if (t.m.e[v]) {
        if (v >= static_cast<int>(point.size())) throw std::out_of_range("missing value for variable");
        term *= boost::multiprecision::pow(point[v], static_cast<int>(t.m.e[v]));
      }
    sum += term;
  }
  return sum;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

int poly_cmp(const SparsePoly& a, const SparsePoly& b) {
  std::size_t n = std::min(a.t_.size(), b.t_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = grlex_cmp(a.t_[i].m, b.t_[i].m)) return c;
    if (int c = cmp(a.t_[i].c, b.t_[i].c)) return c < 0 ? -1 : 1;
  }
  if (a.t_.size() == b.t_.size()) return 0;
  return a.t_.size() < b.t_.size() ? -1 : 1;
}

std::string SparsePoly::to_string(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    Rational mag = abs(t.c);
    if (first)
      os << (t.c < 0 ? "-" : "");
    else
      os << (t.c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || t.m.deg == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (int v = 0; v < kMaxVars; ++v) {
      if (!t.m.e[v]) continue;
      if (wrote) os << "*";
      os << (v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v));
      if (t.m.e[v] > 1) os << "^" << t.m.e[v];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace nekrasov
