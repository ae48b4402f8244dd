#pragma once
#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "nekrasov/rational.hpp"

namespace nekrasov {

struct SeriesKey {
  int lam = 0;
  std::vector<int> q;
  auto operator<=>(const SeriesKey&) const = default;
};

// Truncated power series in Lambda, optionally graded by an integer Q-multidegree.
template <class C>
class LambdaSeries {
 public:
  LambdaSeries() = default;
  explicit LambdaSeries(int order) : order_(order) {}

  int order() const { return order_; }
  const std::map<SeriesKey, C>& terms() const { return terms_; }

  // Accumulate c at (lam, q); terms beyond the truncation order are dropped.
  void add(int lam, const std::vector<int>& q, const C& c) {
    if (lam < 0) throw std::invalid_argument("negative Lambda exponent");
    if (lam > order_) return;
    SeriesKey k{lam, q};
    auto it = terms_.find(k);
    if (it == terms_.end())
      terms_.emplace(std::move(k), c);
    else
      it->second += c;
  }
  void add(int lam, const C& c) { add(lam, {}, c); }
  bool has(int lam, const std::vector<int>& q = {}) const { return terms_.count({lam, q}) > 0; }
  // Coefficient at (lam, q), or `zero` if absent.
  C coeff(int lam, const C& zero, const std::vector<int>& q = {}) const {
    auto it = terms_.find({lam, q});
    return it == terms_.end() ? zero : it->second;
  }
  // Dense coefficient list for an ungraded series.
  std::vector<C> dense(const C& zero) const {
    std::vector<C> v(order_ + 1, zero);
    for (const auto& [k, c] : terms_) {
      if (!k.q.empty()) throw std::logic_error("dense() on a Q-graded series");
      v[k.lam] = c;
    }
    return v;
  }
  static LambdaSeries from_dense(const std::vector<C>& v, int order) {
    LambdaSeries s(order);
    for (int i = 0; i <= order && i < static_cast<int>(v.size()); ++i) s.terms_.emplace(SeriesKey{i, {}}, v[i]);
    return s;
  }

 private:
  int order_ = 0;
  std::map<SeriesKey, C> terms_;
};

// log z for a dense series with z[0] == one, via n L_n = n z_n - sum_{k<n} k L_k z_{n-k}.
template <class C>
std::vector<C> dense_log(const std::vector<C>& z, const C& zero) {
  const int n_max = static_cast<int>(z.size()) - 1;
  std::vector<C> L(z.size(), zero);
  for (int n = 1; n <= n_max; ++n) {
    C acc = z[n] * Rational(n);
    for (int k = 1; k < n; ++k) acc -= (L[k] * z[n - k]) * Rational(k);
    L[n] = acc * Rational(1, n);
  }
  return L;
}

// exp s for a dense series with s[0] == 0: n E_n = sum_{k=1}^n k s_k E_{n-k}.
template <class C>
std::vector<C> dense_exp(const std::vector<C>& s, const C& one, const C& zero) {
  const int n_max = static_cast<int>(s.size()) - 1;
  std::vector<C> E(s.size(), zero);
  E[0] = one;
  for (int n = 1; n <= n_max; ++n) {
    C acc = zero;
    for (int k = 1; k <= n; ++k) acc += (s[k] * E[n - k]) * Rational(k);
    E[n] = acc * Rational(1, n);
  }
  return E;
}

// Product of two dense series truncated to the shorter length.
template <class C>
std::vector<C> dense_mul(const std::vector<C>& a, const std::vector<C>& b, const C& zero) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<C> r(n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

template <class C, class IsOne>
LambdaSeries<C> series_log(const LambdaSeries<C>& z, const C& zero, IsOne is_one) {
  auto d = z.dense(zero);
  if (!is_one(d[0])) throw std::domain_error("series_log: constant term is not 1");
  return LambdaSeries<C>::from_dense(dense_log(d, zero), z.order());
}

template <class C>
LambdaSeries<C> series_exp(const LambdaSeries<C>& s, const C& one, const C& zero) {
  auto d = s.dense(zero);
  d[0] = zero;
  return LambdaSeries<C>::from_dense(dense_exp(d, one, zero), s.order());
}

}  // namespace nekrasov
