#pragma once
#include <cmath>
#include <stdexcept>

namespace nekrasov {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
struct QuadResult {
  T value;
  T error;  // difference between the last two refinement levels
  int levels = 0;
};

namespace detail {

// Trapezoid sum of g over tau = j*h for j in `offsets` (odd multiples when refining), walking outward
// until the terms are negligible or the map hits its endpoint.
template <class T, class G>
T de_sweep(const G& g, const T& h, bool odd_only, const T& scale, const T& tol) {
  using std::abs;
  T sum = 0;
  const int step = odd_only ? 2 : 1;
  for (int dir : {1, -1}) {
    int small = 0;
    for (int j = (odd_only ? 1 : (dir > 0 ? 0 : 1)); j * h <= T(8); j += step) {
      T tau = T(dir * j) * h;
      bool ok = true;
      T term = g(tau, ok);
      if (!ok) break;
      sum += term;
      if (abs(term) <= tol * T(1e-3) * (abs(scale) + abs(sum))) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
  }
  return sum;
}

template <class T, class G>
QuadResult<T> de_refine(const G& g, const T& tol, int max_levels) {
  using std::abs;
  T h = 1;
  T sum = de_sweep<T>(g, h, false, T(0), tol);
  T estimate = sum * h;
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    sum += de_sweep<T>(g, h, true, sum, tol);
    T next = sum * h;
    T diff = abs(next - estimate);
    estimate = next;
    if (level >= 3 && diff <= tol * (1 + abs(estimate))) return {estimate, diff, level};
  }
  throw QuadratureError("double-exponential quadrature did not converge");
}

}  // namespace detail

// Integral of f over (a, b) by the tanh-sinh rule; f is never evaluated at the endpoints.
template <class T, class F>
QuadResult<T> tanh_sinh(const F& f, const T& a, const T& b, const T& tol, int max_levels = 12) {
  using std::cosh;
  using std::exp;
  using std::sinh;
  using std::atan;
  const T half_pi = 2 * atan(T(1));
  auto g = [&](const T& tau, bool& ok) -> T {
    T s = half_pi * sinh(tau);
    T e = exp(-2 * s);
    T sigma = 1 / (1 + e);
    T x = a + (b - a) * sigma;
    if (!(x > a) || !(x < b)) {
      ok = false;
      return T(0);
    }
    T dx = (b - a) * 2 * e * sigma * sigma * half_pi * cosh(tau);
    return f(x) * dx;
  };
  return detail::de_refine<T>(g, tol, max_levels);
}

// Integral of f over (a, infinity) by the exp-sinh rule.
template <class T, class F>
QuadResult<T> exp_sinh(const F& f, const T& a, const T& tol, int max_levels = 12) {
  using std::cosh;
  using std::exp;
  using std::sinh;
  using std::atan;
  const T half_pi = 2 * atan(T(1));
  auto g = [&](const T& tau, bool& ok) -> T {
    T e = exp(half_pi * sinh(tau));
    T x = a + e;
    if (!(x > a)) {
      ok = false;
      return T(0);
    }
    return f(x) * e * half_pi * cosh(tau);
  };
  return detail::de_refine<T>(g, tol, max_levels);
}

}  // namespace nekrasov
