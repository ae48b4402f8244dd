#include "nekrasov/perturbative.hpp"

#include <boost/math/constants/constants.hpp>

#include "nekrasov/quadrature.hpp"

namespace nekrasov {
namespace {

constexpr int kSeriesTerms = 176;

// Taylor coefficients of z / (e^z - 1).
template <class T>
std::vector<T> bernoulli_series(int n);

template <>
std::vector<Rational> bernoulli_series<Rational>(int n) {
  std::vector<Rational> b(n + 1);  // B_k
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0, binom = 1;  // binom = C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += binom * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -s / (m + 1);
  }
  Rational fact = 1;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) fact *= m;
    b[m] /= fact;
  }
  return b;
}

template <>
std::vector<Real> bernoulli_series<Real>(int n) {
  auto q = bernoulli_series<Rational>(n);
  std::vector<Real> out;
  out.reserve(q.size());
  for (const auto& c : q) out.push_back(to_real(c));
  return out;
}

template <class T>
const std::vector<T>& bernoulli_cached() {
  static const std::vector<T> b = bernoulli_series<T>(kSeriesTerms);
  return b;
}

// Coefficients of e^{-xt} B(e1 t) B(e2 t), so the kernel is sum_j out[j] t^{j-2} / (e1 e2).
template <class T>
std::vector<T> kernel_series(const T& x, const T& e1, const T& e2, int n) {
  const auto& b = bernoulli_cached<T>();
  std::vector<T> ex(n + 1), b1(n + 1), b2(n + 1);
  T px = 1, p1 = 1, p2 = 1, fact = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      px *= -x;
      p1 *= e1;
      p2 *= e2;
      fact *= j;
    }
    ex[j] = px / fact;
    b1[j] = b[j] * p1;
    b2[j] = b[j] * p2;
  }
  std::vector<T> bb(n + 1, T(0)), out(n + 1, T(0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) bb[i + j] += b1[i] * b2[j];
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) out[i + j] += ex[i] * bb[j];
  return out;
}

Real expm1r(const Real& z) {
  Real out;
  mpfr_expm1(out.backend().data(), z.backend().data(), MPFR_RNDN);
  return out;
}

Real tol_quad() { return Real("1e-30"); }

// Sum of polylog-type series sum_n term(n), stopping once terms are negligible and shrinking.
template <class F>
std::pair<Real, Real> geometric_sum(const F& term, const char* what) {
  Real sum = 0, prev = 0;
  for (long n = 1; n <= 4000000; ++n) {
    Real t = term(n);
    sum += t;
    if (n > 1 && abs(t) <= Real("1e-48") * (abs(sum) + Real("1e-300"))) {
      Real ratio = prev == 0 ? Real(0) : abs(t / prev);
      if (ratio < 1) return {sum, abs(t) * ratio / (1 - ratio)};
    }
    prev = t;
  }
  throw PerturbativeError(std::string(what) + ": series did not converge");
}

Real lagrange_at_zero(const std::vector<Real>& t, const std::vector<Real>& f) {
  Real out = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Real w = 1;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) w *= t[j] / (t[j] - t[i]);
    out += w * f[i];
  }
  return out;
}

const std::vector<Real>& t_grid() {
  static const std::vector<Real> t = {Real("1e-2"), Real("1e-3"), Real("1e-4")};
  return t;
}

Real rel_dev(const Real& value, const Real& target) {
  Real scale = abs(target) > Real("1e-30") ? abs(target) : Real(1);
  return abs(value - target) / scale;
}

}  // namespace

std::array<Rational, 3> gamma_kernel_laurent(const Rational& x, const Rational& e1, const Rational& e2) {
  if (e1 == 0 || e2 == 0) throw PerturbativeError("equivariant parameters must be nonzero");
  auto a = kernel_series<Rational>(x, e1, e2, 2);
  Rational p = e1 * e2;
  return {a[0] / p, a[1] / p, a[2] / p};
}

std::array<Real, 3> gamma_kernel_laurent(const Real& x, const Real& e1, const Real& e2) {
  if (e1 == 0 || e2 == 0) throw PerturbativeError("equivariant parameters must be nonzero");
  auto a = kernel_series<Real>(x, e1, e2, 2);
  Real p = e1 * e2;
  return {a[0] / p, a[1] / p, a[2] / p};
}

GammaEval gamma4d(const Real& x, const Real& eps1, const Real& eps2, const Real& lambda) {
  if (!(x > 0)) throw PerturbativeError("gamma4d needs a positive argument");
  if (eps1 == 0 || eps2 == 0) throw PerturbativeError("equivariant parameters must be nonzero");
  if (!(lambda > 0)) throw PerturbativeError("Lambda must be positive");
  const Real p = eps1 * eps2;
  const auto a = kernel_series<Real>(x, eps1, eps2, kSeriesTerms);
  const Real cm2 = a[0] / p, cm1 = a[1] / p, c0 = a[2] / p;
  const Real reach = abs(x) + abs(eps1) + abs(eps2);
  auto kernel = [&](const Real& t) { return exp(-x * t) / (expm1r(eps1 * t) * expm1r(eps2 * t)); };
  auto remainder_over_t = [&](const Real& t) {
    if (t * reach <= Real("0.5")) {
      Real s = 0;
      for (int j = kSeriesTerms; j >= 3; --j) s = s * t + a[j];
      return s / p;
    }
    return (kernel(t) - cm2 / (t * t) - cm1 / t - c0) / t;
  };
  auto near = tanh_sinh<Real>(remainder_over_t, Real(0), Real(1), tol_quad());
  auto far = exp_sinh<Real>([&](const Real& t) { return kernel(t) / t; }, Real(1), tol_quad());
  const Real euler = boost::math::constants::euler<Real>();
  GammaEval g;
  g.value = -cm2 / 2 - cm1 + c0 * (euler + log(lambda)) + near.value + far.value;
  g.error = near.error + far.error + Real("1e-45") * abs(g.value);
  g.x = x;
  g.eps1 = eps1;
  g.eps2 = eps2;
  g.lambda = lambda;
  return g;
}

GammaEval gamma5d(const Real& x, const Real& beta, const Real& eps1, const Real& eps2, const Real& lambda) {
  if (!(beta > 0) || !(x > 0)) throw PerturbativeError("gamma5d needs beta > 0 and a positive argument");
  if (eps1 == 0 || eps2 == 0) throw PerturbativeError("equivariant parameters must be nonzero");
  if (!(lambda > 0)) throw PerturbativeError("Lambda must be positive");
  const Real p = eps1 * eps2;
  const Real shifted = x + (eps1 + eps2) / 2;
  Real poly = (-beta / 6 * shifted * shifted * shifted + x * x * log(beta * lambda)) / (2 * p);
  auto [series, tail] = geometric_sum(
      [&](long n) {
        Real bn = beta * n;
        return exp(-bn * x) / (expm1r(bn * eps1) * expm1r(bn * eps2)) / n;
      },
      "gamma5d");
  GammaEval g;
  g.value = poly + series;
  g.error = tail + Real("1e-45") * abs(g.value);
  g.x = x;
  g.beta = beta;
  g.eps1 = eps1;
  g.eps2 = eps2;
  g.lambda = lambda;
  return g;
}

Real gamma4d_limit(const Real& x, const Real& lambda) { return -x * x / 2 * log(x / lambda) + Real(3) / 4 * x * x; }

Real gamma5d_limit(const Real& x, const Real& beta, const Real& lambda) {
  auto [li3, tail] = geometric_sum([&](long n) { return exp(-beta * n * x) / (Real(n) * n * n); }, "polylog");
  (void)tail;
  return -beta * x * x * x / 12 + x * x / 2 * log(beta * lambda) + li3 / (beta * beta);
}

GammaEval gamma_for(const TheorySpec& theory, const Real& x, const Real& eps1, const Real& eps2, const Real& lambda) {
  if (theory.kind == TheoryKind::FiveD) return gamma5d(x, to_real(theory.beta), eps1, eps2, lambda);
  if (theory.kind == TheoryKind::ChiY || theory.kind == TheoryKind::Elliptic)
    throw PerturbativeError("no perturbative part is defined for " + theory.to_string());
  return gamma4d(x, eps1, eps2, lambda);
}

Real gamma_limit_for(const TheorySpec& theory, const Real& x, const Real& lambda) {
  if (theory.kind == TheoryKind::FiveD) return gamma5d_limit(x, to_real(theory.beta), lambda);
  if (theory.kind == TheoryKind::ChiY || theory.kind == TheoryKind::Elliptic)
    throw PerturbativeError("no perturbative part is defined for " + theory.to_string());
  return gamma4d_limit(x, lambda);
}

PertEval f_pert(const ToricChain& chain, const TheorySpec& theory, int r, const std::vector<Real>& point,
                const Real& lambda) {
  if (theory.kind == TheoryKind::ChiY || theory.kind == TheoryKind::Elliptic)
    throw PerturbativeError("no perturbative part is defined for " + theory.to_string());
  const SymbolTable tab = theory.symbols(r);
  if (point.size() != static_cast<std::size_t>(tab.size()))
    throw PerturbativeError("point has " + std::to_string(point.size()) + " values, expected " +
                            std::to_string(tab.size()));
  auto at = [&](const EpsWeight& w) { return Real(w.x1) * point[0] + Real(w.x2) * point[1]; };

  PertEval out;
  std::vector<std::pair<Real, Real>> charts;
  if (chain.n_edges() == 0) {
    out.prefactor = point[0] * point[1];
    charts.push_back({point[0], point[1]});
  } else {
    const auto& li = chain.linf();
    Real w = at(li.w), u = at(li.u), v = at(li.v());
    out.prefactor = u * v;
    charts.push_back({-w, u});
    charts.push_back({w, v});
  }

  auto name = [](const char* s, int i) { return std::string(s) + std::to_string(i + 1); };
  auto add = [&](std::string label, const Real& x, int sign) {
    PertTerm t;
    t.label = std::move(label);
    t.x = x;
    t.sign = sign;
    out.terms.push_back(std::move(t));
  };
  for (int al = 0; al < r; ++al)
    for (int be = 0; be < r; ++be)
      if (al != be) add(name("a", be) + "-" + name("a", al), point[tab.a(be)] - point[tab.a(al)], 1);
  if (theory.kind == TheoryKind::Fundamental)
    for (int be = 0; be < r; ++be)
      for (int f = 0; f < theory.n_fund; ++f)
        add(name("a", be) + "+" + name("m", f), point[tab.a(be)] + point[tab.m(f)], -1);
  if (theory.kind == TheoryKind::Adjoint)
    for (int al = 0; al < r; ++al)
      for (int be = 0; be < r; ++be)
        add("m+" + name("a", be) + "-" + name("a", al), point[tab.m_adj()] + point[tab.a(be)] - point[tab.a(al)], -1);

  out.complete = true;
  out.total = 0;
  for (auto& t : out.terms) {
    try {
      Real sum = 0;
      for (const auto& [e1, e2] : charts) sum += gamma_for(theory, t.x, e1, e2, lambda).value;
      t.value = Real(t.sign) * out.prefactor * sum;
      t.ok = true;
      out.total += t.value;
    } catch (const PerturbativeError& e) {
      t.error = e.what();
      out.complete = false;
    }
  }
  return out;
}

namespace {

PertCheck finish(PertCheck c) {
  c.rel_error = 0;
  c.limit = 0;
  for (const auto& run : c.runs) {
    c.limit += run.extrapolated;
    Real dev = rel_dev(run.extrapolated, c.target);
    if (dev > c.rel_error) c.rel_error = dev;
  }
  c.limit /= static_cast<long>(c.runs.size());
  c.pass = c.rel_error <= Real(c.tol);
  return c;
}

}  // namespace

PertCheck check_gamma_limit(const Real& x, const Real& lambda, const TheorySpec& kernel, double tol) {
  PertCheck c;
  c.quantity = "gamma";
  c.kernel = kernel.to_string();
  c.x = x;
  c.lambda = lambda;
  c.tol = tol;
  c.target = gamma_limit_for(kernel, x, lambda);
  for (auto [d1, d2] : {std::pair<Real, Real>{Real(1), Real("-2.1")}, {Real("0.75"), Real("1.25")}}) {
    PertRun run;
    run.u0 = d1;
    run.w0 = d2;
    for (const auto& t : t_grid()) {
      Real e1 = t * d1, e2 = t * d2;
      run.t.push_back(t);
      run.values.push_back(e1 * e2 * gamma_for(kernel, x, e1, e2, lambda).value);
    }
    run.extrapolated = lagrange_at_zero(run.t, run.values);
    c.runs.push_back(std::move(run));
  }
  return finish(std::move(c));
}

PertCheck check_pert_limit(long k, const Real& x, const Real& lambda, const TheorySpec& kernel, double tol) {
  if (k < 1) throw PerturbativeError("k must be positive");
  PertCheck c;
  c.quantity = "f_k";
  c.kernel = kernel.to_string();
  c.k = k;
  c.x = x;
  c.lambda = lambda;
  c.tol = tol;
  c.target = Real(k) * gamma_limit_for(kernel, x, lambda);
  for (auto [u0, w0] : {std::pair<Real, Real>{Real(1), Real(2) / 7}, {Real(-1), Real(3) / 5}}) {
    PertRun run;
    run.u0 = u0;
    run.w0 = w0;
    for (const auto& t : t_grid()) {
      Real u = t * u0, w = t * w0, v = u - Real(k) * w;
      run.t.push_back(t);
      run.values.push_back(u * v * (gamma_for(kernel, x, -w, u, lambda).value + gamma_for(kernel, x, w, v, lambda).value));
    }
    run.extrapolated = lagrange_at_zero(run.t, run.values);
    c.runs.push_back(std::move(run));
  }
  return finish(std::move(c));
}

}  // namespace nekrasov
