#include "nekrasov/sworacle.hpp"

#include "nekrasov/conjecture.hpp"
#include "nekrasov/quadrature.hpp"

namespace nekrasov {
namespace {

const Real& tol() {
  static const Real t("1e-40");
  return t;
}

Real half_pi() { return real_pi() / 2; }

void check_chamber(const Real& u, const Real& lambda) {
  if (!(lambda > 0)) throw SWError("Lambda must be positive");
  if (!(u < -2 * lambda * lambda)) throw SWError("u is outside the real chamber u < -2 Lambda^2");
}

// (1/pi) int_{-pi/2}^{pi/2} sqrt(2 L2 sin(theta) - u): the A-cycle with the cut traced by z^2 = 2 L2 sin - u.
Real a_period(const Real& u, const Real& lambda_sq) {
  auto f = [&](const Real& th) { return sqrt(2 * lambda_sq * sin(th) - u); };
  return tanh_sinh<Real>(f, -half_pi(), half_pi(), tol()).value / real_pi();
}

Real a_period_du(const Real& u, const Real& lambda_sq) {
  auto f = [&](const Real& th) { return 1 / sqrt(2 * lambda_sq * sin(th) - u); };
  return -tanh_sinh<Real>(f, -half_pi(), half_pi(), tol()).value / (2 * real_pi());
}

// B-cycle across the gap (-inner, inner): -8 int_0^{pi/2} inner^2 sin^2 / sqrt(outer^2 - inner^2 sin^2).
Real dual_period(const Real& inner_sq, const Real& outer_sq) {
  auto f = [&](const Real& phi) {
    Real s = sin(phi);
    return inner_sq * s * s / sqrt(outer_sq - inner_sq * s * s);
  };
  return -8 * tanh_sinh<Real>(f, Real(0), half_pi(), tol()).value;
}

// Complete elliptic integrals K(m), E(m) for 0 <= m < 1 by the arithmetic-geometric mean; the
// complement mc = 1 - m is passed separately to keep it accurate when m is close to 1.
std::pair<Real, Real> elliptic_ke(const Real& m, const Real& mc) {
  Real a = 1, b = sqrt(mc), c = sqrt(m);
  Real sum = c * c / 2, pow2 = Real(1) / 2;
  const Real eps("1e-48");
  while (abs(c) > eps) {
    Real an = (a + b) / 2;
    c = (a - b) / 2;
    b = sqrt(a * b);
    a = an;
    pow2 *= 2;
    sum += pow2 * c * c;
  }
  Real k = real_pi() / (2 * a);
  return {k, k * (1 - sum)};
}

Real perturbative_dual(const Real& a, const Real& lambda) {
  return -8 * a * log(a / lambda) + 8 * (1 - log(Real(2))) * a;
}

// Solves the small symmetric system by Gauss-Jordan; returns the inverse.
std::vector<std::vector<Real>> invert(std::vector<std::vector<Real>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Real>> inv(n, std::vector<Real>(n, Real(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(m[r][c]) > abs(m[p][c])) p = r;
    if (m[p][c] == 0) throw SWError("singular fit matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Real d = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      Real f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Real norm1(const std::vector<std::vector<Real>>& m) {
  Real best = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    Real s = 0;
    for (const auto& row : m) s += abs(row[j]);
    if (s > best) best = s;
  }
  return best;
}

}  // namespace

SWPoint sw_periods(const Real& u, const Real& lambda) {
  check_chamber(u, lambda);
  SWPoint p;
  p.u = u;
  p.lambda = lambda;
  Real l2 = lambda * lambda;
  Real inner_sq = -u - 2 * l2, outer_sq = -u + 2 * l2;
  p.inner = sqrt(inner_sq);
  p.outer = sqrt(outer_sq);
  const Real m = inner_sq / outer_sq, mc = 4 * l2 / outer_sq;
  const auto [k, e] = elliptic_ke(m, mc);
  const auto [kc, ec] = elliptic_ke(mc, m);
  p.a = 2 / real_pi() * p.outer * ec;
  p.da_du = -kc / (real_pi() * p.outer);
  p.a_dual = -8 * p.outer * (k - e);
  return p;
}

SWPoint sw_periods_by_quadrature(const Real& u, const Real& lambda) {
  check_chamber(u, lambda);
  SWPoint p;
  p.u = u;
  p.lambda = lambda;
  Real l2 = lambda * lambda;
  Real inner_sq = -u - 2 * l2, outer_sq = -u + 2 * l2;
  p.inner = sqrt(inner_sq);
  p.outer = sqrt(outer_sq);
  p.a = a_period(u, l2);
  p.da_du = a_period_du(u, l2);
  p.a_dual = dual_period(inner_sq, outer_sq);
  return p;
}

Real sw_a_period(const Real& u, const Real& lambda_sq) {
  if (!(u < -2 * abs(lambda_sq))) throw SWError("u is outside the real chamber u < -2 |Lambda^2|");
  return a_period(u, lambda_sq);
}

Real sw_u_for(const Real& a, const Real& lambda) {
  if (!(lambda > 0) || !(a > 0)) throw SWError("a and Lambda must be positive");
  Real l2 = lambda * lambda;
  Real edge = -2 * l2;
  if (!(a > a_period(edge, l2))) throw SWError("a is below the real chamber for this Lambda");
  Real u = -a * a;
  if (!(u < edge)) u = 2 * edge;
  for (int it = 0; it < 100; ++it) {
    auto p = sw_periods(u, lambda);
    Real step = (p.a - a) / p.da_du;
    Real next = u - step;
    while (!(next < edge)) next = (u + edge) / 2 + (u - edge) / 4;  // stay inside the chamber
    u = next;
    if (abs(step) <= Real("1e-42") * abs(u)) return u;
  }
  throw SWError("inversion of a(u) did not converge");
}

Real sw_tau_imag(const Real& u, const Real& lambda) {
  check_chamber(u, lambda);
  Real h = Real("1e-15") * abs(u);
  Real dad_du = (sw_periods(u + h, lambda).a_dual - sw_periods(u - h, lambda).a_dual) / (2 * h);
  // tau = (1 / 2 pi i) d a_D / d a with both periods real.
  return -dad_du / sw_periods(u, lambda).da_du / (2 * real_pi());
}

Real sw_instanton_dual(const Real& u, const Real& lambda) {
  auto p = sw_periods(u, lambda);
  return p.a_dual - perturbative_dual(p.a, lambda);
}

Real sw_prepotential_inst(const Real& a, const Real& lambda) {
  const Real ua = sw_u_for(a, lambda);
  // u = ua / s^2 maps (0, 1] onto (-infinity, ua] with a(u) close to a / s; the integrand vanishes
  // linearly at s = 0 and the piece below 1e-8 (relative size 1e-16) is dropped.
  auto f = [&](const Real& s) {
    Real u = ua / (s * s);
    auto p = sw_periods(u, lambda);
    Real g = p.a_dual - perturbative_dual(p.a, lambda);
    return g * p.da_du * 2 * ua / (s * s * s);
  };
  return -tanh_sinh<Real>(f, Real("1e-8"), Real(1), Real("1e-26")).value;
}

PrepotentialFit sw_prepotential_coeffs(const Real& a, std::vector<Real> lambdas, int order) {
  if (order < 1 || order > 2) throw SWError("fit order must be 1 or 2");
  if (lambdas.empty())
    for (int j = 4; j <= 14; j += 2) lambdas.push_back(a * j / 100);
  const int n = order + 1;
  if (static_cast<int>(lambdas.size()) < n + 1) throw SWError("too few Lambda samples for the fit");
  PrepotentialFit fit;
  fit.a = a;
  fit.order = order;
  fit.lambdas = lambdas;
  std::vector<std::vector<Real>> rows;
  for (const auto& l : lambdas) {
    fit.values.push_back(sw_prepotential_inst(a, l));
    Real l4 = pow(l, 4), p = l4;
    std::vector<Real> row;
    for (int j = 0; j < n; ++j, p *= l4) row.push_back(p);
    rows.push_back(row);
  }
  // Normal equations on rows scaled by Lambda^-4, so every sample weighs alike.
  std::vector<std::vector<Real>> gram(n, std::vector<Real>(n, Real(0)));
  std::vector<Real> rhs(n, Real(0));
  for (std::size_t s = 0; s < rows.size(); ++s) {
    Real w = 1 / (rows[s][0] * rows[s][0]);
    for (int i = 0; i < n; ++i) {
      rhs[i] += w * rows[s][i] * fit.values[s];
      for (int j = 0; j < n; ++j) gram[i][j] += w * rows[s][i] * rows[s][j];
    }
  }
  auto inv = invert(gram);
  fit.condition = norm1(gram) * norm1(inv);
  std::vector<Real> c(n, Real(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i] += inv[i][j] * rhs[j];
  fit.coeffs.assign(c.begin(), c.begin() + order);
  fit.tail = c[order];
  fit.residual = 0;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    Real model = 0;
    for (int i = 0; i < n; ++i) model += c[i] * rows[s][i];
    Real dev = abs(model - fit.values[s]);
    if (dev > fit.residual) fit.residual = dev;
  }
  return fit;
}

SWComparison compare_with_localization(int order, const std::vector<Real>& a_values, double tol4, double tol8) {
  if (order < 1 || order > 2) throw SWError("comparison order must be 1 or 2");
  const auto pure = TheorySpec::parse("pure");
  const auto tab = pure.symbols(2);
  const int top = 4 * order;
  const auto c2 = c2_limit(2, pure, tab, top);
  const auto f2 = check_instanton_conjecture(builtin_surface("F2"), 2, {0}, pure, top);

  SWComparison out;
  out.order = order;
  bool sign_fixed = false;
  for (const auto& a : a_values) {
    std::vector<Real> point(tab.size() + 1, Real(0));
    point[tab.a(0)] = a;
    point[tab.a(1)] = -a;
    auto fit = sw_prepotential_coeffs(a, {}, order);
    for (int n = 1; n <= order; ++n) {
      const int lam = 4 * n;
      const Real sw = fit.coeffs[n - 1];
      if (!sign_fixed) {
        Real loc = c2[lam].evaluate(point);
        out.sign = abs(loc - sw) <= abs(loc + sw) ? 1 : -1;
        sign_fixed = true;
      }
      for (long k : {1L, 2L}) {
        SWComparisonRow row;
        row.k = k;
        row.lambda_power = lam;
        row.a = a;
        row.localization = k == 1 ? c2[lam].evaluate(point) : f2.coefficients[lam - 1].limit_surface.evaluate(point);
        row.sw = Real(k) * Real(out.sign) * sw;
        row.rel_error = abs(row.localization - row.sw) / abs(row.sw);
        row.tol = n == 1 ? tol4 : tol8;
        row.pass = row.rel_error <= Real(row.tol);
        out.rows.push_back(row);
      }
    }
  }
  out.pass = !out.rows.empty();
  for (const auto& r : out.rows) out.pass = out.pass && r.pass;
  return out;
}

}  // namespace nekrasov
