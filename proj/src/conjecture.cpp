#include "nekrasov/conjecture.hpp"

#include <iostream>
#include <random>
#include <stdexcept>

namespace nekrasov {

namespace {

constexpr int kExactZero = 1 << 28;
constexpr int kMaxCandidates = 12;
constexpr int kMaxRefinements = 6;

Rational along(const EpsWeight& w, const Direction& d) { return w.x1 * d.x1 + w.x2 * d.x2; }

DirectionSeries dzero() { return DirectionSeries::zero(kExactZero); }

DirectionVec log_vec(const DirectionVec& z) { return dense_log(z, dzero()); }

// -c t^2 L for every coefficient.
DirectionVec scale_t2(const DirectionVec& L, const Rational& c) {
  DirectionVec out;
  for (const auto& s : L) out.push_back(s.shifted(2) * (-c));
  return out;
}

bool known_through_zero(const DirectionVec& v) {
  for (const auto& s : v)
    if (s.precision() < 1) return false;
  return true;
}

int valuation_of(const DirectionSeries& s) { return s.is_zero() ? kExactZero : s.valuation(); }

Rational eval_poly(const SparsePoly& p, const std::vector<Rational>& x) {
  Rational v = 0;
  for (const auto& term : p.terms()) {
    Rational m = term.c;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int e = 0; e < term.m.e[i]; ++e) m *= x[i];
    v += m;
  }
  return v;
}

Rational eval_term(const AffineTerm& t, const std::vector<Rational>& x) {
  Rational v = t.coeff;
  for (const auto& [p, e] : t.factors) {
    Rational f = eval_poly(p, x);
    if (f == 0) throw DivisionByZero("factor vanishes at the probe point");
    for (int i = 0; i < std::abs(e); ++i) v = e > 0 ? Rational(v * f) : Rational(v / f);
  }
  return v;
}

// Exact values of the Lambda coefficients of Z at a rational point.
std::vector<Rational> z_master_at(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                                  const SymbolTable& tab, int order, const std::vector<Rational>& x) {
  std::vector<Rational> total(order + 1, Rational(0));
  for (const auto& D : enumerate_divisor_tuples(chain, r, d, order)) {
    AffineTerm edge = edge_term(chain, D, theory, tab);
    const int rest = order - edge.lam;
    std::vector<Rational> acc(rest + 1, Rational(0));
    acc[0] = eval_term(edge, x);
    for (int v = 0; v < chain.n_vertices(); ++v) {
      std::vector<EpsWeight> shifts;
      for (int al = 0; al < r; ++al) shifts.push_back(chain.weight_at(D[al], v));
      const auto& vx = chain.vertices()[v];
      std::vector<Rational> vert(rest + 1, Rational(0));
      for (const auto& t : c2_terms(theory, tab, vx.w1, vx.w2, shifts, rest)) vert[t.lam] += eval_term(t, x);
      acc = dense_mul(acc, vert, Rational(0));
    }
    for (int l = 0; l <= rest; ++l) total[l + edge.lam] += acc[l];
  }
  return total;
}

// Lowest Lambda exponent carrying a nonzero coefficient, probed exactly at two rational points (a rational
// function vanishing at both generic probes is taken to be zero).
int leading_exponent(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                     const SymbolTable& tab) {
  const long cap = 8L * r + std::labs((1 - r) * chain.dot(d, d)) + 8;
  std::vector<std::vector<Rational>> probes;
  for (int p = 0; p < 2; ++p) {
    std::vector<Rational> x(tab.size());
    for (int i = 0; i < tab.size(); ++i) x[i] = frac(37 * (i + 1) + 101 * p + 3, 17 + 4 * i + 7 * p) * (i % 2 ? -1 : 1);
    probes.push_back(x);
  }
  std::vector<std::vector<Rational>> values;
  for (const auto& x : probes) values.push_back(z_master_at(chain, r, d, theory, tab, static_cast<int>(cap), x));
  for (int e = 0; e <= cap; ++e)
    for (const auto& v : values)
      if (v[e] != 0) return e;
  throw VanishingPartitionFunction("partition function vanishes through Lambda^" + std::to_string(cap) +
                                   "; its logarithm is undefined");
}

struct DirectionData {
  DirectionSeries lead;
  DirectionVec surface, c2, aux;
};

DirectionData expand_direction(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                               const SymbolTable& tab, const Direction& dir, int e0, int order) {
  const auto& li = chain.linf();
  Rational uv = along(li.u, dir) * along(li.v(), dir);
  Rational e12 = dir.x1 * dir.x2;
  if (uv == 0 || e12 == 0 || along(li.w, dir) == 0) throw ResonantDirection("line-at-infinity weight vanishes");
  for (int precision = order + 2, attempt = 0; attempt < kMaxRefinements; ++attempt, precision += order + 2) {
    DirectionData out;
    DirectionVec zx = master_along(chain, r, d, theory, tab, dir, e0 + order, precision);
    out.lead = zx[e0];
    if (out.lead.is_zero()) throw std::logic_error("leading coefficient vanishes along the direction");
    DirectionSeries inv = out.lead.inverse();
    DirectionVec zn(zx.begin() + e0, zx.end());
    for (auto& s : zn) s = s * inv;
    DirectionVec lx = log_vec(zn);
    out.surface = scale_t2(lx, uv);
    out.c2 = scale_t2(log_vec(c2_along(theory, tab, {1, 0}, {0, 1}, {}, dir, order, precision)), e12);
    DirectionVec la = log_vec(c2_along(theory, tab, li.w, li.u, {}, dir, order, precision));
    DirectionVec lb = log_vec(c2_along(theory, tab, -li.w, li.v(), {}, dir, order, precision));
    out.aux = lx;
    for (int j = 0; j <= order; ++j) out.aux[j] = lx[j] + la[j] + lb[j];
    if (known_through_zero(out.surface) && known_through_zero(out.c2) && known_through_zero(out.aux) &&
        out.lead.precision() >= 1)
      return out;
  }
  throw std::runtime_error("could not reach the requested precision along a direction");
}

std::vector<Direction> candidates(const ConjectureOptions& opt) {
  if (!opt.directions.empty()) return opt.directions;
  std::vector<Direction> c;
  for (int i = 0; i < kMaxCandidates; ++i) c.push_back(candidate_direction(i));
  return c;
}

ConjectureReport report_header(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                               int order) {
  ConjectureReport rep;
  rep.surface = chain.name();
  rep.rank = r;
  rep.d = d;
  rep.theory = theory.to_string();
  rep.order = order;
  rep.k = chain.linf().k;
  rep.dimension_offset = (1 - r) * chain.dot(d, d);
  return rep;
}

ConjectureReport check_exact(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                             int order, const ConjectureOptions& opt) {
  ConjectureReport rep = report_header(chain, r, d, theory, order);
  rep.mode = "exact";
  SymbolTable tab = theory.symbols(r);
  rep.lambda_offset = leading_exponent(chain, r, d, theory, tab);
  std::vector<DirectionData> data;
  for (const auto& dir : candidates(opt)) {
    if (static_cast<int>(data.size()) == opt.n_directions) break;
    try {
      data.push_back(expand_direction(chain, r, d, theory, tab, dir, rep.lambda_offset, order));
      rep.directions.push_back(dir);
    } catch (const ResonantDirection&) {
    }
  }
  if (static_cast<int>(data.size()) < opt.n_directions) throw ResonantDirection("no usable direction found");
  for (const auto& dd : data) rep.leading_valuation.push_back(valuation_of(dd.lead));
  for (int j = 1; j <= order; ++j) {
    CoefficientCheck c;
    c.lam = j;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto& dd = data[i];
      c.valuation.push_back(valuation_of(dd.surface[j]));
      c.aux_valuation.push_back(valuation_of(dd.aux[j]));
      if (c.valuation.back() < 0) c.analytic = false;
      if (c.aux_valuation.back() < 0) c.aux_analytic = false;
      if (valuation_of(dd.c2[j]) < 0) rep.c2_analytic = false;
      RatFunc ls = dd.surface[j].coeff(0), lc = dd.c2[j].coeff(0);
      if (i == 0) {
        c.limit_surface = ls;
        c.limit_c2 = lc;
      } else if (ls != c.limit_surface || lc != c.limit_c2) {
        c.direction_independent = false;
      }
    }
    c.k_scaling = c.analytic && c.direction_independent && c.limit_surface == c.limit_c2 * Rational(rep.k);
    rep.analytic = rep.analytic && c.analytic;
    rep.k_scaling = rep.k_scaling && c.k_scaling;
    rep.aux_analytic = rep.aux_analytic && c.aux_analytic;
    rep.coefficients.push_back(std::move(c));
  }
  for (int v : rep.leading_valuation)
    if (v != 0) rep.aux_analytic = false;
  return rep;
}

// ---- numeric mode ----

// Value at t = 0 of the quadratic through three samples.
Real extrapolate(const std::vector<Real>& t, const std::vector<Real>& f) {
  Real L = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Real w = 1;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) w *= t[j] / (t[j] - t[i]);
    L += w * f[i];
  }
  return L;
}

std::vector<Real> dense_numeric(const NumericSeries& s, int from, int order) {
  std::vector<Real> v(order + 1, Real(0));
  for (int j = 0; j <= order; ++j) v[j] = s.coeff(from + j, Real(0));
  return v;
}

std::vector<Real> log_numeric(std::vector<Real> z) {
  Real lead = z[0];
  for (auto& x : z) x /= lead;
  return dense_log(z, Real(0));
}

struct NumericAt {
  std::vector<Real> surface, c2, aux;
};

NumericAt evaluate_at(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                      const SymbolTable& tab, const std::vector<Real>& base, const Direction& dir, const Real& t,
                      int e0, int order) {
  const auto& li = chain.linf();
  Real x1 = to_real(dir.x1) * t, x2 = to_real(dir.x2) * t;
  auto at = [&](const Real& a, const Real& b) {
    std::vector<Real> p = base;
    p[0] = a;
    p[1] = b;
    return p;
  };
  auto wv = [&](const EpsWeight& w) { return w.x1 * x1 + w.x2 * x2; };
  NumericAt out;
  auto lx = log_numeric(dense_numeric(z_master_numeric(chain, r, d, theory, tab, e0 + order, at(x1, x2)), e0, order));
  auto lc = log_numeric(dense_numeric(z_c2_numeric(r, theory, tab, order, at(x1, x2)), 0, order));
  auto la = log_numeric(dense_numeric(z_c2_numeric(r, theory, tab, order, at(wv(li.w), wv(li.u))), 0, order));
  auto lb = log_numeric(dense_numeric(z_c2_numeric(r, theory, tab, order, at(wv(-li.w), wv(li.v()))), 0, order));
  Real uv = wv(li.u) * wv(li.v());
  for (int j = 0; j <= order; ++j) {
    out.surface.push_back(-uv * lx[j]);
    out.c2.push_back(-x1 * x2 * lc[j]);
    out.aux.push_back(uv * (lx[j] + la[j] + lb[j]));  // scaled by t^2 so a pole of order 2 stays visible
  }
  return out;
}

// Lowest exponent whose coefficient is not negligible against the sum of its term magnitudes.
int numeric_leading_exponent(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                             const SymbolTable& tab, const ConjectureReport& rep, const Direction& dir) {
  const int cap = static_cast<int>(8L * r + std::labs(rep.dimension_offset) + 8);
  std::vector<Real> p = rep.sample_points[0];
  p[0] = to_real(dir.x1) / 997;
  p[1] = to_real(dir.x2) / 997;
  NumericSeries mag;
  auto z = z_master_numeric(chain, r, d, theory, tab, cap, p, &mag);
  for (int e = 0; e <= cap; ++e)
    if (abs(z.coeff(e, Real(0))) > Real("1e-35") * mag.coeff(e, Real(0))) return e;
  throw VanishingPartitionFunction("partition function vanishes at the sample point through Lambda^" +
                                   std::to_string(cap) + "; its logarithm is undefined");
}

// Values at t, 2t, 4t. Analytic behaviour halves the successive differences; a pole or a logarithm does not.
bool settles(const std::vector<Real>& f, const Real& limit) {
  Real near = abs(f[0] - f[1]), far = abs(f[1] - f[2]);
  return near <= Real("1e-25") * (1 + abs(limit)) || near <= Real("0.75") * far;
}

bool close(const Real& a, const Real& b, double tol) {
  return abs(a - b) <= Real(tol) * (abs(b) + Real("1e-20"));
}

ConjectureReport check_numeric(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                               int order, const ConjectureOptions& opt) {
  ConjectureReport rep = report_header(chain, r, d, theory, order);
  rep.mode = "numeric";
  SymbolTable tab = theory.symbols(r);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> gap(8, 24), start(-8, 8);
  for (int s = 0; s < opt.n_samples; ++s) {
    std::vector<Real> p(tab.size(), Real(0));
    Real a = Real(start(rng)) / 8;
    for (int al = 0; al < r; ++al) {
      p[tab.a(al)] = a;
      a += Real(gap(rng)) / 8;  // consecutive gaps in [1, 3]
    }
    rep.sample_points.push_back(p);
  }
  const std::vector<Real> ts = {Real("1e-4"), Real("2e-4"), Real("4e-4")};
  // runs[direction][sample][t]
  std::vector<std::vector<std::vector<NumericAt>>> runs;
  rep.lambda_offset = -1;
  for (const auto& dir : candidates(opt)) {
    if (static_cast<int>(rep.directions.size()) == opt.n_directions) break;
    const auto& li = chain.linf();
    if (dir.x1 * dir.x2 == 0 || along(li.u, dir) * along(li.v(), dir) == 0 || along(li.w, dir) == 0) continue;
    try {
      if (rep.lambda_offset < 0) rep.lambda_offset = numeric_leading_exponent(chain, r, d, theory, tab, rep, dir);
      std::vector<std::vector<NumericAt>> per_sample;
      for (const auto& base : rep.sample_points) {
        std::vector<NumericAt> per_t;
        for (const auto& t : ts)
          per_t.push_back(evaluate_at(chain, r, d, theory, tab, base, dir, t, rep.lambda_offset, order));
        per_sample.push_back(std::move(per_t));
      }
      runs.push_back(std::move(per_sample));
      rep.directions.push_back(dir);
    } catch (const DivisionByZero&) {
    } catch (const ClassError&) {
    }
  }
  if (static_cast<int>(rep.directions.size()) < opt.n_directions) throw ResonantDirection("no usable direction found");
  rep.coefficients.resize(order);
  for (int j = 1; j <= order; ++j) rep.coefficients[j - 1].lam = j;
  for (std::size_t s = 0; s < rep.sample_points.size(); ++s) {
    std::vector<std::vector<Real>> lim_s, lim_c;
    for (std::size_t di = 0; di < rep.directions.size(); ++di) {
      const auto& per_t = runs[di][s];
      std::vector<Real> ls, lc;
      for (int j = 1; j <= order; ++j) {
        auto& c = rep.coefficients[j - 1];
        std::vector<Real> fs, fc, fa;
        for (const auto& run : per_t) {
          fs.push_back(run.surface[j]);
          fc.push_back(run.c2[j]);
          fa.push_back(run.aux[j]);
        }
        Real Ls = extrapolate(ts, fs), Lc = extrapolate(ts, fc), La = extrapolate(ts, fa);
        if (!settles(fs, Ls)) c.analytic = false;
        if (!settles(fc, Lc)) rep.c2_analytic = false;
        // t^2 times an analytic function tends to zero.
        if (abs(La) > Real("1e-6") * (1 + abs(Ls))) c.aux_analytic = false;
        ls.push_back(Ls);
        lc.push_back(Lc);
      }
      lim_s.push_back(ls);
      lim_c.push_back(lc);
    }
    for (int j = 1; j <= order; ++j) {
      auto& c = rep.coefficients[j - 1];
      for (std::size_t i = 1; i < lim_s.size(); ++i)
        if (!close(lim_s[i][j - 1], lim_s[0][j - 1], opt.rel_tol) || !close(lim_c[i][j - 1], lim_c[0][j - 1], opt.rel_tol))
          c.direction_independent = false;
      if (!close(lim_s[0][j - 1], lim_c[0][j - 1] * rep.k, opt.rel_tol)) c.k_scaling = false;
      c.numeric_surface.push_back(static_cast<double>(lim_s[0][j - 1]));
      c.numeric_c2.push_back(static_cast<double>(lim_c[0][j - 1]));
    }
  }
  for (auto& c : rep.coefficients) {
    c.k_scaling = c.k_scaling && c.analytic && c.direction_independent;
    rep.analytic = rep.analytic && c.analytic;
    rep.k_scaling = rep.k_scaling && c.k_scaling;
    rep.aux_analytic = rep.aux_analytic && c.aux_analytic;
  }
  return rep;
}

}  // namespace

ConjectureReport check_instanton_conjecture(const ToricChain& chain, int r, const DivisorVector& d,
                                            const TheorySpec& theory, int order, const ConjectureOptions& opt) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  if (static_cast<int>(d.size()) != chain.n_edges()) throw std::invalid_argument("divisor class has wrong length");
  if (opt.n_directions < 1) throw std::invalid_argument("at least one direction is required");
  return theory.exact() && !opt.numeric ? check_exact(chain, r, d, theory, order, opt) : check_numeric(chain, r, d, theory, order, opt);
}

std::vector<RatFunc> c2_limit(int r, const TheorySpec& theory, const SymbolTable& tab, int order) {
  for (int i = 0; i < kMaxCandidates; ++i) {
    Direction dir = candidate_direction(i);
    try {
      for (int precision = order + 2, attempt = 0; attempt < kMaxRefinements; ++attempt, precision += order + 2) {
        auto f = scale_t2(log_vec(c2_along(theory, tab, {1, 0}, {0, 1}, {}, dir, order, precision)), dir.x1 * dir.x2);
        if (!known_through_zero(f)) continue;
        std::vector<RatFunc> out;
        for (const auto& s : f) {
          if (valuation_of(s) < 0) throw std::runtime_error("C^2 prepotential is not analytic");
          out.push_back(s.coeff(0));
        }
        return out;
      }
    } catch (const ResonantDirection&) {
    }
  }
  throw std::runtime_error("could not extract the C^2 limit");
}

}  // namespace nekrasov
