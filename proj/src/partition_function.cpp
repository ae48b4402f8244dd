#include "nekrasov/partition_function.hpp"

#include <map>
#include <stdexcept>

#include "nekrasov/parallel.hpp"

namespace nekrasov {

TheorySpec TheorySpec::parse(const std::string& s) {
  TheorySpec t;
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw std::invalid_argument("theory '" + head + "' needs a parameter");
  };
  if (head == "pure") {
    t.kind = TheoryKind::Pure;
  } else if (head == "fund") {
    need_arg();
    t.kind = TheoryKind::Fundamental;
    t.n_fund = std::stoi(arg);
    if (t.n_fund < 1) throw std::invalid_argument("fund:NF needs NF >= 1");
  } else if (head == "adjoint") {
    t.kind = TheoryKind::Adjoint;
  } else if (head == "5d") {
    need_arg();
    t.kind = TheoryKind::FiveD;
    t.beta = parse_rational(arg);
    if (t.beta <= 0) throw std::invalid_argument("5d:BETA needs BETA > 0");
  } else if (head == "chiy") {
    need_arg();
    t.kind = TheoryKind::ChiY;
    t.y = parse_rational(arg);
  } else if (head == "elliptic") {
    need_arg();
    auto comma = arg.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("elliptic:Y,Q needs two parameters");
    t.kind = TheoryKind::Elliptic;
    t.y = parse_rational(arg.substr(0, comma));
    t.q = parse_rational(arg.substr(comma + 1));
    MultClassSpec::elliptic(t.y, t.q, t.n_q);  // validates the parameters
  } else {
    throw std::invalid_argument("unknown theory '" + s + "'");
  }
  return t;
}

std::string TheorySpec::to_string() const {
  switch (kind) {
    case TheoryKind::Pure: return "pure";
    case TheoryKind::Fundamental: return "fund:" + std::to_string(n_fund);
    case TheoryKind::Adjoint: return "adjoint";
    case TheoryKind::FiveD: return "5d:" + beta.get_str();
    case TheoryKind::ChiY: return "chiy:" + y.get_str();
    case TheoryKind::Elliptic: return "elliptic:" + y.get_str() + "," + q.get_str();
  }
  return "?";
}

MultClassSpec TheorySpec::tangent_class(const SymbolTable& tab) const {
  switch (kind) {
    case TheoryKind::Adjoint: return MultClassSpec::linear_shift(tab.m_adj());
    case TheoryKind::FiveD: return MultClassSpec::ahat(beta);
    case TheoryKind::ChiY: return MultClassSpec::chi_y(y);
    case TheoryKind::Elliptic: return MultClassSpec::elliptic(y, q, n_q);
    default: return MultClassSpec::one();
  }
}

std::vector<MultClassSpec> TheorySpec::natural_classes(const SymbolTable& tab) const {
  std::vector<MultClassSpec> out;
  if (kind == TheoryKind::Fundamental)
    for (int f = 0; f < n_fund; ++f) out.push_back(MultClassSpec::linear_shift(tab.m(f)));
  return out;
}

RatFunc AffineTerm::to_ratfunc() const {
  SparsePoly num(coeff);
  std::vector<RatFunc::Factor> den;
  for (const auto& [p, e] : factors) {
    if (e > 0)
      num = num * p.pow(e);
    else if (e < 0)
      den.emplace_back(p, -e);
  }
  return RatFunc::from_factors(std::move(num), std::move(den));
}

namespace {

void check_theory(const TheorySpec& theory, const SymbolTable& tab) {
  if (tab.n_fund() != theory.n_fund || tab.has_adjoint() != (theory.kind == TheoryKind::Adjoint))
    throw std::invalid_argument("symbol table does not match the theory");
}

struct VertexWeights {
  std::vector<LinearForm> tangent, natural;
};

// Weights at a vertex with tangent weights (w1, w2) for diagrams Y and color parameters a_alpha + shifts.
VertexWeights vertex_weights(const PartitionTuple& Y, const SymbolTable& tab, const LinearForm& w1,
                             const LinearForm& w2, const std::vector<LinearForm>& color) {
  VertexWeights out;
  const int r = static_cast<int>(Y.size());
  for (int al = 0; al < r; ++al)
    for (int be = 0; be < r; ++be)
      for (auto& w : nst_weights(Y[al], Y[be], w1, w2)) out.tangent.push_back(color[be] - color[al] + w);
  for (int be = 0; be < r; ++be)
    for (auto& w : ns_weights(Y[be], w1, w2)) out.natural.push_back(color[be] + w);
  return out;
}

std::vector<LinearForm> color_forms(const SymbolTable& tab, const std::vector<EpsWeight>& shifts) {
  std::vector<LinearForm> c;
  for (int al = 0; al < tab.rank(); ++al) {
    LinearForm f = LinearForm::generator(tab.size(), tab.a(al));
    if (!shifts.empty()) f += shifts[al].form(tab);
    c.push_back(f);
  }
  return c;
}

void push_tangent(AffineTerm& t, const MultClassSpec& A, const LinearForm& w) {
  t.lam += 1;
  if (A.kind == ClassKind::Euler) return;
  if (w.is_zero()) throw DivisionByZero("zero tangent weight");
  t.factors.emplace_back(SparsePoly::from_linear(w), -1);
  if (A.kind != ClassKind::One) t.factors.emplace_back(class_factor(A, w), 1);
}

void push_natural(AffineTerm& t, const std::vector<MultClassSpec>& B, const LinearForm& w) {
  for (const auto& c : B)
    if (c.kind != ClassKind::One) t.factors.emplace_back(class_factor(c, w), 1);
}

Real numeric_tangent(const MultClassSpec& A, const LinearForm& w, const std::vector<Real>& point) {
  Real x = eval_form(w, point);
  if (x == 0) throw DivisionByZero("tangent weight vanishes at the evaluation point");
  return class_f(A, x, point) / x;
}

Real numeric_natural(const std::vector<MultClassSpec>& B, const LinearForm& w, const std::vector<Real>& point) {
  Real v = 1;
  if (B.empty()) return v;
  Real x = eval_form(w, point);
  for (const auto& c : B) v *= class_f(c, x, point);
  return v;
}

std::vector<PartitionTuple> tuples_up_to(int r, int order) {
  std::vector<PartitionTuple> all;
  for (int n = 0; 2 * r * n <= order; ++n)
    for (auto& y : enumerate_tuples(r, n)) all.push_back(std::move(y));
  return all;
}

// Dense Lambda series from exact terms; the per-term work runs in parallel, the sum in input order.
std::vector<RatFunc> sum_terms(const std::vector<AffineTerm>& terms, int order) {
  std::vector<RatFunc> values(terms.size());
  parallel_for(terms.size(), [&](std::size_t i) { values[i] = terms[i].to_ratfunc(); });
  std::vector<std::vector<RatFunc>> by_lam(order + 1);
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].lam <= order) by_lam[terms[i].lam].push_back(std::move(values[i]));
  std::vector<RatFunc> out(order + 1);
  for (int l = 0; l <= order; ++l)
    if (!by_lam[l].empty()) out[l] = sum_balanced(std::move(by_lam[l]));
  return out;
}

ExactSeries from_dense_sparse(const std::vector<RatFunc>& v, int order, const std::vector<int>& q = {}) {
  ExactSeries s(order);
  for (int l = 0; l <= order && l < static_cast<int>(v.size()); ++l)
    if (!v[l].is_zero()) s.add(l, q, v[l]);
  return s;
}

DivisorVector diff(const DivisorVector& a, const DivisorVector& b) {
  DivisorVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

constexpr int kExactZero = 1 << 28;

}  // namespace

RatFunc m_factor(const PartitionTuple& Y, const MultClassSpec& c, MFactorKind kind, int alpha, int beta,
                 const SymbolTable& tab) {
  const int n = tab.size();
  LinearForm e1 = LinearForm::generator(n, tab.eps1()), e2 = LinearForm::generator(n, tab.eps2());
  std::vector<LinearForm> ws;
  if (kind == MFactorKind::Beta) {
    for (auto& w : ns_weights(Y[beta], e1, e2)) ws.push_back(LinearForm::generator(n, tab.a(beta)) + w);
  } else {
    LinearForm shift = LinearForm::generator(n, tab.a(beta)) - LinearForm::generator(n, tab.a(alpha));
    for (auto& w : nst_weights(Y[alpha], Y[beta], e1, e2)) ws.push_back(shift + w);
  }
  if (kind == MFactorKind::EulerPair) {
    for (const auto& w : ws)
      if (w.is_zero()) throw DivisionByZero("zero weight in the Euler factor");
    return eval_class(MultClassSpec::euler(), ws);
  }
  return eval_class(c, ws);
}

AffineTerm edge_term(const ToricChain& chain, const DivisorTuple& D, const TheorySpec& theory,
                     const SymbolTable& tab) {
  const int r = tab.rank(), n = tab.size();
  MultClassSpec A = theory.tangent_class(tab);
  auto B = theory.natural_classes(tab);
  AffineTerm t;
  for (int al = 0; al < r; ++al)
    for (int be = 0; be < r; ++be) {
      if (al == be) continue;
      LinearForm shift = LinearForm::generator(n, tab.a(be)) - LinearForm::generator(n, tab.a(al));
      for (const auto& w : h1_weights(chain, diff(D[be], D[al]))) push_tangent(t, A, shift + w.form(tab));
    }
  for (int be = 0; be < r; ++be) {
    LinearForm shift = LinearForm::generator(n, tab.a(be));
    for (const auto& w : h1_weights(chain, D[be])) push_natural(t, B, shift + w.form(tab));
  }
  if (t.lam != dsq_norm(chain, D)) throw std::logic_error("edge weight count differs from |D|^2");
  return t;
}

RatFunc l_factors(const ToricChain& chain, const DivisorTuple& D, const TheorySpec& theory, const SymbolTable& tab) {
  if (!theory.exact()) throw ClassError("exact l-factors need a polynomial class");
  check_theory(theory, tab);
  return edge_term(chain, D, theory, tab).to_ratfunc();
}

std::vector<AffineTerm> c2_terms(const TheorySpec& theory, const SymbolTable& tab, const EpsWeight& w1,
                                 const EpsWeight& w2, const std::vector<EpsWeight>& shifts, int order) {
  check_theory(theory, tab);
  MultClassSpec A = theory.tangent_class(tab);
  auto B = theory.natural_classes(tab);
  auto color = color_forms(tab, shifts);
  auto tuples = tuples_up_to(tab.rank(), order);
  std::vector<AffineTerm> out(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) {
    auto vw = vertex_weights(tuples[i], tab, w1.form(tab), w2.form(tab), color);
    AffineTerm t;
    for (const auto& w : vw.tangent) push_tangent(t, A, w);
    for (const auto& w : vw.natural) push_natural(t, B, w);
    out[i] = std::move(t);
  });
  return out;
}

ExactSeries z_c2(int r, const TheorySpec& theory, const SymbolTable& tab, int order) {
  if (!theory.exact()) throw ClassError("exact mode needs a polynomial class");
  if (tab.rank() != r) throw std::invalid_argument("symbol table rank mismatch");
  auto terms = c2_terms(theory, tab, {1, 0}, {0, 1}, {}, order);
  return from_dense_sparse(sum_terms(terms, order), order);
}

ExactSeries z_master(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                     const SymbolTable& tab, int order) {
  if (!theory.exact()) throw ClassError("exact mode needs a polynomial class");
  if (tab.rank() != r) throw std::invalid_argument("symbol table rank mismatch");
  std::vector<RatFunc> total(order + 1);
  for (const auto& D : enumerate_divisor_tuples(chain, r, d, order)) {
    AffineTerm edge = edge_term(chain, D, theory, tab);
    const int rest = order - edge.lam;
    std::vector<RatFunc> acc(rest + 1);
    acc[0] = edge.to_ratfunc();
    for (int v = 0; v < chain.n_vertices(); ++v) {
      std::vector<EpsWeight> shifts;
      for (int al = 0; al < r; ++al) shifts.push_back(chain.weight_at(D[al], v));
      const auto& vx = chain.vertices()[v];
      auto vert = sum_terms(c2_terms(theory, tab, vx.w1, vx.w2, shifts, rest), rest);
      acc = dense_mul(acc, vert, RatFunc());
    }
    for (int l = 0; l <= rest; ++l) total[l + edge.lam] += acc[l];
  }
  return from_dense_sparse(total, order);
}

ExactSeries z_direct(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                     const SymbolTable& tab, int order) {
  if (!theory.exact()) throw ClassError("exact mode needs a polynomial class");
  check_theory(theory, tab);
  MultClassSpec A = theory.tangent_class(tab);
  auto B = theory.natural_classes(tab);
  const int nv = chain.n_vertices();
  std::vector<FixedPointConfig> configs;
  for (const auto& D : enumerate_divisor_tuples(chain, r, d, order)) {
    long dsq = dsq_norm(chain, D);
    for (int n = 0; dsq + 2L * r * n <= order; ++n)
      for (const auto& flat : enumerate_tuples(r * nv, n)) {
        FixedPointConfig c{D, {}};
        for (int v = 0; v < nv; ++v) c.Y.emplace_back(flat.begin() + v * r, flat.begin() + (v + 1) * r);
        configs.push_back(std::move(c));
      }
  }
  std::vector<AffineTerm> terms(configs.size());
  parallel_for(configs.size(), [&](std::size_t i) {
    AffineTerm t;
    for (const auto& w : tangent_character(chain, configs[i], tab)) push_tangent(t, A, w.form);
    for (const auto& w : natural_character(chain, configs[i], tab)) push_natural(t, B, w.form);
    terms[i] = std::move(t);
  });
  return from_dense_sparse(sum_terms(terms, order), order);
}

ExactSeries z_generating(const ToricChain& chain, int r, const TheorySpec& theory, const SymbolTable& tab,
                         int order, long dbound) {
  if (dbound < 0) throw std::invalid_argument("dbound must be nonnegative");
  ExactSeries out(order);
  const int ne = chain.n_edges();
  DivisorVector d(ne, -dbound);
  while (true) {
    ExactSeries z = z_master(chain, r, d, theory, tab, order);
    std::vector<int> q(d.begin(), d.end());
    for (const auto& [key, c] : z.terms()) out.add(key.lam, q, c);
    int i = ne - 1;
    while (i >= 0 && d[i] == dbound) d[i--] = -dbound;
    if (i < 0) break;
    ++d[i];
  }
  return out;
}

ExactSeries f_inst(const ToricChain& chain, const ExactSeries& z, const SymbolTable& tab) {
  RatFunc factor = -RatFunc(chain.linf().u.poly(tab) * chain.linf().v().poly(tab));
  auto is_one = [](const RatFunc& c) { return c == RatFunc(1); };
  ExactSeries L = series_log(z, RatFunc(), is_one);
  ExactSeries out(z.order());
  for (const auto& [k, c] : L.terms())
    if (!c.is_zero()) out.add(k.lam, k.q, c * factor);
  return out;
}

NumericSeries z_c2_numeric(int r, const TheorySpec& theory, const SymbolTable& tab, int order,
                           const std::vector<Real>& point) {
  if (tab.rank() != r) throw std::invalid_argument("symbol table rank mismatch");
  return z_master_numeric(builtin_surface("C2"), r, {}, theory, tab, order, point);
}

namespace {

// Dense vertex series; `mag` receives the sums of absolute values of the contributing terms.
std::vector<Real> vertex_numeric(const TheorySpec& theory, const SymbolTable& tab, const ChainVertex& vx,
                                 const std::vector<EpsWeight>& shifts, int order, const std::vector<Real>& point,
                                 std::vector<Real>& mag) {
  MultClassSpec A = theory.tangent_class(tab);
  auto B = theory.natural_classes(tab);
  auto color = color_forms(tab, shifts);
  auto tuples = tuples_up_to(tab.rank(), order);
  std::vector<Real> values(tuples.size());
  std::vector<int> lam(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) {
    auto vw = vertex_weights(tuples[i], tab, vx.w1.form(tab), vx.w2.form(tab), color);
    Real v = 1;
    for (const auto& w : vw.tangent) v *= numeric_tangent(A, w, point);
    for (const auto& w : vw.natural) v *= numeric_natural(B, w, point);
    values[i] = v;
    lam[i] = static_cast<int>(vw.tangent.size());
  });
  std::vector<Real> out(order + 1, Real(0));
  mag.assign(order + 1, Real(0));
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    out[lam[i]] += values[i];
    mag[lam[i]] += abs(values[i]);
  }
  return out;
}

}  // namespace

NumericSeries z_master_numeric(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                               const SymbolTable& tab, int order, const std::vector<Real>& point,
                               NumericSeries* magnitude) {
  check_theory(theory, tab);
  if (tab.rank() != r) throw std::invalid_argument("symbol table rank mismatch");
  if (static_cast<int>(point.size()) < tab.size()) throw ClassError("numeric point misses symbols");
  MultClassSpec A = theory.tangent_class(tab);
  auto B = theory.natural_classes(tab);
  const int n = tab.size();
  std::vector<Real> total(order + 1, Real(0)), total_mag(order + 1, Real(0));
  for (const auto& D : enumerate_divisor_tuples(chain, r, d.empty() ? chain.zero_divisor() : d, order)) {
    Real edge = 1;
    int lam = 0;
    for (int al = 0; al < r; ++al)
      for (int be = 0; be < r; ++be) {
        if (al == be) continue;
        LinearForm shift = LinearForm::generator(n, tab.a(be)) - LinearForm::generator(n, tab.a(al));
        for (const auto& w : h1_weights(chain, diff(D[be], D[al]))) {
          edge *= numeric_tangent(A, shift + w.form(tab), point);
          ++lam;
        }
      }
    for (int be = 0; be < r; ++be)
      for (const auto& w : h1_weights(chain, D[be]))
        edge *= numeric_natural(B, LinearForm::generator(n, tab.a(be)) + w.form(tab), point);
    const int rest = order - lam;
    std::vector<Real> acc(rest + 1, Real(0)), acc_mag(rest + 1, Real(0));
    acc[0] = edge;
    acc_mag[0] = abs(edge);
    for (int v = 0; v < chain.n_vertices(); ++v) {
      std::vector<EpsWeight> shifts;
      for (int al = 0; al < r; ++al) shifts.push_back(chain.weight_at(D[al], v));
      std::vector<Real> mag;
      acc = dense_mul(acc, vertex_numeric(theory, tab, chain.vertices()[v], shifts, rest, point, mag), Real(0));
      acc_mag = dense_mul(acc_mag, mag, Real(0));
    }
    for (int l = 0; l <= rest; ++l) {
      total[l + lam] += acc[l];
      total_mag[l + lam] += acc_mag[l];
    }
  }
  NumericSeries s(order);
  if (magnitude) *magnitude = NumericSeries(order);
  for (int l = 0; l <= order; ++l) {
    if (total[l] != 0) s.add(l, total[l]);
    if (magnitude && total_mag[l] != 0) magnitude->add(l, total_mag[l]);
  }
  return s;
}

Direction candidate_direction(int i) { return {Rational(i + 1), Rational(-(2 * i + 3))}; }

LimitResult eps_limit(const ExactSeries& s, const SymbolTable& tab, int n_dirs) {
  constexpr int kMaxCandidates = 12;
  LimitResult res;
  for (const auto& [k, c] : s.terms()) res.lam.push_back(k.lam);
  std::vector<std::vector<RatFunc>> limits;
  for (int i = 0; i < kMaxCandidates && static_cast<int>(res.directions.size()) < n_dirs; ++i) {
    Direction dir = candidate_direction(i);
    std::vector<int> vals;
    std::vector<RatFunc> lims;
    try {
      for (const auto& [k, c] : s.terms()) {
        DirectionSeries ser = laurent_at_zero(substitute_direction(c, tab, dir), tab, 0);
        vals.push_back(ser.is_zero() ? kExactZero : ser.valuation());
        lims.push_back(ser.coeff(0));
      }
    } catch (const ResonantDirection&) {
      continue;
    }
    res.directions.push_back(dir);
    res.valuations.push_back(vals);
    limits.push_back(lims);
  }
  if (static_cast<int>(res.directions.size()) < n_dirs) throw ResonantDirection("no usable direction found");
  for (const auto& vals : res.valuations)
    for (int v : vals)
      if (v < 0) res.analytic = false;
  res.limit = limits.front();
  for (std::size_t j = 1; j < limits.size(); ++j)
    for (std::size_t i = 0; i < res.limit.size(); ++i)
      if (limits[j][i] != res.limit[i]) res.direction_independent = false;
  return res;
}

namespace {

DirectionVec expand_terms(const std::vector<AffineTerm>& terms, const SymbolTable& tab, const Direction& dir,
                          int order, int precision) {
  std::vector<DirectionSeries> ex(terms.size());
  parallel_for(terms.size(), [&](std::size_t i) {
    if (terms[i].lam <= order)
      ex[i] = expand_affine_product(RatFunc(terms[i].coeff), terms[i].factors, tab, dir, precision);
  });
  DirectionVec out(order + 1, DirectionSeries::zero(kExactZero));
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].lam <= order) out[terms[i].lam] += ex[i];
  return out;
}

DirectionVec mul_dense(const DirectionVec& a, const DirectionVec& b) {
  return dense_mul(a, b, DirectionSeries::zero(kExactZero));
}

}  // namespace

DirectionVec c2_along(const TheorySpec& theory, const SymbolTable& tab, const EpsWeight& w1, const EpsWeight& w2,
                      const std::vector<EpsWeight>& shifts, const Direction& dir, int order, int precision) {
  return expand_terms(c2_terms(theory, tab, w1, w2, shifts, order), tab, dir, order, precision);
}

DirectionVec master_along(const ToricChain& chain, int r, const DivisorVector& d, const TheorySpec& theory,
                          const SymbolTable& tab, const Direction& dir, int order, int precision) {
  DirectionVec total(order + 1, DirectionSeries::zero(kExactZero));
  for (const auto& D : enumerate_divisor_tuples(chain, r, d, order)) {
    AffineTerm edge = edge_term(chain, D, theory, tab);
    const int rest = order - edge.lam;
    DirectionVec acc(rest + 1, DirectionSeries::zero(kExactZero));
    acc[0] = expand_affine_product(RatFunc(edge.coeff), edge.factors, tab, dir, precision);
    for (int v = 0; v < chain.n_vertices(); ++v) {
      std::vector<EpsWeight> shifts;
      for (int al = 0; al < r; ++al) shifts.push_back(chain.weight_at(D[al], v));
      const auto& vx = chain.vertices()[v];
      acc = mul_dense(acc, c2_along(theory, tab, vx.w1, vx.w2, shifts, dir, rest, precision));
    }
    for (int l = 0; l <= rest; ++l) total[l + edge.lam] += acc[l];
  }
  return total;
}

}  // namespace nekrasov
