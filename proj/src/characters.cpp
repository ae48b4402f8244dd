#include "nekrasov/characters.hpp"

#include <sstream>

namespace nekrasov {

void TwoVarLaurent::add(long i, long j, long c) {
  if (c == 0) return;
  auto& v = coeffs[{i, j}];
  v += c;
  if (v == 0) coeffs.erase({i, j});
}

std::string TwoVarLaurent::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    os << (first ? "" : " + ") << c << "*t1^" << e.first << "*t2^" << e.second;
    first = false;
  }
  return os.str();
}

namespace {

// Polynomials in t1 (var 0) and t2 (var 1) after shifting exponents by a common offset.
struct ShiftedPoly {
  SparsePoly p;
  long s1 = 0, s2 = 0;  // actual exponents are stored exponents + (s1, s2)
};

ShiftedPoly monomial(const EpsWeight& e, long c) {
  ShiftedPoly r;
  r.s1 = e.x1;
  r.s2 = e.x2;
  r.p = SparsePoly(Rational(c));
  return r;
}

ShiftedPoly mul(const ShiftedPoly& a, const ShiftedPoly& b) { return {a.p * b.p, a.s1 + b.s1, a.s2 + b.s2}; }

ShiftedPoly add(const ShiftedPoly& a, const ShiftedPoly& b) {
  long s1 = std::min(a.s1, b.s1), s2 = std::min(a.s2, b.s2);
  Monomial ma, mb;
  ma.e[0] = static_cast<std::uint16_t>(a.s1 - s1);
  ma.e[1] = static_cast<std::uint16_t>(a.s2 - s2);
  ma.deg = ma.e[0] + ma.e[1];
  mb.e[0] = static_cast<std::uint16_t>(b.s1 - s1);
  mb.e[1] = static_cast<std::uint16_t>(b.s2 - s2);
  mb.deg = mb.e[0] + mb.e[1];
  return {a.p.mul_monomial(ma, 1) + b.p.mul_monomial(mb, 1), s1, s2};
}

// 1 - t^x as a shifted polynomial.
ShiftedPoly one_minus(const EpsWeight& x) { return add(monomial({0, 0}, 1), monomial(x, -1)); }

// Move the minimal exponents into the shift so that the polynomial has no monomial factor.
void reduce_shift(ShiftedPoly& a) {
  if (a.p.is_zero()) return;
  int m1 = a.p.min_degree_in(0), m2 = a.p.min_degree_in(1);
  if (!m1 && !m2) return;
  SparsePoly q;
  Monomial m;
  m.e[0] = static_cast<std::uint16_t>(m1);
  m.e[1] = static_cast<std::uint16_t>(m2);
  m.deg = m1 + m2;
  a.p.divide_exact(SparsePoly::from_terms({{m, Rational(1)}}), q);
  a.p = std::move(q);
  a.s1 += m1;
  a.s2 += m2;
}

}  // namespace

TwoVarLaurent h1_character(const ToricChain& chain, const DivisorVector& D) {
  if (static_cast<int>(D.size()) != chain.n_edges()) throw std::invalid_argument("divisor has wrong length");
  struct Term {
    ShiftedPoly num;
    EpsWeight d1, d2;  // denominator (1 - t^d1)(1 - t^d2)
  };
  std::vector<Term> terms;
  for (int v = 0; v < chain.n_vertices(); ++v) {
    const auto& vx = chain.vertices()[v];
    terms.push_back({monomial(chain.weight_at(D, v), -1), -vx.w1, -vx.w2});
  }
  const auto& L = chain.linf();
  terms.push_back({monomial({0, 0}, 1), -L.w, L.u});
  terms.push_back({monomial({0, 0}, 1), L.w, L.v()});

  std::vector<ShiftedPoly> dens;
  for (const auto& t : terms) dens.push_back(mul(one_minus(t.d1), one_minus(t.d2)));
  ShiftedPoly total_den = monomial({0, 0}, 1);
  for (const auto& d : dens) total_den = mul(total_den, d);
  ShiftedPoly total_num = monomial({0, 0}, 0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    ShiftedPoly n = terms[i].num;
    for (std::size_t j = 0; j < terms.size(); ++j)
      if (j != i) n = mul(n, dens[j]);
    total_num = add(total_num, n);
  }
  reduce_shift(total_num);
  reduce_shift(total_den);
  TwoVarLaurent out;
  if (total_num.p.is_zero()) return out;
  SparsePoly q;
  if (!total_num.p.divide_exact(total_den.p, q))
    throw CharacterError("edge character is not a Laurent polynomial (inconsistent surface data)");
  for (const auto& t : q.terms()) {
    if (t.c.get_den() != 1) throw CharacterError("edge character has a non-integer coefficient");
    if (t.c < 0) throw CharacterError("edge character has a negative coefficient");
    out.add(t.m.e[0] + total_num.s1 - total_den.s1, t.m.e[1] + total_num.s2 - total_den.s2, t.c.get_num().get_si());
  }
  return out;
}

std::vector<EpsWeight> h1_weights(const ToricChain& chain, const DivisorVector& D) {
  std::vector<EpsWeight> out;
  for (const auto& [e, c] : h1_character(chain, D).coeffs)
    for (long i = 0; i < c; ++i) out.push_back({e.first, e.second});
  long expected = -(chain.dot(D, D) + chain.c1_dot(D)) / 2;
  if (static_cast<long>(out.size()) != expected)
    throw CharacterError("H^1 dimension disagrees with -(D^2 + c1.D)/2");
  return out;
}

TwoVarLaurent edge_character_closed_form_Fk(long k, long d_diff) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  TwoVarLaurent out;
  if (d_diff > 0) {
    for (long j = 0; j <= d_diff - 1; ++j)
      for (long i = 0; i <= k * j; ++i) out.add(-i, -j, 1);
  } else if (d_diff < 0) {
    for (long j = 1; j <= -d_diff; ++j)
      for (long i = 1; i <= k * j - 1; ++i) out.add(i, j, 1);
  }
  return out;
}

DivisorVector config_total_divisor(const FixedPointConfig& c) {
  DivisorVector d = c.D.empty() ? DivisorVector{} : DivisorVector(c.D[0].size(), 0);
  for (const auto& Da : c.D)
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += Da[i];
  return d;
}

long config_instanton_number(const ToricChain& chain, const FixedPointConfig& c) {
  long n = 0;
  for (const auto& yv : c.Y)
    for (const auto& y : yv) n += y.size();
  for (std::size_t a = 0; a < c.D.size(); ++a)
    for (std::size_t b = a + 1; b < c.D.size(); ++b) n += chain.dot(c.D[a], c.D[b]);
  return n;
}

namespace {

void check_config(const ToricChain& chain, const FixedPointConfig& c, const SymbolTable& tab) {
  const int r = tab.rank();
  if (static_cast<int>(c.D.size()) != r) throw std::invalid_argument("one divisor per color required");
  if (static_cast<int>(c.Y.size()) != chain.n_vertices()) throw std::invalid_argument("one diagram tuple per vertex");
  for (const auto& yv : c.Y)
    if (static_cast<int>(yv.size()) != r) throw std::invalid_argument("one diagram per color required");
}

}  // namespace

WeightMultiset tangent_character(const ToricChain& chain, const FixedPointConfig& c, const SymbolTable& tab) {
  check_config(chain, c, tab);
  const int r = tab.rank(), n = tab.size();
  WeightMultiset out;
  for (int al = 0; al < r; ++al)
    for (int be = 0; be < r; ++be) {
      LinearForm shift = LinearForm::generator(n, tab.a(be)) - LinearForm::generator(n, tab.a(al));
      for (int v = 0; v < chain.n_vertices(); ++v) {
        const auto& vx = chain.vertices()[v];
        LinearForm base = shift + (chain.weight_at(c.D[be], v) - chain.weight_at(c.D[al], v)).form(tab);
        for (auto& w : nst_weights(c.Y[v][al], c.Y[v][be], vx.w1.form(tab), vx.w2.form(tab)))
          out.push_back({base + w, WeightOrigin::Vertex, v, al, be});
      }
      if (al == be) continue;
      DivisorVector diff(c.D[be].size());
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = c.D[be][i] - c.D[al][i];
      for (const auto& w : h1_weights(chain, diff)) out.push_back({shift + w.form(tab), WeightOrigin::Edge, -1, al, be});
    }
  return out;
}

WeightMultiset natural_character(const ToricChain& chain, const FixedPointConfig& c, const SymbolTable& tab) {
  check_config(chain, c, tab);
  const int r = tab.rank(), n = tab.size();
  WeightMultiset out;
  for (int be = 0; be < r; ++be) {
    LinearForm shift = LinearForm::generator(n, tab.a(be));
    for (int v = 0; v < chain.n_vertices(); ++v) {
      const auto& vx = chain.vertices()[v];
      LinearForm base = shift + chain.weight_at(c.D[be], v).form(tab);
      for (auto& w : ns_weights(c.Y[v][be], vx.w1.form(tab), vx.w2.form(tab)))
        out.push_back({base + w, WeightOrigin::Vertex, v, -1, be});
    }
    for (const auto& w : h1_weights(chain, c.D[be])) out.push_back({shift + w.form(tab), WeightOrigin::Edge, -1, -1, be});
  }
  return out;
}

}  // namespace nekrasov
