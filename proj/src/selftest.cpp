#include "nekrasov/selftest.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "nekrasov/parallel.hpp"

namespace nekrasov {
namespace {

using Char = std::map<std::pair<long, long>, long>;

std::vector<std::pair<long, long>> cells(const Partition& p) {
  std::vector<std::pair<long, long>> v;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.row(i); ++j) v.emplace_back(i, j);
  return v;
}

// Expansion of Q_S t1 t2 + Q_T(1/t) - Q_S(t) Q_T(1/t) (1 - t1)(1 - t2), Q_P = sum_cells t1^i t2^j.
Char vertex_character_by_expansion(const Partition& S, const Partition& T) {
  Char c;
  for (auto [x, y] : cells(S)) c[{x + 1, y + 1}] += 1;
  for (auto [x, y] : cells(T)) c[{-x, -y}] += 1;
  for (auto [x, y] : cells(S))
    for (auto [u, v] : cells(T)) {
      const long px = x - u, py = y - v;
      c[{px, py}] -= 1;
      c[{px + 1, py}] += 1;
      c[{px, py + 1}] += 1;
      c[{px + 1, py + 1}] -= 1;
    }
  Char out;
  for (const auto& [k, v] : c)
    if (v) out[k] = v;
  return out;
}

SelftestItem vertex_character() {
  SelftestItem it;
  it.name = "vertex_character";
  const SymbolTable tab(1);
  const auto e1 = LinearForm::eps(tab.size(), 1, 0), e2 = LinearForm::eps(tab.size(), 0, 1);
  std::vector<Partition> ps;
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : partitions_of(n)) ps.push_back(p);
  long pairs = 0, mismatches = 0;
  for (const auto& S : ps)
    for (const auto& T : ps) {
      Char got;
      for (const auto& w : nst_weights(S, T, e1, e2)) got[{w[0].get_num().get_si(), w[1].get_num().get_si()}] += 1;
      ++pairs;
      if (got != vertex_character_by_expansion(S, T)) ++mismatches;
    }
  it.inputs = Json{{"max_size", 4}, {"pairs", pairs}};
  it.value = mismatches;
  it.target = 0;
  it.pass = mismatches == 0;
  return it;
}

SelftestItem edge_character() {
  SelftestItem it;
  it.name = "edge_character";
  long cases = 0, shape = 0, count = 0;
  for (long k = 1; k <= 3; ++k) {
    const auto s = builtin_surface("F" + std::to_string(k));
    for (long dd = -4; dd <= 4; ++dd) {
      const DivisorVector D{-dd};
      const auto ch = h1_character(s, D);
      ++cases;
      if (!(ch == edge_character_closed_form_Fk(k, dd))) ++shape;
      long total = 0;
      for (const auto& [e, c] : ch.coeffs) total += c;
      if (2 * total != -(s.dot(D, D) + s.c1_dot(D))) ++count;
    }
  }
  it.inputs = Json{{"surfaces", {"F1", "F2", "F3"}}, {"max_difference", 4}, {"cases", cases}};
  it.value = Json{{"closed_form_mismatches", shape}, {"count_mismatches", count}};
  it.target = Json{{"closed_form_mismatches", 0}, {"count_mismatches", 0}};
  it.pass = shape == 0 && count == 0;
  return it;
}

FixedPointConfig random_config(const ToricChain& s, int r, std::mt19937& gen) {
  std::uniform_int_distribution<int> dd(-2, 2), size(0, 3);
  FixedPointConfig c;
  for (int a = 0; a < r; ++a) {
    DivisorVector D(s.n_edges());
    for (auto& x : D) x = dd(gen);
    c.D.push_back(D);
  }
  for (int v = 0; v < s.n_vertices(); ++v) {
    PartitionTuple t;
    for (int a = 0; a < r; ++a) {
      const auto& ps = partitions_of(size(gen));
      t.push_back(ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(gen)]);
    }
    c.Y.push_back(t);
  }
  return c;
}

SelftestItem dimension_rank_laws() {
  SelftestItem it;
  it.name = "dimension_rank_laws";
  std::mt19937 gen(4711);
  const int trials = 200;
  long dim_bad = 0, rank_bad = 0, zero_weights = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const auto s = builtin_surface(trial % 2 == 0 ? "F1" : "F2");
    const int r = 1 + trial % 3;
    const SymbolTable tab(r);
    const auto c = random_config(s, r, gen);
    const long n = config_instanton_number(s, c);
    const DivisorVector d = config_total_divisor(c);
    const auto T = tangent_character(s, c, tab);
    const auto V = natural_character(s, c, tab);
    if (static_cast<long>(T.size()) != 2 * r * n + (1 - r) * s.dot(d, d)) ++dim_bad;
    if (2 * static_cast<long>(V.size()) != 2 * n - (s.dot(d, d) + s.c1_dot(d))) ++rank_bad;
    for (const auto& w : T)
      if (w.form.is_zero()) ++zero_weights;
  }
  it.inputs = Json{{"surfaces", {"F1", "F2"}}, {"configurations", trials}, {"seed", 4711}};
  it.value = Json{{"dimension_mismatches", dim_bad}, {"rank_mismatches", rank_bad}, {"zero_tangent_weights", zero_weights}};
  it.target = Json{{"dimension_mismatches", 0}, {"rank_mismatches", 0}, {"zero_tangent_weights", 0}};
  it.pass = dim_bad == 0 && rank_bad == 0 && zero_weights == 0;
  return it;
}

SelftestItem rank_one() {
  SelftestItem it;
  it.name = "rank_one";
  const int order = 12;
  const auto pure = TheorySpec::parse("pure");
  const SymbolTable tab = pure.symbols(1);
  const auto z = z_c2(1, pure, tab, order);
  const RatFunc e1e2(SparsePoly::var(tab.eps1()) * SparsePoly::var(tab.eps2()));
  // Z = exp(Lambda^2 / (eps1 eps2)) coefficient by coefficient.
  long z_bad = 0;
  RatFunc term(1);
  for (int lam = 0; lam <= order; ++lam) {
    RatFunc expect = lam % 2 ? RatFunc() : term;
    if (lam % 2 == 0) term = term / e1e2 * Rational(frac(1, lam / 2 + 1));
    if (!(z.coeff(lam, RatFunc()) == expect)) ++z_bad;
  }
  const auto L = series_log(z, RatFunc(), [](const RatFunc& c) { return c == RatFunc(1); });
  Json f = Json::array();
  long f_bad = 0;
  for (int lam = 1; lam <= order; ++lam) {
    RatFunc c = -(e1e2 * L.coeff(lam, RatFunc()));
    const RatFunc expect = lam == 2 ? RatFunc(-1) : RatFunc();
    if (!(c == expect)) ++f_bad;
    f.push_back(c.to_string({"eps1", "eps2", "a1"}));
  }
  it.inputs = Json{{"rank", 1}, {"theory", "pure"}, {"order", order}};
  it.value = Json{{"prepotential", f}, {"exponential_mismatches", z_bad}};
  it.target = Json{{"prepotential", "-1 at Lambda^2, 0 elsewhere"}, {"exponential_mismatches", 0}};
  it.pass = z_bad == 0 && f_bad == 0;
  return it;
}

SelftestItem conjecture(const std::string& surface) {
  SelftestItem it;
  it.name = "conjecture_" + surface + "_pure";
  const auto rep = check_instanton_conjecture(builtin_surface(surface), 2, {0}, TheorySpec::parse("pure"), 4);
  Json rj = report_to_json(rep);
  it.inputs = rj["inputs"];
  Json vals = Json::array(), tgts = Json::array();
  for (const auto& c : rj["coefficients"]) {
    vals.push_back(c["value"]);
    tgts.push_back(c["target"]);
  }
  it.value = vals;
  it.target = tgts;
  it.pass = rep.pass();
  return it;
}

SelftestItem from_pert(const std::string& name, const PertCheck& chk) {
  SelftestItem it;
  it.name = name;
  Json rj = report_to_json(chk);
  it.inputs = rj["inputs"];
  it.value = rj["value"];
  it.target = rj["target"];
  it.pass = chk.pass;
  return it;
}

SelftestItem five_d() {
  SelftestItem it;
  it.name = "five_d_degeneration";
  const SymbolTable tab(2);
  const auto pure = TheorySpec::parse("pure"), fived = TheorySpec::parse("5d:1/1000");
  const std::vector<std::vector<Real>> points = {
      {Real(3) / 10, Real(-7) / 10, Real(1), Real(-1)},
      {Real(1) / 2, Real(-1) / 3, Real(3) / 4, Real(-5) / 4},
      {Real(-2) / 5, Real(9) / 10, Real(2), Real(1) / 2}};
  Real worst = 0;
  Json pts = Json::array();
  for (const auto& p : points) {
    const auto a = z_c2_numeric(2, fived, tab, 4, p), b = z_c2_numeric(2, pure, tab, 4, p);
    for (int lam = 1; lam <= 4; ++lam) {
      const Real ref = b.coeff(lam, Real(0)), got = a.coeff(lam, Real(0));
      const Real rel = ref == 0 ? abs(got) : abs(got - ref) / abs(ref);
      if (rel > worst) worst = rel;
    }
    Json pj = Json::array();
    for (const auto& x : p) pj.push_back(real_to_string(x, 10));
    pts.push_back(pj);
  }
  it.inputs = Json{{"theory", "5d:1/1000"}, {"order", 4}, {"points", pts}};
  it.value = real_to_string(worst, 6);
  it.target = "below 1e-4";
  it.pass = worst < Real("1e-4");
  return it;
}

SelftestItem sw() {
  SelftestItem it;
  it.name = "sw_comparison";
  const auto cmp = compare_with_localization(2, {Real(1), Real(3) / 2});
  Json rj = report_to_json(cmp);
  it.inputs = rj["inputs"];
  Json vals = Json::array(), tgts = Json::array();
  for (const auto& r : rj["rows"]) {
    vals.push_back(r["value"]);
    tgts.push_back(r["target"]);
  }
  it.value = vals;
  it.target = tgts;
  it.pass = cmp.pass;
  return it;
}

}  // namespace

std::vector<std::string> selftest_names() {
  return {"vertex_character", "edge_character", "dimension_rank_laws", "rank_one", "conjecture_F1_pure",
          "conjecture_F2_pure", "gamma_limit", "pert_limit_k1", "pert_limit_k2", "pert_limit_k3",
          "five_d_degeneration", "sw_comparison"};
}

SelftestItem run_selftest_item(const std::string& name) {
  const auto pure = TheorySpec::parse("pure");
  if (name == "vertex_character") return vertex_character();
  if (name == "edge_character") return edge_character();
  if (name == "dimension_rank_laws") return dimension_rank_laws();
  if (name == "rank_one") return rank_one();
  if (name == "conjecture_F1_pure") return conjecture("F1");
  if (name == "conjecture_F2_pure") return conjecture("F2");
  if (name == "gamma_limit") return from_pert(name, check_gamma_limit(Real(1), Real(1), pure));
  for (long k = 1; k <= 3; ++k)
    if (name == "pert_limit_k" + std::to_string(k)) return from_pert(name, check_pert_limit(k, Real(1), Real(1), pure));
  if (name == "five_d_degeneration") return five_d();
  if (name == "sw_comparison") return sw();
  throw std::invalid_argument("unknown selftest entry '" + name + "'");
}

Json run_selftest(const std::vector<std::string>& only) {
  const auto names = only.empty() ? selftest_names() : only;
  std::vector<SelftestItem> items(names.size());
  parallel_for(names.size(), [&](std::size_t i) { items[i] = run_selftest_item(names[i]); });
  Json j;
  j["schema"] = kSchemaVersion;
  j["check"] = "selftest";
  Json arr = Json::array();
  bool pass = true;
  for (const auto& it : items) {
    arr.push_back(Json{{"name", it.name}, {"inputs", it.inputs}, {"value", it.value}, {"target", it.target},
                       {"pass", it.pass}});
    pass = pass && it.pass;
  }
  j["items"] = arr;
  j["pass"] = pass;
  return j;
}

}  // namespace nekrasov
