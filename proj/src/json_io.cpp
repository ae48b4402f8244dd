#include "nekrasov/json_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nekrasov {
namespace {

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw JsonFormatError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

Json weight(const EpsWeight& w) { return Json::array({w.x1, w.x2}); }

Json reals(const std::vector<Real>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(real_to_string(x));
  return a;
}

Json direction(const Direction& d) { return Json::array({rational_string(d.x1), rational_string(d.x2)}); }

Json pert_run(const PertRun& r) {
  Json j;
  j["u0"] = real_to_string(r.u0);
  j["w0"] = real_to_string(r.w0);
  j["t"] = reals(r.t);
  j["values"] = reals(r.values);
  j["extrapolated"] = real_to_string(r.extrapolated);
  return j;
}

template <class C, class Coeff>
Json series_common(const LambdaSeries<C>& s, const SymbolTable& tab, const char* kind, Coeff coeff) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  j["rank"] = tab.rank();
  j["n_fund"] = tab.n_fund();
  j["adjoint"] = tab.has_adjoint();
  j["order"] = s.order();
  Json vars = Json::array();
  for (int i = 0; i < tab.size(); ++i) vars.push_back(tab.name(i));
  j["variables"] = vars;
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) {
    Json t;
    t["lambda_exp"] = k.lam;
    t["q_exp"] = k.q;
    t["coeff"] = coeff(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

}  // namespace

std::string real_to_string(const Real& x, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(std::max(digits, 2) - 1) << x;
  return os.str();
}

Json poly_to_json(const SparsePoly& p, int nvars) {
  Json a = Json::array();
  for (const auto& t : p.terms()) {
    std::vector<int> e(nvars);
    for (int i = 0; i < kMaxVars; ++i) {
      if (i < nvars)
        e[i] = t.m.e[i];
      else if (t.m.e[i] != 0)
        throw JsonFormatError("monomial uses a variable outside the table");
    }
    a.push_back(Json{{"exp", e}, {"c", rational_string(t.c)}});
  }
  return a;
}

SparsePoly poly_from_json(const Json& j, int nvars) {
  if (!j.is_array()) throw JsonFormatError("polynomial must be a list of monomials");
  std::vector<PolyTerm> terms;
  for (const auto& t : j) {
    const auto e = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != nvars) throw JsonFormatError("exponent vector has wrong length");
    Monomial m;
    for (int i = 0; i < nvars; ++i) {
      if (e[i] < 0) throw JsonFormatError("negative exponent");
      m = m * Monomial::var(i, e[i]);
    }
    terms.push_back(PolyTerm{m, rational_from_string(t.at("c").get<std::string>())});
  }
  return SparsePoly::from_terms(std::move(terms));
}

Json ratfunc_to_json(const RatFunc& f, int nvars) {
  Json den = Json::array();
  for (const auto& [p, e] : f.den_factors()) den.push_back(Json{{"factor", poly_to_json(p, nvars)}, {"power", e}});
  return Json{{"num", poly_to_json(f.num(), nvars)}, {"den", den}};
}

RatFunc ratfunc_from_json(const Json& j, int nvars) {
  std::vector<RatFunc::Factor> den;
  for (const auto& f : j.at("den")) {
    int e = f.at("power").get<int>();
    if (e <= 0) throw JsonFormatError("denominator power must be positive");
    den.emplace_back(poly_from_json(f.at("factor"), nvars), e);
  }
  return RatFunc::from_factors(poly_from_json(j.at("num"), nvars), std::move(den));
}

Json series_to_json(const ExactSeries& s, const SymbolTable& tab) {
  return series_common(s, tab, "exact", [&](const RatFunc& c) { return ratfunc_to_json(c, tab.size()); });
}

Json series_to_json(const NumericSeries& s, const SymbolTable& tab, int digits) {
  return series_common(s, tab, "numeric", [&](const Real& c) { return real_to_string(c, digits); });
}

ExactSeries series_from_json(const Json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw JsonFormatError("unsupported schema version");
    if (j.at("kind").get<std::string>() != "exact") throw JsonFormatError("not an exact series");
    SymbolTable tab(j.at("rank").get<int>(), j.at("n_fund").get<int>(), j.at("adjoint").get<bool>());
    const auto vars = j.at("variables").get<std::vector<std::string>>();
    if (static_cast<int>(vars.size()) != tab.size()) throw JsonFormatError("variable list does not match the table");
    for (int i = 0; i < tab.size(); ++i)
      if (vars[i] != tab.name(i)) throw JsonFormatError("unexpected variable '" + vars[i] + "'");
    ExactSeries s(j.at("order").get<int>());
    for (const auto& t : j.at("terms"))
      s.add(t.at("lambda_exp").get<int>(), t.at("q_exp").get<std::vector<int>>(),
            ratfunc_from_json(t.at("coeff"), tab.size()));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError(std::string("malformed series: ") + e.what());
  }
}

Json surface_to_json(const ToricChain& chain) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["name"] = chain.name();
  Json vs = Json::array();
  for (const auto& v : chain.vertices()) vs.push_back(Json{{"w1", weight(v.w1)}, {"w2", weight(v.w2)}});
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : chain.edges()) {
    Json at = Json::array();
    for (const auto& w : e.weights_at) at.push_back(weight(w));
    es.push_back(Json{{"self_intersection", e.self_intersection}, {"weights_at", at}});
  }
  j["edges"] = es;
  j["intersections"] = chain.intersections();
  const auto& l = chain.linf();
  j["linf"] = Json{{"w", weight(l.w)}, {"u", weight(l.u)}, {"k", l.k}};
  return j;
}

Json report_to_json(const ConjectureReport& rep) {
  const SymbolTable tab = TheorySpec::parse(rep.theory).symbols(rep.rank);
  std::vector<std::string> names;
  for (int i = 0; i < tab.size(); ++i) names.push_back(tab.name(i));

  Json j;
  j["schema"] = kSchemaVersion;
  j["check"] = "conjecture";
  Json in;
  in["surface"] = rep.surface;
  in["rank"] = rep.rank;
  in["d"] = rep.d;
  in["theory"] = rep.theory;
  in["mode"] = rep.mode;
  in["order"] = rep.order;
  Json dirs = Json::array();
  for (const auto& d : rep.directions) dirs.push_back(direction(d));
  in["directions"] = dirs;
  if (!rep.sample_points.empty()) {
    Json pts = Json::array();
    for (const auto& p : rep.sample_points) pts.push_back(reals(p));
    in["sample_points"] = pts;
  }
  j["inputs"] = in;
  j["k"] = rep.k;
  j["dimension_offset"] = rep.dimension_offset;
  j["lambda_offset"] = rep.lambda_offset;
  j["leading_valuation"] = rep.leading_valuation;

  Json cs = Json::array();
  for (const auto& c : rep.coefficients) {
    Json e;
    e["lambda_exp"] = c.lam;
    e["valuation"] = c.valuation;
    e["aux_valuation"] = c.aux_valuation;
    e["analytic"] = c.analytic;
    e["aux_analytic"] = c.aux_analytic;
    e["direction_independent"] = c.direction_independent;
    if (rep.mode == "exact") {
      e["value"] = c.limit_surface.to_string(names);
      e["target"] = (c.limit_c2 * Rational(rep.k)).to_string(names);
      e["rel_error"] = c.k_scaling ? Json(0) : Json(nullptr);
    } else {
      Json rel = Json::array(), tgt = Json::array();
      for (std::size_t s = 0; s < c.numeric_surface.size(); ++s) {
        double t = c.numeric_c2[s] * static_cast<double>(rep.k);
        tgt.push_back(t);
        rel.push_back(t == 0 ? std::abs(c.numeric_surface[s]) : std::abs(c.numeric_surface[s] - t) / std::abs(t));
      }
      e["value"] = c.numeric_surface;
      e["target"] = tgt;
      e["rel_error"] = rel;
    }
    e["pass"] = c.analytic && c.aux_analytic && c.k_scaling;
    cs.push_back(e);
  }
  j["coefficients"] = cs;
  j["c2_analytic"] = rep.c2_analytic;
  j["analytic"] = rep.analytic;
  j["k_scaling"] = rep.k_scaling;
  j["aux_analytic"] = rep.aux_analytic;
  j["pass"] = rep.pass();
  return j;
}

Json report_to_json(const PertCheck& chk) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["check"] = "pert";
  j["inputs"] = Json{{"quantity", chk.quantity}, {"kernel", chk.kernel}, {"k", chk.k},
                     {"x", real_to_string(chk.x)}, {"lambda", real_to_string(chk.lambda)}};
  Json runs = Json::array();
  for (const auto& r : chk.runs) runs.push_back(pert_run(r));
  j["runs"] = runs;
  j["value"] = real_to_string(chk.limit);
  j["target"] = real_to_string(chk.target);
  j["rel_error"] = real_to_string(chk.rel_error, 6);
  j["tol"] = chk.tol;
  j["pass"] = chk.pass;
  return j;
}

Json report_to_json(const SWComparison& cmp) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["check"] = "sw";
  j["inputs"] = Json{{"order", cmp.order}};
  j["sign"] = cmp.sign;
  Json rows = Json::array();
  for (const auto& r : cmp.rows) {
    Json e;
    e["inputs"] = Json{{"k", r.k}, {"lambda_exp", r.lambda_power}, {"a", real_to_string(r.a)}};
    e["value"] = real_to_string(r.sw);
    e["target"] = real_to_string(r.localization);
    e["rel_error"] = real_to_string(r.rel_error, 6);
    e["tol"] = r.tol;
    e["pass"] = r.pass;
    rows.push_back(e);
  }
  j["rows"] = rows;
  j["pass"] = cmp.pass;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nekrasov
