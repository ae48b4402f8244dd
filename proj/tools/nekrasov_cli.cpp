// Command-line front end. Exit codes: 0 pass, 1 failed check, 2 usage or precondition error.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nekrasov/json_io.hpp"
#include "nekrasov/parallel.hpp"
#include "nekrasov/selftest.hpp"

using namespace nekrasov;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Manifest {
  std::string surface = "C2";
  int rank = 1;
  std::string d;
  std::string theory = "pure";
  int order = 4;
  std::string mode = "exact";
  std::string directions;
  std::string point;
  std::string out;
  int threads = 1;
  double tol = 0;  // 0 keeps the check's default
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string p; std::getline(ss, p, sep);)
    if (!p.empty()) parts.push_back(p);
  return parts;
}

long to_long(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// "e1:m1,e2:m2" (edge index : multiplicity) or a plain comma list of per-edge multiplicities.
DivisorVector parse_divisor(const std::string& text, const ToricChain& chain) {
  DivisorVector d = chain.zero_divisor();
  if (text.empty()) return d;
  const auto parts = split(text, ',');
  if (text.find(':') == std::string::npos) {
    if (static_cast<int>(parts.size()) != chain.n_edges())
      throw UsageError("--d lists " + std::to_string(parts.size()) + " entries but the surface has " +
                       std::to_string(chain.n_edges()) + " edges");
    for (std::size_t i = 0; i < parts.size(); ++i) d[i] = to_long(parts[i]);
    return d;
  }
  for (const auto& p : parts) {
    const auto kv = split(p, ':');
    if (kv.size() != 2) throw UsageError("--d entry '" + p + "' is not edge:multiplicity");
    const long e = to_long(kv[0]);
    if (e < 0 || e >= chain.n_edges()) throw UsageError("--d edge index " + kv[0] + " out of range");
    d[e] += to_long(kv[1]);
  }
  return d;
}

std::vector<Direction> parse_directions(const std::string& text) {
  std::vector<Direction> dirs;
  for (const auto& p : split(text, ',')) {
    const auto xy = split(p, ':');
    if (xy.size() != 2) throw UsageError("--directions entry '" + p + "' is not x1:x2");
    dirs.push_back({parse_rational(xy[0]), parse_rational(xy[1])});
  }
  return dirs;
}

struct Mode {
  bool numeric = false;
  int digits = 40;
};

Mode parse_mode(const std::string& text) {
  if (text == "exact") return {};
  if (text == "numeric") return {true, 40};
  if (text.rfind("numeric:", 0) == 0) {
    const long digits = to_long(text.substr(8));
    if (digits < 1 || digits > 50) throw UsageError("numeric digits must lie in 1..50 (working precision is 50)");
    return {true, static_cast<int>(digits)};
  }
  throw UsageError("--mode must be exact or numeric:DIGITS");
}

void emit(const Json& j, const std::string& out) {
  const std::string text = dump(j);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

int cmd_surface_list() {
  for (const char* n : {"C2", "F1", "F2", "F3"}) std::cout << n << "\n";
  std::cout << "F<k> for any k >= 1; a JSON surface file path is accepted wherever a name is\n";
  return 0;
}

int cmd_surface_show(const std::string& name) {
  const auto chain = resolve_surface(name);
  Json j = surface_to_json(chain);
  Json fps = Json::array();
  for (const auto& p : chain.fixed_points(true))
    fps.push_back(Json::array({Json::array({p.w1.x1, p.w1.x2}), Json::array({p.w2.x1, p.w2.x2})}));
  j["fixed_points"] = fps;
  std::cout << dump(j);
  return 0;
}

int cmd_surface_validate(const std::string& path) {
  {
    std::ifstream probe(path);
    if (!probe) throw UsageError("cannot read " + path);
  }
  try {
    const auto chain = load_surface(path);
    std::cout << dump(Json{{"schema", kSchemaVersion}, {"path", path}, {"valid", true}, {"edges", chain.n_edges()}});
    return 0;
  } catch (const SurfaceError& e) {
    std::cout << dump(Json{{"schema", kSchemaVersion}, {"path", path}, {"valid", false}, {"error", e.what()}});
    std::cerr << "invalid surface: " << e.what() << "\n";
    return 1;
  }
}

int cmd_zinst(const Manifest& m) {
  const auto chain = resolve_surface(m.surface);
  const auto theory = TheorySpec::parse(m.theory);
  const auto tab = theory.symbols(m.rank);
  const auto d = parse_divisor(m.d, chain);
  const Mode mode = parse_mode(m.mode);
  if (m.rank < 1) throw UsageError("--rank must be positive");
  if (m.order < 0) throw UsageError("--order must be non-negative");
  if (!mode.numeric) {
    if (!theory.exact()) throw UsageError("theory " + m.theory + " needs --mode numeric and --point");
    emit(series_to_json(z_master(chain, m.rank, d, theory, tab, m.order), tab), m.out);
    return 0;
  }
  const auto vals = split(m.point, ',');
  if (static_cast<int>(vals.size()) != tab.size())
    throw UsageError("--point needs " + std::to_string(tab.size()) + " values (eps1, eps2, a, masses)");
  std::vector<Real> p;
  for (const auto& v : vals) p.push_back(to_real(parse_rational(v)));
  Json j = series_to_json(z_master_numeric(chain, m.rank, d, theory, tab, m.order, p), tab, mode.digits);
  j["point"] = vals;
  emit(j, m.out);
  return 0;
}

int cmd_check_conjecture(const Manifest& m, int n_directions) {
  const auto chain = resolve_surface(m.surface);
  const auto theory = TheorySpec::parse(m.theory);
  const auto d = parse_divisor(m.d, chain);
  const Mode mode = parse_mode(m.mode);
  if (!mode.numeric && !theory.exact()) throw UsageError("theory " + m.theory + " has no exact mode");
  ConjectureOptions opt;
  opt.numeric = mode.numeric;
  opt.directions = parse_directions(m.directions);
  opt.n_directions = n_directions;
  if (m.tol > 0) opt.rel_tol = m.tol;
  const auto rep = check_instanton_conjecture(chain, m.rank, d, theory, m.order, opt);
  emit(report_to_json(rep), m.out);
  return rep.pass() ? 0 : 1;
}

int cmd_check_pert(const Manifest& m, long k, const std::string& x, const std::string& lambda) {
  const auto kernel = TheorySpec::parse(m.theory);
  const Real xr = to_real(parse_rational(x)), lr = to_real(parse_rational(lambda));
  PertCheck chk = k == 0 ? check_gamma_limit(xr, lr, kernel, m.tol > 0 ? m.tol : 1e-6)
                         : check_pert_limit(k, xr, lr, kernel, m.tol > 0 ? m.tol : 1e-5);
  emit(report_to_json(chk), m.out);
  return chk.pass ? 0 : 1;
}

int cmd_check_sw(const Manifest& m, const std::string& a_list, double tol8) {
  std::vector<Real> as;
  for (const auto& a : split(a_list, ',')) as.push_back(to_real(parse_rational(a)));
  const auto cmp = compare_with_localization(m.order, as, m.tol > 0 ? m.tol : 1e-6, tol8);
  emit(report_to_json(cmp), m.out);
  return cmp.pass ? 0 : 1;
}

int cmd_check_selftest(const Manifest& m, const std::vector<std::string>& only) {
  const Json j = run_selftest(only);
  emit(j, m.out);
  return j["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instanton partition functions on toric surfaces"};
  app.require_subcommand(1);
  Manifest m;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--surface", m.surface, "built-in name (C2, F<k>) or JSON surface file");
    c->add_option("--rank", m.rank, "gauge rank r");
    c->add_option("--d", m.d, "divisor class: e1:m1,e2:m2 or per-edge list");
    c->add_option("--theory", m.theory, "pure | fund:NF | adjoint | 5d:BETA | chiy:Y | elliptic:Y,Q");
    c->add_option("--order", m.order, "Lambda order N");
    c->add_option("--mode", m.mode, "exact | numeric:DIGITS");
    c->add_option("--out", m.out, "output path (default stdout)");
    c->add_option("--threads", m.threads, "worker threads")->check(CLI::Range(1, 256));
  };

  auto* surface = app.add_subcommand("surface", "surface catalogue");
  surface->require_subcommand(1);
  surface->add_subcommand("list", "built-in surfaces");
  std::string show_name, validate_path;
  surface->add_subcommand("show", "weights and intersection data")->add_option("name", show_name)->required();
  surface->add_subcommand("validate", "check a JSON surface file")->add_option("path", validate_path)->required();

  auto* zinst = app.add_subcommand("zinst", "instanton partition function series");
  add_common(zinst);
  zinst->add_option("--point", m.point, "numeric mode: eps1,eps2,a...,masses as rationals");

  auto* check = app.add_subcommand("check", "run a check and report");
  check->require_subcommand(1);
  int n_dirs = 2;
  auto* conj = check->add_subcommand("conjecture", "analyticity and k-scaling of the prepotential");
  add_common(conj);
  conj->add_option("--directions", m.directions, "candidate directions x1:x2,...");
  conj->add_option("--n-directions", n_dirs, "directions required")->check(CLI::PositiveNumber);
  conj->add_option("--tol", m.tol, "relative tolerance in numeric mode (default 1e-6)");

  long k = 1;
  std::string x = "1", lambda = "1";
  auto* pert = check->add_subcommand("pert", "perturbative limit; --k 0 checks the gamma function alone");
  add_common(pert);
  pert->add_option("--k", k, "self-intersection of the line at infinity")->check(CLI::Range(0, 64));
  pert->add_option("--x", x, "argument (rational)");
  pert->add_option("--lambda", lambda, "scale (rational)");
  pert->add_option("--tol", m.tol, "relative tolerance (default 1e-6 for k = 0, else 1e-5)");

  std::string a_list = "1,3/2";
  double tol8 = 1e-5;
  int sw_order = 2;
  auto* sw = check->add_subcommand("sw", "Seiberg-Witten period fit against the localization limits");
  sw->add_option("--order", sw_order, "number of instanton orders compared")->check(CLI::Range(1, 2));
  sw->add_option("--out", m.out, "output path (default stdout)");
  sw->add_option("--threads", m.threads, "worker threads")->check(CLI::Range(1, 256));
  sw->add_option("--a", a_list, "comma list of a values");
  sw->add_option("--tol", m.tol, "relative tolerance at Lambda^4 (default 1e-6)");
  sw->add_option("--tol8", tol8, "relative tolerance at Lambda^8");

  std::vector<std::string> only;
  auto* self = check->add_subcommand("selftest", "invariant battery");
  add_common(self);
  self->add_option("--only", only, "run only the named entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    set_thread_count(m.threads);
    if (surface->parsed()) {
      if (surface->got_subcommand("list")) return cmd_surface_list();
      if (surface->got_subcommand("show")) return cmd_surface_show(show_name);
      return cmd_surface_validate(validate_path);
    }
    if (zinst->parsed()) return cmd_zinst(m);
    if (conj->parsed()) return cmd_check_conjecture(m, n_dirs);
    if (pert->parsed()) return cmd_check_pert(m, k, x, lambda);
    if (sw->parsed()) {
      m.order = sw_order;
      return cmd_check_sw(m, a_list, tol8);
    }
    if (self->parsed()) return cmd_check_selftest(m, only);
  } catch (const VanishingPartitionFunction& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
