// Acceptance run: one PASS/FAIL line per criterion, with detail lines indented below it.
// Exit status is nonzero when a criterion fails that is not listed in kKnownFailures.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "nekrasov/json_io.hpp"
#include "nekrasov/selftest.hpp"

using namespace nekrasov;

namespace {

// chi_y at y = 1 counts fixed points; it cannot reproduce the pure sum (see README).
const std::set<std::string> kKnownFailures = {"8b"};

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

std::string fmt(const Real& x, int digits = 3) { return real_to_string(x, digits); }

int failures_unexpected = 0;
int failures_known = 0;

void criterion(const std::string& id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs <= budget_s;
  const bool pass = o.pass && in_time;
  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << id << " " << title << ": " << o.summary << " (" << std::fixed
       << std::setprecision(2) << secs << " s, budget " << budget_s << " s" << (in_time ? "" : ", over budget")
       << ")";
  if (!pass) {
    if (kKnownFailures.count(id)) {
      line << " [known]";
      ++failures_known;
    } else {
      ++failures_unexpected;
    }
  }
  std::cout << line.str() << "\n";
  for (const auto& d : o.details) std::cout << "       " << d << "\n";
  std::cout.flush();
}

Outcome from_item(const SelftestItem& it) {
  return {it.pass, it.value.dump() + " vs " + it.target.dump(), {"inputs " + it.inputs.dump()}};
}

std::string d_name(const DivisorVector& d) { return d[0] == 0 ? "0" : "l0"; }

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Criteria 5 and 9 share one set of conjecture runs.
struct ConjectureRun {
  std::string label;
  bool applicable = true;
  std::string note;
  ConjectureReport rep;
  bool limits_match_c2 = true;
};

std::vector<ConjectureRun> conjecture_runs() {
  std::vector<ConjectureRun> runs;
  for (const char* s : {"F1", "F2"})
    for (const DivisorVector& d : {DivisorVector{0}, DivisorVector{1}})
      for (const char* th : {"pure", "fund:1", "fund:2", "adjoint"}) {
        ConjectureRun run;
        const auto theory = TheorySpec::parse(th);
        const int order = theory.kind == TheoryKind::Pure ? 8 : 4;
        run.label = std::string(s) + " d=" + d_name(d) + " " + th + " order " + std::to_string(order);
        try {
          run.rep = check_instanton_conjecture(builtin_surface(s), 2, d, theory, order);
          const auto c2 = c2_limit(2, theory, theory.symbols(2), order);
          for (const auto& c : run.rep.coefficients)
            if (!(c.limit_surface == c2[c.lam] * Rational(run.rep.k))) run.limits_match_c2 = false;
        } catch (const VanishingPartitionFunction& e) {
          run.applicable = false;
          run.note = e.what();
        }
        runs.push_back(std::move(run));
      }
  return runs;
}

}  // namespace

int main() {
  std::cout << std::unitbuf;
  criterion("1", "vertex-character oracle", 10, [] { return from_item(run_selftest_item("vertex_character")); });
  criterion("2", "edge-character oracle", 5, [] { return from_item(run_selftest_item("edge_character")); });
  criterion("3", "dimension and rank laws", 30, [] { return from_item(run_selftest_item("dimension_rank_laws")); });
  criterion("4", "rank-1 consistency through Lambda^12", 10, [] {
    auto it = run_selftest_item("rank_one");
    return Outcome{it.pass, "prepotential " + it.value["prepotential"].dump(), {}};
  });

  std::vector<ConjectureRun> runs;
  criterion("5", "instanton conjecture, exact", 600, [&] {
    runs = conjecture_runs();
    Outcome o;
    o.pass = true;
    int checked = 0, na = 0;
    for (const auto& r : runs) {
      if (!r.applicable) {
        ++na;
        o.details.push_back("n/a  " + r.label + ": " + r.note);
        continue;
      }
      ++checked;
      const bool ok = r.rep.c2_analytic && r.rep.analytic && r.rep.k_scaling && r.limits_match_c2;
      o.pass = o.pass && ok;
      std::string lims;
      const Json rj = report_to_json(r.rep);
      for (const auto& c : rj["coefficients"])
        if (c["value"] != "0") lims += " L^" + c["lambda_exp"].dump() + "=" + c["value"].get<std::string>();
      o.details.push_back(std::string(ok ? "pass " : "FAIL ") + r.label + " k=" + std::to_string(r.rep.k) +
                          " offset=" + std::to_string(r.rep.lambda_offset) + lims);
    }
    o.summary = std::to_string(checked) + " configurations checked, " + std::to_string(na) +
                " with identically vanishing Z (not applicable)";
    return o;
  });

  criterion("6", "Seiberg-Witten cross-oracle", 120, [] {
    const auto cmp = compare_with_localization(2, {Real(1), Real(3) / 2});
    Outcome o{cmp.pass, "sign " + std::to_string(cmp.sign) + ", " + std::to_string(cmp.rows.size()) + " rows", {}};
    for (const auto& r : cmp.rows)
      o.details.push_back("k=" + std::to_string(r.k) + " L^" + std::to_string(r.lambda_power) + " a=" + fmt(r.a) +
                          " rel " + fmt(r.rel_error) + " tol " + fmt(Real(r.tol), 2));
    return o;
  });

  criterion("7", "perturbative limits", 60, [] {
    const auto pure = TheorySpec::parse("pure");
    Outcome o;
    o.pass = true;
    for (const Real& x : {Real(1), Real(3) / 2, Real(2)})
      for (int l : {1, 2}) {
        auto c = check_gamma_limit(x, Real(l), pure);
        o.pass = o.pass && c.pass;
        o.details.push_back("gamma x=" + fmt(x, 2) + " Lambda=" + std::to_string(l) + " rel " + fmt(c.rel_error));
      }
    for (long k = 1; k <= 3; ++k) {
      auto c = check_pert_limit(k, Real(1), Real(1), pure);
      o.pass = o.pass && c.pass;
      o.details.push_back("f_k k=" + std::to_string(k) + " limit " + fmt(c.limit, 12) + " target " + fmt(c.target, 12) +
                          " rel " + fmt(c.rel_error));
    }
    o.summary = "gamma to 1e-6, f_k to 1e-5";
    return o;
  });

  const std::vector<std::vector<Real>> points = {{Real(3) / 10, Real(-7) / 10, Real(1), Real(-1)},
                                                 {Real(1) / 2, Real(-1) / 3, Real(3) / 4, Real(-5) / 4},
                                                 {Real(-2) / 5, Real(9) / 10, Real(2), Real(1) / 2}};
  auto worst_rel = [&](const std::string& theory) {
    const SymbolTable tab(2);
    Real worst = 0;
    for (const auto& p : points) {
      auto a = z_c2_numeric(2, TheorySpec::parse(theory), tab, 4, p);
      auto b = z_c2_numeric(2, TheorySpec::parse("pure"), tab, 4, p);
      for (int lam = 1; lam <= 4; ++lam) {
        const Real ref = b.coeff(lam, Real(0)), got = a.coeff(lam, Real(0));
        const Real rel = ref == 0 ? abs(got) : abs(got - ref) / abs(ref);
        if (rel > worst) worst = rel;
      }
    }
    return worst;
  };
  criterion("8a", "5d degeneration at beta = 1/1000", 60, [&] {
    const Real w = worst_rel("5d:1/1000");
    return Outcome{w < Real("1e-4"), "max relative deviation " + fmt(w) + " over 3 points through Lambda^4", {}};
  });
  criterion("8b", "chi_y at y = 1 against pure", 60, [&] {
    const Real w = worst_rel("chiy:1");
    return Outcome{w < Real("1e-20"), "max relative deviation " + fmt(w) + " (target 1e-20)",
                   {"with f(x) = x every fixed point contributes 1, so the series counts fixed points"}};
  });

  criterion("9", "combined logarithm analytic on criterion 5 runs", 1, [&] {
    Outcome o;
    o.pass = !runs.empty();
    int n = 0;
    for (const auto& r : runs) {
      if (!r.applicable) continue;
      ++n;
      if (!r.rep.aux_analytic) {
        o.pass = false;
        o.details.push_back("FAIL " + r.label);
      }
    }
    o.summary = std::to_string(n) + " configurations";
    return o;
  });

  criterion("10", "selftest determinism across thread counts", 300, [] {
    const std::string dir = "/tmp/nekrasov_acceptance_" + std::to_string(::getpid());
    run("mkdir -p " + dir);
    const std::string a = dir + "/t1.json", b = dir + "/t8.json";
    const int ca = run(std::string(CLI_PATH) + " check selftest --threads 1 --out " + a);
    const int cb = run(std::string(CLI_PATH) + " check selftest --threads 8 --out " + b);
    const std::string ta = slurp(a), tb = slurp(b);
    run("rm -rf " + dir);
    const bool same = !ta.empty() && ta == tb;
    return Outcome{same && ca == 0 && cb == 0,
                   std::string(same ? "byte-identical" : "reports differ") + ", exit codes " + std::to_string(ca) +
                       "/" + std::to_string(cb) + ", " + std::to_string(ta.size()) + " bytes",
                   {}};
  });

  std::cout << "unexpected failures: " << failures_unexpected << ", known failures: " << failures_known << "\n";
  return failures_unexpected == 0 ? 0 : 1;
}
