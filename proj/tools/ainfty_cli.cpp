// Command-line front end: builds associahedron data, runs verification
// suites, dumps phi tables.  Exit codes: 0 pass, 1 verification failure,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ainfty/associahedron.hpp"
#include "ainfty/engine.hpp"

using namespace ainfty;
using nlohmann::json;

namespace {

int max_n_default() {
  if (const char* env = std::getenv("AINFTY_MAX_N")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 6;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot open output file: " + out_path);
    f << text << "\n";
  }
}

int cmd_build(int n, bool with_complex, const std::string& out_path) {
  auto spec = build_spec(n);
  json doc = json::parse(spec_to_json(spec));
  if (with_complex) {
    auto K = build_complex(n);
    auto rep = verify_complex(K.complex);
    if (!rep.ok) {
      for (const auto& v : rep.violations) std::cerr << v << "\n";
      return 1;
    }
    doc["complex"] = json::parse(complex_to_json(K.complex));
  }
  emit(out_path, doc.dump(2));
  return 0;
}

json check_entry(const std::string& name, const VerifyReport& rep) {
  json j = {{"check", name}, {"pass", rep.ok}};
  if (!rep.ok) j["violations"] = rep.violations;
  return j;
}

void run_cubic(int max_n, json& reports, bool& all_pass) {
  // Small hand-built complexes plus the recursive ones.
  auto p = point_cell({rat(0), rat(0)});
  auto q = point_cell({rat(1), rat(0)});
  auto r = point_cell({rat(0), rat(1)});
  auto seg1 = join(p, q);
  auto seg2 = join(p, r);
  auto square = product(join(p, q), join(p, r));
  for (auto [name, cell] : {std::pair<std::string, CellPtr>{"segment", seg1},
                            {"square", square}}) {
    auto rep = verify_complex(face_complex(cell));
    reports.push_back(check_entry("cubic faces of " + name, rep));
    all_pass = all_pass && rep.ok;
  }
  for (int m = 2; m <= std::min(max_n, 5); ++m) {
    auto K = build_complex(m);
    auto rep = verify_complex(K.complex);
    reports.push_back(check_entry("complex K(" + std::to_string(m) + ")", rep));
    all_pass = all_pass && rep.ok;
  }
}

void run_assoc(int max_n, json& reports, bool& all_pass) {
  // Catalan vertex counts.
  long cat = 1;
  for (int m = 2; m <= std::min(max_n, 7); ++m) {
    bool ok = static_cast<long>(vertices(m).size()) == cat;
    reports.push_back(json{{"check", "vertex count K_" + std::to_string(m)},
                           {"expected", cat},
                           {"actual", vertices(m).size()},
                           {"pass", ok}});
    all_pass = all_pass && ok;
    cat = cat * 2 * (2 * m - 1) / (m + 1);  // C_m from C_{m-1}
  }
  for (int m = 2; m <= std::min(max_n, 6); ++m) {
    bool ok = build_complex(m).complex.dim() == m - 2;
    reports.push_back(json{{"check", "dim K(" + std::to_string(m) + ")"},
                           {"pass", ok}});
    all_pass = all_pass && ok;
  }
}

void run_ainfty(int max_n, const EngineConfig& cfg, json& reports,
                bool& all_pass) {
  auto add = [&](const AInftyReport& r) {
    reports.push_back(json::parse(ainfty_report_to_json(r)));
    all_pass = all_pass && r.pass;
  };
  for (int m = 2; m <= std::min(max_n, 5); ++m) add(verify_condition0(m, cfg));
  for (int m = 3; m <= std::min(max_n, 5); ++m)
    for (const auto& f : face_indices(m)) add(verify_condition1(m, f, cfg));
  add(verify_condition2prime(cfg));
  add(verify_strict_unit_failure(cfg));
  if (cfg.stable)
    for (int m = 2; m <= std::min(max_n, 5); ++m) add(verify_plateau(m, cfg));
}

int cmd_verify(const std::string& suite, int n, const EngineConfig& cfg,
               const std::string& out_path) {
  json reports = json::array();
  bool all_pass = true;
  if (suite == "cubic" || suite == "all") run_cubic(n, reports, all_pass);
  if (suite == "assoc" || suite == "all") run_assoc(n, reports, all_pass);
  if (suite == "ainfty" || suite == "all")
    run_ainfty(n, cfg, reports, all_pass);
  if (suite == "stable" || suite == "all") {
    EngineConfig scfg = cfg;
    scfg.stable = true;
    run_ainfty(n, scfg, reports, all_pass);
  }
  json doc = {{"command", "verify"},
              {"suite", suite},
              {"n", n},
              {"d", cfg.d},
              {"samples", cfg.samples},
              {"tol_point", cfg.tol_point},
              {"tol_deriv", cfg.tol_deriv},
              {"seed", cfg.seed},
              {"pass", all_pass},
              {"reports", reports}};
  emit(out_path, doc.dump(2));
  if (!all_pass)
    for (const auto& r : reports)
      if (!r.value("pass", true)) std::cerr << "FAIL " << r.dump() << "\n";
  return all_pass ? 0 : 1;
}

void enumerate_grid(int n, int den, int k, Rat partial_sum, RatVec& t,
                    json& rows) {
  if (k == n) {
    t[n - 1] = n - 1 - partial_sum;
    json row = json::array();
    json pt = json::array(), ph = json::array();
    for (const auto& x : t) pt.push_back(rat_to_string(x));
    for (const auto& x : phi(n, t).r) ph.push_back(rat_to_string(x));
    rows.push_back(json{{"t", pt}, {"phi", ph}});
    return;
  }
  // t_k ranges over multiples of 1/den in [0, k-1-partial_sum] (1-indexed k).
  Rat hi = k - 1 - partial_sum;
  for (long num = 0; rat(num, den) <= hi; ++num) {
    t[k - 1] = rat(num, den);
    enumerate_grid(n, den, k + 1, partial_sum + t[k - 1], t, rows);
  }
}

int cmd_dump_phi(int n, int den, const std::string& out_path) {
  json rows = json::array();
  RatVec t(n, Rat(0));
  if (n == 2) {
    rows.push_back(json{{"t", {"0", "1"}}, {"phi", {"1/2", "1/2"}}});
  } else {
    enumerate_grid(n, den, 2, Rat(0), t, rows);
  }
  json doc = {{"command", "dump-phi"}, {"n", n}, {"den", den}, {"rows", rows}};
  emit(out_path, doc.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"associahedron / A-infinity verification harness"};
  app.require_subcommand(1);

  int n = 4, d = 2, samples = 3, den = 4, max_n = max_n_default();
  double tol_point = 1e-12, tol_deriv = 1e-5;
  unsigned seed = 12345;
  std::string out_path, suite = "all", format = "json";
  bool with_complex = false;

  auto* build = app.add_subcommand("build", "write polytope/complex JSON");
  build->add_option("--n", n, "number of letters");
  build->add_flag("--complex", with_complex, "include the cubic complex");
  build->add_option("--out", out_path, "output file (default stdout)");
  build->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}));
  build->add_option("--max-n", max_n, "complex size cap");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite to run")
      ->check(CLI::IsMember({"cubic", "assoc", "ainfty", "stable", "all"}));
  verify->add_option("--n", n, "largest n to exercise");
  verify->add_option("--d", d, "path target dimension");
  verify->add_option("--samples", samples, "sample pairs per facet");
  verify->add_option("--tol-point", tol_point, "pointwise tolerance");
  verify->add_option("--tol-deriv", tol_deriv, "derivative tolerance");
  verify->add_option("--seed", seed, "RNG seed for path coefficients");
  verify->add_option("--out", out_path, "report file (default stdout)");
  verify->add_option("--max-n", max_n, "complex size cap");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}));

  auto* dump = app.add_subcommand("dump-phi", "tabulate phi on a grid");
  dump->add_option("--n", n, "number of letters");
  dump->add_option("--den", den, "grid denominator");
  dump->add_option("--out", out_path, "output file (default stdout)");
  dump->add_option("--max-n", max_n, "complex size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      if (n < 1 || n > max_n) throw UsageError("build: need 1 <= n <= max-n");
      return cmd_build(n, with_complex, out_path);
    }
    if (verify->parsed()) {
      if (n < 1 || n > max_n) throw UsageError("verify: need 1 <= n <= max-n");
      if (tol_point <= 0 || tol_deriv <= 0)
        throw UsageError("tolerances must be positive");
      EngineConfig cfg;
      cfg.d = d;
      cfg.samples = samples;
      cfg.tol_point = tol_point;
      cfg.tol_deriv = tol_deriv;
      cfg.seed = seed;
      return cmd_verify(suite, n, cfg, out_path);
    }
    if (dump->parsed()) {
      if (n < 2 || n > max_n) throw UsageError("dump-phi: need 2 <= n <= max-n");
      if (den < 1) throw UsageError("dump-phi: denominator must be positive");
      return cmd_dump_phi(n, den, out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
