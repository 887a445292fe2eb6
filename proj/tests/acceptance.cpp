// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 12 shells out to the CLI binary.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "ainfty/engine.hpp"

using namespace ainfty;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what
            << "\n";
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool criterion1() {
  auto t0 = Clock::now();
  const long expect[] = {1, 2, 5, 14, 42, 132};
  bool ok = true;
  for (int n = 2; n <= 7; ++n)
    ok = ok && static_cast<long>(vertices(n).size()) == expect[n - 2];
  return ok && seconds_since(t0) < 5.0;
}

bool criterion2() {
  bool ok = face_indices(5).size() == 9;
  for (int n = 3; n <= 7; ++n) {
    long expect = 0;
    for (int s = 2; s <= n - 1; ++s) expect += n - s + 1;
    ok = ok && static_cast<long>(face_indices(n).size()) == expect;
  }
  return ok;
}

bool criterion3() {
  auto k5 = build_complex(5);
  std::map<std::string, int> dim_of;
  for (const auto& [f, L] : k5.facets)
    for (const auto& c : L.cells)
      if (!c->is_empty()) dim_of.emplace(cell_key(*c), c->dim);
  long chi = 0;
  for (const auto& [key, d] : dim_of) chi += (d % 2 == 0) ? 1 : -1;
  return chi == 2;
}

bool criterion4() {
  for (int n = 2; n <= 6; ++n)
    if (build_complex(n).complex.dim() != n - 2) return false;
  return true;
}

bool criterion5() {
  auto t0 = Clock::now();
  EngineConfig cfg;
  cfg.d = 3;
  cfg.samples = 3;
  cfg.time_points = 100;
  bool ok = true;
  for (int n = 3; n <= 5; ++n)
    for (const auto& f : face_indices(n)) {
      auto rep = verify_condition1(n, f, cfg);
      ok = ok && rep.pass && rep.max_dev <= 1e-12;
    }
  return ok && seconds_since(t0) < 60.0;
}

bool criterion6() {
  EngineConfig cfg;
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    auto rep = verify_condition0(n, cfg);
    ok = ok && rep.pass && rep.max_dev == 0.0;
  }
  return ok;
}

bool criterion7() {
  EngineConfig cfg;
  return verify_condition2prime(cfg).pass &&
         verify_strict_unit_failure(cfg).pass;
}

bool criterion8() {
  EngineConfig cfg;
  cfg.stable = true;
  cfg.d = 3;
  bool ok = true;
  for (int n = 3; n <= 5; ++n)
    for (const auto& f : face_indices(n))
      ok = ok && verify_condition1(n, f, cfg).pass;
  for (int n = 2; n <= 5; ++n) {
    ok = ok && verify_condition0(n, cfg).pass;
    ok = ok && verify_plateau(n, cfg).pass;
  }
  ok = ok && verify_condition2prime(cfg).pass;
  ok = ok && verify_strict_unit_failure(cfg).pass;

  // mu_eps supplies junction smoothness without endpoint-flat curves.
  auto g1 = clamped_path(poly_curve({{0.0, 1.0, 0.5, -0.5}}));
  auto g2 = clamped_path(poly_curve({{1.0, -0.75, 0.25, 0.0}}));
  auto plain = mu(g1, g2);
  auto stable = mu_eps(rat(1, 5), g1, g2);
  ok = ok && !smoothness_probe(plain, 0.5, 2).pass;
  ok = ok && smoothness_probe(stable, 0.5, 2).pass;
  std::mt19937 rng(71);
  auto chain = sample_chain(2, 2, rng);
  auto st = mu_eps(rat(1, 5), chain[0], chain[1]);
  // Plateau edges at first order (higher-order one-sided stencils amplify
  // the bump tail by h^-m), midpoint at full order.
  ok = ok && smoothness_probe(st, 0.4, 1).pass;
  ok = ok && smoothness_probe(st, 0.5, 3).pass;
  ok = ok && smoothness_probe(st, 0.6, 1).pass;
  return ok;
}

bool criterion9() {
  std::mt19937 rng(29);
  std::vector<TestFunctional> functionals = {
      {{{1.0, {1, 0}}}},                     // x
      {{{1.0, {2, 0}}, {0.5, {0, 1}}}},      // x^2 + y/2
      {{{1.0, {1, 1}}}},                     // xy
      {{{1.0, {3, 0}}, {-1.0, {0, 2}}}},     // x^3 - y^2
  };
  bool ok = true;
  for (int trial = 0; trial < 5; ++trial) {
    auto chain = sample_chain(1, 2, rng);
    for (const auto& phi : functionals)
      for (double t0 : {0.0, 1.0}) {
        auto rep = flatness_probe(chain[0], phi, t0, 3, 1e-2, 1e-5);
        ok = ok && rep.pass;
      }
  }
  return ok;
}

bool criterion10() {
  for (int n = 4; n <= 5; ++n) {
    auto spec = build_spec(n);
    int checked = 0;
    for (const auto& v : vertices(n)) {
      std::vector<FaceIndex> on;
      for (const auto& f : face_indices(n))
        if (on_facet(spec, f, v)) on.push_back(f);
      if (on.size() < 2) continue;
      ++checked;
      auto ref = phi(n, v);
      auto refs = psi(n, v);
      for (const auto& f : on) {
        auto [x, y] = d_face_invert(f, v);
        if (phi_on_facet(f, x, y).r != ref.r) return false;
        auto s = psi_on_facet(f, x, y);
        if (s.r != refs.r || s.eps != refs.eps) return false;
      }
    }
    if (checked < 10 && n == 5) return false;
  }
  return true;
}

bool criterion11() {
  std::mt19937 rng(31);
  for (int n = 3; n <= 5; ++n)
    for (const auto& f : face_indices(n)) {
      auto xs = sample_points(f.r, 3, rng);
      auto ys = sample_points(f.s, 3, rng);
      for (const auto& x : xs)
        for (const auto& y : ys)
          for (int j = 1; j <= n; ++j) {
            auto rows = degeneracy_on_face_all_rows(j, f, x, y);
            for (const auto& row : rows)
              if (row != rows[0]) return false;
            // The cone extension must agree with the table on the facet.
            RatVec t = d_face(f, x, y);
            if (degeneracy(j, n, t) != rows[0]) return false;
          }
    }
  return true;
}

bool criterion12() {
#ifdef AINFTY_CLI_PATH
  const std::string cli = AINFTY_CLI_PATH;
  const std::string base =
      " verify --suite ainfty --n 4 --seed 424242 --out ";
  std::string a = "acceptance_rep_a.json", b = "acceptance_rep_b.json";
  if (std::system((cli + base + a).c_str()) != 0) return false;
  if (std::system((cli + base + b).c_str()) != 0) return false;
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  std::remove(a.c_str());
  std::remove(b.c_str());
  return sa.str().size() > 0 && sa.str() == sb.str();
#else
  return false;
#endif
}

}  // namespace

int main() {
  report(1, criterion1(), "K_n vertex counts are Catalan through n=7");
  report(2, criterion2(), "facet counts |A(n)|");
  report(3, criterion3(), "Euler characteristic of the K(5) boundary is 2");
  report(4, criterion4(), "complex dimension n-2 through n=6");
  report(5, criterion5(), "condition (1) on all facets, n <= 5, within 1e-12");
  report(6, criterion6(), "condition (0) exact endpoint preservation");
  report(7, criterion7(), "h-unit witness holds and the strict unit fails");
  report(8, criterion8(), "stable mirror: conditions, plateaus, smoothness");
  report(9, criterion9(), "endpoint flatness of reparametrized paths");
  report(10, criterion10(), "phi/psi ridge consistency at >= 10 points");
  report(11, criterion11(), "degeneracy case table agreement, n <= 5");
  report(12, criterion12(), "byte-identical reports for identical config");
  return failures == 0 ? 0 : 1;
}
