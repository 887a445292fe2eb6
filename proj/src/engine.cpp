#include "ainfty/engine.hpp"

#include <algorithm>
#include <cmath>

namespace ainfty {
namespace {

void check_face(const FaceIndex& f) {
  const int n = f.r + f.s - 1;
  if (f.k < 1 || f.k > f.r || f.s < 2 || f.s > n - 1)
    throw UsageError("face index (" + std::to_string(f.k) + "," +
                     std::to_string(f.r) + "," + std::to_string(f.s) +
                     ") outside A(" + std::to_string(n) + ")");
}

void check_composable(const std::vector<SmoothPath>& paths) {
  if (paths.empty()) throw UsageError("concatenation of zero paths");
  for (size_t i = 0; i + 1 < paths.size(); ++i) {
    if (paths[i].dim != paths[i + 1].dim)
      throw ComposabilityError("junction " + std::to_string(i + 1) +
                               ": dimension mismatch");
    if (paths[i].end != paths[i + 1].start)
      throw ComposabilityError("junction " + std::to_string(i + 1) +
                               ": end of piece " + std::to_string(i + 1) +
                               " differs from start of piece " +
                               std::to_string(i + 2));
  }
}

std::vector<Rat> mix(const Rat& c, const std::vector<Rat>& center,
                     const std::vector<Rat>& base) {
  std::vector<Rat> out(center.size());
  for (size_t i = 0; i < center.size(); ++i)
    out[i] = (1 - c) * base[i] + c * center[i];
  return out;
}

}  // namespace

ConcatWeights make_weights(std::vector<Rat> r) {
  if (r.empty()) throw UsageError("weights: empty");
  Rat sum = 0;
  for (const auto& x : r) {
    if (x <= 0) throw UsageError("weights: entries must be positive");
    sum += x;
  }
  if (sum != 1) throw UsageError("weights: sum must be 1");
  return {std::move(r)};
}

StableConcatWeights make_stable_weights(std::vector<Rat> r,
                                        std::vector<Rat> eps) {
  if (r.empty() || eps.size() + 1 != r.size())
    throw UsageError("stable weights: need n speeds and n-1 plateau widths");
  Rat sum = 0;
  for (const auto& x : r) {
    if (x <= 0) throw UsageError("stable weights: entries must be positive");
    sum += x;
  }
  for (const auto& x : eps) {
    if (x <= 0) throw UsageError("stable weights: entries must be positive");
    sum += x;
  }
  if (sum != 1) throw UsageError("stable weights: total sum must be 1");
  return {std::move(r), std::move(eps)};
}

ConcatWeights e_center(int n) {
  if (n < 1) throw UsageError("e(n): n must be positive");
  return {std::vector<Rat>(n, Rat(1, n))};
}

StableConcatWeights d_center(int n) {
  if (n < 1) throw UsageError("d(n): n must be positive");
  return {std::vector<Rat>(n, rat(2, 3 * n - 1)),
          std::vector<Rat>(n - 1, rat(1, 3 * n - 1))};
}

ConcatWeights dE(const FaceIndex& f, const ConcatWeights& x,
                 const ConcatWeights& y) {
  check_face(f);
  if (static_cast<int>(x.r.size()) != f.r ||
      static_cast<int>(y.r.size()) != f.s)
    throw UsageError("dE: argument sizes do not match (k,r,s)");
  std::vector<Rat> out;
  out.reserve(f.r + f.s - 1);
  for (int i = 0; i < f.k - 1; ++i) out.push_back(x.r[i]);
  for (int i = 0; i < f.s; ++i) out.push_back(x.r[f.k - 1] * y.r[i]);
  for (int i = f.k; i < f.r; ++i) out.push_back(x.r[i]);
  return make_weights(std::move(out));
}

StableConcatWeights dD(const FaceIndex& f, const StableConcatWeights& x,
                       const StableConcatWeights& y) {
  check_face(f);
  if (static_cast<int>(x.r.size()) != f.r ||
      static_cast<int>(y.r.size()) != f.s)
    throw UsageError("dD: argument sizes do not match (k,r,s)");
  std::vector<Rat> r, eps;
  for (int i = 0; i < f.k - 1; ++i) r.push_back(x.r[i]);
  for (int i = 0; i < f.s; ++i) r.push_back(x.r[f.k - 1] * y.r[i]);
  for (int i = f.k; i < f.r; ++i) r.push_back(x.r[i]);
  for (int i = 0; i < f.k - 1; ++i) eps.push_back(x.eps[i]);
  for (int i = 0; i < f.s - 1; ++i) eps.push_back(x.r[f.k - 1] * y.eps[i]);
  for (int i = f.k - 1; i < f.r - 1; ++i) eps.push_back(x.eps[i]);
  return make_stable_weights(std::move(r), std::move(eps));
}

std::vector<double> beta_breakpoints(const ConcatWeights& w) {
  std::vector<double> out;
  Rat acc = 0;
  for (size_t i = 0; i + 1 < w.r.size(); ++i) {
    acc += w.r[i];
    out.push_back(to_double(acc));
  }
  return out;
}

std::vector<double> alpha_breakpoints(const StableConcatWeights& w) {
  std::vector<double> out;
  Rat acc = 0;
  for (size_t i = 0; i + 1 < w.r.size(); ++i) {
    acc += w.r[i];
    out.push_back(to_double(acc));  // s_i
    acc += w.eps[i];
    out.push_back(to_double(acc));  // s_i + eps_i
  }
  return out;
}

SmoothPath beta(const ConcatWeights& w, const std::vector<SmoothPath>& paths) {
  const size_t n = w.r.size();
  if (paths.size() != n)
    throw UsageError("beta: weight/path count mismatch");
  check_composable(paths);
  if (n == 1) return paths[0];

  std::vector<double> rd(n), v(n);
  Rat acc = 0;
  for (size_t i = 0; i < n; ++i) {
    rd[i] = to_double(w.r[i]);
    acc += w.r[i];
    v[i] = to_double(acc);
  }
  SmoothPath out;
  out.dim = paths[0].dim;
  out.start = paths.front().start;
  out.end = paths.back().end;
  out.eval = [paths, rd, v, n](double t) {
    double lo = 0;
    for (size_t i = 0; i + 1 < n; ++i) {
      if (t <= v[i]) return paths[i].eval((t - lo) / rd[i]);
      lo = v[i];
    }
    return paths[n - 1].eval((t - lo) / rd[n - 1]);
  };
  return out;
}

SmoothPath alpha(const StableConcatWeights& w,
                 const std::vector<SmoothPath>& paths) {
  const size_t n = w.r.size();
  if (paths.size() != n)
    throw UsageError("alpha: weight/path count mismatch");
  check_composable(paths);
  if (n == 1) return paths[0];

  std::vector<double> rd(n), s(n), a(n);  // piece i on [a_i, s_i]
  Rat acc = 0;
  for (size_t i = 0; i < n; ++i) {
    rd[i] = to_double(w.r[i]);
    a[i] = to_double(acc);
    acc += w.r[i];
    s[i] = to_double(acc);
    if (i + 1 < n) acc += w.eps[i];
  }
  SmoothPath out;
  out.dim = paths[0].dim;
  out.start = paths.front().start;
  out.end = paths.back().end;
  out.eval = [paths, rd, s, a, n](double t) {
    for (size_t i = 0; i + 1 < n; ++i) {
      if (t <= s[i]) return paths[i].eval((t - a[i]) / rd[i]);
      if (t <= a[i + 1]) return paths[i].eval(1.0);  // plateau
    }
    return paths[n - 1].eval((t - a[n - 1]) / rd[n - 1]);
  };
  return out;
}

SmoothPath mu(const SmoothPath& u, const SmoothPath& v) {
  return beta(e_center(2), {u, v});
}

SmoothPath mu_eps(const Rat& eps, const SmoothPath& u, const SmoothPath& v) {
  if (eps <= 0 || eps >= 1) throw UsageError("mu_eps: eps must be in (0,1)");
  Rat half = (1 - eps) / 2;
  return alpha(make_stable_weights({half, half}, {eps}), {u, v});
}

SmoothPath iota(const VecD& x) { return constant_path(x); }

VecD src(const SmoothPath& u) { return u.start; }
VecD tgt(const SmoothPath& u) { return u.end; }

ConcatWeights phi(int n, const RatVec& t) {
  if (n < 2) throw UsageError("phi: n must be at least 2");
  auto spec = build_spec(n);
  if (!contains(spec, t)) throw DomainError("phi: point outside K_n");
  if (n == 2) return e_center(2);
  auto dec = facet_decompose(spec, t);
  if (dec.is_center()) return e_center(n);
  auto base = dE(dec.face, phi(dec.face.r, dec.rho), phi(dec.face.s, dec.sigma));
  return make_weights(mix(dec.c, e_center(n).r, base.r));
}

StableConcatWeights psi(int n, const RatVec& t) {
  if (n < 2) throw UsageError("psi: n must be at least 2");
  auto spec = build_spec(n);
  if (!contains(spec, t)) throw DomainError("psi: point outside K_n");
  if (n == 2) return d_center(2);
  auto dec = facet_decompose(spec, t);
  if (dec.is_center()) return d_center(n);
  auto base = dD(dec.face, psi(dec.face.r, dec.rho), psi(dec.face.s, dec.sigma));
  auto center = d_center(n);
  return make_stable_weights(mix(dec.c, center.r, base.r),
                             mix(dec.c, center.eps, base.eps));
}

ConcatWeights phi_on_facet(const FaceIndex& f, const RatVec& rho,
                           const RatVec& sigma) {
  return dE(f, phi(f.r, rho), phi(f.s, sigma));
}

StableConcatWeights psi_on_facet(const FaceIndex& f, const RatVec& rho,
                                 const RatVec& sigma) {
  return dD(f, psi(f.r, rho), psi(f.s, sigma));
}

SmoothPath M(int n, const RatVec& t, const std::vector<SmoothPath>& paths) {
  return beta(phi(n, t), paths);
}

SmoothPath M_stable(int n, const RatVec& t,
                    const std::vector<SmoothPath>& paths) {
  return alpha(psi(n, t), paths);
}

std::vector<RatVec> sample_points(int n, int count, std::mt19937& rng) {
  std::vector<RatVec> out;
  out.push_back(interior_point(n));
  auto vs = vertices(n);
  std::uniform_int_distribution<size_t> pick(0, vs.size() - 1);
  const int den = 8;
  while (static_cast<int>(out.size()) < count) {
    RatVec p(n, Rat(0));
    for (int b = 0; b < den; ++b) {
      const auto& v = vs[pick(rng)];
      for (int i = 0; i < n; ++i) p[i] += v[i];
    }
    for (int i = 0; i < n; ++i) p[i] /= den;
    out.push_back(std::move(p));
  }
  out.resize(count);
  return out;
}

std::vector<SmoothPath> sample_chain(int count, int d, std::mt19937& rng) {
  // Coefficients are multiples of 1/64, so the Horner sums at s = 0 and
  // s = 1 are exact and junction endpoints match bit for bit.
  std::uniform_int_distribution<int> coef(-64, 64);
  auto dyadic = [&] { return coef(rng) / 64.0; };
  std::vector<VecD> pts(count + 1, VecD(d));
  for (auto& p : pts)
    for (auto& x : p) x = dyadic();

  std::vector<SmoothPath> chain;
  for (int i = 0; i < count; ++i) {
    std::vector<std::vector<double>> coeffs(d);
    for (int j = 0; j < d; ++j) {
      double c0 = pts[i][j], c1 = dyadic(), c2 = dyadic();
      double c3 = pts[i + 1][j] - c0 - c1 - c2;
      coeffs[j] = {c0, c1, c2, c3};
    }
    chain.push_back(make_path(poly_curve(std::move(coeffs))));
  }
  return chain;
}

std::vector<double> time_grid(int points, const std::vector<double>& extra) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i)
    out.push_back(static_cast<double>(i) / (points - 1));
  for (double b : extra)
    if (b >= 0 && b <= 1) out.push_back(b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

double max_abs_diff(const VecD& a, const VecD& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double grid_deviation(const SmoothPath& a, const SmoothPath& b,
                      const std::vector<double>& grid) {
  double m = 0;
  for (double t : grid) m = std::max(m, max_abs_diff(a.eval(t), b.eval(t)));
  return m;
}

ConcatWeights perturbed(ConcatWeights w, const Rat& p) {
  if (p != 0 && w.r.size() >= 2) {
    w.r[0] += p;
    w.r[1] -= p;
  }
  return w;
}

StableConcatWeights perturbed(StableConcatWeights w, const Rat& p) {
  if (p != 0 && w.r.size() >= 2) {
    w.r[0] += p;
    w.r[1] -= p;
  }
  return w;
}

}  // namespace

AInftyReport verify_condition0(int n, const EngineConfig& cfg) {
  std::mt19937 rng(cfg.seed + 7 * n);
  AInftyReport rep;
  rep.condition = "0";
  rep.n = n;
  rep.tol = 0;
  for (const auto& t : sample_points(n, cfg.samples, rng)) {
    auto chain = sample_chain(n, cfg.d, rng);
    SmoothPath m = cfg.stable ? M_stable(n, t, chain) : M(n, t, chain);
    rep.max_dev = std::max(rep.max_dev, max_abs_diff(src(m), src(chain.front())));
    rep.max_dev = std::max(rep.max_dev, max_abs_diff(tgt(m), tgt(chain.back())));
    ++rep.samples;
  }
  rep.pass = rep.max_dev == 0;
  return rep;
}

AInftyReport verify_condition1(int n, const FaceIndex& f,
                               const EngineConfig& cfg) {
  std::mt19937 rng(cfg.seed + 1000000u * f.k + 10000u * f.r + 100u * f.s + n);
  AInftyReport rep;
  rep.condition = "1";
  rep.n = n;
  rep.k = f.k;
  rep.r = f.r;
  rep.s = f.s;
  rep.tol = cfg.tol_point;

  auto rhos = sample_points(f.r, cfg.samples, rng);
  auto sigmas = sample_points(f.s, cfg.samples, rng);
  for (int q = 0; q < cfg.samples; ++q) {
    const RatVec& rho = rhos[q];
    const RatVec& sigma = sigmas[q];
    RatVec t = d_face(f, rho, sigma);
    auto chain = sample_chain(n, cfg.d, rng);

    SmoothPath lhs, inner, rhs;
    std::vector<double> brk;
    std::vector<SmoothPath> outer(chain.begin(), chain.begin() + (f.k - 1));
    std::vector<SmoothPath> mid(chain.begin() + (f.k - 1),
                                chain.begin() + (f.k - 1 + f.s));
    if (cfg.stable) {
      auto w = perturbed(psi(n, t), cfg.perturb);
      lhs = alpha(w, chain);
      brk = alpha_breakpoints(w);
      inner = M_stable(f.s, sigma, mid);
      outer.push_back(inner);
      outer.insert(outer.end(), chain.begin() + (f.k - 1 + f.s), chain.end());
      rhs = M_stable(f.r, rho, outer);
    } else {
      auto w = perturbed(phi(n, t), cfg.perturb);
      lhs = beta(w, chain);
      brk = beta_breakpoints(w);
      inner = M(f.s, sigma, mid);
      outer.push_back(inner);
      outer.insert(outer.end(), chain.begin() + (f.k - 1 + f.s), chain.end());
      rhs = M(f.r, rho, outer);
    }
    auto grid = time_grid(cfg.time_points, brk);
    rep.max_dev = std::max(rep.max_dev, grid_deviation(lhs, rhs, grid));
    rep.samples += static_cast<long>(grid.size());
  }
  rep.pass = rep.max_dev <= rep.tol;
  return rep;
}

namespace {

SmoothPath nonconstant_test_path(int d, std::mt19937& rng) {
  for (int tries = 0; tries < 100; ++tries) {
    auto chain = sample_chain(1, d, rng);
    const auto& g = chain[0];
    if (max_abs_diff(g.eval(0.0), g.eval(0.5)) > 0.25 ||
        max_abs_diff(g.eval(1.0), g.eval(0.5)) > 0.25)
      return g;
  }
  throw std::logic_error("could not draw a non-constant test path");
}

double image_diameter(const SmoothPath& g, const std::vector<double>& grid) {
  std::vector<VecD> pts;
  for (double t : grid) pts.push_back(g.eval(t));
  double m = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      m = std::max(m, max_abs_diff(pts[i], pts[j]));
  return m;
}

}  // namespace

AInftyReport verify_condition2prime(const EngineConfig& cfg) {
  std::mt19937 rng(cfg.seed + 2);
  AInftyReport rep;
  rep.condition = "2'";
  rep.n = 2;
  rep.tol = cfg.tol_point;

  SmoothPath g = nonconstant_test_path(cfg.d, rng);
  SmoothPath lhs, witness;
  std::vector<double> brk;
  if (cfg.stable) {
    lhs = M_stable(2, interior_point(2), {iota(src(g)), g});
    // psi(2)(b_2) = (2/5,2/5;1/5): the live piece is g((5t-3)/2).
    witness.dim = g.dim;
    witness.eval = [g](double t) { return g.eval(clamp01((5 * t - 3) / 2)); };
    brk = {0.4, 0.6};
  } else {
    lhs = M(2, interior_point(2), {iota(src(g)), g});
    witness.dim = g.dim;
    witness.eval = [g](double t) { return g.eval(clamp01(2 * t - 1)); };
    brk = {0.5};
  }
  auto grid = time_grid(cfg.time_points, brk);
  rep.max_dev = grid_deviation(lhs, witness, grid);
  rep.samples = static_cast<long>(grid.size());
  rep.pass = rep.max_dev <= rep.tol;
  return rep;
}

AInftyReport verify_strict_unit_failure(const EngineConfig& cfg) {
  std::mt19937 rng(cfg.seed + 2);
  AInftyReport rep;
  rep.condition = "2-fail";
  rep.n = 2;

  SmoothPath g = nonconstant_test_path(cfg.d, rng);
  SmoothPath m = cfg.stable ? M_stable(2, interior_point(2), {iota(src(g)), g})
                            : M(2, interior_point(2), {iota(src(g)), g});
  auto grid = time_grid(cfg.time_points, {0.4, 0.5, 0.6});
  double diam = image_diameter(g, grid);
  rep.max_dev = grid_deviation(m, g, grid);
  rep.samples = static_cast<long>(grid.size());
  rep.tol = 0.1 * diam;
  // Passing means the strict unit law demonstrably FAILS for this form.
  rep.pass = rep.max_dev >= rep.tol && diam > 0;
  return rep;
}

AInftyReport verify_plateau(int n, const EngineConfig& cfg) {
  std::mt19937 rng(cfg.seed + 5 * n);
  AInftyReport rep;
  rep.condition = "plateau";
  rep.n = n;
  rep.tol = cfg.tol_point;
  for (const auto& t : sample_points(n, cfg.samples, rng)) {
    auto w = psi(n, t);
    auto chain = sample_chain(n, cfg.d, rng);
    SmoothPath m = alpha(w, chain);
    Rat acc = 0;
    for (size_t i = 0; i + 1 < w.r.size(); ++i) {
      acc += w.r[i];
      double lo = to_double(acc);
      acc += w.eps[i];
      double hi = to_double(acc);
      VecD anchor = chain[i].eval(1.0);
      for (int q = 0; q <= 4; ++q) {
        double tq = lo + (hi - lo) * q / 4;
        rep.max_dev = std::max(rep.max_dev, max_abs_diff(m.eval(tq), anchor));
        ++rep.samples;
      }
    }
  }
  rep.pass = rep.max_dev <= rep.tol;
  return rep;
}

}  // namespace ainfty
