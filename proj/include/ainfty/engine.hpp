#pragma once

#include <random>
#include <string>
#include <vector>

#include "ainfty/associahedron.hpp"
#include "ainfty/smooth_paths.hpp"

namespace ainfty {

struct ComposabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A point of E_n: concatenation speeds r_i > 0 with sum 1.
struct ConcatWeights {
  std::vector<Rat> r;
};
ConcatWeights make_weights(std::vector<Rat> r);

/// A point of D_n: speeds r_i plus plateau widths eps_i, all positive,
/// total sum 1.
struct StableConcatWeights {
  std::vector<Rat> r, eps;
};
StableConcatWeights make_stable_weights(std::vector<Rat> r,
                                        std::vector<Rat> eps);

ConcatWeights e_center(int n);        // e_n = (1/n, ..., 1/n)
StableConcatWeights d_center(int n);  // d_n = (2,...,2;1,...,1)/(3n-1)

/// Face map of E: (x_1..x_{k-1}, x_k y_1..x_k y_s, x_{k+1}..x_r).
ConcatWeights dE(const FaceIndex& f, const ConcatWeights& x,
                 const ConcatWeights& y);

/// Face map of D; the eta block is scaled by x_k, the eps block keeps
/// eps_k..eps_{r-1} after it.
StableConcatWeights dD(const FaceIndex& f, const StableConcatWeights& x,
                       const StableConcatWeights& y);

/// n-fold concatenation: piece i runs at speed 1/r_i on
/// [v_{i-1}, v_i], v_i = r_1+...+r_i.  Junction endpoints must match
/// exactly on construction data.
SmoothPath beta(const ConcatWeights& w, const std::vector<SmoothPath>& paths);

/// Stable concatenation: piece i on [a_i, s_i] with a constant plateau of
/// width eps_i after it; s_i = r_1+..+r_i + eps_1+..+eps_{i-1}.
SmoothPath alpha(const StableConcatWeights& w,
                 const std::vector<SmoothPath>& paths);

std::vector<double> beta_breakpoints(const ConcatWeights& w);
std::vector<double> alpha_breakpoints(const StableConcatWeights& w);

SmoothPath mu(const SmoothPath& u, const SmoothPath& v);
SmoothPath mu_eps(const Rat& eps, const SmoothPath& u, const SmoothPath& v);
SmoothPath iota(const VecD& x);
VecD src(const SmoothPath& u);
VecD tgt(const SmoothPath& u);

/// phi_n : K_n -> E_n, radial star-shaped extension of the facet rule
/// phi(d_k(rho,sigma)) = dE_k(phi(rho), phi(sigma)); phi(b_n) = e_n.
ConcatWeights phi(int n, const RatVec& t);
StableConcatWeights psi(int n, const RatVec& t);

/// The facet rule alone, for ridge-consistency tests: the value of phi at
/// d_k(rho, sigma) computed through the given facet.
ConcatWeights phi_on_facet(const FaceIndex& f, const RatVec& rho,
                           const RatVec& sigma);
StableConcatWeights psi_on_facet(const FaceIndex& f, const RatVec& rho,
                                 const RatVec& sigma);

/// The A-infinity form M(n)(t; paths) = beta(phi(t), paths) and its
/// stable mirror alpha(psi(t), paths).
SmoothPath M(int n, const RatVec& t, const std::vector<SmoothPath>& paths);
SmoothPath M_stable(int n, const RatVec& t,
                    const std::vector<SmoothPath>& paths);

struct AInftyReport {
  std::string condition;  // "0", "1", "2'", "2-fail", "plateau"
  int n = 0, k = 0, r = 0, s = 0;
  long samples = 0;
  double max_dev = 0;
  double tol = 0;
  bool pass = true;
};

struct EngineConfig {
  int d = 2;            // target dimension of the test paths
  int samples = 3;      // (rho, sigma) pairs per facet
  int time_points = 101;
  double tol_point = 1e-12;
  double tol_deriv = 1e-5;
  unsigned seed = 12345;
  bool stable = false;  // alpha/psi instead of beta/phi
  Rat perturb = 0;      // shifts the weights; self-test knob
};

/// Deterministic interior sample points of K_n: b_n plus convex
/// combinations of vertices with denominator-8 rational weights.
std::vector<RatVec> sample_points(int n, int count, std::mt19937& rng);

/// A chain of composable factory paths with dyadic polynomial
/// coefficients, so junction endpoints match bit-exactly.
std::vector<SmoothPath> sample_chain(int count, int d, std::mt19937& rng);

/// Equispaced [0,1] grid joined with the given breakpoints, sorted.
std::vector<double> time_grid(int points, const std::vector<double>& extra);

/// Condition (0): src/tgt of M(n)(t; g) equal src(g_1)/tgt(g_n) exactly.
AInftyReport verify_condition0(int n, const EngineConfig& cfg);

/// Condition (1) on the facet (k,r,s): M(n) o (d_k x 1) against the
/// nested evaluation, pointwise on sampled (rho, sigma, t).
AInftyReport verify_condition1(int n, const FaceIndex& f,
                               const EngineConfig& cfg);

/// h-unit (2'): M(2)(b_2; iota(x), g)(t) = g(clamp(2t-1)) (stable flavor
/// uses the d(2) breakpoints).
AInftyReport verify_condition2prime(const EngineConfig& cfg);

/// Strict unit (2) must FAIL: the report passes when the deviation of
/// M(2)(b_2; iota(x), g) from g exceeds 0.1 x diameter of g's image.
AInftyReport verify_strict_unit_failure(const EngineConfig& cfg);

/// Stable concatenation is constant on each plateau [s_i, s_i + eps_i].
AInftyReport verify_plateau(int n, const EngineConfig& cfg);

std::string ainfty_report_to_json(const AInftyReport& r);

}  // namespace ainfty
