#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ainfty/rational.hpp"

namespace ainfty {

using VecD = std::vector<double>;

/// pi_set(t) = max{0, min{1, t}}.
double clamp01(double t);

/// Smooth step: 0 below 0, 1 above 1, lambda(t) + lambda(1-t) = 1,
/// strictly increasing on (0,1).  Built from exp(-1/t).
double bump(double t);

/// Alternate bump built from exp(-1/t^2); same three properties.  The
/// engine suites can be run under this one to confirm nothing depends on
/// the particular choice.
double bump_alt(double t);

/// Curve spec gamma : [0,1] -> R^d, evaluable everywhere.
struct Curve {
  enum Kind { Poly, Trig, Const } kind = Const;
  // Poly: coeffs[i] are the coefficients of coordinate i, low degree first.
  // Trig: coordinate i is a_i cos(pi w_i s) + b_i sin(pi w_i s) + c_i.
  std::vector<std::vector<double>> coeffs;  // Poly
  std::vector<double> a, b, w, c;           // Trig
  std::vector<double> value;                // Const

  int dim() const;
  VecD eval(double s) const;
};

Curve poly_curve(std::vector<std::vector<double>> coeffs);
Curve const_curve(VecD value);

std::string curve_to_json(const Curve& c);
Curve curve_from_json(const std::string& json);

/// A path R -> R^d constant outside [0,1]; u(t) = u(clamp(t)) holds by
/// construction for every factory output.
struct SmoothPath {
  int dim = 0;
  std::function<VecD(double)> eval;
  VecD start, end;
};

/// u(t) = gamma(bump(clamp(t))): all derivatives of phi o u vanish at the
/// endpoints for smooth phi.
SmoothPath make_path(const Curve& gamma,
                     const std::function<double(double)>& reparam = bump);

/// u(t) = gamma(clamp(t)) without the bump; NOT flat at the endpoints.
/// Used as the negative control in smoothness probes.
SmoothPath clamped_path(const Curve& gamma);

/// Constant path at x (the unit iota).
SmoothPath constant_path(const VecD& x);

/// Central-difference estimate of f^(m)(t0), m <= 4, with one Richardson
/// step (h and h/2); truncation error O(h^4).
double finite_diff(const std::function<double(double)>& f, double t0, int m,
                   double h);

/// One-sided (forward or backward) m-th derivative estimate with one
/// Richardson step.
double one_sided_diff(const std::function<double(double)>& f, double t0, int m,
                      double h, bool from_right);

struct ProbeEntry {
  int order;
  double estimate;  // flatness: the estimate; smoothness: |left - right|
  double tol;
  bool pass;
};
struct ProbeReport {
  std::vector<ProbeEntry> entries;
  bool pass = true;
};

/// Polynomial test functional phi : R^d -> R (sum of monomials).
struct TestFunctional {
  struct Term {
    double coeff;
    std::vector<int> powers;  // exponent per coordinate
  };
  std::vector<Term> terms;
  double operator()(const VecD& x) const;
};

/// Checks that d^m(phi o u)/dt^m vanishes at t0 in {0,1} for m = 1..max_order.
ProbeReport flatness_probe(const SmoothPath& u, const TestFunctional& phi,
                           double t0, int max_order, double h = 1e-2,
                           double tol = 1e-5);

/// Compares one-sided derivatives from the left and right of t0.
ProbeReport smoothness_probe(const SmoothPath& u, double t0, int max_order,
                             double h = 1e-2, double tol = 1e-5);

std::string probe_report_to_json(const ProbeReport& r);

}  // namespace ainfty
