#include "ainfty/smooth_paths.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace ainfty {

double clamp01(double t) { return t < 0 ? 0.0 : (t > 1 ? 1.0 : t); }

namespace {
double g_exp(double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; }
double g_exp2(double t) { return t > 0 ? std::exp(-1.0 / (t * t)) : 0.0; }
}  // namespace

double bump(double t) {
  double a = g_exp(t), b = g_exp(1.0 - t);
  return a + b > 0 ? a / (a + b) : (t > 0.5 ? 1.0 : 0.0);
}

double bump_alt(double t) {
  double a = g_exp2(t), b = g_exp2(1.0 - t);
  return a + b > 0 ? a / (a + b) : (t > 0.5 ? 1.0 : 0.0);
}

int Curve::dim() const {
  switch (kind) {
    case Poly:
      return static_cast<int>(coeffs.size());
    case Trig:
      return static_cast<int>(a.size());
    case Const:
      return static_cast<int>(value.size());
  }
  return 0;
}

VecD Curve::eval(double s) const {
  switch (kind) {
    case Poly: {
      VecD out(coeffs.size());
      for (size_t i = 0; i < coeffs.size(); ++i) {
        double v = 0;
        for (size_t j = coeffs[i].size(); j-- > 0;) v = v * s + coeffs[i][j];
        out[i] = v;
      }
      return out;
    }
    case Trig: {
      VecD out(a.size());
      for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] * std::cos(M_PI * w[i] * s) +
                 b[i] * std::sin(M_PI * w[i] * s) + c[i];
      return out;
    }
    case Const:
      return value;
  }
  return {};
}

Curve poly_curve(std::vector<std::vector<double>> coeffs) {
  Curve c;
  c.kind = Curve::Poly;
  c.coeffs = std::move(coeffs);
  return c;
}

Curve const_curve(VecD value) {
  Curve c;
  c.kind = Curve::Const;
  c.value = std::move(value);
  return c;
}

std::string curve_to_json(const Curve& c) {
  nlohmann::json j;
  switch (c.kind) {
    case Curve::Poly:
      j = {{"kind", "poly"}, {"coeffs", c.coeffs}};
      break;
    case Curve::Trig:
      j = {{"kind", "trig"}, {"a", c.a}, {"b", c.b}, {"w", c.w}, {"c", c.c}};
      break;
    case Curve::Const:
      j = {{"kind", "const"}, {"value", c.value}};
      break;
  }
  return j.dump();
}

Curve curve_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::string kind = j.at("kind");
  Curve c;
  if (kind == "poly") {
    c.kind = Curve::Poly;
    c.coeffs = j.at("coeffs").get<std::vector<std::vector<double>>>();
  } else if (kind == "trig") {
    c.kind = Curve::Trig;
    c.a = j.at("a").get<VecD>();
    c.b = j.at("b").get<VecD>();
    c.w = j.at("w").get<VecD>();
    c.c = j.at("c").get<VecD>();
  } else if (kind == "const") {
    c.kind = Curve::Const;
    c.value = j.at("value").get<VecD>();
  } else {
    throw std::invalid_argument("unknown curve kind: " + kind);
  }
  return c;
}

SmoothPath make_path(const Curve& gamma,
                     const std::function<double(double)>& reparam) {
  SmoothPath p;
  p.dim = gamma.dim();
  p.eval = [gamma, reparam](double t) {
    return gamma.eval(reparam(clamp01(t)));
  };
  p.start = p.eval(0.0);
  p.end = p.eval(1.0);
  return p;
}

SmoothPath clamped_path(const Curve& gamma) {
  SmoothPath p;
  p.dim = gamma.dim();
  p.eval = [gamma](double t) { return gamma.eval(clamp01(t)); };
  p.start = p.eval(0.0);
  p.end = p.eval(1.0);
  return p;
}

SmoothPath constant_path(const VecD& x) {
  SmoothPath p;
  p.dim = static_cast<int>(x.size());
  p.eval = [x](double) { return x; };
  p.start = x;
  p.end = x;
  return p;
}

namespace {

double central_diff(const std::function<double(double)>& f, double t0, int m,
                    double h) {
  auto F = [&](double k) { return f(t0 + k * h); };
  switch (m) {
    case 1:
      return (F(1) - F(-1)) / (2 * h);
    case 2:
      return (F(1) - 2 * F(0) + F(-1)) / (h * h);
    case 3:
      return (F(2) - 2 * F(1) + 2 * F(-1) - F(-2)) / (2 * h * h * h);
    case 4:
      return (F(2) - 4 * F(1) + 6 * F(0) - 4 * F(-1) + F(-2)) /
             (h * h * h * h);
    default:
      throw std::invalid_argument("finite_diff: order must be 1..4");
  }
}

double binom(int n, int k) {
  double v = 1;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

double forward_diff(const std::function<double(double)>& f, double t0, int m,
                    double h) {
  // m-th forward difference / h^m; O(h) truncation.
  double sum = 0;
  for (int i = 0; i <= m; ++i)
    sum += ((m - i) % 2 ? -1.0 : 1.0) * binom(m, i) * f(t0 + i * h);
  return sum / std::pow(h, m);
}

}  // namespace

double finite_diff(const std::function<double(double)>& f, double t0, int m,
                   double h) {
  if (h <= 0) throw std::invalid_argument("finite_diff: h must be positive");
  double d1 = central_diff(f, t0, m, h);
  double d2 = central_diff(f, t0, m, h / 2);
  return (4 * d2 - d1) / 3;
}

double one_sided_diff(const std::function<double(double)>& f, double t0, int m,
                      double h, bool from_right) {
  // A negative step turns the forward difference into the backward one
  // with the correct sign (the step is raised to the m-th power).
  double step = from_right ? h : -h;
  double d1 = forward_diff(f, t0, m, step);
  double d2 = forward_diff(f, t0, m, step / 2);
  return 2 * d2 - d1;
}

double TestFunctional::operator()(const VecD& x) const {
  double out = 0;
  for (const auto& term : terms) {
    double v = term.coeff;
    for (size_t i = 0; i < term.powers.size() && i < x.size(); ++i)
      for (int p = 0; p < term.powers[i]; ++p) v *= x[i];
    out += v;
  }
  return out;
}

ProbeReport flatness_probe(const SmoothPath& u, const TestFunctional& phi,
                           double t0, int max_order, double h, double tol) {
  auto f = [&](double t) { return phi(u.eval(t)); };
  ProbeReport rep;
  for (int m = 1; m <= max_order; ++m) {
    double est = finite_diff(f, t0, m, h);
    bool ok = std::abs(est) <= tol;
    rep.entries.push_back({m, est, tol, ok});
    rep.pass = rep.pass && ok;
  }
  return rep;
}

ProbeReport smoothness_probe(const SmoothPath& u, double t0, int max_order,
                             double h, double tol) {
  ProbeReport rep;
  for (int m = 1; m <= max_order; ++m) {
    double worst = 0;
    for (int i = 0; i < u.dim; ++i) {
      auto f = [&](double t) { return u.eval(t)[i]; };
      double left = one_sided_diff(f, t0, m, h, false);
      double right = one_sided_diff(f, t0, m, h, true);
      worst = std::max(worst, std::abs(left - right));
    }
    bool ok = worst <= tol;
    rep.entries.push_back({m, worst, tol, ok});
    rep.pass = rep.pass && ok;
  }
  return rep;
}

std::string probe_report_to_json(const ProbeReport& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : r.entries)
    arr.push_back({{"order", e.order},
                   {"estimate", e.estimate},
                   {"tol", e.tol},
                   {"pass", e.pass}});
  return arr.dump();
}

}  // namespace ainfty
