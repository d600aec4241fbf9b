#include "numerics.hpp"

#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace zc::numerics {

double RoundingPolicy::upper(double x) const {
  if (mode == Mode::nearest || !std::isfinite(x)) return x;
  return x + std::fabs(x) * slack;
}

double RoundingPolicy::lower(double x) const {
  if (mode == Mode::nearest || !std::isfinite(x)) return x;
  return x - std::fabs(x) * slack;
}

double lambert_w0(double x) {
  if (std::isnan(x)) raise(ErrorCode::domain, "lambert_w0: NaN argument");
  // e*x + 1 with e split in two so the branch point is resolved past double rounding
  constexpr double e_hi = 2.718281828459045;
  constexpr double e_lo = 1.4456468917292502e-16;
  double q = std::fma(x, e_hi, 1.0) + x * e_lo;
  if (q < 0.0) {
    if (q > -4.0 * std::numeric_limits<double>::epsilon()) {
      q = 0.0;
    } else {
      raise(ErrorCode::domain, "lambert_w0: argument below -1/e: " + std::to_string(x));
    }
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  if (q == 0.0) return -1.0;

  double w;
  if (q < 0.3) {
    // branch-point series in p = sqrt(2(ex+1))
    double p = std::sqrt(2.0 * q);
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * 769.0 / 17280.0))));
    if (p < 1e-3) return w;
  } else if (x < 3.0) {
    double l = std::log1p(x);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  } else {
    double l1 = std::log(x);
    double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int it = 0; it < 64; ++it) {
    double ew = std::exp(w);
    double f = w * ew - x;
    double wp1 = w + 1.0;
    double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0) break;
    double dw = f / denom;
    w -= dw;
    if (std::fabs(dw) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(w))) break;
  }
  return w;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) raise(ErrorCode::invalid_argument, "gauss_legendre: order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= order; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = order * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

const QuadratureRule& default_rule() {
  static const QuadratureRule rule = gauss_legendre(16);
  return rule;
}

namespace {

// Substituting u = y + a turns the exponent 3y^2 u - u^3 - 2y^3 into
// -(3y a^2 + a^3), which peaks at 0 when a = 0 (or at a = -y = 0 for y = 0).
double g_integrand(double y, double a) { return std::exp(-(3.0 * y * a * a + a * a * a)); }

constexpr double kDropLog = 46.051701859880914;  // log 1e20

// a* > 0 with 3y a^2 + a^3 = log 1e20
double g_cutoff(double y) {
  double lo = 0.0, hi = 4.0;
  while (3.0 * y * hi * hi + hi * hi * hi < kDropLog) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (3.0 * y * mid * mid + mid * mid * mid < kDropLog) lo = mid; else hi = mid;
  }
  return hi;
}

}  // namespace

GIntegral g_integral(double y, double tol) {
  if (!(y >= 0.0)) raise(ErrorCode::domain, "g_of_y: y must be >= 0");
  double astar = g_cutoff(y);
  auto f = [y](double a) { return g_integrand(y, a); };
  const auto& rule = default_rule();
  double left = y > 0.0 ? integrate_adaptive(f, -y, 0.0, 0.5 * tol, rule) : 0.0;
  double right = integrate_adaptive(f, 0.0, astar, 0.5 * tol, rule);
  // exponent is concave beyond a*, so the tail is below e^{-46.05}/|slope at a*|
  double slope = 6.0 * y * astar + 3.0 * astar * astar;
  return {left + right, y + astar, std::exp(-kDropLog) / slope};
}

double g_of_y(double y) { return g_integral(y).value; }

double g_of_y_composite(double y, int panels) {
  if (!(y >= 0.0)) raise(ErrorCode::domain, "g_of_y: y must be >= 0");
  double astar = g_cutoff(y);
  auto f = [y](double a) { return g_integrand(y, a); };
  const auto& rule = default_rule();
  double left = y > 0.0 ? integrate_composite(f, -y, 0.0, panels, rule) : 0.0;
  return left + integrate_composite(f, 0.0, astar, panels, rule);
}

GMaximum sup_g(double grid_step) {
  const double lo = 0.0, hi = 5.0;
  int n = static_cast<int>(std::lround((hi - lo) / grid_step));
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i <= n; ++i) {
    double v = g_of_y(lo + i * grid_step);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  if (best == 0 || best == n) raise(ErrorCode::precision, "sup_g: grid maximum sits on the boundary of [0,5]");

  double a = lo + (best - 1) * grid_step;
  double b = lo + (best + 1) * grid_step;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = g_of_y(c), fd = g_of_y(d);
  while (b - a > 1e-9) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = g_of_y(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = g_of_y(d);
    }
  }
  double y = 0.5 * (a + b);
  double v = g_of_y(y);
  if (v < best_val) raise(ErrorCode::precision, "sup_g: golden-section refinement lost the bracketed maximum");
  return {y, v};
}

}  // namespace zc::numerics
