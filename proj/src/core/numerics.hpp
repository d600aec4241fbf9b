#pragma once

#include <cmath>
#include <vector>

namespace zc::numerics {

// Comparisons against published constants go through this. In conservative
// mode an upper-bound-side quantity is inflated by a relative slack before it
// is compared, a lower-bound-side one deflated.
struct RoundingPolicy {
  enum class Mode { nearest, conservative };
  Mode mode = Mode::conservative;
  double slack = 0x1p-40;

  double upper(double x) const;
  double lower(double x) const;
  bool certifies_upper(double computed, double bound) const { return upper(computed) <= bound; }
  bool certifies_lower(double computed, double bound) const { return lower(computed) >= bound; }
};

inline constexpr double kInvE = 0.36787944117144232159552377016146;

double lambert_w0(double x);

struct QuadratureRule {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

QuadratureRule gauss_legendre(int order);

// fixed composite rule: `panels` equal pieces, one Gauss-Legendre rule each
template <class F>
double integrate_composite(F&& f, double a, double b, int panels, const QuadratureRule& rule) {
  double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    double mid = lo + 0.5 * h;
    double part = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) part += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    total += 0.5 * h * part;
  }
  return total;
}

namespace detail {
template <class F>
double adaptive_step(F& f, double a, double b, double whole, double tol, int depth, const QuadratureRule& rule) {
  double m = 0.5 * (a + b);
  double left = integrate_composite(f, a, m, 1, rule);
  double right = integrate_composite(f, m, b, 1, rule);
  double both = left + right;
  if (depth <= 0 || std::fabs(both - whole) <= tol) return both;
  return adaptive_step(f, a, m, left, 0.5 * tol, depth - 1, rule) +
         adaptive_step(f, m, b, right, 0.5 * tol, depth - 1, rule);
}
}  // namespace detail

// bisects until a panel agrees with its two halves to the local share of tol
template <class F>
double integrate_adaptive(F&& f, double a, double b, double tol, const QuadratureRule& rule, int max_depth = 40) {
  double whole = integrate_composite(f, a, b, 1, rule);
  return detail::adaptive_step(f, a, b, whole, tol, max_depth, rule);
}

const QuadratureRule& default_rule();

struct GIntegral {
  double value;
  double cutoff;      // u* (in the original variable)
  double tail_bound;  // bound on the discarded integral beyond u*
};

// g(y) = e^{-2y^3} int_0^inf e^{3y^2 u - u^3} du
GIntegral g_integral(double y, double tol = 1e-13);
double g_of_y(double y);
// same integral by a fixed composite rule, used for step-halving checks
double g_of_y_composite(double y, int panels);

struct GMaximum {
  double y;
  double value;
};

GMaximum sup_g(double grid_step = 0.01);

}  // namespace zc::numerics
