#include "zetabounds.hpp"

#include <array>
#include <cstdio>
#include <cmath>
#include <limits>
#include <numbers>

#include "errors.hpp"
#include "parallel.hpp"

namespace zc::zetabounds {

namespace {

using cd = std::complex<double>;

// B_2 .. B_22
constexpr std::array<double, 11> kBernoulli = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
    7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330, 854513.0 / 138};

constexpr int kTerms = 10;

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Neumaier {
  double s = 0, c = 0;
  void add(double x) {
    double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

struct Partial {
  Neumaier re, im;
  double abs_sum = 0.0;
  double round = 0.0;
};

// adds (n+u)^{-s} for n in [from, to)
void accumulate(Partial& p, long from, long to, double sigma, double t, double u) {
  constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double eps_ld = std::numeric_limits<long double>::epsilon();
  for (long n = from; n < to; ++n) {
    long double x = static_cast<long double>(n) + u;
    long double lx = std::log(x);
    long double ph = std::fmod(static_cast<long double>(t) * lx, two_pi);
    double mag = std::exp(-sigma * static_cast<double>(lx));
    double p_ = static_cast<double>(ph);
    p.re.add(mag * std::cos(p_));
    p.im.add(-mag * std::sin(p_));
    p.abs_sum += mag;
    p.round += mag * (std::fabs(t) * static_cast<double>(lx) * 4 * eps_ld + 4 * eps);
  }
}

struct Tail {
  cd value;
  double remainder;
};

Tail em_tail(double sigma, double t, double a) {
  cd s(sigma, t);
  double la = std::log(a);
  auto apow = [&](cd e) { return std::exp(e * la); };
  cd val = apow(1.0 - s) / (s - 1.0) + apow(-s) / 2.0;
  cd poch = s;  // (s)_{2j-1}
  for (int j = 1; j <= kTerms; ++j) {
    val += kBernoulli[j - 1] / factorial(2 * j) * poch * apow(-s - static_cast<double>(2 * j - 1));
    poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
  }
  // poch now holds (s)_{2m-1} with m = kTerms+1; one more factor for (s)_{2m}
  int m = kTerms + 1;
  double poch2m = std::abs(poch * (s + static_cast<double>(2 * m - 1)));
  double rem = 2 * std::fabs(kBernoulli[m - 1]) / factorial(2 * m) * poch2m * std::exp((1 - sigma - 2 * m) * la) /
               (sigma + 2 * m - 1);
  return {val, rem};
}

}  // namespace

double constant_B(double D) {
  if (!(D > 0)) raise(ErrorCode::domain, "need D > 0");
  return 2.0 / 9.0 * std::sqrt(3 * D);
}

double constant_A(double C, double D, double t0) {
  if (!(C > 0 && D > 0)) raise(ErrorCode::domain, "need C, D > 0");
  if (!(t0 >= 3)) raise(ErrorCode::domain, "need t0 >= 3");
  return (C + 1 + 1e-80) / std::pow(std::log(t0), 2.0 / 3.0) + 1.569 * C * std::cbrt(D);
}

double pnt_constant_d(double c) {
  if (!(c > 0)) raise(ErrorCode::domain, "need c > 0");
  return std::pow(std::pow(5.0, 6) / (4.0 * 81.0 * c * c * c), 0.2);
}

double m_variant_constant(double m, double C, double D, double t0) {
  if (!(m > 1 && m <= 2)) raise(ErrorCode::domain, "need 1 < m <= 2");
  if (!(C > 0 && D > 0)) raise(ErrorCode::domain, "need C, D > 0");
  if (!(t0 >= 1e90)) raise(ErrorCode::domain, "need t0 >= 1e90");
  return ((m - 1) * C + 1 + 1e-77) / std::pow(std::log(t0), 2.0 / 3.0) +
         kKernelConstant * (m - 1) * C * std::cbrt(D) / std::log(m);
}

BoundConstants BoundConstants::compute() {
  BoundConstants b;
  b.A = constant_A(b.C, b.D, b.t0);
  b.B = constant_B(b.D);
  b.d = pnt_constant_d(b.c_asym);
  return b;
}

std::string case_name(ChainCase c) {
  switch (c) {
    case ChainCase::low_sigma: return "low-sigma-21.3";
    case ChainCase::high_sigma_small_t: return "high-sigma-36.8";
    case ChainCase::high_sigma_large_t: return "high-sigma-70.6199";
  }
  return "?";
}

ChainBound small_t_chain(double sigma, double t) {
  if (!(sigma >= 0.5 && sigma <= 1) || !(t >= 3))
    raise(ErrorCode::domain, "no bound chain for sigma=" + report::format_double(sigma) + ", t=" + report::format_double(t));
  double x = 1 - sigma;
  double base = std::pow(t, 4 * std::pow(x, 1.5));
  if (sigma < 15.0 / 16.0) return {ChainCase::low_sigma, 21.3 * base, 21.3};
  if (t < 1e6) return {ChainCase::high_sigma_small_t, 36.8, 36.8};
  if (t > 1e108)
    raise(ErrorCode::domain, "no bound chain for sigma=" + report::format_double(sigma) + ", t=" + report::format_double(t));
  double lt = std::log(t);
  ChainBound c{ChainCase::high_sigma_large_t, 70.6199 * base * std::pow(lt, 2.0 / 3.0),
               1.123 * std::exp(lt / 108) * std::cbrt(lt)};
  c.chain_lhs = std::pow(t + 1.5, x) * (1 + 1 / t + std::log(2 * t + 1));
  c.chain_mid = 1.123 * std::pow(t, x) * lt;
  return c;
}

double theorem2_bound(double sigma, double t, double A, double B) {
  return A * std::pow(t, B * std::pow(1 - sigma, 1.5)) * std::pow(std::log(t), 2.0 / 3.0);
}

double uniform_bound(double sigma, double t) {
  return 58.1 * std::pow(t, 4 * std::pow(1 - sigma, 1.5)) * std::pow(std::log(t), 2.0 / 3.0);
}

ZetaValue hurwitz_zeta(double sigma, double t, double u, double precision_target) {
  if (!(sigma >= 0.5 && sigma <= 2)) raise(ErrorCode::domain, "hurwitz_zeta needs 1/2 <= sigma <= 2");
  if (!(u > 0 && u <= 1)) raise(ErrorCode::domain, "hurwitz_zeta needs 0 < u <= 1");
  if (!(std::fabs(t) <= 1e6)) raise(ErrorCode::domain, "hurwitz_zeta needs |t| <= 1e6");
  if (!(precision_target >= 1e-10)) raise(ErrorCode::domain, "precision target must be >= 1e-10");
  if (sigma == 1 && t == 0) raise(ErrorCode::domain, "pole at s = 1");

  constexpr double eps = std::numeric_limits<double>::epsilon();
  long N = std::max(50L, static_cast<long>(std::ceil(2 * std::fabs(t))));
  Partial p;
  accumulate(p, 0, N, sigma, t, u);
  auto finish = [&](long n) {
    Tail tl = em_tail(sigma, t, static_cast<double>(n) + u);
    cd v = cd(p.re.value(), p.im.value()) + tl.value;
    double err = tl.remainder + p.round + 2 * eps * p.abs_sum + 4 * eps * std::abs(tl.value);
    return std::pair{v, err};
  };
  auto [v1, e1] = finish(N);
  accumulate(p, N, 2 * N, sigma, t, u);
  auto [v2, e2] = finish(2 * N);
  double diff = std::abs(v1 - v2);
  if (diff > precision_target + e1 + e2)
    raise(ErrorCode::precision, "doubled-N disagreement " + report::format_double(diff));
  if (e1 > precision_target)
    raise(ErrorCode::precision, "error estimate " + report::format_double(e1) + " above target");
  return {v1, e1, N};
}

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> g;
  const double ts[] = {3, 5, 10, 30, 100, 300, 1e3, 3e3, 1e4, 3e4, 1e5, 3e5, 1e6};
  for (int i = 0; i <= 10; ++i) {
    double sigma = 0.5 + 0.05 * i;
    if (i == 10) sigma = 1.0;
    for (double t : ts) g.push_back({sigma, t});
  }
  return g;
}

ZetaCheckResult verify_theorem2(const std::vector<GridPoint>& grid, unsigned threads, double precision_target) {
  for (const auto& p : grid)
    if (!(p.sigma >= 0.5 && p.sigma <= 1 && p.t >= 3 && p.t <= 1e6))
      raise(ErrorCode::domain, "grid point outside 1/2 <= sigma <= 1, 3 <= t <= 1e6");
  auto values = parallel_map<ZetaValue>(grid.size(), threads, [&](std::size_t i) {
    return hurwitz_zeta(grid[i].sigma, grid[i].t, 1.0, precision_target);
  });
  ZetaCheckResult r;
  r.table = {"zeta", {"sigma", "t", "zeta_abs", "bound", "margin", "case"}, {}};
  numerics::RoundingPolicy pol;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double sigma = grid[i].sigma, t = grid[i].t;
    const auto& z = values[i];
    double za = std::abs(z.value), zm1 = std::abs(z.value - 1.0);
    auto add = [&](const std::string& kind, double value, double bound) {
      char label[96];
      std::snprintf(label, sizeof label, "%s sigma=%.4g t=%.6g", kind.c_str(), sigma, t);
      auto c = report::check_upper(label, value + z.error, bound, pol);
      r.table.rows.push_back({sigma, t, value, bound, c.margin, kind});
      r.checks.push_back(std::move(c));
    };
    add("theorem2", za, theorem2_bound(sigma, t));
    add("uniform-58.1", za, uniform_bound(sigma, t));
    ChainBound cb = small_t_chain(sigma, t);
    add(case_name(cb.which), cb.which == ChainCase::low_sigma ? za : zm1, cb.bound);
  }
  return r;
}

}  // namespace zc::zetabounds
