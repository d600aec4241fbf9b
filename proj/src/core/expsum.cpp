#include "expsum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"
#include "vinogradov.hpp"

namespace zc::expsum {

namespace {

std::string num(double x) { return report::format_double(x); }

double logsumexp(std::initializer_list<double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

OptimizerConfig OptimizerConfig::with_y(double y) {
  OptimizerConfig c;
  c.Y = y;
  c.D = 0.1019 * y;
  return c;
}

void OptimizerConfig::validate() const {
  if (!(0 < mu2 && mu2 < mu1 && mu1 < 1)) raise(ErrorCode::invalid_argument, "need 0 < mu2 < mu1 < 1");
  if (mu1 + mu2 >= 1) raise(ErrorCode::invalid_argument, "need mu1 + mu2 < 1");
  if (!(Y > 0) || !(xi > 0) || !(sigma > 0) || !(goal_u > 0)) raise(ErrorCode::invalid_argument, "Y, xi, sigma, goal_u must be positive");
}

std::vector<double> breakpoints(double lam_lo, double lam_hi, const OptimizerConfig& cfg) {
  if (!(80 < lam_lo && lam_lo < lam_hi && lam_hi < 300))
    raise(ErrorCode::range, "lambda range must satisfy 80 < lo < hi < 300, got [" + num(lam_lo) + ", " + num(lam_hi) + "]");
  cfg.validate();
  std::vector<double> bp{lam_lo, lam_hi};
  double a = 1 - cfg.mu1, b = 1 - cfg.mu2, c = 1 - cfg.mu1 - cfg.mu2;
  int64_t top = static_cast<int64_t>(lam_hi / c) + 10;
  for (int64_t i = 1; i <= top; ++i) {
    double w = static_cast<double>(i);
    for (double x : {w * a, w * b, (w - 0.000003) * c})
      if (x > lam_lo && x < lam_hi) bp.push_back(x);
  }
  std::sort(bp.begin(), bp.end());
  std::vector<double> out;
  for (double x : bp)
    if (out.empty() || x - out.back() > 1e-12) out.push_back(x);
  return out;
}

RhoTheta rho_theta_lookup(int64_t k) {
  if (k < 129) raise(ErrorCode::range, "rho/theta table starts at k=129, got k=" + std::to_string(k));
  const auto& row = vinogradov::published_row(k);
  return {row.rho, row.theta};
}

IntervalFloors make_interval(double lam1, double lam2, const OptimizerConfig& cfg) {
  if (!(lam1 < lam2)) raise(ErrorCode::invalid_argument, "interval needs lam1 < lam2");
  IntervalFloors iv;
  iv.lam1 = lam1;
  iv.lam2 = lam2;
  iv.lam_mid = 0.5 * (lam1 + lam2);
  iv.m1 = static_cast<int64_t>(std::floor(iv.lam_mid / (1 - cfg.mu1)));
  iv.m2 = static_cast<int64_t>(std::floor(iv.lam_mid / (1 - cfg.mu2)));
  iv.k = static_cast<int64_t>(iv.lam_mid / (1 - cfg.mu1 - cfg.mu2) + 0.000003);
  return iv;
}

IntervalEval interval_eval(const IntervalFloors& iv, const Witness& w, const OptimizerConfig& cfg) {
  if (w.g < 100 || w.g > 1.254 * iv.lam1)
    raise(ErrorCode::invalid_argument, "g=" + std::to_string(w.g) + " outside [100, 1.254 lam1]");
  if (w.h < 2 || w.h >= w.g + 1) raise(ErrorCode::invalid_argument, "need 2 <= h <= g");
  if (w.s < 1) raise(ErrorCode::invalid_argument, "need s >= 1");

  IntervalEval e;
  e.k = iv.k;
  auto [rho, theta] = rho_theta_lookup(iv.k);
  e.rho = rho;
  e.theta = theta;
  double kk = static_cast<double>(iv.k), k2 = kk * kk, logk = std::log(kk);
  e.r = static_cast<int64_t>(rho * k2 + 1.0);
  e.t = w.g - w.h + 1;
  double rr = static_cast<double>(e.r), ss = static_cast<double>(w.s), gg = static_cast<double>(w.g),
         hh = static_cast<double>(w.h), tt = static_cast<double>(e.t);
  double m1 = static_cast<double>(iv.m1), m2 = static_cast<double>(iv.m2);
  double lam1 = iv.lam1, lam2 = iv.lam2;

  e.z0 = 0.5 * ((m1 * m1 + m1) * (1 - cfg.mu1) + (m2 * m2 + m2) * (1 - cfg.mu2) - hh * hh + hh -
                (1 - cfg.mu1 - cfg.mu2) * (gg * gg + gg));
  e.z1 = hh + gg - m1 - m2 - 1;
  e.h_prime = e.z1 < 0 ? e.z0 + lam2 * e.z1 : e.z0 + lam1 * e.z1;

  double reta = cfg.xi * std::pow(gg, 1.5);
  e.e1 = 0.001 * k2;
  e.e2 = 0.5 * tt * (tt - 1) + hh * tt * std::exp(-ss / (hh * tt)) + ss * ss / (2 * tt * reta);
  e.e3 = std::log(cfg.Y * lam1 * lam1) / (cfg.Y * std::pow(lam1, 4));
  e.e_prime = e.e3 - (e.h_prime - cfg.mu1 * e.e1 - cfg.mu2 * e.e2) / (2 * rr * ss);
  double ex = -e.e_prime * lam1 * lam1;
  e.u = 1.0 / ex;

  double lg = std::log(gg);
  e.log_c1 = theta * k2 * kk * logk;
  e.log_c2 = ss * ss / tt + 10.5 * cfg.xi * cfg.xi * tt * gg * gg * lg * lg / cfg.D -
             ss * std::log(0.1 * reta) * ((reta + hh) * std::pow(1 - 1 / hh, ss / tt) - hh);
  e.log_c3 = 1.0417 * reta * std::log(10.4167 * reta);
  double log_c = e.log_c3 / rr + (4.65 * lam2 * std::log(lam2) + e.log_c1 + e.log_c2) / (2 * rr * ss);
  e.c = std::exp(log_c) + 1 / kk;
  e.viable = e.e_prime < 0 && e.u > 0 && e.u <= cfg.goal_u;
  return e;
}

std::optional<LambdaInterval> try_optimize_interval(const IntervalFloors& iv, const OptimizerConfig& cfg, SSearch search) {
  int64_t g0 = iv.m1 + 1, h1 = iv.m2;
  std::optional<LambdaInterval> best;
  auto consider = [&](int64_t g, int64_t h, int64_t s) {
    IntervalEval e = interval_eval(iv, {g, h, s}, cfg);
    if (!e.viable) return;
    if (best && !(e.c < best->C)) return;
    LambdaInterval li;
    li.lam1 = iv.lam1;
    li.lam2 = iv.lam2;
    li.m1 = iv.m1;
    li.m2 = iv.m2;
    li.k = iv.k;
    li.g = g;
    li.h = h;
    li.t = e.t;
    li.s = s;
    li.r = e.r;
    li.u = e.u;
    li.C = e.c;
    li.feasible = true;
    best = li;
  };
  for (int64_t g : {g0, g0 + 1}) {
    for (int64_t h : {h1 - 1, h1}) {
      if (g < 100 || g > 1.254 * iv.lam1) continue;
      int64_t t = g - h + 1;
      if (t < 1) continue;
      int64_t s_fixed = static_cast<int64_t>(cfg.sigma * h * t + 1);
      if (search == SSearch::fixed_sigma) {
        consider(g, h, s_fixed);
      } else {
        int64_t lo = std::max<int64_t>(1, (h * (t - 1) + 3) / 4), hi = h * t / 2;
        for (int64_t s = lo; s <= hi; ++s) consider(g, h, s);
        if (s_fixed < lo || s_fixed > hi) consider(g, h, s_fixed);
      }
    }
  }
  return best;
}

LambdaInterval optimize_interval(const IntervalFloors& iv, const OptimizerConfig& cfg, SSearch search) {
  auto r = try_optimize_interval(iv, cfg, search);
  if (!r)
    raise(ErrorCode::infeasible_interval, "no viable (g,h,s) on [" + num(iv.lam1) + ", " + num(iv.lam2) + "]");
  return *r;
}

SweepResult sweep(double lam_lo, double lam_hi, const OptimizerConfig& cfg, const SweepOptions& opt) {
  auto bp = breakpoints(lam_lo, lam_hi, cfg);
  std::size_t n = bp.size() - 1;
  auto rows = parallel_map<LambdaInterval>(n, opt.threads, [&](std::size_t i) {
    IntervalFloors iv = make_interval(bp[i], bp[i + 1], cfg);
    if (opt.allow_infeasible) {
      auto r = try_optimize_interval(iv, cfg, opt.search);
      if (r) return *r;
      LambdaInterval li;
      li.lam1 = iv.lam1;
      li.lam2 = iv.lam2;
      li.m1 = iv.m1;
      li.m2 = iv.m2;
      li.k = iv.k;
      return li;
    }
    return optimize_interval(iv, cfg, opt.search);
  });
  SweepResult res;
  res.intervals = std::move(rows);
  for (std::size_t i = 0; i < res.intervals.size(); ++i) {
    const auto& li = res.intervals[i];
    if (!li.feasible) {
      ++res.infeasible;
      continue;
    }
    if (li.u > res.max_u) {
      res.max_u = li.u;
      res.binding_index = i;
    }
    if (li.C > res.max_c) {
      res.max_c = li.C;
      res.max_c_index = i;
    }
  }
  return res;
}

double large_h2(double gamma, double phi, double mu1, double mu2) {
  double c = 1 - mu1 - mu2;
  return phi + gamma - 0.5 * gamma * gamma - 0.5 * c * phi * phi - (2 - mu1 - mu2) / (2 * (1 - mu1) * (1 - mu2));
}

double large_f(double gamma, double phi, const LargeLambdaParams& p) {
  double d = phi - gamma, k1 = p.k1();
  double h2 = large_h2(gamma, phi, p.mu1, p.mu2);
  double inner = 0.001 * p.mu1 / d + (1 / (k1 * k1)) * (-h2 / d + 1.00001 * p.mu2 * (0.5 * d + gamma * std::exp(-p.sigma)));
  return inner / (2.00002 * p.sigma * gamma);
}

LargeLambdaResult large_lambda_check(const LargeLambdaParams& p) {
  LargeLambdaResult r;
  double k0 = p.k0(), lam = p.lambda_min;
  r.f = large_f(p.gamma, p.phi, p);
  r.g1 = p.mu2 * p.sigma * p.gamma * std::pow(p.phi, -1.5) / (24 * k0 * k0);
  r.g2 = 0.0392 / (2.00002 * p.sigma * p.gamma * k0 * k0);
  r.e3_term = std::log(p.Y * lam * lam) / (7.6 * p.Y * lam * lam);
  r.tail_terms = 1.56e-7 + (0.0008 / std::sqrt(lam) + 0.0213552 / lam) / p.rho;
  r.final_value = 0.0000473 + r.f / p.rho;

  double g_lo = 1.17928 - 1.0 / 440, g_hi = 1.17928 + 1.0 / 440;
  double p_lo = 1.24788 - 1.0 / 440, p_hi = 1.24788 + 1.0 / 440;
  r.grid_max_f = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    double g = g_lo + (g_hi - g_lo) * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      double ph = p_lo + (p_hi - p_lo) * j / 19.0;
      r.grid_max_f = std::max(r.grid_max_f, large_f(g, ph, p));
    }
  }

  r.checks.push_back(report::check_upper("f(corner) <= -0.024287046496", r.f, -0.024287046496));
  r.checks.push_back(report::check_upper("G1 <= 0.0008", r.g1, 0.0008));
  r.checks.push_back(report::check_upper("G2 <= 0.0213552", r.g2, 0.0213552));
  r.checks.push_back(report::check_upper("log(Y lam^2)/(7.6 Y lam^2) <= 1.56e-7", r.e3_term, 1.56e-7));
  r.checks.push_back(report::check_upper("tail terms <= 0.0000473", r.tail_terms, 0.0000473));
  r.checks.push_back(report::check_upper("0.0000473 + f/rho <= -1/132.94357", r.final_value, -1.0 / 132.94357));
  r.checks.push_back(report::check_upper("grid max f <= f(corner)", r.grid_max_f, r.f, {numerics::RoundingPolicy::Mode::nearest, 0.0}));
  return r;
}

double wj_bound(int64_t j, double s, double r, double m1, double m2, double n, double t) {
  if (j < 1) raise(ErrorCode::invalid_argument, "need j >= 1");
  if (!(s > 0 && r > 0 && m1 >= 1 && m2 > 0 && n > 0 && t > 0)) raise(ErrorCode::invalid_argument, "wj_bound needs positive inputs, M1 >= 1");
  double jj = static_cast<double>(j), fm1 = std::floor(m1);
  double m2j = std::pow(m2, jj), fm1j = std::pow(fm1, jj);
  double first = 2 * s * m2j;
  double second = 2 * s * m2j / (r * fm1j) + s * t * m2j / (std::numbers::pi * jj * std::pow(n, jj)) +
                  4 * std::numbers::pi * jj * std::pow(2 * n, jj) / (r * t * fm1j) + 2;
  return std::min(first, second);
}

double log_wj_bound(int64_t j, double s, double r, double log_m1, double log_m2, double log_n, double log_t) {
  if (j < 1) raise(ErrorCode::invalid_argument, "need j >= 1");
  if (!(s > 0 && r > 0 && log_m1 >= 0)) raise(ErrorCode::invalid_argument, "log_wj_bound needs s, r > 0 and M1 >= 1");
  double jj = static_cast<double>(j), ls = std::log(s), lr = std::log(r), pi = std::numbers::pi;
  double log_floor_m1 = log_m1 + std::log1p(-std::exp(-log_m1));  // lower bound for log floor(M1)
  double first = std::log(2.0) + ls + jj * log_m2;
  double second = logsumexp({std::log(2.0) + ls + jj * log_m2 - lr - jj * log_floor_m1,
                             ls + log_t + jj * log_m2 - std::log(pi * jj) - jj * log_n,
                             std::log(4 * pi * jj) + jj * (std::log(2.0) + log_n) - lr - log_t - jj * log_floor_m1,
                             std::log(2.0)});
  return std::min(first, second);
}

IncompleteBound incomplete_system_bound(int64_t g, int64_t h, int64_t s, int64_t t, double log_p, double eta, double D) {
  std::vector<std::string> bad;
  double gg = static_cast<double>(g), hh = static_cast<double>(h);
  if (g < 60) bad.push_back("g >= 60");
  if (hh < 0.9 * gg || h > g - 2) bad.push_back("h in [0.9g, g-2]");
  if (t < 1) bad.push_back("t >= 1");
  if (s < 2 * t || s > (h / 2) * t) bad.push_back("s in [2t, floor(h/2) t]");
  if (D < 10) bad.push_back("D >= 10");
  if (!(log_p >= D * gg * gg)) bad.push_back("log P >= D g^2");
  if (!(eta > 2 / (gg * gg * gg) && eta <= 1 / (2 * gg))) bad.push_back("eta in (2g^-3, (2g)^-1]");
  double q = 4 * std::log(gg) / (D * gg * gg * eta);
  if (!(q >= 18 / gg && q <= 0.4)) bad.push_back("4 log g/(D g^2 eta) in [18/g, 0.4]");
  if (!bad.empty()) {
    std::string msg = "hypotheses violated:";
    for (const auto& b : bad) msg += " " + b + ";";
    raise(ErrorCode::hypothesis_violation, msg);
  }
  double ss = static_cast<double>(s), tt = static_cast<double>(t), lg = std::log(gg);
  IncompleteBound b;
  b.log_a = ss * ss / tt + 10.5 * tt * lg * lg / (D * gg * eta * eta) +
            ss * ((1 / eta + hh) * std::pow(1 - 1 / hh, ss / tt) - hh) * std::log(10 * eta);
  b.e = 2 * ss - tt * (hh + gg) / 2 + tt * (tt - 1) / 2 + eta * ss * ss / (2 * tt) + hh * tt * std::exp(-ss / (hh * tt));
  return b;
}

double snt_bruteforce(int64_t N, double t, int u_grid, double m) {
  if (N < 2 || N > 10000) raise(ErrorCode::domain, "snt_bruteforce needs 2 <= N <= 10^4");
  if (!(t >= 0 && t <= 1e6)) raise(ErrorCode::domain, "snt_bruteforce needs 0 <= t <= 10^6");
  if (u_grid < 64) raise(ErrorCode::invalid_argument, "u grid needs at least 64 points");
  if (!(m > 1 && m <= 2)) raise(ErrorCode::domain, "need 1 < m <= 2");
  int64_t r_max = static_cast<int64_t>(std::floor(m * static_cast<double>(N)));
  double best = 0.0;
  for (int i = 1; i <= u_grid; ++i) {
    long double u = static_cast<long double>(i) / u_grid;
    std::complex<double> acc = 0.0;
    for (int64_t n = N; n <= r_max; ++n) {
      long double ph = std::fmod(static_cast<long double>(t) * std::log(static_cast<long double>(n) + u), 2 * std::numbers::pi_v<long double>);
      double p = static_cast<double>(ph);
      acc += std::complex<double>(std::cos(p), -std::sin(p));
      if (n > N) best = std::max(best, std::abs(acc));
    }
  }
  return best;
}

double snt_bound(double N, double t) {
  if (!(N >= 2)) raise(ErrorCode::domain, "need N >= 2");
  if (!(t >= N)) raise(ErrorCode::domain, "need t >= N");
  double lam = std::log(t) / std::log(N);
  return 8.7979 * std::pow(N, 1 - 1 / (132.94357 * lam * lam));
}

double snt_bound_m(double N, double t, double m) {
  if (!(m >= 1.001 && m <= 2)) raise(ErrorCode::domain, "need 1.001 <= m <= 2");
  if (!(N >= 2)) raise(ErrorCode::domain, "need N >= 2");
  double lam = std::log(t) / std::log(N);
  if (!(lam >= 84)) raise(ErrorCode::domain, "the m-variant needs lambda >= 84");
  return (m - 1) * 8.7979 * std::pow(N, 1 - 1 / (132.94357 * lam * lam));
}

}  // namespace zc::expsum
