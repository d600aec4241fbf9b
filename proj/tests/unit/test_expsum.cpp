#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/expsum.hpp"

using namespace zc::expsum;

namespace {

IntervalFloors interval_at(double lam, const OptimizerConfig& cfg) {
  auto bp = breakpoints(84, 220, cfg);
  for (std::size_t i = 0; i + 1 < bp.size(); ++i)
    if (bp[i] <= lam && lam < bp[i + 1]) return make_interval(bp[i], bp[i + 1], cfg);
  throw std::runtime_error("no interval");
}

}  // namespace

TEST_CASE("breakpoints guard and dedup") {
  OptimizerConfig cfg;
  CHECK_THROWS_AS(breakpoints(80, 90, cfg), zc::Error);
  CHECK_THROWS_AS(breakpoints(90, 300, cfg), zc::Error);
  CHECK_THROWS_AS(breakpoints(90, 90, cfg), zc::Error);
  auto bp = breakpoints(84, 220, cfg);
  CHECK(bp.front() == 84);
  CHECK(bp.back() == 220);
  for (std::size_t i = 1; i < bp.size(); ++i) CHECK(bp[i] - bp[i - 1] > 1e-12);
  double expected = 136 * (1 / (1 - cfg.mu1) + 1 / (1 - cfg.mu2) + 1 / (1 - cfg.mu1 - cfg.mu2));
  CHECK(std::fabs(static_cast<double>(bp.size()) - expected) < 4);
}

TEST_CASE("each breakpoint changes a floor") {
  OptimizerConfig cfg;
  auto bp = breakpoints(84, 120, cfg);
  for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
    auto below = make_interval(bp[i] - 2e-9, bp[i] - 1e-9, cfg);
    auto above = make_interval(bp[i] + 1e-9, bp[i] + 2e-9, cfg);
    bool changed = below.m1 != above.m1 || below.m2 != above.m2 || below.k != above.k;
    CHECK(changed);
  }
}

TEST_CASE("rho theta lookup") {
  CHECK(rho_theta_lookup(130).rho == 3.177207);
  CHECK(rho_theta_lookup(130).theta == 2.40930);
  CHECK(rho_theta_lookup(90000).rho == 3.208630);
  CHECK(rho_theta_lookup(499).theta == 2.24352);
  CHECK_THROWS_AS(rho_theta_lookup(128), zc::Error);
}

TEST_CASE("binding interval witness") {
  OptimizerConfig cfg;
  auto iv = interval_at(117.0, cfg);
  CHECK(iv.lam1 <= 117.0);
  CHECK(iv.lam2 > 117.0);
  auto e = interval_eval(iv, {146, 139, 368}, cfg);
  CHECK(e.t == 8);
  CHECK(e.e_prime < 0);
  CHECK(e.z1 >= -1);
  CHECK(e.z1 <= 1);
  CHECK(std::fabs(e.u - 132.94356999969648) < 1e-8);
  CHECK(e.viable);
  CHECK(e.h_prime > cfg.mu1 * e.e1 + cfg.mu2 * e.e2);
  auto li = optimize_interval(iv, cfg);
  CHECK(li.g == 146);
  CHECK(li.h == 139);
  CHECK(li.s == 368);
}

TEST_CASE("interval eval rejects g outside the window") {
  OptimizerConfig cfg;
  auto iv = interval_at(100.0, cfg);
  CHECK_THROWS_AS(interval_eval(iv, {99, 95, 100}, cfg), zc::Error);
  CHECK_THROWS_AS(interval_eval(iv, {200, 190, 100}, cfg), zc::Error);
}

TEST_CASE("first interval is feasible") {
  OptimizerConfig cfg;
  auto bp = breakpoints(84, 220, cfg);
  auto li = optimize_interval(make_interval(bp[0], bp[1], cfg), cfg);
  CHECK(li.feasible);
  CHECK(li.C <= 8.7979);
  CHECK(li.u <= cfg.goal_u);
  CHECK(li.t == li.g - li.h + 1);
  CHECK(li.r == static_cast<int64_t>(rho_theta_lookup(li.k).rho * li.k * li.k + 1));
}

TEST_CASE("wider s search never worsens C") {
  OptimizerConfig cfg;
  for (double lam : {85.0, 100.0, 150.0, 210.0}) {
    auto iv = interval_at(lam, cfg);
    auto a = optimize_interval(iv, cfg, SSearch::fixed_sigma);
    auto b = optimize_interval(iv, cfg, SSearch::wide);
    CHECK(b.C <= a.C);
  }
}

TEST_CASE("sweep maxima") {
  OptimizerConfig cfg;
  auto full = sweep(84, 220, cfg);
  CHECK(full.infeasible == 0);
  CHECK(full.max_c <= 8.7979);
  CHECK(full.max_u <= 132.94357);
  CHECK(std::fabs(full.max_u - 132.94357) < 1e-3);
  auto part = sweep(84, 85, cfg);
  CHECK(part.max_c <= full.max_c);
  CHECK(part.max_u <= full.max_u);
  SweepOptions two;
  two.threads = 2;
  auto par = sweep(84, 220, cfg, two);
  CHECK(par.max_c == full.max_c);
  CHECK(par.max_u == full.max_u);
  CHECK(std::exp(cfg.Y / cfg.goal_u) <= 8.7979);
}

TEST_CASE("lambda below 84 hits k outside the table") {
  OptimizerConfig cfg;
  CHECK_THROWS_AS(sweep(83, 84, cfg), zc::Error);
}

TEST_CASE("large lambda closed form") {
  LargeLambdaParams p;
  auto r = large_lambda_check(p);
  CHECK(r.f == doctest::Approx(-0.0242870455).epsilon(1e-8));
  CHECK(r.g1 == doctest::Approx(0.000793980673).epsilon(1e-8));
  CHECK(r.g2 == doctest::Approx(0.0213176946).epsilon(1e-8));
  CHECK(r.g1 <= 0.0008);
  CHECK(r.g2 <= 0.0213552);
  CHECK(r.e3_term <= 1.56e-7);
  CHECK(r.tail_terms <= 0.0000473);
  CHECK(r.checks.size() == 7);
  CHECK(p.k0() == doctest::Approx(1 / 0.6492 - 0.999997 / 220));
}

TEST_CASE("f is decreasing in gamma and increasing in phi on the box") {
  LargeLambdaParams p;
  double e = 1.0 / 440;
  CHECK(large_f(1.17928 - e, 1.24788, p) > large_f(1.17928 + e, 1.24788, p));
  CHECK(large_f(1.17928, 1.24788 + e, p) > large_f(1.17928, 1.24788 - e, p));
  CHECK(large_f(1.17928 - e, 1.24788 + e, p) == doctest::Approx(-0.0241576164).epsilon(1e-8));
}

TEST_CASE("w_j bound") {
  CHECK(wj_bound(3, 10, 5, 1, 2, 1e6, 1e3) == doctest::Approx(160.0));
  double second = 40.0 / 500 + 200 / (M_PI * 1000) + 8000 * M_PI / 5000 + 2;
  CHECK(wj_bound(1, 10, 5, 100.5, 2, 1000, 10) == doctest::Approx(second));
  for (int64_t j : {1, 3, 7}) {
    double s = 300, r = 50000, m1 = 1234.7, m2 = 321.2, n = 5e4, t = 1e6;
    double direct = std::log(wj_bound(j, s, r, m1, m2, n, t));
    double lg = log_wj_bound(j, s, r, std::log(m1), std::log(m2), std::log(n), std::log(t));
    CHECK(lg >= direct - 1e-12);
    CHECK(lg - direct < 1e-2);
  }
  CHECK_THROWS_AS(wj_bound(0, 1, 1, 1, 1, 1, 1), zc::Error);
}

TEST_CASE("product of w_j at lambda 100") {
  OptimizerConfig cfg;
  auto iv = interval_at(100.0, cfg);
  auto li = optimize_interval(iv, cfg);
  CHECK(li.g == 124);
  CHECK(li.h == 119);
  CHECK(li.s == 236);
  CHECK(li.r == 75462);
  double lam = 100, L = cfg.Y * lam * lam;
  double lhs = 0, sum_j = 0;
  for (int64_t j = li.h; j <= li.g; ++j) {
    lhs += log_wj_bound(j, static_cast<double>(li.s), static_cast<double>(li.r), cfg.mu1 * L, cfg.mu2 * L, L, lam * L);
    sum_j += static_cast<double>(j);
  }
  double gam = li.h / lam, phi = li.g / lam, m1 = cfg.mu1, m2 = cfg.mu2;
  double h2 = phi + gam - gam * gam / 2 - (1 - m1 - m2) / 2 * phi * phi - (2 - m1 - m2) / (2 * (1 - m1) * (1 - m2));
  double h1 = gam / 2 - phi / 2 * (1 - m1 - m2);
  double h0 = (2 - m1 - m2) / 8;
  double H = h2 * lam * lam + h1 * lam - h0;
  double rhs = li.g * li.g * std::log(2.0) + sum_j * m2 * L - H * L;
  CHECK(lhs == doctest::Approx(1306740.3827387616).epsilon(1e-9));
  CHECK(lhs <= rhs);
  CHECK((rhs - lhs) / L == doctest::Approx(0.07463803889826198).epsilon(1e-6));
}

TEST_CASE("incomplete system bound") {
  OptimizerConfig cfg;
  int64_t g = 146, h = 139, s = 368, t = 8;
  double reta = cfg.xi * std::pow(146.0, 1.5);
  double eta = 1 / reta;
  auto b = incomplete_system_bound(g, h, s, t, cfg.D * g * g, eta, cfg.D);
  double lg = std::log(146.0);
  double logc2 = 368.0 * 368 / 8 + 10.5 * cfg.xi * cfg.xi * 8 * 146.0 * 146 * lg * lg / cfg.D -
                 368 * std::log(0.1 * reta) * ((reta + 139) * std::pow(1 - 1 / 139.0, 368 / 8.0) - 139);
  CHECK(b.log_a == doctest::Approx(logc2).epsilon(1e-12));
  double e = 2 * 368.0 - 8 * (139 + 146) / 2.0 + 8 * 7 / 2.0 + eta * 368.0 * 368 / 16 + 139 * 8 * std::exp(-368.0 / (139 * 8));
  CHECK(b.e == doctest::Approx(e).epsilon(1e-13));

  CHECK_NOTHROW(incomplete_system_bound(g, h, 2 * t, t, cfg.D * g * g, eta, cfg.D));
  try {
    incomplete_system_bound(g, h, 2 * t - 1, t, cfg.D * g * g, eta, cfg.D);
    CHECK(false);
  } catch (const zc::Error& err) {
    CHECK(err.code() == zc::ErrorCode::hypothesis_violation);
  }
  CHECK_THROWS_AS(incomplete_system_bound(50, 45, 20, 6, cfg.D * 2500, 0.001, cfg.D), zc::Error);
  CHECK(1 / (3.612381 * std::pow(100.0, 1.5)) <= 1 / 200.0);
}

TEST_CASE("s(N,t) oracle") {
  CHECK(snt_bruteforce(10, 0.0) == doctest::Approx(11.0));
  double s = snt_bruteforce(10, 100.0);
  CHECK(s <= 11.0);
  CHECK(s <= snt_bound(10, 100));
  double a = snt_bruteforce(37, 5000.0, 256), b = snt_bruteforce(37, 5000.0, 512);
  CHECK(b >= a);
  CHECK((b - a) / a < 1e-2);
  CHECK(snt_bruteforce(20, 10.0, 64, 1.5) <= 11.0);
  CHECK_THROWS_AS(snt_bruteforce(1, 10.0), zc::Error);
  CHECK_THROWS_AS(snt_bruteforce(10, 10.0, 32), zc::Error);
}

TEST_CASE("s(N,t) bound") {
  CHECK(snt_bound(1000, 1000) == doctest::Approx(8.7979 * std::pow(1000.0, 1 - 1 / 132.94357)));
  CHECK_THROWS_AS(snt_bound(1000, 999), zc::Error);
  double N = 2, t = std::pow(2.0, 90);
  CHECK(snt_bound_m(N, t, 1.001) == doctest::Approx(0.001 * snt_bound(N, t)));
  CHECK_THROWS_AS(snt_bound_m(N, t, 1.0005), zc::Error);
  CHECK_THROWS_AS(snt_bound_m(N, std::pow(2.0, 80), 1.5), zc::Error);
}
