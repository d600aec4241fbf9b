#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "core/errors.hpp"
#include "core/vinogradov.hpp"
#include "oracles.hpp"

using namespace zc::vinogradov;

TEST_CASE("published table lookups") {
  CHECK(published_row(130).rho == 3.177207);
  CHECK(published_row(130).theta == 2.40930);
  CHECK(published_row(499).rho == 3.196497);
  CHECK(published_row(499).theta == 2.24352);
  CHECK(published_row(90000).rho == 3.208630);
  CHECK(published_row(90000).theta == 2.17720);
  CHECK(published_table().size() == 10);
  CHECK_THROWS_AS(published_row(128), zc::Error);
}

TEST_CASE("phi sequence ends at 1/r") {
  auto p = phi_sequence(200, 190, 5000.0);
  REQUIRE(!p.phis.empty());
  CHECK(p.phis.back() == doctest::Approx(1.0 / 190));
  CHECK(static_cast<int64_t>(p.phis.size()) == p.j);
  CHECK(p.y == 2 * 5000.0 - 10.0 * 11.0);
  CHECK_THROWS_AS(phi_sequence(200, 3, 5000.0), zc::Error);
  CHECK_THROWS_AS(phi_sequence(200, 201, 5000.0), zc::Error);
}

TEST_CASE("next delta matches the full backward loop") {
  int64_t k = 300;
  for (double delta : {40000.0, 9000.0, 500.0}) {
    auto [lo, hi] = r_window(k, delta);
    for (int64_t r = std::max<int64_t>(lo, 4); r <= std::min(hi, k); ++r) {
      auto p = phi_sequence(k, r, delta);
      auto nd = next_delta(k, r, delta);
      if (!p.star_admissible) {
        CHECK_FALSE(nd.has_value());
        continue;
      }
      REQUIRE(nd.has_value());
      double expect = delta - k + 0.5 * p.phis.front() * (2.0 * k * r - p.y);
      CHECK(*nd == doctest::Approx(expect).epsilon(1e-13));
    }
  }
}

TEST_CASE("r window needs a real root") {
  CHECK_THROWS_AS(r_window(100, 100.0 * 101.0), zc::Error);
  auto c = choose_r(300, 40000.0);
  auto [lo, hi] = r_window(300, 40000.0);
  CHECK(c.r >= std::max<int64_t>(lo, 4));
  CHECK(c.r <= std::min<int64_t>(hi, 300));
  CHECK(c.delta < 40000.0);
  CHECK(*next_delta(300, c.r, 40000.0) == c.delta);
}

TEST_CASE("omega fixed point") {
  auto cfg = omega_config(200);
  double k3 = 200.0 * 200 * 200 * std::log(200.0);
  CHECK(cfg.omega == doctest::Approx(1.5 / (std::log(18 * k3 / cfg.omega) - 1.5)).epsilon(1e-10));
  CHECK(cfg.goal == doctest::Approx(40.0));
}

TEST_CASE("program 2 start index") {
  for (int64_t k : {500, 1000, 10000, 20000, 50000, 80000, 89999}) {
    auto s = StartPoint::program2(k);
    CHECK(s.n == static_cast<int64_t>(std::ceil(0.1247 * static_cast<double>(k))));
    CHECK(s.delta == doctest::Approx(0.4 * k * k));
  }
}

TEST_CASE("recursion agrees with the listing transliteration") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<long> dist(129, 2000);
  for (int i = 0; i < 20; ++i) {
    long k = dist(rng);
    auto ours = certify_k(k);
    auto ref = oracle::listing_program(k, k < 500 ? 1 : 2);
    CHECK(ours.s == ref.s);
    CHECK(std::fabs(ours.rho - ref.rho) <= 1e-9 * ref.rho);
    CHECK(std::fabs(ours.theta - ref.theta) <= 1e-9 * ref.theta);
  }
}

TEST_CASE("lemma eta indexing overshoots the first theta row") {
  double worst = 0;
  for (int64_t k = 129; k <= 137; ++k) worst = std::max(worst, certify_k(k, EtaIndexing::lemma).theta);
  CHECK(worst > 2.40930);
  CHECK(certify_k(129, EtaIndexing::lemma).theta > certify_k(129).theta);
}

TEST_CASE("certify k range") {
  CHECK(certify_k(499).program == Program::one);
  CHECK(certify_k(500).program == Program::two);
  CHECK_THROWS_AS(certify_k(90000), zc::Error);
}

TEST_CASE("trace rows") {
  auto cfg = omega_config(150);
  auto res = iterate_system(cfg, StartPoint::program1(150), true);
  REQUIRE(res.trace.rows.size() >= 2);
  CHECK(res.trace.rows.front().r == 0);
  for (std::size_t i = 1; i < res.trace.rows.size(); ++i) {
    CHECK(res.trace.rows[i].delta < res.trace.rows[i - 1].delta);
    CHECK(res.trace.rows[i].log_c > res.trace.rows[i - 1].log_c);
  }
  CHECK(res.trace.rows.back().delta <= cfg.goal);
}

TEST_CASE("sample ks") {
  auto g = sample_ks(129, 90000, SampleMode::geometric);
  CHECK(g.front() == 129);
  CHECK(g.back() == 89999);
  for (int64_t e : {137, 138, 499, 500}) CHECK(std::find(g.begin(), g.end(), e) != g.end());
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(std::adjacent_find(g.begin(), g.end()) == g.end());
  auto e = sample_ks(129, 200, SampleMode::endpoints);
  CHECK(e.front() == 129);
  CHECK(e.back() == 200);
  CHECK(sample_ks(129, 300, SampleMode::full).size() == 172);
}

TEST_CASE("analytic row at 90000") {
  auto a = analytic_row(90000);
  double k = 90000, D = 90;
  double q = D / k;
  double br = 0.6494 + std::log(8 * k / (25 * D)) - (1 - q) / (2 - q) * q + 2.051 / k;
  CHECK(a.rho_closed_form == doctest::Approx(0.5 * br + 1 / k).epsilon(1e-15));
  CHECK(a.rho_closed_form == doctest::Approx(3.2086331285).epsilon(1e-10));
  CHECK(a.n == static_cast<int64_t>(std::ceil(0.5 * k * br)));
  CHECK(a.rho_witness <= 3.20863);
  CHECK(a.delta_bound <= a.goal);
  CHECK_THROWS_AS(analytic_row(89999), zc::Error);
}

TEST_CASE("delta_s at s = nk carries an e^{2/k} factor") {
  int64_t k = 90000;
  double D = 90;
  int64_t n = static_cast<int64_t>(std::ceil(0.138128 * k)) + 1;
  auto b = analytic_delta_bound(k, n, D);
  double ds = delta_s_bound(k, n * k, D);
  CHECK(ds == doctest::Approx(b.delta_bound * std::exp(2.0 / k)).epsilon(1e-12));
  CHECK_THROWS_AS(delta_s_bound(k, 1, D), zc::Error);
}
