#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/tyrina.hpp"
#include "oracles.hpp"

using namespace zc::tyrina;

TEST_CASE("x of y basics") {
  CHECK(x_of_y(50, 50.0) == doctest::Approx(50.0));
  CHECK_THROWS_AS(x_of_y(50, 49.0), zc::Error);
  CHECK_THROWS_AS(x_of_y(50, 50.0 * 51 / 2), zc::Error);
  CHECK(x_of_y(50, 600.0) < x_of_y(50, 601.0));
}

TEST_CASE("y of x matches bisection") {
  for (int64_t k : {50, 129, 500, 5000, 90000}) {
    double kk = static_cast<double>(k);
    for (double frac : {0.0, 0.01, 0.1, 0.3, 0.5, 0.9, 0.999}) {
      double y = kk + (kk * (kk + 1) / 2 - kk) * frac;
      double x = x_of_y(k, y);
      double ref = oracle::y_of_x_bisect(k, x);
      CHECK(std::fabs(y_of_x(k, x) - ref) <= 1e-9 * ref);
    }
  }
}

TEST_CASE("y of x decreases toward the upper end") {
  double a = y_of_x(129, 2000.0), b = y_of_x(129, 3000.0);
  CHECK(a < b);
  CHECK(b < 129.0 * 130 / 2);
}

TEST_CASE("l0 matches 30-digit evaluation") {
  for (int64_t k : {50, 51, 129, 137, 499, 500, 1000, 5000, 12345, 90000}) CHECK(l0(k) == oracle::l0_multiprecision(k));
}

TEST_CASE("bound500 boundary") {
  CHECK(bound500_holds(500));
  CHECK_FALSE(bound500_holds(499));
  CHECK(bound500_holds(90000));
  CHECK(bound500_holds(1000000000));
}

TEST_CASE("0.1247 threshold starts at 3697") {
  auto holds = [](int64_t k) {
    double kk = static_cast<double>(k);
    return x_of_y(k, 0.101 * kk * kk) <= 0.1247 * kk * kk;
  };
  CHECK_FALSE(holds(50));
  CHECK_FALSE(holds(500));
  CHECK_FALSE(holds(3696));
  CHECK(holds(3697));
  CHECK(holds(5000));
  CHECK(holds(90000));
}

TEST_CASE("threshold checks list") {
  int64_t ks[] = {500, 5000};
  auto checks = threshold_checks(ks);
  CHECK(checks.size() == 5);
  CHECK(checks.back().name == "bound500 fails [k=499]");
  CHECK(checks.back().passed);
}

TEST_CASE("tyrina sequence") {
  auto st = tyrina_sequence(129, 40);
  REQUIRE(st.rows.size() == 40);
  CHECK(st.rows[0].s == 129);
  CHECK(st.rows[0].delta == 129.0);
  for (std::size_t i = 1; i < st.rows.size(); ++i) {
    CHECK(st.rows[i].s == st.rows[i - 1].s + st.rows[i - 1].r);
    CHECK(st.rows[i].delta > st.rows[i - 1].delta);
  }
  auto until = tyrina_sequence_until(129, 5000);
  CHECK(until.rows.back().s > 5000);
  CHECK(until.rows[until.rows.size() - 2].s <= 5000);
}

TEST_CASE("tyrina cases") {
  int64_t k = 129;
  TyrinaBounds tb(k, 20000);
  int64_t L = tb.l0();
  const auto& rows = tb.state().rows;
  REQUIRE(rows.size() > 3);

  auto c1 = tb(rows[1].s);
  CHECK(c1.which == TyrinaCase::sequence_point);
  CHECK(c1.kappa_lower == y_of_x(k, static_cast<double>(rows[1].s)));

  auto c3 = tb(rows[1].s + 1);
  CHECK(c3.which == TyrinaCase::between_sequence);

  CHECK(tb(L).which == TyrinaCase::l_point);
  CHECK(tb(L + k).which == TyrinaCase::l_point);
  CHECK(tb(L + 1).which == TyrinaCase::between_l);
  CHECK(tb(L + 1).kappa_lower < tb(L + k).kappa_lower);
  CHECK_THROWS_AS(tb(k - 1), zc::Error);
}

TEST_CASE("log d formula") {
  double k = 10, s = 20;
  double expect = 2 * s * (k + s / k) * std::log(2.0) + (k + 4 * s * s) * std::log(k) + 2 * (s - k) * std::log(s);
  CHECK(log_d(10, 20) == doctest::Approx(expect));
}
