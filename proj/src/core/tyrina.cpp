#include "tyrina.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "numerics.hpp"

namespace zc::tyrina {

double x_of_y(int64_t k, double y) {
  if (k < 2) raise(ErrorCode::domain, "x_of_y: k must be >= 2");
  double kk = static_cast<double>(k);
  double top = kk * (kk + 1.0) / 2.0;
  if (!(y >= kk) || !(y < top)) raise(ErrorCode::domain, "x_of_y: y outside [k, k(k+1)/2)");
  double den = kk * (kk - 1.0);
  double num = kk * (kk + 1.0) - 2.0 * y;
  double lg = num < 0.5 * den ? std::log(num / den) : std::log1p(2.0 * (kk - y) / den);
  return -y + 2.0 * kk - (kk + 1.0) * (kk + 1.0) * lg;
}

double y_of_x(int64_t k, double x) {
  if (k < 2) raise(ErrorCode::domain, "y_of_x: k must be >= 2");
  double kk = static_cast<double>(k);
  if (!(x >= kk)) raise(ErrorCode::domain, "y_of_x: x must be >= k");
  double b = (kk + 1.0) * (kk + 1.0);
  double a = kk * (kk - 1.0) / (2.0 * b);
  double c = kk / (2.0 * kk + 2.0) + x / b - 2.0 * kk / b;
  double w = numerics::lambert_w0(-a * std::exp(-c));
  return kk * (kk + 1.0) / 2.0 + b * w;
}

int64_t l0(int64_t k) {
  if (k < 3) raise(ErrorCode::domain, "l0: k must be >= 3");
  double kk = static_cast<double>(k);
  return static_cast<int64_t>(std::ceil(x_of_y(k, kk * kk / 2.0)));
}

namespace {

struct Stepper {
  int64_t k;
  double kk;
  explicit Stepper(int64_t k_) : k(k_), kk(static_cast<double>(k_)) {}

  int64_t round_r(double delta, int64_t& ties) const {
    double v = (2.0 * delta + kk * (kk + 1.0)) / (2.0 * kk + 1.0);
    double f = std::floor(v);
    if (v - f == 0.5) ++ties;
    return static_cast<int64_t>(std::floor(v + 0.5));
  }

  double next(double delta, int64_t r) const {
    double rr = static_cast<double>(r);
    return delta + rr - (2.0 * rr - kk - 1.0) * (2.0 * rr - kk) / (2.0 * rr) - delta / rr;
  }
};

template <class Stop>
TyrinaState build(int64_t k, Stop stop) {
  if (k < 3) raise(ErrorCode::domain, "tyrina_sequence: k must be >= 3");
  Stepper st(k);
  TyrinaState state;
  state.k = k;
  int64_t s = k;
  double delta = st.kk;
  for (int64_t n = 1;; ++n) {
    int64_t r = st.round_r(delta, state.ties);
    if (r <= 0) raise(ErrorCode::domain, "tyrina_sequence: r_n <= 0");
    state.rows.push_back({n, s, r, delta});
    if (stop(n, s)) break;
    delta = st.next(delta, r);
    s += r;
  }
  return state;
}

}  // namespace

TyrinaState tyrina_sequence(int64_t k, int64_t n_max) {
  if (n_max < 1) raise(ErrorCode::invalid_argument, "tyrina_sequence: n_max must be >= 1");
  return build(k, [n_max](int64_t n, int64_t) { return n >= n_max; });
}

TyrinaState tyrina_sequence_until(int64_t k, int64_t s_limit) {
  return build(k, [s_limit](int64_t, int64_t s) { return s > s_limit; });
}

double log_d(int64_t k, int64_t s) {
  double kk = static_cast<double>(k), ss = static_cast<double>(s);
  return 2.0 * ss * (kk + ss / kk) * std::log(2.0) + (kk + 4.0 * ss * ss) * std::log(kk) +
         2.0 * (ss - kk) * std::log(ss);
}

TyrinaBounds::TyrinaBounds(int64_t k, int64_t s_max)
    : k_(k), l0_(tyrina::l0(k)), state_(tyrina_sequence_until(k, std::max(s_max, l0_))) {}

TyrinaBound TyrinaBounds::operator()(int64_t s) const {
  if (s < k_) raise(ErrorCode::domain, "tyrina_bound: s must be >= k");
  double kk = static_cast<double>(k_);
  double ss = static_cast<double>(s);
  TyrinaBound b{log_d(k_, s), 0.0, TyrinaCase::sequence_point};
  const auto& rows = state_.rows;
  auto it = std::lower_bound(rows.begin(), rows.end(), s, [](const TyrinaRow& r, int64_t v) { return r.s < v; });
  bool on_sequence = it != rows.end() && it->s == s;
  double l_value = kk * (kk + 1.0) / 2.0 - (kk + 2.0) / 2.0 * (1.0 - 1.0 / kk);

  if (on_sequence && s < l0_) {
    b.which = TyrinaCase::sequence_point;
    b.kappa_lower = y_of_x(k_, ss);
  } else if (s >= l0_ && (s - l0_) % k_ == 0) {
    b.which = TyrinaCase::l_point;
    b.kappa_lower = l_value;
  } else if (s > l0_) {
    int64_t t = (s - l0_) / k_ + 1;
    double lt = static_cast<double>(l0_ + k_ * t);
    b.which = TyrinaCase::between_l;
    b.kappa_lower = l_value * ss / lt;
  } else {
    if (it == rows.end()) raise(ErrorCode::domain, "tyrina_bound: sequence too short");
    b.which = TyrinaCase::between_sequence;
    b.kappa_lower = it->delta * ss / static_cast<double>(it->s);
  }
  return b;
}

TyrinaBound tyrina_bound(int64_t k, int64_t s) { return TyrinaBounds(k, s)(s); }

bool bound500_holds(int64_t k) {
  // 128-bit keeps k up to ~1e9 exact
  __int128 kk = k;
  return 1000 * kk * (kk + 1) <= 1002 * kk * kk;
}

std::vector<report::Check> threshold_checks(std::span<const int64_t> k_samples) {
  std::vector<report::Check> out;
  for (int64_t k : k_samples) {
    if (k < 50) raise(ErrorCode::domain, "threshold_checks: samples must be >= 50");
    double kk = static_cast<double>(k);
    out.push_back(report::check_upper("x(0.101k^2) <= 0.1247k^2 [k=" + std::to_string(k) + "]",
                                      x_of_y(k, 0.101 * kk * kk), 0.1247 * kk * kk));
    if (k >= 500) {
      auto c = report::check_upper("bound500 holds [k=" + std::to_string(k) + "]", 1000.0 * kk * (kk + 1.0),
                                   1002.0 * kk * kk, numerics::RoundingPolicy{numerics::RoundingPolicy::Mode::nearest});
      c.passed = bound500_holds(k);
      out.push_back(c);
    }
  }
  {
    double kk = 499.0;
    auto c = report::check_lower("bound500 fails [k=499]", 1000.0 * kk * (kk + 1.0), 1002.0 * kk * kk,
                                 numerics::RoundingPolicy{numerics::RoundingPolicy::Mode::nearest});
    c.passed = !bound500_holds(499);
    out.push_back(c);
  }
  return out;
}

}  // namespace zc::tyrina
