#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "report.hpp"

namespace zc::tyrina {

double x_of_y(int64_t k, double y);
double y_of_x(int64_t k, double x);
int64_t l0(int64_t k);

struct TyrinaRow {
  int64_t n;
  int64_t s;
  int64_t r;
  double delta;  // Delta_{s_n}
};

struct TyrinaState {
  int64_t k = 0;
  std::vector<TyrinaRow> rows;
  int64_t ties = 0;  // exact halves met while rounding r_n
};

TyrinaState tyrina_sequence(int64_t k, int64_t n_max);
// rows until s_n exceeds s_limit (the row that first passes it is kept)
TyrinaState tyrina_sequence_until(int64_t k, int64_t s_limit);

enum class TyrinaCase { sequence_point = 1, l_point = 2, between_sequence = 3, between_l = 4 };

struct TyrinaBound {
  double log_d;
  double kappa_lower;
  TyrinaCase which;
};

double log_d(int64_t k, int64_t s);

// bound for one k, reusing the sequence across many s
class TyrinaBounds {
 public:
  explicit TyrinaBounds(int64_t k, int64_t s_max);
  TyrinaBound operator()(int64_t s) const;
  int64_t l0() const { return l0_; }
  const TyrinaState& state() const { return state_; }

 private:
  int64_t k_;
  int64_t l0_;
  TyrinaState state_;
};

TyrinaBound tyrina_bound(int64_t k, int64_t s);

// in integers: k(k+1)/2 - 0.4k^2 <= 0.101k^2  <=>  1000k(k+1) <= 1002k^2
bool bound500_holds(int64_t k);

std::vector<report::Check> threshold_checks(std::span<const int64_t> k_samples);

}  // namespace zc::tyrina
