#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "report.hpp"

namespace zc::expsum {

struct OptimizerConfig {
  double mu1 = 0.1905;
  double mu2 = 0.1603;
  double Y = 288.0;
  double D = 0.1019 * 288.0;
  double xi = 3.612381;
  double sigma = 0.330201;
  double goal_u = 132.94357;

  static OptimizerConfig with_y(double y);
  void validate() const;
};

std::vector<double> breakpoints(double lam_lo, double lam_hi, const OptimizerConfig& cfg);

struct RhoTheta {
  double rho;
  double theta;
};

RhoTheta rho_theta_lookup(int64_t k);

// floors that are constant on [lam1, lam2), taken at the midpoint
struct IntervalFloors {
  double lam1;
  double lam2;
  double lam_mid;
  int64_t m1;
  int64_t m2;
  int64_t k;
};

IntervalFloors make_interval(double lam1, double lam2, const OptimizerConfig& cfg);

struct Witness {
  int64_t g;
  int64_t h;
  int64_t s;
};

struct IntervalEval {
  int64_t k = 0, r = 0, t = 0;
  double rho = 0, theta = 0;
  double z0 = 0, z1 = 0, h_prime = 0;
  double e1 = 0, e2 = 0, e3 = 0;
  double e_prime = 0;  // negative when viable
  double u = 0;        // -1/(E' lam1^2)
  double log_c1 = 0, log_c2 = 0, log_c3 = 0;
  double c = 0;
  bool viable = false;  // 0 < u <= goal_u
};

IntervalEval interval_eval(const IntervalFloors& iv, const Witness& w, const OptimizerConfig& cfg);

enum class SSearch { fixed_sigma, wide };

struct LambdaInterval {
  double lam1 = 0, lam2 = 0;
  int64_t m1 = 0, m2 = 0, k = 0;
  int64_t g = 0, h = 0, t = 0, s = 0, r = 0;
  double u = 0, C = 0;
  bool feasible = false;
};

// nullopt when no candidate is viable
std::optional<LambdaInterval> try_optimize_interval(const IntervalFloors& iv, const OptimizerConfig& cfg,
                                                    SSearch search = SSearch::fixed_sigma);
LambdaInterval optimize_interval(const IntervalFloors& iv, const OptimizerConfig& cfg,
                                 SSearch search = SSearch::fixed_sigma);

struct SweepOptions {
  unsigned threads = 1;
  SSearch search = SSearch::fixed_sigma;
  bool allow_infeasible = false;
};

struct SweepResult {
  std::vector<LambdaInterval> intervals;
  double max_c = 0.0;
  double max_u = 0.0;
  std::size_t max_c_index = 0;
  std::size_t binding_index = 0;  // interval attaining max u
  std::size_t infeasible = 0;
};

SweepResult sweep(double lam_lo, double lam_hi, const OptimizerConfig& cfg, const SweepOptions& opt = {});

struct LargeLambdaParams {
  double rho = 3.20863;
  double sigma = 0.3299;
  double gamma = 1.17928 + 1.0 / 440.0;
  double phi = 1.24788 - 1.0 / 440.0;
  double lambda_min = 220.0;
  double mu1 = 0.1905;
  double mu2 = 0.1603;
  double Y = 288.0;

  double k0() const { return 1.0 / 0.6492 - 0.999997 / lambda_min; }
  double k1() const { return 1.0 / 0.6492 + 0.000003 / lambda_min; }
};

double large_h2(double gamma, double phi, double mu1, double mu2);
double large_f(double gamma, double phi, const LargeLambdaParams& p);

struct LargeLambdaResult {
  double f = 0, g1 = 0, g2 = 0;
  double e3_term = 0;     // lambda^2 log(Y lambda^2)/(7.6 Y lambda^4) at lambda_min
  double tail_terms = 0;  // 1.56e-7 + (0.0008 lambda^-1/2 + 0.0213552/lambda)/rho
  double final_value = 0; // 0.0000473 + f/rho
  double grid_max_f = 0;
  std::vector<report::Check> checks;
};

LargeLambdaResult large_lambda_check(const LargeLambdaParams& p = {});

double wj_bound(int64_t j, double s, double r, double m1, double m2, double n, double t);
double log_wj_bound(int64_t j, double s, double r, double log_m1, double log_m2, double log_n, double log_t);

struct IncompleteBound {
  double log_a;
  double e;
};

// Thm 4 of Ford for J_{s,g,h}(C(P, P^eta)); log_p = log P
IncompleteBound incomplete_system_bound(int64_t g, int64_t h, int64_t s, int64_t t, double log_p, double eta, double D);

double snt_bruteforce(int64_t N, double t, int u_grid = 256, double m = 2.0);
double snt_bound(double N, double t);
double snt_bound_m(double N, double t, double m);

}  // namespace zc::expsum
