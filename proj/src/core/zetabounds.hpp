#pragma once

#include <complex>
#include <string>
#include <vector>

#include "report.hpp"

namespace zc::zetabounds {

struct BoundConstants {
  double C = 8.7979;
  double D = 132.94357;
  double t0 = 1e108;
  double c_asym = 48.0718;
  double c_expl = 54.004;
  double A = 0.0;
  double B = 0.0;
  double d = 0.0;

  static BoundConstants compute();
};

double constant_B(double D);
double constant_A(double C, double D, double t0);
double pnt_constant_d(double c);
double m_variant_constant(double m, double C, double D, double t0);

inline constexpr double kKernelConstant = 1.0875034;

enum class ChainCase { low_sigma, high_sigma_small_t, high_sigma_large_t };

struct ChainBound {
  ChainCase which;
  double bound;             // bounds |zeta| (low sigma) or |zeta(s,u) - u^-s| (high sigma)
  double constant_witness;  // 21.3, 36.8, or 1.123 t^{1/108} log^{1/3} t
  double chain_lhs = 0.0;   // (t+1.5)^{1-sigma}(1+1/t+log(2t+1)), large-t case only
  double chain_mid = 0.0;   // 1.123 t^{1-sigma} log t
};

ChainBound small_t_chain(double sigma, double t);
std::string case_name(ChainCase c);

double theorem2_bound(double sigma, double t, double A = 70.6995, double B = 4.43795);
double uniform_bound(double sigma, double t);

struct ZetaValue {
  std::complex<double> value;
  double error;  // remainder bound plus rounding estimate
  long terms;
};

ZetaValue hurwitz_zeta(double sigma, double t, double u = 1.0, double precision_target = 1e-10);

struct GridPoint {
  double sigma;
  double t;
};

std::vector<GridPoint> default_grid();

struct ZetaCheckResult {
  report::Table table;  // sigma,t,zeta_abs,bound,margin,case
  std::vector<report::Check> checks;
};

ZetaCheckResult verify_theorem2(const std::vector<GridPoint>& grid, unsigned threads = 1, double precision_target = 1e-6);

}  // namespace zc::zetabounds
