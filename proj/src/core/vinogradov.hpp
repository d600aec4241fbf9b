#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace zc::vinogradov {

enum class PhiVariant { primed, ford };
// which power of eta enters the constant at loop index n (see iterate_system)
enum class EtaIndexing { listing, lemma };

struct RecursionConfig {
  int64_t k = 0;
  double omega = 0.0;
  double eta = 0.0;
  double log_w = 0.0;
  double goal = 0.0;
  PhiVariant variant = PhiVariant::primed;
  EtaIndexing eta_indexing = EtaIndexing::listing;
};

struct PhiSequence {
  int64_t j = 0;
  double y = 0.0;
  std::vector<double> phis;  // phis[i] = phi_{i+1}, last entry phi_j = 1/r
  bool star_admissible = true;
  bool above_floor = true;  // every phi_i >= 1/(k+1)
  bool admissible() const { return star_admissible && above_floor; }
};

PhiSequence phi_sequence(int64_t k, int64_t r, double delta, PhiVariant variant = PhiVariant::primed);

// nullopt is the Inadmissible outcome (the listing returns 2*delta there)
std::optional<double> next_delta(int64_t k, int64_t r, double delta, PhiVariant variant = PhiVariant::primed);

struct RChoice {
  int64_t r;
  double delta;
};

std::pair<int64_t, int64_t> r_window(int64_t k, double delta);
RChoice choose_r(int64_t k, double delta, PhiVariant variant = PhiVariant::primed);

RecursionConfig omega_config(int64_t k, PhiVariant variant = PhiVariant::primed);

struct StartPoint {
  int64_t n;
  double delta;
  double log_c;

  static StartPoint program1(int64_t k);
  static StartPoint program2(int64_t k);
};

struct TraceRow {
  int64_t n;
  int64_t r;
  double delta;
  double log_c;
};

struct DeltaTrace {
  int64_t k = 0;
  std::vector<TraceRow> rows;
};

struct IterationResult {
  int64_t s = 0;
  double rho = 0.0;
  double theta = 0.0;
  int64_t steps = 0;
  DeltaTrace trace;
};

IterationResult iterate_system(const RecursionConfig& cfg, const StartPoint& start, bool keep_trace = false);

enum class Program { one = 1, two = 2 };

struct KResult {
  int64_t k;
  Program program;
  int64_t s;
  double rho;
  double theta;
};

// Program 1 start below 500, Program 2 start on [500, 90000)
KResult certify_k(int64_t k, EtaIndexing indexing = EtaIndexing::listing);

struct TableRange {
  int64_t k_lo;
  int64_t k_hi;  // inclusive; INT64_MAX for the open-ended row
  double rho;
  double theta;
};

std::span<const TableRange> published_table();
const TableRange& published_row(int64_t k);

enum class SampleMode { endpoints, geometric, full };

// the k values visited inside [k_lo, k_hi] (k < 90000 part only)
std::vector<int64_t> sample_ks(int64_t k_lo, int64_t k_hi, SampleMode mode, int geometric_points = 200);

struct RhoThetaRow {
  int64_t k_lo;
  int64_t k_hi;
  double rho;
  double theta;
  int64_t rho_k;    // k attaining the max rho
  int64_t theta_k;  // k attaining the max theta
  int64_t samples;
  bool analytic;
};

std::vector<RhoThetaRow> rho_theta_table(int64_t k_lo, int64_t k_hi, SampleMode mode, unsigned threads = 1);

struct NWindow {
  double lo;
  double hi;
};

double analytic_bracket(int64_t k, double D);
NWindow analytic_n_window(int64_t k, double D);

struct AnalyticBound {
  double delta_bound;
  double log_c_bound;
};

AnalyticBound analytic_delta_bound(int64_t k, int64_t n, double D);
double delta_s_bound(int64_t k, int64_t s, double D);

struct AnalyticRow {
  int64_t k;
  double D;
  int64_t n;
  double rho_closed_form;  // half bracket + 1/k
  double rho_witness;      // n k / k^2
  double theta_bound;
  double delta_bound;
  double goal;
};

AnalyticRow analytic_row(int64_t k);

}  // namespace zc::vinogradov
