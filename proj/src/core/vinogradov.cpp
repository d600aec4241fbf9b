#include "vinogradov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"

namespace zc::vinogradov {

namespace {

void check_r(int64_t k, int64_t r) {
  if (r < 4 || r > k)
    raise(ErrorCode::invalid_argument,
          "r=" + std::to_string(r) + " outside [4," + std::to_string(k) + "]");
}

// j maximal with (j-1)(j-2) <= y and j <= 9r/10; the listing's floating formula
int64_t max_j(double y, double r) {
  if (y < 0.0) return 1;
  return static_cast<int64_t>(std::floor(std::min(0.5 * (3.0 + std::sqrt(4.0 * y + 1.0)), 9.0 * r / 10.0)));
}

// coefficient b_J in phi_J = 1/(2r) + b_J phi_{J+1}
inline double phi_coeff(PhiVariant v, double k, double r, double y, double J) {
  double tkr = 2.0 * k * r;
  if (v == PhiVariant::primed) return 0.5 * (1.0 - y / (tkr - 2.0 * r * J));
  return (tkr - y + J * J - J) / (4.0 * k * r);
}

bool star_ok(double k, double r, double y) {
  double tkr = 2.0 * k * r;
  return !((y < 0.0) && (2.0 * k / (tkr + y)) <= 1.0 / (k + 1.0));
}

}  // namespace

PhiSequence phi_sequence(int64_t k, int64_t r, double delta, PhiVariant variant) {
  check_r(k, r);
  if (!(delta > 0.0)) raise(ErrorCode::invalid_argument, "phi_sequence: delta must be positive");
  double kk = static_cast<double>(k), rr = static_cast<double>(r);
  PhiSequence out;
  out.y = 2.0 * delta - (kk - rr) * (kk - rr + 1.0);
  out.star_admissible = star_ok(kk, rr, out.y);
  out.j = max_j(out.y, rr);
  if (out.j < 1) out.j = 1;
  out.phis.assign(static_cast<std::size_t>(out.j), 0.0);
  double p = 1.0 / rr;
  out.phis.back() = p;
  for (int64_t jj = out.j - 1; jj >= 1; --jj) {
    p = 0.5 / rr + phi_coeff(variant, kk, rr, out.y, static_cast<double>(jj)) * p;
    out.phis[static_cast<std::size_t>(jj - 1)] = p;
  }
  double floor_v = 1.0 / (kk + 1.0);
  for (double v : out.phis)
    if (v < floor_v) out.above_floor = false;
  return out;
}

std::optional<double> next_delta(int64_t k, int64_t r, double delta, PhiVariant variant) {
  check_r(k, r);
  if (!(delta > 0.0)) raise(ErrorCode::invalid_argument, "next_delta: delta must be positive");
  double kk = static_cast<double>(k), rr = static_cast<double>(r);
  double tkr = 2.0 * kk * rr;
  double y = 2.0 * delta - (kk - rr) * (kk - rr + 1.0);
  if (!star_ok(kk, rr, y)) return std::nullopt;
  int64_t j = max_j(y, rr);

  // phi_1 = sum_{m<j-1} (b_1..b_m)/(2r) + (b_1..b_{j-1})/r, expanded forwards;
  // the products shrink at least geometrically so the tail is dropped once negligible
  double sum = 0.0, prod = 1.0;
  bool finished = true;
  for (int64_t jj = 1; jj <= j - 1; ++jj) {
    sum += prod * (0.5 / rr);
    prod *= phi_coeff(variant, kk, rr, y, static_cast<double>(jj));
    if (std::fabs(prod) < 1e-30 * sum) {
      finished = false;
      break;
    }
  }
  if (finished) sum += prod / rr;
  double phi1 = sum;
  return delta - kk + 0.5 * phi1 * (tkr - y);
}

std::pair<int64_t, int64_t> r_window(int64_t k, double delta) {
  double kk = static_cast<double>(k);
  double arg = kk * kk + kk - 2.0 * delta;
  if (arg < 0.0) raise(ErrorCode::domain, "choose_r: delta exceeds k(k+1)/2");
  int64_t r0 = static_cast<int64_t>(std::sqrt(arg) + 0.5) - 2;
  return {r0, r0 + 4};
}

RChoice choose_r(int64_t k, double delta, PhiVariant variant) {
  auto [lo, hi] = r_window(k, delta);
  lo = std::max<int64_t>(lo, 4);
  hi = std::min<int64_t>(hi, k);
  RChoice best{-1, std::numeric_limits<double>::infinity()};
  for (int64_t r = lo; r <= hi; ++r) {
    auto d = next_delta(k, r, delta, variant);
    if (d && *d < best.delta) best = {r, *d};
  }
  if (best.r < 0)
    raise(ErrorCode::no_admissible_r,
          "no admissible r for k=" + std::to_string(k) + " delta=" + std::to_string(delta));
  return best;
}

RecursionConfig omega_config(int64_t k, PhiVariant variant) {
  if (k < 26) raise(ErrorCode::range, "omega_config: k must be >= 26");
  double kk = static_cast<double>(k);
  double logk = std::log(kk);
  double k3 = kk * kk * kk * logk;
  double om = 0.5;
  for (int i = 0; i < 10; ++i) om = 1.5 / (std::log(18.0 * k3 / om) - 1.5);
  if (om < 1.0 / (3.0 * logk) || om > 0.5) raise(ErrorCode::range, "omega fixed point left [1/(3 log k), 1/2]");
  RecursionConfig cfg;
  cfg.k = k;
  cfg.omega = om;
  cfg.eta = 1.0 + om;
  cfg.log_w = (kk + 1.0) * std::max(1.5 + 1.5 / om, std::log(18.0 / om * k3));
  cfg.goal = 0.001 * kk * kk;
  cfg.variant = variant;
  return cfg;
}

StartPoint StartPoint::program1(int64_t k) {
  double kk = static_cast<double>(k);
  return {1, 0.5 * kk * kk * (1.0 - 1.0 / kk), kk * std::log(kk)};
}

StartPoint StartPoint::program2(int64_t k) {
  double kk = static_cast<double>(k);
  return {(1247 * k + 9999) / 10000, 0.4 * kk * kk, kk * std::log(kk)};
}

IterationResult iterate_system(const RecursionConfig& cfg, const StartPoint& start, bool keep_trace) {
  const int64_t k = cfg.k;
  const double kk = static_cast<double>(k);
  const double logk = std::log(kk);
  const double k3 = kk * kk * kk * logk;
  const double log_eta = std::log(cfg.eta);
  const double log_h = 3.0 * kk * logk + (kk * kk - 4.0 * kk) * log_eta;

  IterationResult res;
  res.trace.k = k;
  double del0 = start.delta;
  double log_c = start.log_c;
  if (keep_trace) res.trace.rows.push_back({start.n, 0, del0, log_c});
  const int64_t limit = k * k;

  for (int64_t n = start.n;; ++n) {
    if (n > limit) raise(ErrorCode::iteration_limit, "iteration passed n = k^2 for k=" + std::to_string(k));
    RChoice c = choose_r(k, del0, cfg.variant);
    double del1 = c.delta;
    if (del1 >= del0)
      raise(ErrorCode::iteration_limit, "delta stopped decreasing for k=" + std::to_string(k) + " at n=" + std::to_string(n));
    double nn = static_cast<double>(cfg.eta_indexing == EtaIndexing::listing ? n : n + 1);
    log_c += std::max(log_h + 4.0 * kk * nn * log_eta, cfg.log_w * (del0 - del1));
    ++res.steps;
    if (keep_trace) res.trace.rows.push_back({n + 1, c.r, del1, log_c});
    if (del1 <= cfg.goal) {
      res.s = static_cast<int64_t>((static_cast<double>(n) + (del0 - cfg.goal) / (del0 - del1)) * kk + 1.0);
      res.rho = static_cast<double>(res.s) / kk / kk;
      res.theta = log_c / k3;
      return res;
    }
    del0 = del1;
  }
}

KResult certify_k(int64_t k, EtaIndexing indexing) {
  if (k < 129) raise(ErrorCode::range, "k below 129 is outside the table");
  if (k >= 90000) raise(ErrorCode::range, "k >= 90000 uses the analytic row");
  RecursionConfig cfg = omega_config(k);
  cfg.eta_indexing = indexing;
  Program prog = k < 500 ? Program::one : Program::two;
  StartPoint sp = prog == Program::one ? StartPoint::program1(k) : StartPoint::program2(k);
  IterationResult it = iterate_system(cfg, sp);
  return {k, prog, it.s, it.rho, it.theta};
}

namespace {
constexpr TableRange kTable[] = {
    {129, 137, 3.177207, 2.40930},
    {138, 139, 3.177527, 2.39529},
    {140, 146, 3.178551, 2.39167},
    {147, 148, 3.178871, 2.38259},
    {149, 170, 3.181869, 2.37929},
    {171, 190, 3.184127, 2.35334},
    {191, 339, 3.192950, 2.33313},
    {340, 499, 3.196497, 2.24352},
    {500, 89999, 3.205502, 1.77775},
    {90000, std::numeric_limits<int64_t>::max(), 3.208630, 2.17720},
};
}  // namespace

std::span<const TableRange> published_table() { return kTable; }

const TableRange& published_row(int64_t k) {
  for (const auto& row : kTable)
    if (k >= row.k_lo && k <= row.k_hi) return row;
  raise(ErrorCode::range, "k=" + std::to_string(k) + " below the table");
}

std::vector<int64_t> sample_ks(int64_t k_lo, int64_t k_hi, SampleMode mode, int geometric_points) {
  if (k_lo < 129 || k_hi < k_lo) raise(ErrorCode::range, "k range must satisfy 129 <= lo <= hi");
  int64_t hi = std::min<int64_t>(k_hi, 89999);
  std::vector<int64_t> ks;
  if (k_lo > hi) return ks;
  auto add = [&](int64_t k) {
    if (k >= k_lo && k <= hi) ks.push_back(k);
  };
  add(k_lo);
  add(hi);
  for (const auto& row : kTable) {
    add(row.k_lo);
    add(std::min<int64_t>(row.k_hi, 89999));
  }
  if (mode == SampleMode::full) {
    for (int64_t k = k_lo; k <= hi; ++k) ks.push_back(k);
  } else if (mode == SampleMode::geometric) {
    for (int64_t k = k_lo; k <= std::min<int64_t>(hi, 499); ++k) ks.push_back(k);
    double a = 500.0, b = 90000.0;
    for (int i = 0; i < geometric_points; ++i) {
      double t = geometric_points > 1 ? static_cast<double>(i) / (geometric_points - 1) : 0.0;
      int64_t k = std::llround(a * std::pow(b / a, t));
      add(std::min<int64_t>(k, 89999));
    }
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

std::vector<RhoThetaRow> rho_theta_table(int64_t k_lo, int64_t k_hi, SampleMode mode, unsigned threads) {
  std::vector<int64_t> ks = sample_ks(k_lo, k_hi, mode);
  auto results = parallel_map<KResult>(ks.size(), threads, [&](std::size_t i) { return certify_k(ks[i]); });

  std::vector<RhoThetaRow> rows;
  for (const auto& tr : kTable) {
    if (tr.k_lo >= 90000) continue;
    int64_t lo = std::max(tr.k_lo, k_lo), hi = std::min(tr.k_hi, k_hi);
    if (lo > hi) continue;
    RhoThetaRow row{lo, hi, -1.0, -1.0, 0, 0, 0, false};
    for (const auto& r : results) {
      if (r.k < lo || r.k > hi) continue;
      ++row.samples;
      if (r.rho > row.rho) {
        row.rho = r.rho;
        row.rho_k = r.k;
      }
      if (r.theta > row.theta) {
        row.theta = r.theta;
        row.theta_k = r.k;
      }
    }
    if (row.samples > 0) rows.push_back(row);
  }
  if (k_hi >= 90000) {
    int64_t k0 = std::max<int64_t>(k_lo, 90000);
    AnalyticRow a = analytic_row(k0);
    rows.push_back({k0, k_hi, a.rho_closed_form, a.theta_bound, k0, k0, 1, true});
  }
  return rows;
}

double analytic_bracket(int64_t k, double D) {
  double kk = static_cast<double>(k);
  double q = D / kk;
  return 0.6494 + std::log(8.0 * kk / (25.0 * D)) - ((1.0 - q) / (2.0 - q)) * q + 2.051 / kk;
}

NWindow analytic_n_window(int64_t k, double D) {
  double kk = static_cast<double>(k);
  return {0.138128 * kk, 0.5 * kk * analytic_bracket(k, D) + 1.0};
}

namespace {
void check_analytic_domain(int64_t k, double D) {
  if (k < 90000) raise(ErrorCode::range, "analytic bounds need k >= 90000");
  if (D < 1.0 || D > 0.4 * static_cast<double>(k)) raise(ErrorCode::range, "analytic bounds need 1 <= D <= 0.4k");
}
}  // namespace

AnalyticBound analytic_delta_bound(int64_t k, int64_t n, double D) {
  check_analytic_domain(k, D);
  NWindow w = analytic_n_window(k, D);
  double nn = static_cast<double>(n);
  if (nn < w.lo || nn > w.hi)
    raise(ErrorCode::range, "n=" + std::to_string(n) + " outside the window for k=" + std::to_string(k));
  double kk = static_cast<double>(k);
  double q = D / kk;
  double first = 0.32 * kk * kk * std::exp(0.6494 - 2.0 * nn / kk - ((1.0 - q) / (2.0 - q)) * q + 2.051 / kk);
  double delta = std::max(first, D * kk);
  double log_c = (2.055 * kk * kk * kk - 0.414 * kk * kk + 3.0 * nn * kk) * std::log(kk) +
                 (nn * kk * kk + 2.0 * (nn * nn - nn) * kk + 0.099912 * kk * kk * kk) * std::log(1.06);
  return {delta, log_c};
}

double delta_s_bound(int64_t k, int64_t s, double D) {
  check_analytic_domain(k, D);
  double kk = static_cast<double>(k);
  double ss = static_cast<double>(s);
  double br = analytic_bracket(k, D);
  if (ss < 0.138128 * kk * kk || ss > 0.5 * kk * kk * br)
    raise(ErrorCode::range, "s=" + std::to_string(s) + " outside the window for k=" + std::to_string(k));
  double q = D / kk;
  double u = static_cast<double>(s % k);
  double first = 0.32 * kk * kk *
                 std::exp(0.6494 - 2.0 * (ss - kk) / (kk * kk) - ((1.0 - q) / (2.0 - q)) * q + 2.051 / kk +
                          2.0 * u / (kk * kk * kk));
  double second = D * kk * std::exp(2.0 * u / (kk * kk) * (-1.0 + 1.0 / kk));
  return std::max(first, second);
}

AnalyticRow analytic_row(int64_t k) {
  if (k < 90000) raise(ErrorCode::range, "analytic row needs k >= 90000");
  double kk = static_cast<double>(k);
  AnalyticRow row;
  row.k = k;
  row.D = kk / 1000.0;
  double br = analytic_bracket(k, row.D);
  row.n = static_cast<int64_t>(std::ceil(0.5 * kk * br));
  row.rho_closed_form = 0.5 * br + 1.0 / kk;
  row.rho_witness = static_cast<double>(row.n) / kk;
  AnalyticBound b = analytic_delta_bound(k, row.n, row.D);
  row.delta_bound = b.delta_bound;
  row.theta_bound = b.log_c_bound / (kk * kk * kk * std::log(kk));
  row.goal = kk * kk / 1000.0;
  return row;
}

}  // namespace zc::vinogradov
