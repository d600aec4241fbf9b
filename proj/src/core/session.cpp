#include "session.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "errors.hpp"
#include "expsum.hpp"
#include "numerics.hpp"
#include "tyrina.hpp"
#include "zetabounds.hpp"

namespace zc::session {

namespace {

using report::Cell;
using report::Check;
using report::Report;
using report::Table;

const numerics::RoundingPolicy kExact{numerics::RoundingPolicy::Mode::nearest, 0.0};

std::string range_label(int64_t lo, int64_t hi) {
  return "[" + std::to_string(lo) + "," + (hi == INT64_MAX ? std::string("inf") : std::to_string(hi)) + "]";
}

std::string fmt(const char* f, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

RunResult rho_theta(const RunConfig& cfg) {
  auto [k_lo, k_hi] = cfg.k_range.value_or(std::pair<int64_t, int64_t>{129, 90000});
  RunResult out;
  double work = estimated_work(k_lo, k_hi, cfg.sample_mode);
  if (cfg.sample_mode == vinogradov::SampleMode::full && work > 1e9)
    out.warnings.push_back("full mode: about " + report::format_double(work) + " inner iterations, expect a long run");

  Report& r = out.report;
  r.command = "rho-theta";
  auto rows = vinogradov::rho_theta_table(k_lo, k_hi, cfg.sample_mode, cfg.threads);
  Table t{"rho_theta",
          {"k_lo", "k_hi", "rho", "theta", "table_rho", "table_theta", "rho_k", "theta_k", "samples", "analytic"},
          {}};
  for (const auto& row : rows) {
    const auto& tr = vinogradov::published_row(row.k_lo);
    t.rows.push_back({row.k_lo, row.k_hi == INT64_MAX ? Cell(std::string("inf")) : Cell(row.k_hi), row.rho, row.theta,
                      tr.rho, tr.theta, row.rho_k, row.theta_k, row.samples, row.analytic});
    if (row.analytic) continue;
    std::string lab = range_label(row.k_lo, row.k_hi);
    r.checks.push_back(report::check_upper("rho " + lab + " <= table", row.rho, tr.rho, kExact));
    r.checks.push_back(report::check_upper("theta " + lab + " <= table", row.theta, tr.theta, kExact));
    bool whole = row.k_lo == tr.k_lo && row.k_hi == std::min<int64_t>(tr.k_hi, 89999);
    if (whole) {
      r.checks.push_back(report::check_upper("rho gap " + lab + " < 1e-4", tr.rho - row.rho, 1e-4, kExact));
      r.checks.push_back(report::check_upper("theta gap " + lab + " < 1e-4", tr.theta - row.theta, 1e-4, kExact));
    }
  }
  r.tables.push_back(std::move(t));

  if (k_hi >= 90000) {
    auto a = vinogradov::analytic_row(std::max<int64_t>(k_lo, 90000));
    std::string lab = "[k=" + std::to_string(a.k) + "]";
    Table at{"analytic", {"k", "D", "n", "rho_closed_form", "rho_witness", "theta_bound", "delta_bound", "goal"}, {}};
    at.rows.push_back({a.k, a.D, a.n, a.rho_closed_form, a.rho_witness, a.theta_bound, a.delta_bound, a.goal});
    r.tables.push_back(std::move(at));
    r.checks.push_back(report::check_upper("analytic rho closed form " + lab + " <= 3.20863", a.rho_closed_form, 3.20863, kExact));
    r.checks.push_back(report::check_upper("analytic rho witness n/k " + lab + " <= 3.20863", a.rho_witness, 3.20863, kExact));
    r.checks.push_back(report::check_upper("analytic Delta_n " + lab + " <= 0.001k^2", a.delta_bound, a.goal, kExact));
    r.checks.push_back(report::check_upper("analytic theta " + lab + " <= 2.17720", a.theta_bound, 2.17720, kExact));
  }
  return out;
}

RunResult tyrina_run(const RunConfig& cfg) {
  std::vector<int64_t> ks{50, 129, 500, 5000, 90000};
  if (cfg.k_range) {
    for (int64_t k : {cfg.k_range->first, cfg.k_range->second})
      if (k >= 50 && std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  }
  RunResult out;
  Report& r = out.report;
  r.command = "tyrina";
  r.checks_are_primary = true;
  r.checks = tyrina::threshold_checks(ks);
  Table t{"tyrina", {"k", "l0", "x_at_0.101k2", "limit_0.1247k2", "roundtrip_max_rel"}, {}};
  for (int64_t k : ks) {
    double kk = static_cast<double>(k);
    double y_top = kk * (kk + 1) / 2;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      double y = kk + (y_top - kk) * i / 1000.0;
      double back = tyrina::y_of_x(k, tyrina::x_of_y(k, y));
      worst = std::max(worst, std::fabs(back - y) / y);
    }
    r.checks.push_back(report::check_upper("x/y roundtrip [k=" + std::to_string(k) + "] <= 1e-9", worst, 1e-9, kExact));
    t.rows.push_back({k, tyrina::l0(k), tyrina::x_of_y(k, 0.101 * kk * kk), 0.1247 * kk * kk, worst});
  }
  r.tables.push_back(std::move(t));
  return out;
}

RunResult sweep_run(const RunConfig& cfg) {
  auto [lo, hi] = cfg.lambda_range.value_or(std::pair<double, double>{84.0, 220.0});
  expsum::OptimizerConfig oc;
  expsum::SweepOptions so;
  so.threads = cfg.threads;
  so.allow_infeasible = true;
  auto res = expsum::sweep(lo, hi, oc, so);

  RunResult out;
  Report& r = out.report;
  r.command = "sweep";
  Table t{"sweep", {"lam1", "lam2", "k", "g", "h", "s", "r", "u", "C", "feasible"}, {}};
  bool reproducible = true, floors_const = true;
  double bracket_worst = -1e300, power_worst = -1e300;
  for (const auto& li : res.intervals) {
    t.rows.push_back({li.lam1, li.lam2, li.k, li.g, li.h, li.s, li.r, li.u, li.C, li.feasible});
    auto iv = expsum::make_interval(li.lam1, li.lam2, oc);
    for (int i = 1; i <= 5; ++i) {
      double lam = li.lam1 + (li.lam2 - li.lam1) * i / 6.0;
      auto p = expsum::make_interval(lam - 1e-9, lam + 1e-9, oc);
      if (p.m1 != iv.m1 || p.m2 != iv.m2 || p.k != iv.k) floors_const = false;
      double kl = static_cast<double>(iv.k) / lam;
      double k0 = 1 / 0.6492 - 0.999997 / lam, k1 = 1 / 0.6492 + 0.000003 / lam;
      bracket_worst = std::max({bracket_worst, k0 - kl, kl - k1});
    }
    if (!li.feasible) continue;
    auto e = expsum::interval_eval(iv, {li.g, li.h, li.s}, oc);
    if (e.u != li.u || e.c != li.C) reproducible = false;
    double kk = static_cast<double>(li.k);
    power_worst = std::max(power_worst, kk * std::log(5.0 * static_cast<double>(li.r)) - 4.65 * li.lam1 * std::log(li.lam1));
  }
  r.tables.push_back(std::move(t));

  Table s{"sweep_summary", {"lam_lo", "lam_hi", "intervals", "infeasible", "max_C", "max_u", "binding_lam1", "binding_lam2", "binding_g", "binding_h", "binding_s"}, {}};
  const auto& b = res.intervals.at(res.binding_index);
  s.rows.push_back({lo, hi, static_cast<int64_t>(res.intervals.size()), static_cast<int64_t>(res.infeasible), res.max_c,
                    res.max_u, b.lam1, b.lam2, b.g, b.h, b.s});
  r.tables.push_back(std::move(s));

  std::string lab = fmt("[%g,%g]", lo, hi);
  r.checks.push_back(report::check_upper("infeasible intervals " + lab + " = 0", static_cast<double>(res.infeasible), 0.0, kExact));
  r.checks.push_back(report::check_upper("max C " + lab + " <= 8.7979", res.max_c, 8.7979));
  r.checks.push_back(report::check_upper("max u " + lab + " <= 132.94357", res.max_u, oc.goal_u));
  if (lo <= 84.0 && hi >= 220.0)
    r.checks.push_back(report::check_within("binding u within 1e-3 of 132.94357", res.max_u, oc.goal_u, 1e-3));
  r.checks.push_back(report::check_flag("floors constant inside every interval", floors_const));
  r.checks.push_back(report::check_upper("k/lambda bracket violation <= 0", bracket_worst, 0.0, kExact));
  r.checks.push_back(report::check_upper("k log(5r) - 4.65 lam log lam <= 0", power_worst, 0.0, kExact));
  r.checks.push_back(report::check_flag("witness re-evaluation reproduces (u, C)", reproducible));
  r.checks.push_back(report::check_upper("trivial range exp(Y/132.94357) <= 8.7979", std::exp(oc.Y / oc.goal_u), 8.7979));
  return out;
}

RunResult large_lambda_run(const RunConfig&) {
  expsum::LargeLambdaParams p;
  auto res = expsum::large_lambda_check(p);
  RunResult out;
  Report& r = out.report;
  r.command = "large-lambda";
  r.checks_are_primary = true;
  Table t{"large_lambda", {"gamma", "phi", "k0", "k1", "f", "G1", "G2", "e3_term", "tail_terms", "final", "grid_max_f"}, {}};
  t.rows.push_back({p.gamma, p.phi, p.k0(), p.k1(), res.f, res.g1, res.g2, res.e3_term, res.tail_terms, res.final_value, res.grid_max_f});
  r.tables.push_back(std::move(t));
  r.checks = res.checks;
  return out;
}

RunResult constants_run(const RunConfig&) {
  namespace zb = zetabounds;
  auto bc = zb::BoundConstants::compute();
  RunResult out;
  Report& r = out.report;
  r.command = "constants";
  r.checks_are_primary = true;

  double b_up = std::ceil(bc.B * 1e5) / 1e5;
  auto gmax = numerics::sup_g();
  double g0 = numerics::g_of_y(0.0);
  double m_const = zb::m_variant_constant(1.001, bc.C, bc.D, 1e90);
  double trivial = std::exp(288.0 / bc.D);

  Table t{"constants", {"name", "value"}, {}};
  t.rows.push_back({std::string("A"), bc.A});
  t.rows.push_back({std::string("B"), bc.B});
  t.rows.push_back({std::string("B_roundup"), b_up});
  t.rows.push_back({std::string("d"), bc.d});
  t.rows.push_back({std::string("sup_g"), gmax.value});
  t.rows.push_back({std::string("argmax_g"), gmax.y});
  t.rows.push_back({std::string("g0"), g0});
  t.rows.push_back({std::string("m_variant_1.001"), m_const});
  t.rows.push_back({std::string("trivial_range"), trivial});
  r.tables.push_back(std::move(t));

  r.checks.push_back(report::check_lower("B >= 4.437940", bc.B, 4.437940));
  r.checks.push_back(report::check_upper("B <= 4.437950", bc.B, 4.437950));
  r.checks.push_back(report::check_within("B rounds up to 4.43795", b_up, 4.43795, 1e-12));
  r.checks.push_back(report::check_upper("A(8.7979, 132.94357, 1e108) <= 70.6995", bc.A, 70.6995));
  r.checks.push_back(report::check_within("d(48.0718) = 0.212579 +- 1e-4", bc.d, 0.212579, 1e-4));
  r.checks.push_back(report::check_upper("sup g <= 1.0875034 + 1e-7", gmax.value, zb::kKernelConstant + 1e-7));
  r.checks.push_back(report::check_within("argmax g = 0.710 +- 0.01", gmax.y, 0.710, 0.01));
  r.checks.push_back(report::check_within("g(0) = Gamma(4/3) to 1e-9", g0, std::tgamma(4.0 / 3.0), 1e-9));
  r.checks.push_back(report::check_within("m-variant constant at m=1.001 near 49", m_const, 49.0, 1.0));
  r.checks.push_back(report::check_upper("trivial range exp(288/132.94357) <= 8.7979", trivial, 8.7979));

  auto top = zb::small_t_chain(15.0 / 16.0, 1e108);
  r.checks.push_back(report::check_upper("1.123 t^(1/108) log^(1/3) t at 1e108 <= 70.6199", top.constant_witness, 70.6199));
  r.checks.push_back(report::check_upper("70.6199 <= A", 70.6199, bc.A, kExact));
  r.checks.push_back(report::check_upper("21.3 <= A", 21.3, bc.A, kExact));
  for (double sigma : {15.0 / 16.0, 1.0}) {
    for (double e : {6.0, 8.0, 12.0, 20.0, 50.0, 108.0}) {
      auto c = zb::small_t_chain(sigma, std::pow(10.0, e));
      r.checks.push_back(report::check_upper(fmt("chain (t+1.5)^(1-s)(...) <= 1.123 t^(1-s) log t [sigma=%.4g t=1e%g]", sigma, e),
                                             c.chain_lhs, c.chain_mid));
    }
  }
  return out;
}

RunResult zeta_run(const RunConfig& cfg) {
  namespace zb = zetabounds;
  RunResult out;
  Report& r = out.report;
  r.command = "zeta-check";
  auto res = zb::verify_theorem2(zb::default_grid(), cfg.threads);
  r.tables.push_back(std::move(res.table));
  r.checks = std::move(res.checks);

  auto z2 = zb::hurwitz_zeta(2.0, 0.0, 1.0);
  double pi2 = std::numbers::pi * std::numbers::pi / 6;
  r.checks.push_back(report::check_within("zeta(2) = pi^2/6 to 1e-12", z2.value.real(), pi2, 1e-12));
  auto zh = zb::hurwitz_zeta(2.0, 0.0, 0.5);
  r.checks.push_back(report::check_within("zeta(2,1/2) = 3 zeta(2) to 1e-12", zh.value.real(), 3 * pi2, 1e-12));
  auto zh2 = zb::hurwitz_zeta(0.75, 20.0, 0.5);
  auto zf = zb::hurwitz_zeta(0.75, 20.0, 1.0);
  std::complex<double> factor = std::exp(std::complex<double>(0.75, 20.0) * std::log(2.0)) - 1.0;
  r.checks.push_back(report::check_upper("zeta(s,1/2) = (2^s-1) zeta(s) at s=0.75+20i", std::abs(zh2.value - factor * zf.value), 1e-9, kExact));
  auto z0 = zb::hurwitz_zeta(0.5, 14.134725, 1.0);
  r.checks.push_back(report::check_upper("|zeta(1/2 + 14.134725i)| < 0.01", std::abs(z0.value), 0.01));

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int64_t> nd(2, 200);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  Table st{"snt_oracle", {"N", "t", "brute", "bound"}, {}};
  double worst = 1e300;
  for (int i = 0; i < 50; ++i) {
    int64_t N = nd(rng);
    double lo = std::log(static_cast<double>(N)), hi = std::log(1e5);
    double t = std::exp(lo + (hi - lo) * ud(rng));
    double brute = expsum::snt_bruteforce(N, t);
    double bound = expsum::snt_bound(static_cast<double>(N), t);
    st.rows.push_back({N, t, brute, bound});
    worst = std::min(worst, bound - brute);
  }
  r.tables.push_back(std::move(st));
  r.checks.push_back(report::check_lower("snt_bound - snt_bruteforce on 50 random (N,t) >= 0", worst, 0.0, kExact));
  return out;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (Command c : {Command::rho_theta, Command::tyrina, Command::sweep, Command::large_lambda, Command::constants,
                    Command::zeta_check, Command::verify_all})
    if (command_name(c) == name) return c;
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::rho_theta: return "rho-theta";
    case Command::tyrina: return "tyrina";
    case Command::sweep: return "sweep";
    case Command::large_lambda: return "large-lambda";
    case Command::constants: return "constants";
    case Command::zeta_check: return "zeta-check";
    case Command::verify_all: return "verify-all";
  }
  return "?";
}

double estimated_work(int64_t k_lo, int64_t k_hi, vinogradov::SampleMode mode) {
  double w = 0.0;
  for (int64_t k : vinogradov::sample_ks(k_lo, k_hi, mode)) w += 3.0 * static_cast<double>(k) * 40.0;
  return w;
}

RunResult run(const RunConfig& cfg) {
  if (cfg.k_range && (cfg.k_range->first > cfg.k_range->second))
    raise(ErrorCode::invalid_argument, "k range needs lo <= hi");
  if (cfg.lambda_range && !(cfg.lambda_range->first < cfg.lambda_range->second))
    raise(ErrorCode::invalid_argument, "lambda range needs lo < hi");
  switch (cfg.command) {
    case Command::rho_theta: return rho_theta(cfg);
    case Command::tyrina: return tyrina_run(cfg);
    case Command::sweep: return sweep_run(cfg);
    case Command::large_lambda: return large_lambda_run(cfg);
    case Command::constants: return constants_run(cfg);
    case Command::zeta_check: return zeta_run(cfg);
    case Command::verify_all: break;
  }
  RunResult all;
  all.report.command = "verify-all";
  all.report.checks_are_primary = true;
  for (auto f : {rho_theta, tyrina_run, sweep_run, large_lambda_run, constants_run, zeta_run}) {
    RunResult part = f(cfg);
    for (auto& w : part.warnings) all.warnings.push_back(std::move(w));
    all.report.merge(std::move(part.report));
  }
  return all;
}

std::string report_dir() {
  const char* d = std::getenv("ZC_REPORT_DIR");
  return d && *d ? std::string(d) : std::string("reports");
}

}  // namespace zc::session
