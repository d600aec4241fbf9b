#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "vinogradov.hpp"

namespace zc::session {

enum class Command { rho_theta, tyrina, sweep, large_lambda, constants, zeta_check, verify_all };

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);

struct RunConfig {
  Command command = Command::verify_all;
  std::optional<std::pair<int64_t, int64_t>> k_range;
  std::optional<std::pair<double, double>> lambda_range;
  vinogradov::SampleMode sample_mode = vinogradov::SampleMode::geometric;
  unsigned threads = 1;
  uint64_t seed = 1;
};

struct RunResult {
  report::Report report;
  std::vector<std::string> warnings;
};

// estimated inner iterations of a rho-theta run
double estimated_work(int64_t k_lo, int64_t k_hi, vinogradov::SampleMode mode);

RunResult run(const RunConfig& cfg);

// directory for default report files: ZC_REPORT_DIR, else "reports"
std::string report_dir();

}  // namespace zc::session
