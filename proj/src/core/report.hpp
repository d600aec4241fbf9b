#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "numerics.hpp"

namespace zc::report {

struct Check {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // positive when the check passes with room to spare
  bool passed = false;
  std::string note;
};

// value <= bound, value inflated by the policy first
Check check_upper(std::string name, double value, double bound, const numerics::RoundingPolicy& policy = {});
// value >= bound, value deflated by the policy first
Check check_lower(std::string name, double value, double bound, const numerics::RoundingPolicy& policy = {});
// |value - target| <= tol
Check check_within(std::string name, double value, double target, double tol);
Check check_flag(std::string name, bool ok, std::string note = {});

using Cell = std::variant<std::string, int64_t, double, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::vector<Table> tables;
  std::vector<Check> checks;
  bool checks_are_primary = false;  // CSV then emits the checks table instead of data tables

  std::size_t failed() const;
  void merge(Report other);
};

Table checks_table(const std::vector<Check>& checks);

std::string format_double(double v);
std::string render_csv(const Report& r);
std::string render_json(const Report& r);
std::string render_markdown(const Report& r);

}  // namespace zc::report
