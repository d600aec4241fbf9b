#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <utility>

namespace zc::report {

Check check_upper(std::string name, double value, double bound, const numerics::RoundingPolicy& policy) {
  double v = policy.upper(value);
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.bound = bound;
  c.margin = bound - v;
  c.passed = v <= bound;
  return c;
}

Check check_lower(std::string name, double value, double bound, const numerics::RoundingPolicy& policy) {
  double v = policy.lower(value);
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.bound = bound;
  c.margin = v - bound;
  c.passed = v >= bound;
  return c;
}

Check check_within(std::string name, double value, double target, double tol) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.bound = target;
  c.margin = tol - std::fabs(value - target);
  c.passed = c.margin >= 0.0;
  return c;
}

Check check_flag(std::string name, bool ok, std::string note) {
  Check c;
  c.name = std::move(name);
  c.value = ok ? 1.0 : 0.0;
  c.bound = 1.0;
  c.margin = ok ? 0.0 : -1.0;
  c.passed = ok;
  c.note = std::move(note);
  return c;
}

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.passed) ++n;
  return n;
}

void Report::merge(Report other) {
  for (auto& t : other.tables) tables.push_back(std::move(t));
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

Table checks_table(const std::vector<Check>& checks) {
  Table t{"checks", {"name", "value", "bound", "margin", "passed"}, {}};
  for (const auto& c : checks) t.rows.push_back({c.name, c.value, c.bound, c.margin, c.passed});
  return t;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  struct V {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(V{}, c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_csv_table(std::string& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cell_text(row[i]));
    }
    out += '\n';
  }
}

nlohmann::json cell_json(const Cell& c) {
  struct V {
    nlohmann::json operator()(const std::string& s) const { return s; }
    nlohmann::json operator()(int64_t i) const { return i; }
    nlohmann::json operator()(double d) const {
      if (!std::isfinite(d)) return format_double(d);
      return d;
    }
    nlohmann::json operator()(bool b) const { return b; }
  };
  return std::visit(V{}, c);
}

}  // namespace

std::string render_csv(const Report& r) {
  std::vector<const Table*> tables;
  Table checks = checks_table(r.checks);
  if (r.checks_are_primary || r.tables.empty()) {
    tables.push_back(&checks);
  } else {
    for (const auto& t : r.tables) tables.push_back(&t);
  }
  std::string out;
  bool several = tables.size() > 1;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (several) {
      if (i) out += '\n';
      out += "# " + tables[i]->name + '\n';
    }
    write_csv_table(out, *tables[i]);
  }
  return out;
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (const auto& t : r.tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
      rows.push_back(std::move(obj));
    }
    tables[t.name] = std::move(rows);
  }
  j["tables"] = std::move(tables);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["value"] = cell_json(c.value);
    o["bound"] = cell_json(c.bound);
    o["margin"] = cell_json(c.margin);
    o["passed"] = c.passed;
    if (!c.note.empty()) o["note"] = c.note;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"checks", r.checks.size()}, {"failed", r.failed()}};
  return j.dump(2) + "\n";
}

std::string render_markdown(const Report& r) {
  std::string out = "## " + r.command + "\n\n";
  auto write = [&out](const Table& t) {
    out += "### " + t.name + "\n\n|";
    for (const auto& c : t.columns) out += " " + c + " |";
    out += "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& row : t.rows) {
      out += "|";
      for (const auto& cell : row) out += " " + cell_text(cell) + " |";
      out += "\n";
    }
    out += "\n";
  };
  for (const auto& t : r.tables) write(t);
  write(checks_table(r.checks));
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu checks, %zu failed\n", r.checks.size(), r.failed());
  out += buf;
  return out;
}

}  // namespace zc::report
