#include <doctest.h>

#include <json.hpp>

#include "core/report.hpp"

using namespace zc::report;

namespace {

Report sample() {
  Report r;
  r.command = "demo";
  r.tables.push_back({"a", {"x", "name"}, {{int64_t{1}, std::string("p,q")}, {0.5, std::string("say \"hi\"")}}});
  r.tables.push_back({"b", {"flag"}, {{true}}});
  r.checks.push_back(check_upper("upper", 1.0, 2.0));
  r.checks.push_back(check_lower("lower", 1.0, 2.0));
  return r;
}

}  // namespace

TEST_CASE("format double") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0 / 3) == "0.333333333333");
  CHECK(format_double(1e108) == "1e+108");
  CHECK(format_double(-INFINITY) == "-inf");
  CHECK(format_double(NAN) == "nan");
}

TEST_CASE("checks") {
  auto u = check_upper("u", 1.0, 1.0);
  CHECK_FALSE(u.passed);
  auto n = check_upper("n", 1.0, 1.0, {zc::numerics::RoundingPolicy::Mode::nearest, 0.0});
  CHECK(n.passed);
  CHECK(check_within("w", 1.05, 1.0, 0.1).passed);
  CHECK_FALSE(check_within("w", 1.2, 1.0, 0.1).passed);
  CHECK(check_flag("f", false, "why").note == "why");
  CHECK(sample().failed() == 1);
}

TEST_CASE("csv") {
  auto r = sample();
  std::string csv = render_csv(r);
  CHECK(csv == "# a\nx,name\n1,\"p,q\"\n0.5,\"say \"\"hi\"\"\"\n\n# b\nflag\ntrue\n");
  r.checks_are_primary = true;
  std::string checks = render_csv(r);
  CHECK(checks.rfind("name,value,bound,margin,passed\nupper,1,2,", 0) == 0);
}

TEST_CASE("json") {
  auto j = nlohmann::json::parse(render_json(sample()));
  CHECK(j["command"] == "demo");
  CHECK(j["tables"]["a"][0]["name"] == "p,q");
  CHECK(j["tables"]["a"][1]["x"] == 0.5);
  CHECK(j["checks"].size() == 2);
  CHECK(j["summary"]["failed"] == 1);
}

TEST_CASE("markdown") {
  std::string md = render_markdown(sample());
  CHECK(md.rfind("## demo\n\n### a\n\n| x | name |\n|---|---|\n", 0) == 0);
  CHECK(md.find("2 checks, 1 failed") != std::string::npos);
}

TEST_CASE("merge") {
  auto a = sample(), b = sample();
  a.merge(b);
  CHECK(a.tables.size() == 4);
  CHECK(a.checks.size() == 4);
}
