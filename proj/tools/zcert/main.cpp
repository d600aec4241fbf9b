#include <zetacert/zetacert.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

struct Options {
  std::vector<int64_t> k;
  std::vector<double> lambda;
  std::string mode = "geometric";
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;
  uint64_t seed = 1;
  bool interactive = false;
};

int usage_error(const std::string& msg) {
  std::cerr << "zcert: " << msg << "\n";
  return 2;
}

std::string out_path(const std::string& p) {
  const char* dir = std::getenv("ZC_REPORT_DIR");
  if (p.find('/') == std::string::npos && dir && *dir) return std::string(dir) + "/" + p;
  return p;
}

int run(const std::string& command, Options o) {
  if (o.interactive) {
    if (command == "rho-theta" || command == "tyrina" || command == "verify-all") {
      std::cerr << "enter k range :" << std::flush;
      int64_t lo = 0, hi = 0;
      if (!(std::cin >> lo >> hi)) return usage_error("could not read k range");
      o.k = {lo, hi};
    }
    if (command == "sweep" || command == "verify-all") {
      std::cerr << "enter lambda range: " << std::flush;
      double lo = 0, hi = 0;
      if (!(std::cin >> lo >> hi)) return usage_error("could not read lambda range");
      o.lambda = {lo, hi};
    }
  }

  zc_session* s = nullptr;
  if (zc_session_create(&s) != ZC_OK) return usage_error(zc_last_error());
  struct Closer {
    zc_session* s;
    ~Closer() { zc_session_destroy(s); }
  } closer{s};

  zc_status st = ZC_OK;
  if (!o.k.empty()) st = zc_session_set_k_range(s, o.k[0], o.k[1]);
  if (st == ZC_OK && !o.lambda.empty()) st = zc_session_set_lambda_range(s, o.lambda[0], o.lambda[1]);
  if (st == ZC_OK) {
    zc_mode m = o.mode == "endpoints" ? ZC_MODE_ENDPOINTS : o.mode == "full" ? ZC_MODE_FULL : ZC_MODE_GEOMETRIC;
    st = zc_session_set_mode(s, m);
  }
  if (st == ZC_OK) {
    unsigned t = o.threads ? o.threads : std::thread::hardware_concurrency();
    st = zc_session_set_threads(s, t ? t : 1);
  }
  if (st == ZC_OK) st = zc_session_set_seed(s, o.seed);
  if (st == ZC_OK) st = zc_session_run(s, command.c_str());
  if (st != ZC_OK) return usage_error(std::string(zc_status_name(st)) + ": " + zc_last_error());

  for (size_t i = 0; i < zc_session_warning_count(s); ++i) std::cerr << "warning: " << zc_session_warning(s, i) << "\n";

  zc_format f = o.format == "json" ? ZC_FORMAT_JSON : o.format == "markdown" ? ZC_FORMAT_MARKDOWN : ZC_FORMAT_CSV;
  char* text = nullptr;
  st = zc_session_render(s, f, &text);
  if (st != ZC_OK) return usage_error(zc_last_error());
  std::string body(text);
  zc_free_string(text);

  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::string path = out_path(o.out);
    std::ofstream os(path, std::ios::binary);
    if (!os || !(os << body)) return usage_error("cannot write " + path);
  }

  size_t failed = zc_session_failed_count(s);
  if (failed == 0) return 0;
  std::cerr << failed << " of " << zc_session_check_count(s) << " checks failed:\n";
  for (size_t i = 0; i < zc_session_check_count(s); ++i) {
    zc_check c;
    if (zc_session_check(s, i, &c) == ZC_OK && !c.passed)
      std::fprintf(stderr, "  FAIL %s: value %.12g bound %.12g margin %.3g\n", c.name, c.value, c.bound, c.margin);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zcert: certify explicit constants for zeta bounds"};
  app.set_version_flag("--version", zc_version());
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "k range LO HI")->expected(2);
    sub->add_option("--lambda", o.lambda, "lambda range LO HI")->expected(2);
    sub->add_option("--mode", o.mode, "k sampling")->check(CLI::IsMember({"endpoints", "geometric", "full"}));
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json", "markdown"}));
    sub->add_option("--out", o.out, "write the report to PATH");
    sub->add_option("--threads", o.threads, "worker threads (default: all cores)");
    sub->add_option("--seed", o.seed, "seed for randomized oracle suites");
    sub->add_flag("--interactive", o.interactive, "prompt for ranges like the original programs");
  };

  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"rho-theta", "reproduce the (rho, theta) table"},
      {"tyrina", "Tyrina thresholds and x/y roundtrip"},
      {"sweep", "lambda-interval optimizer"},
      {"large-lambda", "closed-form check for lambda >= 220"},
      {"constants", "A, B, d and the integral constant"},
      {"zeta-check", "Euler-Maclaurin zeta oracle against the bounds"},
      {"verify-all", "every check above"},
  };
  std::string chosen;
  for (const auto& [name, help] : cmds) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return run(chosen, o);
}
