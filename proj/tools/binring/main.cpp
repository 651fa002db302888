#include "commands.hpp"

#include "binring/error.hpp"
#include "binring/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

// Exit codes: 0 every check passed, 1 a check failed, 2 usage error.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

const std::vector<std::pair<std::string, std::string>> kCommands{
    {"cobar", "cobar cohomology of a coalgebra: num (default), trivial, divided, or FILE.json"},
    {"bar", "bar homology of an algebra: poly (default), truncK, or FILE.json"},
    {"dualcheck", "compare the transposed cobar complex of num with the bar complex of Z[x]"},
    {"space", "integer cohomology of a simplicial set: point, circle, sphereN, torus, rp2, simplexN, boundaryN, or FILE.json"},
    {"kunneth", "Kunneth comparison Z^X (x) Z^Y -> Z^(X x Y) for two spaces"},
    {"alpha1", "pointwise comparison of the cobar cofaces with the K(Z,1) cochain ring"},
    {"binomiality", "binomial ring axioms on sampled elements of num or of a cochain ring"},
    {"witt", "Frobenius-fixed subring of truncated Witt vectors over F_p: P K"},
    {"conservativity", "bar conservativity on the named example maps (default all)"},
    {"acyclic", "acyclicity certificates over Q and F_p: crafted and random complexes, or FILE.json"},
    {"doldkan", "normalization of Gamma(Z[n]) and the normalized inclusion on fixtures"},
};

void error_record(const std::string& message, const char* status = "error") {
  nlohmann::json j{{"status", status}, {"error", message}};
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace binring;
  CLI::App app{"Exact computations with binomial rings, cobar and bar constructions, and simplicial cochains"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.fallthrough();

  cli::RunConfig config;
  int window_n = 0, truncation = 0;
  unsigned window_d = 0;
  std::size_t samples = 0;
  std::string format = "pretty";
  bool no_timing = false;
  auto* opt_n = app.add_option("--window-n", window_n, "largest cohomological (or length) degree n");
  auto* opt_d = app.add_option("--window-d", window_d, "largest internal degree d");
  auto* opt_t = app.add_option("--truncation", truncation, "cosimplicial truncation T");
  auto* opt_s = app.add_option("--samples", samples, "number of random samples");
  app.add_option("--seed", config.seed, "random seed");
  app.add_option("--out", config.out, "write the report to this file instead of stdout");
  app.add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_flag("--no-timing", no_timing, "omit wall time so that reports are reproducible byte for byte");

  for (const auto& [name, help] : kCommands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("args", config.args, "command arguments");
    sub->callback([&config, name = name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    error_record(std::string(e.what()) + " (run with --help for usage)");
    return kUsage;
  }
  if (*opt_n) config.window_n = window_n;
  if (*opt_d) config.window_d = window_d;
  if (*opt_t) config.truncation = truncation;
  if (*opt_s) config.samples = samples;
  config.format = parse_report_format(format);
  config.timing = !no_timing;

  Report report;
  try {
    const auto start = std::chrono::steady_clock::now();
    report = cli::run(config);
    if (config.timing)
      report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const InternalError& e) {
    error_record(std::string("internal error: ") + e.what());
    return kFail;
  } catch (const Error& e) {
    error_record(e.what());
    return kUsage;
  }

  const std::string text = render(report, config.format);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.out);
    if (!out) {
      error_record("cannot write " + config.out);
      return kUsage;
    }
    out << text;
  }
  if (!report.passed())
    for (const auto& f : report.failures) error_record("check failed: " + f, "fail");
  return report.passed() ? kPass : kFail;
}
