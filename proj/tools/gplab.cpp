// gplab command-line runner.
//
//   gplab compare --x 1000000 --set all --out report.json
//   gplab --config experiment.json --workers 8

#include <CLI11.hpp>
#include <iostream>

#include "gplab/cli.hpp"
#include "gplab/error.hpp"

int main(int argc, char** argv) {
  using namespace gplab;

  CLI::App app{"Experiments on primes a^2 + b^2 with b in a sparse set"};
  std::string command, config_path, set_text, weight, constant, zeros, out, csv, suite, u, z1, z2;
  u64 x = 0, seed = 0, n = 0, w = 0, threshold = 0;
  unsigned workers = 0;
  double tolerance = 0;
  bool dyadic = false, coprime = false, quiet = false;

  app.add_option("command", command, "count|predict|compare|bias|verify-lemma|correlation|balance");
  app.add_option("--config", config_path, "JSON config file (schema_version 1)");
  auto* x_opt = app.add_option("--x", x, "upper bound X for a^2 + b^2");
  auto* set_opt = app.add_option("--set", set_text, "set spec, e.g. multiples:q=5,lo=10,hi=300");
  auto* seed_opt = app.add_option("--seed", seed, "seed for every random choice");
  auto* workers_opt = app.add_option("--workers", workers, "worker threads");
  auto* out_opt = app.add_option("--out", out, "JSON report path (text report goes to PATH.txt)");
  auto* csv_opt = app.add_option("--csv", csv, "CSV of per-b partial sums");
  auto* weight_opt = app.add_option("--weight", weight, "unit|lambda");
  auto* constant_opt = app.add_option("--constant", constant, "euler_product|four_over_pi");
  auto* zeros_opt = app.add_option("--zeros", zeros, "zero scenario file");
  auto* tol_opt = app.add_option("--tolerance", tolerance, "compare: fail when |relative error| exceeds this");
  auto* suite_opt = app.add_option("--suite", suite, "verify-lemma suite: characters|analysis|density|bilinear");
  auto* u_opt = app.add_option("--u", u, "balance: modulus u");
  auto* n_opt = app.add_option("--n", n, "balance: norms in (N, 2N]");
  auto* w_opt = app.add_option("--w", w, "balance: roughness cutoff W");
  auto* z1_opt = app.add_option("--z1", z1, "correlation: z1");
  auto* z2_opt = app.add_option("--z2", z2, "correlation: z2");
  auto* th_opt = app.add_option("--threshold", threshold, "correlation: conductor threshold (0 = sqrt|delta|)");
  auto* dyadic_opt = app.add_flag("--dyadic", dyadic, "norms in (X, 2X]");
  auto* coprime_opt = app.add_flag("--coprime", coprime, "count: only (a, b) = 1");
  app.add_flag("--quiet", quiet, "do not print the text report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ExperimentConfig config;
  try {
    if (!config_path.empty()) config = load_config_file(config_path);
    if (!command.empty()) config.command = command;
    if (*x_opt) config.X = x;
    if (*set_opt) config.set_text = set_text;
    if (*seed_opt) config.seed = seed;
    if (*workers_opt) config.workers = workers;
    if (*out_opt) config.output_path = out;
    if (*csv_opt) config.csv_path = csv;
    if (*weight_opt) config.weight = parse_weight(weight);
    if (*constant_opt) config.constant = parse_main_constant(constant);
    if (*zeros_opt) config.zeros_path = zeros;
    if (*tol_opt) config.tolerance = tolerance;
    if (*suite_opt) config.suite = suite;
    if (*u_opt) config.u = parse_gauss(u);
    if (*n_opt) config.N = n;
    if (*w_opt) config.W = w;
    if (*z1_opt) config.z1 = parse_gauss(z1);
    if (*z2_opt) config.z2 = parse_gauss(z2);
    if (*th_opt) config.threshold = threshold;
    if (*dyadic_opt) config.dyadic = dyadic;
    if (*coprime_opt) config.coprime = coprime;
  } catch (const Error& e) {
    std::cerr << "gplab: " << e.what() << '\n';
    return e.code() == ErrorCode::IoError ? kExitRuntime : kExitUsage;
  }

  const RunResult result = run(config);
  if (!quiet) std::cout << result.text;
  if (result.report.contains("error")) std::cerr << "gplab: " << result.report["error"].get<std::string>() << '\n';
  return result.exit_code;
}
