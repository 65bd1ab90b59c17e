#pragma once

// Experiment configuration, the command runner and the lemma batteries.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gplab/gaussian.hpp"
#include "gplab/main_term.hpp"
#include "gplab/sieve_engine.hpp"

namespace gplab {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitAssertion = 1, kExitUsage = 2, kExitRuntime = 3 };

struct ExperimentConfig {
  std::string command;
  std::string set_text = "all";
  u64 X = 1000000;
  Weight weight = Weight::lambda;
  bool coprime = false;
  bool dyadic = false;
  MainConstant constant = MainConstant::euler_product;
  std::optional<std::string> zeros_path;
  u64 seed = 0;
  unsigned workers = 1;
  std::string output_path;
  std::string csv_path;
  std::optional<double> tolerance;  // compare: assert |relative error| <= tolerance
  std::string suite;                 // verify-lemma
  GaussInt u{2, 1};                  // balance
  u64 N = 10000;                     // balance
  u64 W = 30;                        // balance
  GaussInt z1{2, 1};                 // correlation
  GaussInt z2{1, 2};                 // correlation
  u64 threshold = 0;                 // correlation
};

const std::vector<std::string>& known_commands();

// Applies the keys of a JSON config object; unknown keys, a missing or wrong
// schema_version and ill-typed values throw Error(ConfigError).
void apply_config_json(ExperimentConfig& config, const nlohmann::json& j);
ExperimentConfig load_config_file(const std::string& path);
void validate(const ExperimentConfig& config);

// Rounds to 12 significant digits.
double round12(double x);

struct CheckLine {
  std::string anchor;  // the claim being checked
  std::string label;
  double observed = 0;
  double bound = 0;
  double ratio = 0;
  bool pass = false;
};

struct VerifySummary {
  std::string suite;
  std::vector<CheckLine> checks;
  bool all_pass() const;
};

const std::vector<std::string>& known_suites();

// Recorded envelope for |sum_z F(z) chi(z)| / |u| with the radius-1000 bump.
inline constexpr double kPolyaEnvelope = 5.0;

// Batteries shared with the acceptance binary.
std::vector<CheckLine> vaughan_battery(u64 Y, u64 Z, u64 n_max, unsigned workers = 1);
std::vector<CheckLine> large_sieve_battery(u64 seed, u64 trials, unsigned workers = 1);

struct CorrelationCase {
  GaussInt z1, z2;
  SparseSetSpec spec;
};

// Seeded pairs with (z_j, conj z_j) = 1, (z1, z2) = 1 and 0 < |delta| <= max_delta.
std::vector<CorrelationCase> correlation_cases(u64 seed, u64 count, i64 max_delta);
CheckLine correlation_battery(u64 seed, u64 count, i64 max_delta, unsigned workers = 1);

VerifySummary verify_all(const std::string& suite, u64 seed = 0, unsigned workers = 1);

struct RunResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  std::string text;
  std::string csv;
};

// Executes config.command. Errors become exit codes with a diagnostic in
// report["error"].
RunResult run(const ExperimentConfig& config);

// JSON text as written to disk (sorted keys, 2-space indent, trailing newline).
std::string dump_report(const nlohmann::json& report);

}  // namespace gplab
