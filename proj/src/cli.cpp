#include "gplab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "gplab/bilinear.hpp"
#include "gplab/error.hpp"
#include "gplab/residue_density.hpp"

namespace gplab {

using nlohmann::json;

namespace {

constexpr u64 kMaxX = 1000000000000ULL;
constexpr unsigned kMaxWorkers = 256;

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

u64 get_u64(const json& v, const char* key) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<i64>() < 0))
    config_error(std::string("'") + key + "' must be a nonnegative integer");
  return v.get<u64>();
}

std::string get_string(const json& v, const char* key) {
  if (!v.is_string()) config_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

bool get_bool(const json& v, const char* key) {
  if (!v.is_boolean()) config_error(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

// "2+i" or [2, 1]
GaussInt get_gauss(const json& v, const char* key) {
  if (v.is_string()) {
    try {
      return parse_gauss(v.get<std::string>());
    } catch (const Error& e) {
      config_error(std::string("'") + key + "': " + e.what());
    }
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer())
    return GaussInt{v[0].get<i64>(), v[1].get<i64>()};
  config_error(std::string("'") + key + "' must be a Gaussian integer string or [re, im]");
}

// Drops the fields that vary between identical runs.
json count_json(const CountReport& r) {
  json j;
  j["S_observed"] = round12(r.S_observed);
  j["prime_count"] = r.prime_count;
  j["pairs_scanned"] = r.pairs_scanned;
  j["weight"] = to_string(r.weight);
  j["coprime"] = r.coprime;
  j["dyadic"] = r.dyadic;
  return j;
}

json check_json(const CheckLine& c) {
  return json{{"anchor", c.anchor},          {"label", c.label},          {"observed", round12(c.observed)},
              {"bound", round12(c.bound)},   {"ratio", round12(c.ratio)}, {"pass", c.pass}};
}

std::string per_b_csv(const SetB& B, const std::vector<double>& per_b) {
  std::ostringstream out;
  out << "b,partial_sum\n";
  char buf[64];
  for (std::size_t i = 0; i < B.members.size() && i < per_b.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", per_b[i]);
    out << B.members[i] << ',' << buf << '\n';
  }
  return out.str();
}

std::string value_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Aligned "key  value" lines for the scalar members of an object.
void append_aligned(std::ostringstream& out, const json& obj, const std::string& prefix = "") {
  std::size_t width = 0;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!it.value().is_structured()) width = std::max(width, prefix.size() + it.key().size());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it.value().is_structured()) continue;
    out << std::left << std::setw(static_cast<int>(width) + 2) << (prefix + it.key()) << value_text(it.value())
        << '\n';
  }
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << "gplab " << report.value("command", std::string("?")) << '\n';
  if (report.contains("config")) append_aligned(out, report["config"], "config.");
  if (report.contains("result")) append_aligned(out, report["result"], "");
  if (report.contains("checks")) {
    const auto& checks = report["checks"];
    std::size_t width = 5;
    for (const auto& c : checks) width = std::max(width, c["anchor"].get<std::string>().size());
    auto cell = [](std::string v, std::size_t w) { return v.size() + 2 > w ? v + "  " : v + std::string(w - v.size(), ' '); };
    out << cell("pass", 6) << cell("claim", width + 2) << cell("observed", 18) << cell("bound", 18) << cell("ratio", 18)
        << "scope\n";
    for (const auto& c : checks) {
      out << cell(c["pass"].get<bool>() ? "PASS" : "FAIL", 6) << cell(c["anchor"].get<std::string>(), width + 2)
          << cell(c["observed"].dump(), 18) << cell(c["bound"].dump(), 18) << cell(c["ratio"].dump(), 18)
          << c["label"].get<std::string>() << '\n';
    }
  }
  if (report.contains("error")) out << "error  " << report["error"].get<std::string>() << '\n';
  return out.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow:
    case ErrorCode::FactorizationFailure:
    case ErrorCode::ModulusTooLarge:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::QuadratureFailure:
    case ErrorCode::IoError:
      return kExitRuntime;
    default:
      return kExitUsage;
  }
}

SparseSetSpec resolve_set(const ExperimentConfig& c) {
  SparseSetSpec spec = parse_set_spec(c.set_text);
  if (spec.kind == SetKind::random && c.set_text.find("seed=") == std::string::npos) spec.seed = c.seed;
  return spec;
}

json config_json(const ExperimentConfig& c) {
  json j;
  j["command"] = c.command;
  if (c.command == "verify-lemma") {
    j["suite"] = c.suite;
    j["seed"] = c.seed;
    return j;
  }
  if (c.command == "balance") {
    j["u"] = to_string(c.u);
    j["n"] = c.N;
    j["w"] = c.W;
    return j;
  }
  j["set"] = describe(resolve_set(c));
  j["x"] = c.X;
  j["seed"] = c.seed;
  if (c.command == "correlation") {
    j["z1"] = to_string(c.z1);
    j["z2"] = to_string(c.z2);
    j["threshold"] = c.threshold;
    return j;
  }
  j["weight"] = to_string(c.weight);
  j["dyadic"] = c.dyadic;
  if (c.command == "count") j["coprime"] = c.coprime;
  if (c.command != "count") j["constant"] = to_string(c.constant);
  if (c.zeros_path) j["zeros"] = *c.zeros_path;
  if (c.tolerance) j["tolerance"] = *c.tolerance;
  return j;
}

struct Outcome {
  json result;
  json checks;  // null unless the command runs checks
  std::string csv;
  double wall_time = 0;
  bool pass = true;
};

Outcome run_count(const ExperimentConfig& c) {
  const SetB B = build_set(resolve_set(c), c.X);
  CountOptions opt;
  opt.weight = c.weight;
  opt.coprime = c.coprime;
  opt.dyadic = c.dyadic;
  opt.workers = c.workers;
  const auto r = count_weighted(B, c.X, opt);
  Outcome o;
  o.result = count_json(r);
  o.result["set_size"] = B.size();
  o.csv = per_b_csv(B, r.per_b);
  o.wall_time = r.wall_time;
  return o;
}

MainOptions main_options(const ExperimentConfig& c) {
  MainOptions opt;
  opt.weight = c.weight;
  opt.constant = c.constant;
  opt.dyadic = c.dyadic;
  opt.workers = c.workers;
  return opt;
}

std::vector<ZeroDatum> load_zeros(const ExperimentConfig& c) {
  if (!c.zeros_path) return {};
  return parse_zero_file(*c.zeros_path);
}

Outcome run_predict(const ExperimentConfig& c) {
  const SetB B = build_set(resolve_set(c), c.X);
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto zeros = load_zeros(c);
  o.result["M_predicted"] = round12(predict_main(B, c.X, main_options(c)));
  o.result["main_constant"] = round12(main_constant(c.constant));
  o.result["set_size"] = B.size();
  if (c.zeros_path) {
    const auto q = quasi_explicit_eval(B, c.X, zeros, c.constant);
    o.result["quasi_explicit"] = round12(q.value);
    o.result["quasi_explicit_imaginary"] = round12(q.imaginary);
    o.result["zeros_used"] = std::count(q.zero_used.begin(), q.zero_used.end(), true);
  }
  o.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

Outcome run_compare(const ExperimentConfig& c) {
  const SetB B = build_set(resolve_set(c), c.X);
  const auto r = compare_report(B, c.X, load_zeros(c), main_options(c));
  Outcome o;
  o.result["M_predicted"] = round12(r.M_predicted);
  o.result["S_observed"] = round12(r.S_observed);
  o.result["relative_error"] = round12(r.relative_error);
  o.result["bias_factor_applied"] = r.bias_factor_applied;
  o.result["terms"] = r.terms;
  o.result["weight"] = to_string(r.weight);
  o.result["constant"] = to_string(r.constant);
  o.result["set_size"] = B.size();
  o.csv = per_b_csv(B, r.per_b);
  o.wall_time = r.wall_time;
  if (c.tolerance) {
    const CheckLine line{"compare: |S - M| / M <= tolerance", describe(resolve_set(c)), std::abs(r.relative_error),
                         *c.tolerance, std::abs(r.relative_error) / *c.tolerance,
                         std::abs(r.relative_error) <= *c.tolerance};
    o.checks = json::array({check_json(line)});
    o.pass = line.pass;
  }
  return o;
}

double boost_value(const Rational& r) { return double(r.numerator()) / double(r.denominator()); }

// Observed/predicted for a set sharing a common divisor, with the local
// factor that divisor contributes to every omega(b).
Outcome run_bias(const ExperimentConfig& c) {
  const SetB B = build_set(resolve_set(c), c.X);
  if (B.empty()) throw Error(ErrorCode::EmptySet, "empty set");
  u64 g = 0;
  for (u64 b : B.members) g = std::gcd(g, b);
  Rational boost(1);
  for (const auto& pp : arith::factor(g)) boost *= density_factor(pp.prime, DensityVariant::omega);
  const auto r = compare_report(B, c.X, {}, main_options(c));
  Outcome o;
  o.result["common_divisor"] = g;
  o.result["omega_boost"] = std::to_string(boost.numerator()) + "/" + std::to_string(boost.denominator());
  o.result["omega_boost_value"] = round12(boost_value(boost));
  o.result["M_predicted"] = round12(r.M_predicted);
  o.result["M_without_boost"] = round12(r.M_predicted / boost_value(boost));
  o.result["S_observed"] = round12(r.S_observed);
  o.result["observed_over_predicted"] = round12(r.S_observed / r.M_predicted);
  o.result["relative_error"] = round12(r.relative_error);
  o.result["set_size"] = B.size();
  o.csv = per_b_csv(B, r.per_b);
  o.wall_time = r.wall_time;
  if (c.zeros_path) {
    const auto zeros = load_zeros(c);
    const auto with = quasi_explicit_eval(B, c.X, zeros, c.constant);
    const auto without = quasi_explicit_eval(B, c.X, {}, c.constant);
    o.result["quasi_explicit"] = round12(with.value);
    o.result["quasi_explicit_zero_free"] = round12(without.value);
  }
  return o;
}

Outcome run_correlation(const ExperimentConfig& c) {
  const SetB B = build_set(resolve_set(c), c.X);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = correlation_T(B, c.z1, c.z2, c.threshold);
  Outcome o;
  o.result["delta"] = r.delta;
  o.result["a_ratio"] = r.a_ratio;
  o.result["T_brute"] = r.brute;
  o.result["reconstructed"] = r.reconstructed;
  if (r.reconstructed) {
    o.result["T_reconstructed"] = r.reconstruction;
    o.result["reconstruction_error"] = round12(r.reconstruction_error);
    o.result["exact"] = r.exact;
    o.result["threshold"] = r.threshold;
    o.result["small_conductor_mass"] = round12(r.small_conductor_mass);
    o.result["small_conductor_fraction"] = round12(r.small_conductor_fraction);
    o.pass = r.exact;
  }
  o.result["set_size"] = B.size();
  o.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

Outcome run_balance(const ExperimentConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = mobius_balance(c.u, c.N, c.W);
  Outcome o;
  o.result["statistic"] = round12(r.statistic);
  o.result["phi_u"] = r.phi_u;
  o.result["support"] = r.support;
  o.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

Outcome run_verify(const ExperimentConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = verify_all(c.suite, c.seed, c.workers);
  Outcome o;
  o.checks = json::array();
  u64 passed = 0;
  for (const auto& line : s.checks) {
    o.checks.push_back(check_json(line));
    passed += line.pass;
  }
  o.result["checks_total"] = s.checks.size();
  o.result["checks_passed"] = passed;
  o.pass = s.all_pass();
  o.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> commands = {"count",        "predict",     "compare", "bias",
                                                    "verify-lemma", "correlation", "balance"};
  return commands;
}

double round12(double x) {
  if (!std::isfinite(x) || x == 0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

void apply_config_json(ExperimentConfig& c, const json& j) {
  if (!j.is_object()) config_error("config must be a JSON object");
  if (!j.contains("schema_version")) config_error("missing 'schema_version'");
  if (!j["schema_version"].is_number_integer() || j["schema_version"].get<i64>() != kSchemaVersion)
    config_error("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    if (key == "schema_version") continue;
    if (key == "command") {
      c.command = get_string(v, "command");
    } else if (key == "x") {
      c.X = get_u64(v, "x");
    } else if (key == "set") {
      c.set_text = get_string(v, "set");
    } else if (key == "weight") {
      try {
        c.weight = parse_weight(get_string(v, "weight"));
      } catch (const Error& e) {
        config_error(e.what());
      }
    } else if (key == "coprime") {
      c.coprime = get_bool(v, "coprime");
    } else if (key == "dyadic") {
      c.dyadic = get_bool(v, "dyadic");
    } else if (key == "constant") {
      try {
        c.constant = parse_main_constant(get_string(v, "constant"));
      } catch (const Error& e) {
        config_error(e.what());
      }
    } else if (key == "zeros") {
      c.zeros_path = get_string(v, "zeros");
    } else if (key == "seed") {
      c.seed = get_u64(v, "seed");
    } else if (key == "workers") {
      c.workers = static_cast<unsigned>(std::min<u64>(get_u64(v, "workers"), kMaxWorkers + 1));
    } else if (key == "out") {
      c.output_path = get_string(v, "out");
    } else if (key == "csv") {
      c.csv_path = get_string(v, "csv");
    } else if (key == "tolerance") {
      if (!v.is_number()) config_error("'tolerance' must be a number");
      c.tolerance = v.get<double>();
    } else if (key == "suite") {
      c.suite = get_string(v, "suite");
    } else if (key == "u") {
      c.u = get_gauss(v, "u");
    } else if (key == "n") {
      c.N = get_u64(v, "n");
    } else if (key == "w") {
      c.W = get_u64(v, "w");
    } else if (key == "z1") {
      c.z1 = get_gauss(v, "z1");
    } else if (key == "z2") {
      c.z2 = get_gauss(v, "z2");
    } else if (key == "threshold") {
      c.threshold = get_u64(v, "threshold");
    } else {
      config_error("unknown key '" + key + "'");
    }
  }
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "cannot read config '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    config_error(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig c;
  apply_config_json(c, j);
  return c;
}

void validate(const ExperimentConfig& c) {
  const auto& cmds = known_commands();
  if (std::find(cmds.begin(), cmds.end(), c.command) == cmds.end())
    config_error("unknown command '" + c.command + "'");
  if (c.workers < 1 || c.workers > kMaxWorkers) config_error("workers must lie in [1, 256]");
  if (c.command == "verify-lemma") {
    if (c.suite.empty()) config_error("verify-lemma needs a suite");
    const auto& suites = known_suites();
    if (std::find(suites.begin(), suites.end(), c.suite) == suites.end())
      config_error("unknown suite '" + c.suite + "'");
    return;
  }
  if (c.command == "balance") {
    if (c.N < 1) config_error("n must be positive");
    if (c.W < 1) config_error("w must be positive");
    return;
  }
  if (c.X < 1 || c.X > kMaxX) config_error("x must lie in [1, 10^12]");
  if (c.tolerance && !(*c.tolerance > 0)) config_error("tolerance must be positive");
  (void)resolve_set(c);
}

RunResult run(const ExperimentConfig& config) {
  RunResult out;
  json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = config.command;
  try {
    validate(config);
    report["config"] = config_json(config);
    Outcome o;
    if (config.command == "count") o = run_count(config);
    else if (config.command == "predict") o = run_predict(config);
    else if (config.command == "compare") o = run_compare(config);
    else if (config.command == "bias") o = run_bias(config);
    else if (config.command == "correlation") o = run_correlation(config);
    else if (config.command == "balance") o = run_balance(config);
    else o = run_verify(config);
    report["result"] = o.result;
    if (!o.checks.is_null()) report["checks"] = o.checks;
    report["pass"] = o.pass;
    report["timing"] = json{{"wall_time_s", o.wall_time}, {"workers", config.workers}};
    out.csv = o.csv;
    out.exit_code = o.pass ? kExitOk : kExitAssertion;
  } catch (const Error& e) {
    report["error"] = e.what();
    report["pass"] = false;
    out.exit_code = exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    report["error"] = "BudgetExceeded: out of memory";
    report["pass"] = false;
    out.exit_code = kExitRuntime;
  } catch (const std::exception& e) {
    report["error"] = std::string("runtime failure: ") + e.what();
    report["pass"] = false;
    out.exit_code = kExitRuntime;
  }
  out.report = report;
  out.text = render_text(report);
  try {
    if (!config.output_path.empty()) {
      write_file(config.output_path, dump_report(report));
      write_file(config.output_path + ".txt", out.text);
    }
    if (!config.csv_path.empty() && !out.csv.empty()) write_file(config.csv_path, out.csv);
  } catch (const Error& e) {
    out.report["error"] = e.what();
    out.text += std::string("error  ") + e.what() + '\n';
    out.exit_code = kExitRuntime;
  }
  return out;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace gplab
