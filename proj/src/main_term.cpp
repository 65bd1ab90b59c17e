#include "gplab/main_term.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "gplab/error.hpp"
#include "gplab/parallel.hpp"
#include "gplab/residue_density.hpp"

namespace gplab {

double main_constant(MainConstant c) {
  return c == MainConstant::euler_product ? kEulerProductLimit : 4.0 / std::numbers::pi;
}

std::string to_string(MainConstant c) { return c == MainConstant::euler_product ? "euler_product" : "four_over_pi"; }

MainConstant parse_main_constant(const std::string& text) {
  if (text == "euler_product") return MainConstant::euler_product;
  if (text == "four_over_pi") return MainConstant::four_over_pi;
  throw Error(ErrorCode::BadSpec, "unknown main constant '" + text + "'");
}

u64 coprime_count(u64 A, u64 b) {
  if (b == 1) return A;
  i64 total = 0;
  std::vector<std::pair<u64, int>> sqfree{{1, 1}};
  for (const auto& pp : arith::factor(b)) {
    const std::size_t base = sqfree.size();
    for (std::size_t i = 0; i < base; ++i) sqfree.push_back({sqfree[i].first * pp.prime, -sqfree[i].second});
  }
  for (const auto& [d, mu] : sqfree) total += mu * static_cast<i64>(A / d);
  return static_cast<u64>(total);
}

double predict_main(const SetB& B, u64 X, const MainOptions& options) {
  if (X < 2) throw Error(ErrorCode::InvalidArgument, "X must be at least 2");
  const u64 upper = options.dyadic ? static_cast<u64>(arith::checked_mul(static_cast<i64>(X), 2)) : X;
  std::vector<double> terms(B.members.size(), 0.0);
  parallel_for(B.members.size(), std::max(1u, options.workers), [&](std::size_t i) {
    const u64 b = B.members[i];
    const u64 b2 = b * b;
    if (b2 >= upper) return;
    u64 count = coprime_count(arith::isqrt(upper - b2), b);
    if (options.dyadic && b2 <= X) count -= coprime_count(arith::isqrt(X - b2), b);
    terms[i] = density_factor_value(b, DensityVariant::omega) * static_cast<double>(count);
  });
  CompensatedSum sum;
  for (double t : terms) sum.add(t);
  double m = main_constant(options.constant) * sum.value();
  if (options.weight == Weight::unit) m /= std::log(static_cast<double>(X));
  return m;
}

std::vector<ZeroDatum> parse_zero_text(const std::string& text) {
  std::vector<ZeroDatum> zeros;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    ZeroDatum z;
    long long re = 0, im = 0, chi = 0;
    if (!(fields >> z.beta)) continue;  // blank line
    if (!(fields >> z.t >> re >> im >> chi >> z.k)) {
      throw Error(ErrorCode::ConfigError, "zero record on line " + std::to_string(line_no) + " needs 6 fields");
    }
    std::string extra;
    if (fields >> extra) throw Error(ErrorCode::ConfigError, "trailing data on line " + std::to_string(line_no));
    if (!(z.beta > 0 && z.beta <= 1)) {
      throw Error(ErrorCode::ConfigError, "beta must lie in (0, 1] on line " + std::to_string(line_no));
    }
    if (chi < 0) throw Error(ErrorCode::ConfigError, "negative character index on line " + std::to_string(line_no));
    z.modulus = GaussInt{re, im};
    z.character = static_cast<std::uint32_t>(chi);
    zeros.push_back(z);
  }
  return zeros;
}

std::vector<ZeroDatum> parse_zero_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open zero file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_zero_text(buffer.str());
}

QuasiExplicitResult quasi_explicit_eval(const SetB& B, u64 X, const std::vector<ZeroDatum>& zeros,
                                        MainConstant constant, u64 modulus_bound) {
  std::map<std::pair<i64, i64>, std::unique_ptr<CharTable>> tables;
  std::vector<HeckeChar> chars;
  QuasiExplicitResult result;
  for (const ZeroDatum& z : zeros) {
    auto& slot = tables[{z.modulus.re, z.modulus.im}];
    if (!slot) slot = std::make_unique<CharTable>(z.modulus, modulus_bound);
    if (z.character >= slot->size()) {
      throw Error(ErrorCode::ConfigError, "character index " + std::to_string(z.character) + " out of range mod " +
                                              to_string(z.modulus));
    }
    HeckeChar h{z.k, slot.get(), z.character};
    // xi_k(i) chi(i) must be 1 for the character to live on ideals.
    const std::complex<double> at_i = std::pow(std::complex<double>(0, 1), z.k) * slot->eval(z.character, kI);
    result.zero_used.push_back(std::abs(at_i - 1.0) < 1e-9);
    chars.push_back(h);
  }
  CompensatedSum re_sum, im_sum;
  for (u64 b : B.members) {
    const u64 b2 = b * b;
    if (b2 >= X) continue;
    const double w = density_factor_value(b, DensityVariant::omega2);
    const u64 a_max = arith::isqrt(X - b2);
    for (u64 a = 1; a <= a_max; ++a) {
      if (((a + b) & 1) == 0 || std::gcd(a, b) != 1) continue;
      const u64 n = a * a + b2;
      const GaussInt z{static_cast<i64>(b), static_cast<i64>(a)};
      std::complex<double> factor{1.0, 0.0};
      const double logn = std::log(static_cast<double>(n));
      for (std::size_t j = 0; j < zeros.size(); ++j) {
        if (!result.zero_used[j]) continue;
        if (!chars[j].table->group().label(primary_associate(z))) continue;
        const std::complex<double> value = std::conj(hecke_eval(chars[j], z));
        factor -= value * std::exp((zeros[j].beta - 1.0) * logn) * std::polar(1.0, zeros[j].t * logn);
      }
      re_sum.add(w * factor.real());
      im_sum.add(w * factor.imag());
      ++result.terms;
    }
  }
  const double kappa = main_constant(constant);
  result.value = kappa * re_sum.value();
  result.imaginary = kappa * im_sum.value();
  return result;
}

PredictionReport compare_report(const SetB& B, u64 X, const std::vector<ZeroDatum>& zeros,
                                const MainOptions& options) {
  if (B.empty()) throw Error(ErrorCode::EmptySet, "compare needs a non-empty B");
  const auto start = std::chrono::steady_clock::now();
  PredictionReport r;
  r.weight = options.weight;
  r.constant = options.constant;
  CountOptions count{options.weight, !zeros.empty(), options.dyadic, options.workers, nullptr};
  const CountReport observed = count_weighted(B, X, count);
  r.S_observed = observed.S_observed;
  r.per_b = observed.per_b;
  if (zeros.empty()) {
    r.M_predicted = predict_main(B, X, options);
    r.terms = B.size();
  } else {
    if (options.dyadic) throw Error(ErrorCode::InvalidArgument, "zeros are not supported with the dyadic range");
    const QuasiExplicitResult q = quasi_explicit_eval(B, X, zeros, options.constant);
    r.M_predicted = q.value;
    if (options.weight == Weight::unit) r.M_predicted /= std::log(static_cast<double>(X));
    r.terms = q.terms;
    r.bias_factor_applied = true;
  }
  r.relative_error = r.M_predicted != 0 ? (r.S_observed - r.M_predicted) / r.M_predicted : 0.0;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace gplab
