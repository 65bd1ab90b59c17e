#pragma once

// Predicted main term, the quasi-explicit evaluator with externally supplied
// zeros, and observed-vs-predicted reports.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gplab/characters.hpp"
#include "gplab/sieve_engine.hpp"

namespace gplab {

// Leading constant of the prediction. `euler_product` is the limit of the
// product over p of (1 - rho(p)/p)(1 - 1/p)^{-1}; `four_over_pi` is 4/pi.
enum class MainConstant { euler_product, four_over_pi };
double main_constant(MainConstant c);
std::string to_string(MainConstant c);
MainConstant parse_main_constant(const std::string& text);

struct MainOptions {
  Weight weight = Weight::lambda;
  MainConstant constant = MainConstant::euler_product;
  bool dyadic = false;
  unsigned workers = 1;
};

// #{1 <= a <= A : gcd(a, b) = 1}
u64 coprime_count(u64 A, u64 b);

// kappa * sum_{b in B} omega(b) #{a >= 1 : (a, b) = 1, a^2 + b^2 <= X};
// divided by log X for unit weight.
double predict_main(const SetB& B, u64 X, const MainOptions& options);

struct ZeroDatum {
  double beta = 1.0;
  double t = 0.0;
  GaussInt modulus{1, 0};
  std::uint32_t character = 0;
  int k = 0;
};

// One zero per line: beta t modulus_re modulus_im character_index k.
// Blank lines and '#' comments are skipped.
std::vector<ZeroDatum> parse_zero_file(const std::string& path);
std::vector<ZeroDatum> parse_zero_text(const std::string& text);

struct QuasiExplicitResult {
  double value = 0;       // real part of the evaluated sum
  double imaginary = 0;   // imaginary part (reported, not used)
  u64 terms = 0;
  std::vector<bool> zero_used;  // false when xi_k chi(i) != 1
};

// kappa sum_{z} 1_B(b) omega2(b) (1 - sum_j conj(xi_kj chi_j)(z) n^{beta_j - 1 + i t_j})
// over z = b + ia, a >= 1, a^2 + b^2 <= X, gcd(a, b) = 1, a^2 + b^2 odd.
QuasiExplicitResult quasi_explicit_eval(const SetB& B, u64 X, const std::vector<ZeroDatum>& zeros,
                                        MainConstant constant = MainConstant::euler_product,
                                        u64 modulus_bound = kDefaultModulusBound);

struct PredictionReport {
  double M_predicted = 0;
  double S_observed = 0;
  double relative_error = 0;
  bool bias_factor_applied = false;
  u64 terms = 0;
  Weight weight = Weight::lambda;
  MainConstant constant = MainConstant::euler_product;
  double wall_time = 0;
  std::vector<double> per_b;  // observed partial sums per member of B
};

PredictionReport compare_report(const SetB& B, u64 X, const std::vector<ZeroDatum>& zeros,
                                const MainOptions& options);

}  // namespace gplab
