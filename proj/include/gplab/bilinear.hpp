#pragma once

// Type I remainders, the correlation count T_B(z1, z2) with its exact
// character expansion, and Moebius balance statistics over ideals.

#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "gplab/characters.hpp"
#include "gplab/sieve_engine.hpp"

namespace gplab {

// Im(conj(z1) z2).
i64 delta_im(GaussInt z1, GaussInt z2);

// Caches character tables mod d for repeated expansions.
class DirichletCache {
 public:
  const DirichletTable& get(u64 d);

 private:
  std::map<u64, std::unique_ptr<DirichletTable>> tables_;
};

struct CorrelationReport {
  i64 delta = 0;
  u64 a_ratio = 0;  // z2 / z1 mod |delta| as a rational residue
  u64 brute = 0;
  bool reconstructed = false;
  i64 reconstruction = 0;
  double reconstruction_error = 0;  // distance of the float sum to the integer
  bool exact = false;
  u64 threshold = 0;
  double small_conductor_mass = 0;  // contribution of d * g <= threshold
  double small_conductor_fraction = 0;
};

// Pairs (b1, b2) in B^2 with b1 z2 == b2 z1 mod delta, counted directly and
// through the expansion
//   sum_{g | q} phi(q/g)^{-1} sum_{d | q/g} sum*_{chi mod d}
//       conj(chi)(a) |sum_{b in B, (b, q) = g} chi(b / g)|^2.
// threshold 0 means floor(sqrt |delta|).
CorrelationReport correlation_T(const SetB& B, GaussInt z1, GaussInt z2, u64 threshold = 0,
                                u64 modulus_bound = kDefaultModulusBound, DirichletCache* cache = nullptr);

struct TypeIReport {
  double abs_remainder = 0;  // sum_b |count_b - g_b main_b|
  double normalizer = 0;     // sqrt(X) |B| / N(w)
  double ratio = 0;
  u64 counted = 0;  // sum_b count_b
  double expected = 0;
  std::vector<double> per_b;  // signed remainder per b
};

// For each b in B: #{a >= 1 : a^2 + b^2 <= X, w | b + ia, (z, conj z) = 1}
// against g(w) #{a >= 1 : a^2 + b^2 <= X, (a, b) = 1, a + b odd},
// g(w) = 1_{(w, b conj w) = 1} / N(w).
TypeIReport typeI_remainder(const SetB& B, u64 X, GaussInt w);

// Primary z with N z in (N, 2N], with beta = mu(N z) on W-rough norms.
struct IdealSample {
  GaussInt z;
  u64 n = 0;
  double beta = 0;
  bool admissible = false;  // W-rough and (z, conj z) = 1
};

std::vector<IdealSample> rough_mobius_sequence(u64 N, u64 W);

// C_W(beta, alpha) = sum_adm beta conj(alpha) / sum_adm |alpha|.
std::complex<double> cw_correlation(const std::vector<IdealSample>& seq, const std::vector<double>& beta,
                                    const std::vector<std::complex<double>>& alpha);

// beta-sharp for a list of characters Psi, over the single window (N, 2N].
std::vector<std::complex<double>> beta_sharp(const std::vector<IdealSample>& seq,
                                             const std::vector<HeckeChar>& psi);

// sum_{psi mod u} |sum_n c_n psi(n)|^2 / N^2.
double class_statistic(const CharTable& table, const std::vector<IdealSample>& seq,
                       const std::vector<std::complex<double>>& coeffs, u64 N);

struct BalanceReport {
  double statistic = 0;  // sum_psi |sum beta psi|^2 / N^2
  u64 phi_u = 0;
  u64 support = 0;  // number of n with beta != 0
};

BalanceReport mobius_balance(GaussInt u, u64 N, u64 W, u64 modulus_bound = kDefaultModulusBound);

}  // namespace gplab
