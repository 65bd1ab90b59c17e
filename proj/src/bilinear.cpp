#include "gplab/bilinear.hpp"

#include <cmath>
#include <numeric>

#include "gplab/error.hpp"
#include "gplab/main_term.hpp"

namespace gplab {

i64 delta_im(GaussInt z1, GaussInt z2) {
  return arith::narrow(static_cast<i128>(z1.re) * z2.im - static_cast<i128>(z1.im) * z2.re);
}

const DirichletTable& DirichletCache::get(u64 d) {
  auto& slot = tables_[d];
  if (!slot) slot = std::make_unique<DirichletTable>(d);
  return *slot;
}

CorrelationReport correlation_T(const SetB& B, GaussInt z1, GaussInt z2, u64 threshold, u64 modulus_bound,
                                DirichletCache* cache) {
  CorrelationReport r;
  r.delta = delta_im(z1, z2);
  if (r.delta == 0) throw Error(ErrorCode::DeltaZero, "Im(conj(z1) z2) = 0");
  if (!is_unit(ggcd(z1, z2))) throw Error(ErrorCode::NotCoprime, to_string(z1) + " and " + to_string(z2));
  const i128 q = r.delta < 0 ? -static_cast<i128>(r.delta) : static_cast<i128>(r.delta);
  const u64 qu = static_cast<u64>(q);

  for (u64 b1 : B.members) {
    for (u64 b2 : B.members) {
      const i128 re = static_cast<i128>(b1) * z2.re - static_cast<i128>(b2) * z1.re;
      const i128 im = static_cast<i128>(b1) * z2.im - static_cast<i128>(b2) * z1.im;
      if (re % q == 0 && im % q == 0) ++r.brute;
    }
  }

  const u64 n1 = norm(z1), n2 = norm(z2);
  if (std::gcd(n1 % qu, qu) != 1 || std::gcd(n2 % qu, qu) != 1) return r;
  if (qu > modulus_bound) {
    throw Error(ErrorCode::BudgetExceeded, "|delta| = " + std::to_string(qu) + " exceeds " +
                                               std::to_string(modulus_bound));
  }
  // b1 z2 == b2 z1 (q) is equivalent to b2 == a b1 (q) with a = Re(conj(z1) z2) / N(z1).
  const i128 real = static_cast<i128>(z1.re) * z2.re + static_cast<i128>(z1.im) * z2.im;
  const u64 real_mod = static_cast<u64>(((real % q) + q) % q);
  r.a_ratio = arith::mulmod(real_mod, arith::invmod(n1 % qu, qu), qu);
  r.threshold = threshold ? threshold : arith::isqrt(qu);

  DirichletCache local;
  DirichletCache& tables = cache ? *cache : local;
  std::complex<long double> total{0, 0}, small{0, 0};
  for (u64 g : arith::divisors(qu == 1 ? Factorization{} : arith::factor(qu))) {
    const u64 m = qu / g;
    std::vector<i64> reduced;
    for (u64 b : B.members) {
      if (std::gcd(b, qu) == g) reduced.push_back(static_cast<i64>(b / g));
    }
    if (reduced.empty()) continue;
    const long double inv_phi = 1.0L / static_cast<long double>(arith::euler_phi(m));
    for (u64 d : arith::divisors(m == 1 ? Factorization{} : arith::factor(m))) {
      const DirichletTable& table = tables.get(d);
      for (std::uint32_t chi : table.primitive_characters()) {
        std::complex<double> s{0.0, 0.0};
        for (i64 b : reduced) s += table.eval(chi, b);
        const std::complex<double> weight = std::conj(table.eval(chi, static_cast<i64>(r.a_ratio)));
        const std::complex<long double> c(static_cast<long double>(weight.real() * std::norm(s)) * inv_phi,
                                          static_cast<long double>(weight.imag() * std::norm(s)) * inv_phi);
        total += c;
        if (d * g <= r.threshold) small += c;
      }
    }
  }
  r.reconstructed = true;
  r.reconstruction = static_cast<i64>(std::llround(static_cast<double>(total.real())));
  r.reconstruction_error = static_cast<double>(std::abs(total.real() - static_cast<long double>(r.reconstruction)) +
                                               std::abs(total.imag()));
  r.exact = r.reconstruction_error < 1e-6 && r.reconstruction == static_cast<i64>(r.brute);
  r.small_conductor_mass = static_cast<double>(small.real());
  r.small_conductor_fraction = r.brute ? r.small_conductor_mass / static_cast<double>(r.brute) : 0.0;
  return r;
}

TypeIReport typeI_remainder(const SetB& B, u64 X, GaussInt w) {
  if (w == GaussInt{}) throw Error(ErrorCode::ZeroArgument, "w = 0");
  if (!is_odd(w)) throw Error(ErrorCode::EvenModulus, to_string(w) + " is even");
  if (!is_unit(ggcd(w, conj(w)))) throw Error(ErrorCode::NotCoprime, "(w, conj w) != 1 for " + to_string(w));
  const u64 nw = norm(w);
  if (static_cast<long double>(nw) > std::sqrt(static_cast<long double>(X))) {
    throw Error(ErrorCode::InvalidArgument, "N(w) exceeds X^{1/2}");
  }
  TypeIReport r;
  r.per_b.assign(B.size(), 0.0);
  const double inv_nw = 1.0 / static_cast<double>(nw);
  for (std::size_t i = 0; i < B.size(); ++i) {
    const u64 b = B.members[i];
    const u64 b2 = b * b;
    if (b2 >= X) continue;
    const u64 A = arith::isqrt(X - b2);
    u64 count = 0;
    for (u64 a = 1; a <= A; ++a) {
      if (((a + b) & 1) == 0 || std::gcd(a, b) != 1) continue;
      if (divides(w, GaussInt{static_cast<i64>(b), static_cast<i64>(a)})) ++count;
    }
    const u64 main = (b % 2 == 0) ? coprime_count(A, b) : coprime_count(A / 2, b);
    const bool coprime = is_unit(ggcd(w, GaussInt{static_cast<i64>(b), 0} * conj(w)));
    const double expected = coprime ? static_cast<double>(main) * inv_nw : 0.0;
    r.per_b[i] = static_cast<double>(count) - expected;
    r.abs_remainder += std::abs(r.per_b[i]);
    r.counted += count;
    r.expected += expected;
  }
  r.normalizer = std::sqrt(static_cast<double>(X)) * static_cast<double>(B.size()) * inv_nw;
  r.ratio = r.normalizer > 0 ? r.abs_remainder / r.normalizer : 0.0;
  return r;
}

std::vector<IdealSample> rough_mobius_sequence(u64 N, u64 W) {
  if (N == 0) throw Error(ErrorCode::InvalidArgument, "N must be positive");
  const u64 top = 2 * N;
  check_budget((top + 1) * (sizeof(std::uint32_t) + 1), "Moebius sieve");
  // Least prime factor and Moebius values up to 2N.
  std::vector<std::uint32_t> lpf(top + 1, 0);
  std::vector<signed char> mu(top + 1, 1);
  for (u64 p = 2; p <= top; ++p) {
    if (lpf[p] != 0) continue;
    for (u64 m = p; m <= top; m += p) {
      if (lpf[m] == 0) lpf[m] = static_cast<std::uint32_t>(p);
      mu[m] = static_cast<signed char>(-mu[m]);
    }
    if (p <= top / p) {
      for (u64 m = p * p; m <= top; m += p * p) mu[m] = 0;
    }
  }
  std::vector<IdealSample> out;
  const i64 r = static_cast<i64>(arith::isqrt(top));
  for (i64 x = -r; x <= r; ++x) {
    for (i64 y = -r; y <= r; ++y) {
      const u64 n = static_cast<u64>(x * x + y * y);
      if (n <= N || n > top) continue;
      const GaussInt z{x, y};
      if (!is_primary(z)) continue;
      IdealSample s;
      s.z = z;
      s.n = n;
      const bool rough = lpf[n] >= W;
      s.admissible = rough && std::gcd(static_cast<u64>(std::llabs(x)), static_cast<u64>(std::llabs(y))) == 1;
      s.beta = rough ? static_cast<double>(mu[n]) : 0.0;
      out.push_back(s);
    }
  }
  return out;
}

std::complex<double> cw_correlation(const std::vector<IdealSample>& seq, const std::vector<double>& beta,
                                    const std::vector<std::complex<double>>& alpha) {
  std::complex<double> num{0.0, 0.0};
  double den = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i].admissible) continue;
    num += beta[i] * std::conj(alpha[i]);
    den += std::abs(alpha[i]);
  }
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "C_W denominator vanishes");
  return num / den;
}

namespace {

std::complex<double> hecke_or_zero(const HeckeChar& h, GaussInt z) {
  if (!h.table->group().label(primary_associate(z))) return {0.0, 0.0};
  return hecke_eval(h, z);
}

}  // namespace

std::vector<std::complex<double>> beta_sharp(const std::vector<IdealSample>& seq, const std::vector<HeckeChar>& psi) {
  std::vector<double> beta(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) beta[i] = seq[i].beta;
  std::vector<std::complex<double>> sharp(seq.size(), {0.0, 0.0});
  for (const HeckeChar& h : psi) {
    std::vector<std::complex<double>> alpha(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) alpha[i] = std::conj(hecke_or_zero(h, seq[i].z));
    const std::complex<double> c = cw_correlation(seq, beta, alpha);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i].admissible) sharp[i] += alpha[i] * c;
    }
  }
  return sharp;
}

double class_statistic(const CharTable& table, const std::vector<IdealSample>& seq,
                       const std::vector<std::complex<double>>& coeffs, u64 N) {
  std::vector<std::complex<double>> classes(table.size(), {0.0, 0.0});
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    const auto l = table.group().label(seq[i].z);
    if (l) classes[*l] += coeffs[i];
  }
  double total = 0;
  for (std::uint32_t chi = 0; chi < table.size(); ++chi) {
    std::complex<double> s{0.0, 0.0};
    for (std::uint32_t x = 0; x < table.size(); ++x) {
      if (classes[x] != 0.0) s += classes[x] * table.system().value(chi, x);
    }
    total += std::norm(s);
  }
  const double Nd = static_cast<double>(N);
  return total / (Nd * Nd);
}

BalanceReport mobius_balance(GaussInt u, u64 N, u64 W, u64 modulus_bound) {
  const CharTable table(u, modulus_bound);
  BalanceReport r;
  r.phi_u = table.size();
  if (W > 2 * N) return r;  // no W-rough norm in (N, 2N]
  const auto seq = rough_mobius_sequence(N, W);
  std::vector<std::complex<double>> coeffs(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    coeffs[i] = seq[i].beta;
    if (seq[i].beta != 0) ++r.support;
  }
  r.statistic = class_statistic(table, seq, coeffs, N);
  return r;
}

}  // namespace gplab
