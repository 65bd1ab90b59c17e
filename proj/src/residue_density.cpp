#include "gplab/residue_density.hpp"

#include <algorithm>

#include "gplab/error.hpp"
#include "gplab/gaussian.hpp"

namespace gplab {

namespace {

unsigned rho_prime_power(u64 p, int e) {
  if (p == 2) return e == 1 ? 1 : 0;
  return p % 4 == 1 ? 2 : 0;
}

// Roots of x^2+1 mod p^e.
std::vector<u64> local_roots(u64 p, int e) {
  if (p == 2) return e == 1 ? std::vector<u64>{1} : std::vector<u64>{};
  if (p % 4 == 3) return {};
  u64 x = sqrt_minus_one_mod_prime(p);
  u64 mod = p;
  for (int j = 1; j < e; ++j) {
    const u64 next = mod * p;
    // Newton step: x <- x - (x^2+1) / (2x) mod p^{j+1}.
    const u64 fx = (arith::mulmod(x, x, next) + 1) % next;
    const u64 inv = arith::invmod((2 * x) % next, next);
    x = (x + next - arith::mulmod(fx, inv, next)) % next;
    mod = next;
  }
  return {x, mod - x};
}

}  // namespace

u64 rho(u64 d) {
  if (d == 0) throw Error(ErrorCode::ZeroArgument, "rho(0)");
  u64 r = 1;
  for (const auto& [p, e] : arith::factor(d)) r *= rho_prime_power(p, e);
  return r;
}

std::vector<u64> roots_of_minus_one(u64 d) {
  if (d == 0) throw Error(ErrorCode::ZeroArgument, "roots_of_minus_one(0)");
  std::vector<u64> roots{0};
  u64 mod = 1;
  for (const auto& [p, e] : arith::factor(d)) {
    u64 pe = 1;
    for (int j = 0; j < e; ++j) pe *= p;
    const std::vector<u64> local = local_roots(p, e);
    std::vector<u64> next;
    // CRT: x == r (mod) and x == s (pe).
    const u64 inv = arith::invmod(mod % pe, pe);
    for (u64 r : roots) {
      for (u64 s : local) {
        const u64 t = arith::mulmod((s + pe - r % pe) % pe, inv, pe);
        next.push_back(r + mod * t);
      }
    }
    roots = std::move(next);
    mod *= pe;
  }
  if (d == 1) return {0};
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rational density_factor(u64 b, DensityVariant variant) {
  if (b == 0) throw Error(ErrorCode::ZeroArgument, "density_factor(0)");
  Rational acc(variant == DensityVariant::omega2 ? 2 : 1);
  for (const auto& [p, e] : arith::factor(b)) {
    if (variant == DensityVariant::omega2 && p == 2) continue;
    const i64 pp = static_cast<i64>(p);
    acc *= Rational(pp, pp - static_cast<i64>(rho_prime_power(p, 1)));
  }
  return acc;
}

double density_factor_value(u64 b, DensityVariant variant) {
  return boost::rational_cast<double>(density_factor(b, variant));
}

long double partial_4_over_pi(u64 prime_limit) {
  if (prime_limit < 2) throw Error(ErrorCode::InvalidArgument, "prime_limit must be at least 2");
  const PrimeSieve sieve(prime_limit, false);
  long double acc = 1.0L;
  for (u64 p = 2; p <= prime_limit; p = (p == 2 ? 3 : p + 2)) {
    if (!sieve.is_prime(p)) continue;
    const long double pl = static_cast<long double>(p);
    acc *= (1.0L - rho_prime_power(p, 1) / pl) / (1.0L - 1.0L / pl);
  }
  return acc;
}

RhoTable::RhoTable(u64 limit) : limit_(limit) {
  check_budget(limit + 1, "rho table");
  values_.assign(limit + 1, 1);
  values_[0] = 0;
  std::vector<bool> composite(limit + 1, false);
  for (u64 p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (u64 m = p * p; m <= limit; m += p) composite[m] = true;
    const unsigned r1 = rho_prime_power(p, 1);
    const unsigned r2 = rho_prime_power(p, 2);
    for (u64 m = p; m <= limit; m += p) values_[m] = static_cast<unsigned char>(values_[m] * r1);
    if (r2 != r1 && p <= limit / p) {
      for (u64 m = p * p; m <= limit; m += p * p) values_[m] = static_cast<unsigned char>(r2);
    }
  }
}

}  // namespace gplab
