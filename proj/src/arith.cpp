#include "gplab/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "gplab/error.hpp"

namespace gplab {
namespace arith {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

// Small primes for trial division, built once.
const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (u64 i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (u64 j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 pollard_brent(u64 n, u64 seed) {
  if (n % 2 == 0) return 2;
  u64 y = seed % n, c = (seed * 0x9E3779B97F4A7C15ULL) % (n - 1) + 1, m = 128;
  u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
  auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 lim = std::min(m, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    }
    r <<= 1;
    if (r > (u64{1} << 40)) return n;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime64(n)) {
    out.push_back(n);
    return;
  }
  const u64 r = isqrt(n);
  if (r * r == n) {
    factor_rec(r, out);
    factor_rec(r, out);
    return;
  }
  for (u64 seed = 1; seed < 64; ++seed) {
    const u64 d = pollard_brent(n, seed);
    if (d != 1 && d != n) {
      factor_rec(d, out);
      factor_rec(n / d, out);
      return;
    }
  }
  throw Error(ErrorCode::FactorizationFailure, "rho did not split " + std::to_string(n));
}

}  // namespace

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witness set of Jim Sinclair, deterministic below 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factor(u64 n) {
  if (n == 0) throw Error(ErrorCode::ZeroArgument, "factor(0)");
  Factorization out;
  for (std::uint32_t p : trial_primes()) {
    const u64 pp = p;
    if (pp * pp > n) break;
    if (n % pp) continue;
    int e = 0;
    while (n % pp == 0) {
      n /= pp;
      ++e;
    }
    out.push_back({pp, e});
  }
  if (n > 1) {
    std::vector<u64> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (u64 p : rest) {
      if (!out.empty() && out.back().prime == p) {
        ++out.back().exponent;
      } else {
        out.push_back({p, 1});
      }
    }
  }
  return out;
}

u64 iroot(u64 n, int k) {
  if (k <= 0) throw Error(ErrorCode::InvalidArgument, "iroot order");
  if (k == 1 || n < 2) return n;
  u64 r = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
  auto pow_le = [&](u64 base) {
    u128 acc = 1;
    for (int i = 0; i < k; ++i) {
      acc *= base;
      if (acc > n) return false;
    }
    return true;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (r > 0xFFFFFFFFULL || r * r > n)) --r;
  while (r + 1 <= 0xFFFFFFFFULL && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
    throw Error(ErrorCode::Overflow, "value exceeds signed 64-bit range");
  }
  return static_cast<i64>(v);
}

i64 checked_mul(i64 a, i64 b) { return narrow(static_cast<i128>(a) * b); }
i64 checked_add(i64 a, i64 b) { return narrow(static_cast<i128>(a) + b); }

int mobius(const Factorization& f) {
  for (const auto& pp : f) {
    if (pp.exponent > 1) return 0;
  }
  return (f.size() % 2) ? -1 : 1;
}

int mobius(u64 n) { return mobius(factor(n)); }

u64 tau(const Factorization& f) {
  u64 t = 1;
  for (const auto& pp : f) t *= static_cast<u64>(pp.exponent + 1);
  return t;
}

u64 tau(u64 n) { return tau(factor(n)); }

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& pp : f) {
    phi *= pp.prime - 1;
    for (int i = 1; i < pp.exponent; ++i) phi *= pp.prime;
  }
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factor(n)); }

u64 invmod(u64 a, u64 m) {
  if (m == 1) return 0;
  i128 t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    const i128 q = r / new_r;
    std::tie(t, new_t) = std::pair<i128, i128>{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair<i128, i128>{new_r, r - q * new_r};
  }
  if (r != 1) throw Error(ErrorCode::NotCoprime, "no inverse");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

int chi4(u64 n) {
  switch (n % 4) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& pp : f) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 expand(const Factorization& f) {
  u128 acc = 1;
  for (const auto& pp : f) {
    for (int e = 0; e < pp.exponent; ++e) {
      acc *= pp.prime;
      if (acc > std::numeric_limits<u64>::max()) throw Error(ErrorCode::Overflow, "expand");
    }
  }
  return static_cast<u64>(acc);
}

}  // namespace arith

std::size_t memory_budget_bytes() {
  std::size_t mb = 2048;
  if (const char* env = std::getenv("GPLAB_BUDGET_MB")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) mb = static_cast<std::size_t>(v);
  }
  return mb * 1024 * 1024;
}

void check_budget(std::size_t bytes, const char* what) {
  if (bytes > memory_budget_bytes()) {
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + " needs " + std::to_string(bytes >> 20) +
                                               " MB, above GPLAB_BUDGET_MB");
  }
}

PrimeSieve::PrimeSieve(u64 limit, bool keep_list) : limit_(limit) {
  const u64 odd_count = limit / 2 + 1;
  check_budget(odd_count / 8 + (keep_list ? limit / 10 * 4 : 0), "prime sieve");
  odd_composite_.assign(odd_count / 64 + 1, 0);
  odd_composite_[0] |= 1;  // 1 is not prime
  for (u64 i = 3; i * i <= limit; i += 2) {
    if ((odd_composite_[i / 2 / 64] >> ((i / 2) % 64)) & 1) continue;
    for (u64 j = i * i; j <= limit; j += 2 * i) odd_composite_[j / 2 / 64] |= u64{1} << ((j / 2) % 64);
  }
  if (keep_list) {
    if (limit >= 2) primes_.push_back(2);
    for (u64 i = 3; i <= limit; i += 2) {
      if (!((odd_composite_[i / 2 / 64] >> ((i / 2) % 64)) & 1)) primes_.push_back(static_cast<std::uint32_t>(i));
    }
  }
}

}  // namespace gplab
