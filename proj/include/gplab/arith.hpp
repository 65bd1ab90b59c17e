#pragma once

// Rational-integer plumbing shared by every module: overflow-checked
// products, deterministic primality, factorization, and small multiplicative
// functions.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gplab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

struct PrimePower {
  u64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ascending by prime.
using Factorization = std::vector<PrimePower>;

namespace arith {

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin; valid for every 64-bit input.
bool is_prime64(u64 n);

// Trial division below 10^6, then Brent-Pollard rho with a fixed seed.
// Throws FactorizationFailure if rho does not converge.
Factorization factor(u64 n);

// Largest r with r^k <= n.
u64 iroot(u64 n, int k);
u64 isqrt(u64 n);

i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);
i64 narrow(i128 v);

int mobius(u64 n);
int mobius(const Factorization& f);
u64 tau(const Factorization& f);
u64 tau(u64 n);
u64 euler_phi(const Factorization& f);
u64 euler_phi(u64 n);

// Modular inverse of a mod m (gcd must be 1); throws NotCoprime otherwise.
u64 invmod(u64 a, u64 m);

// chi_4: +1 on 1 mod 4, -1 on 3 mod 4, 0 on even.
int chi4(u64 n);

std::vector<u64> divisors(const Factorization& f);

// Positive integer reconstructed from its factorization (overflow checked).
u64 expand(const Factorization& f);

}  // namespace arith

// Primality bitmap over odd integers up to a limit, sized against the
// GPLAB_BUDGET_MB memory cap. Lookups past the limit fall back to
// Miller-Rabin.
class PrimeSieve {
 public:
  explicit PrimeSieve(u64 limit, bool keep_list = true);

  u64 limit() const { return limit_; }
  bool is_prime(u64 n) const {
    if (n > limit_) return arith::is_prime64(n);
    if ((n & 1) == 0) return n == 2;
    return n > 1 && !((odd_composite_[n / 128] >> ((n / 2) % 64)) & 1);
  }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  // Bit i of word i / 64 is set when 2i + 1 is composite (or 1).
  const std::uint64_t* odd_composite_bits() const { return odd_composite_.data(); }

 private:
  u64 limit_;
  std::vector<std::uint64_t> odd_composite_;  // bit i <-> 2i+1
  std::vector<std::uint32_t> primes_;
};

// Table-memory cap in bytes, from GPLAB_BUDGET_MB (default 2048 MB).
std::size_t memory_budget_bytes();
void check_budget(std::size_t bytes, const char* what);

}  // namespace gplab
