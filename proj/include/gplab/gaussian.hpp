#pragma once

// Exact arithmetic in Z[i]. Components are signed 64-bit; every product goes
// through 128-bit intermediates and overflow throws Error(Overflow).

#include <string>
#include <utility>
#include <vector>

#include "gplab/arith.hpp"

namespace gplab {

struct GaussInt {
  i64 re = 0;
  i64 im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(i64 r, i64 i = 0) : re(r), im(i) {}

  friend bool operator==(const GaussInt&, const GaussInt&) = default;
  friend auto operator<=>(const GaussInt&, const GaussInt&) = default;
};

GaussInt operator+(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a);
GaussInt operator*(GaussInt a, GaussInt b);

inline constexpr GaussInt kI{0, 1};

GaussInt conj(GaussInt z);
GaussInt gpow(GaussInt z, u64 e);

// re^2 + im^2; throws Overflow when it does not fit in u64.
u64 norm(GaussInt z);

bool is_odd(GaussInt z);  // (1+i) does not divide z
bool is_unit(GaussInt z);
bool divides(GaussInt w, GaussInt z);  // w | z; w == 0 divides only 0

// z / w, which must be exact (throws InvalidArgument otherwise).
GaussInt exact_div(GaussInt z, GaussInt w);

// Euclidean remainder of z by w with |r|^2 <= |w|^2 / 2.
GaussInt euclid_rem(GaussInt z, GaussInt w);

bool is_primary(GaussInt z);  // z == 1 mod 2(1+i)
GaussInt primary_associate(GaussInt z);

// Odd results are primary; even ones are the associate with re > 0, im >= 0.
GaussInt ggcd(GaussInt z, GaussInt w);

struct GaussFactorization {
  GaussInt unit{1, 0};
  std::vector<std::pair<GaussInt, int>> factors;  // sorted by (norm, re, im)

  GaussInt reconstruct() const;
};

// Primes are primary, except the ramified prime which is stored as 1+i.
GaussFactorization factor_gaussian(GaussInt z);

// Smallest m >= 1 with z | m.
u64 m_of(GaussInt z);

// d | n with d^k <= n and tau(n) <= 2^{k^2} tau(d)^{k^3}.
u64 small_divisor_witness(u64 n, int k);

std::string to_string(GaussInt z);
// Accepts forms like "3", "-2i", "2+i", "1-3i", "i".
GaussInt parse_gauss(const std::string& text);

// x with x^2 == -1 mod p for a prime p == 1 mod 4.
u64 sqrt_minus_one_mod_prime(u64 p);

}  // namespace gplab
