#include "gplab/gaussian.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gplab/error.hpp"

namespace gplab {

namespace {

using arith::narrow;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 round_div(i128 a, i128 b) { return floor_div(2 * a + b, 2 * b); }

// (z * conj(w)) as 128-bit pair.
std::pair<i128, i128> mul_conj(GaussInt z, GaussInt w) {
  const i128 r = static_cast<i128>(z.re) * w.re + static_cast<i128>(z.im) * w.im;
  const i128 i = static_cast<i128>(z.im) * w.re - static_cast<i128>(z.re) * w.im;
  return {r, i};
}

GaussInt first_quadrant(GaussInt z) {
  for (int k = 0; k < 4; ++k) {
    if (z.re > 0 && z.im >= 0) return z;
    z = z * kI;
  }
  return z;
}

}  // namespace

GaussInt operator+(GaussInt a, GaussInt b) {
  return {arith::checked_add(a.re, b.re), arith::checked_add(a.im, b.im)};
}

GaussInt operator-(GaussInt a, GaussInt b) {
  return {narrow(static_cast<i128>(a.re) - b.re), narrow(static_cast<i128>(a.im) - b.im)};
}

GaussInt operator-(GaussInt a) { return {narrow(-static_cast<i128>(a.re)), narrow(-static_cast<i128>(a.im))}; }

GaussInt operator*(GaussInt a, GaussInt b) {
  const i128 r = static_cast<i128>(a.re) * b.re - static_cast<i128>(a.im) * b.im;
  const i128 i = static_cast<i128>(a.re) * b.im + static_cast<i128>(a.im) * b.re;
  return {narrow(r), narrow(i)};
}

GaussInt conj(GaussInt z) { return {z.re, narrow(-static_cast<i128>(z.im))}; }

GaussInt gpow(GaussInt z, u64 e) {
  GaussInt result{1, 0};
  while (e) {
    if (e & 1) result = result * z;
    e >>= 1;
    if (e) z = z * z;
  }
  return result;
}

u64 norm(GaussInt z) {
  const u128 n = static_cast<u128>(static_cast<i128>(z.re) * z.re) + static_cast<u128>(static_cast<i128>(z.im) * z.im);
  if (n > std::numeric_limits<u64>::max()) throw Error(ErrorCode::Overflow, "norm of " + to_string(z));
  return static_cast<u64>(n);
}

bool is_odd(GaussInt z) { return ((z.re ^ z.im) & 1) != 0; }

bool is_unit(GaussInt z) { return norm(z) == 1; }

bool divides(GaussInt w, GaussInt z) {
  if (w == GaussInt{}) return z == GaussInt{};
  const auto [r, i] = mul_conj(z, w);
  const i128 n = norm(w);
  return r % n == 0 && i % n == 0;
}

GaussInt exact_div(GaussInt z, GaussInt w) {
  if (w == GaussInt{}) throw Error(ErrorCode::ZeroArgument, "division by 0");
  const auto [r, i] = mul_conj(z, w);
  const i128 n = norm(w);
  if (r % n != 0 || i % n != 0) throw Error(ErrorCode::InvalidArgument, to_string(w) + " does not divide " + to_string(z));
  return {narrow(r / n), narrow(i / n)};
}

GaussInt euclid_rem(GaussInt z, GaussInt w) {
  const auto [r, i] = mul_conj(z, w);
  const i128 n = norm(w);
  const GaussInt q{narrow(round_div(r, n)), narrow(round_div(i, n))};
  return z - q * w;
}

bool is_primary(GaussInt z) { return is_odd(z) && divides(GaussInt{2, 2}, z - GaussInt{1, 0}); }

GaussInt primary_associate(GaussInt z) {
  if (z == GaussInt{}) throw Error(ErrorCode::ZeroArgument, "primary_associate(0)");
  if (!is_odd(z)) throw Error(ErrorCode::EvenArgument, "primary_associate(" + to_string(z) + ")");
  for (int k = 0; k < 4; ++k) {
    if (is_primary(z)) return z;
    z = z * kI;
  }
  throw Error(ErrorCode::InvalidArgument, "no primary associate");  // unreachable for odd z
}

GaussInt ggcd(GaussInt z, GaussInt w) {
  if (z == GaussInt{} && w == GaussInt{}) throw Error(ErrorCode::BothZero, "ggcd(0, 0)");
  while (w != GaussInt{}) {
    GaussInt r = euclid_rem(z, w);
    z = w;
    w = r;
  }
  return is_odd(z) ? primary_associate(z) : first_quadrant(z);
}

GaussInt GaussFactorization::reconstruct() const {
  GaussInt acc = unit;
  for (const auto& [p, e] : factors) acc = acc * gpow(p, static_cast<u64>(e));
  return acc;
}

u64 sqrt_minus_one_mod_prime(u64 p) {
  if (p == 2) return 1;
  if (p % 4 != 1) throw Error(ErrorCode::InvalidArgument, "-1 is not a square mod " + std::to_string(p));
  for (u64 c = 2;; ++c) {
    const u64 x = arith::powmod(c, (p - 1) / 4, p);
    if (arith::mulmod(x, x, p) == p - 1) return x;
  }
}

GaussFactorization factor_gaussian(GaussInt z) {
  if (z == GaussInt{}) throw Error(ErrorCode::ZeroArgument, "factor_gaussian(0)");
  GaussFactorization out;
  GaussInt rest = z;
  for (const auto& [p, e] : arith::factor(norm(z))) {
    if (p == 2) {
      const GaussInt pi{1, 1};
      for (int j = 0; j < e; ++j) rest = exact_div(rest, pi);
      out.factors.push_back({pi, e});
    } else if (p % 4 == 3) {
      const GaussInt q{-static_cast<i64>(p), 0};
      for (int j = 0; j < e / 2; ++j) rest = exact_div(rest, q);
      out.factors.push_back({q, e / 2});
    } else {
      // Hermite-Serret: Euclid on (p, sqrt(-1) mod p) stops at the first remainder below sqrt p.
      u64 r0 = p, r1 = sqrt_minus_one_mod_prime(p);
      while (r1 > p / r1) {
        const u64 t = r0 % r1;
        r0 = r1;
        r1 = t;
      }
      const u64 s = arith::isqrt(p - r1 * r1);
      const GaussInt pi = primary_associate(GaussInt{static_cast<i64>(r1), static_cast<i64>(s)});
      const GaussInt pibar = primary_associate(conj(pi));
      int k1 = 0, k2 = 0;
      while (divides(pi, rest)) {
        rest = exact_div(rest, pi);
        ++k1;
      }
      while (divides(pibar, rest)) {
        rest = exact_div(rest, pibar);
        ++k2;
      }
      if (k1) out.factors.push_back({pi, k1});
      if (k2) out.factors.push_back({pibar, k2});
    }
  }
  if (!is_unit(rest)) throw Error(ErrorCode::FactorizationFailure, "leftover " + to_string(rest));
  out.unit = rest;
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    const u64 na = norm(a.first), nb = norm(b.first);
    if (na != nb) return na < nb;
    return a.first < b.first;
  });
  return out;
}

u64 m_of(GaussInt z) {
  if (z == GaussInt{}) throw Error(ErrorCode::ZeroArgument, "m_of(0)");
  const GaussFactorization f = factor_gaussian(z);
  // Group split primes lying over the same rational p.
  Factorization rational;
  auto bump = [&](u64 p, int e) {
    for (auto& pp : rational) {
      if (pp.prime == p) {
        pp.exponent = std::max(pp.exponent, e);
        return;
      }
    }
    rational.push_back({p, e});
  };
  for (const auto& [pi, e] : f.factors) {
    const u64 n = norm(pi);
    if (n == 2) {
      bump(2, (e + 1) / 2);
    } else if (pi.im == 0) {
      bump(static_cast<u64>(-pi.re), e);
    } else {
      bump(n, e);
    }
  }
  return arith::expand(rational);
}

u64 small_divisor_witness(u64 n, int k) {
  if (n == 0) throw Error(ErrorCode::ZeroArgument, "small_divisor_witness(0)");
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  // n = b_1 b_2^2 ... b_{k-1}^{k-1} b_k^k with b_1..b_{k-1} squarefree.
  std::vector<std::vector<u64>> strata(static_cast<std::size_t>(k));
  u64 bk = 1;
  for (const auto& [p, e] : arith::factor(n)) {
    for (int j = 0; j < e / k; ++j) bk *= p;
    if (e % k) strata[static_cast<std::size_t>(e % k)].push_back(p);
  }
  u64 d = bk;
  for (int j = 1; j < k; ++j) {
    // Square-free witness: product of the smallest floor(r/k) primes of b_j.
    const auto& primes = strata[static_cast<std::size_t>(j)];
    const std::size_t take = primes.size() / static_cast<std::size_t>(k);
    for (std::size_t t = 0; t < take; ++t) d *= primes[t];
  }
  return d;
}

std::string to_string(GaussInt z) {
  if (z.im == 0) return std::to_string(z.re);
  std::string imag;
  if (z.im == 1) {
    imag = "i";
  } else if (z.im == -1) {
    imag = "-i";
  } else {
    imag = std::to_string(z.im) + "i";
  }
  if (z.re == 0) return imag;
  return std::to_string(z.re) + (z.im > 0 ? "+" : "") + imag;
}

GaussInt parse_gauss(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::BadSpec, "empty Gaussian integer");
  auto parse_int = [&](const std::string& part) -> i64 {
    if (part.empty() || part == "+") return 1;
    if (part == "-") return -1;
    std::size_t used = 0;
    i64 v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadSpec, "cannot parse '" + text + "'");
    }
    if (used != part.size()) throw Error(ErrorCode::BadSpec, "cannot parse '" + text + "'");
    return v;
  };
  if (s.back() != 'i') return {parse_int(s), 0};
  s.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t cut = std::string::npos;
  for (std::size_t j = s.size(); j-- > 1;) {
    if (s[j] == '+' || s[j] == '-') {
      cut = j;
      break;
    }
  }
  if (cut == std::string::npos) return {0, parse_int(s)};
  return {parse_int(s.substr(0, cut)), parse_int(s.substr(cut))};
}

}  // namespace gplab
