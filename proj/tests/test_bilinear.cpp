#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "gplab/bilinear.hpp"
#include "gplab/error.hpp"

using namespace gplab;

namespace {

bool admissible(GaussInt z) { return norm(z) % 2 == 1 && std::gcd(z.re, z.im) == 1; }

// Pairs (b1, b2) with b1 z2 - b2 z1 divisible by delta in both coordinates.
u64 T_oracle(const std::vector<u64>& B, GaussInt z1, GaussInt z2) {
  const i64 d = std::llabs(z1.re * z2.im - z1.im * z2.re);
  u64 count = 0;
  for (u64 b1 : B)
    for (u64 b2 : B) {
      const i64 re = i64(b1) * z2.re - i64(b2) * z1.re, im = i64(b1) * z2.im - i64(b2) * z1.im;
      count += re % d == 0 && im % d == 0;
    }
  return count;
}

int mobius_oracle(u64 n) {
  int mu = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

u64 least_prime_factor(u64 n) {
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

std::vector<u64> range(u64 lo, u64 hi) {
  std::vector<u64> m(hi - lo + 1);
  std::iota(m.begin(), m.end(), lo);
  return m;
}

}  // namespace

TEST_CASE("delta_im") {
  CHECK(delta_im({2, 1}, {1, 2}) == 3);
  CHECK(delta_im({1, 2}, {2, 1}) == -3);
  CHECK(delta_im({7, -4}, {7, -4}) == 0);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<i64> c(-100000, 100000);
  for (int i = 0; i < 1000; ++i) {
    const GaussInt z1{c(rng), c(rng)}, z2{c(rng), c(rng)};
    CHECK(delta_im(z1, z2) == -delta_im(z2, z1));
    CHECK(delta_im(z1, z2) == (conj(z1) * z2).im);
  }
}

TEST_CASE("correlation_T worked examples") {
  const SetB B = SetB::from_members(range(1, 10));
  const auto r = correlation_T(B, {2, 1}, {1, 2});
  CHECK(r.delta == 3);
  CHECK(r.a_ratio == 2);
  CHECK(r.brute == 33);
  CHECK(r.reconstructed);
  CHECK(r.reconstruction == 33);
  CHECK(r.exact);

  const auto unit = correlation_T(B, {1, 0}, {0, 1});
  CHECK(std::llabs(unit.delta) == 1);
  CHECK(unit.brute == 100);
  CHECK(unit.reconstruction == 100);

  try {
    correlation_T(B, {2, 1}, {2, 1});
    FAIL("expected DeltaZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DeltaZero);
  }
}

TEST_CASE("character reconstruction of T_B equals direct counting") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<i64> c(-30, 30);
  DirichletCache cache;
  int done = 0;
  while (done < 100) {
    const GaussInt z1{c(rng), c(rng)}, z2{c(rng), c(rng)};
    if (!admissible(z1) || !admissible(z2) || !is_unit(ggcd(z1, z2))) continue;
    const i64 d = delta_im(z1, z2);
    if (d == 0 || std::llabs(d) > 150) continue;
    const u64 hi = 20 + rng() % 300;
    std::vector<u64> members;
    for (u64 b = 1; b <= hi; ++b)
      if (rng() % 3 == 0) members.push_back(b);
    if (members.empty()) continue;
    const SetB B = SetB::from_members(members);
    const auto r = correlation_T(B, z1, z2, 0, kDefaultModulusBound, &cache);
    CHECK(r.brute == T_oracle(members, z1, z2));
    REQUIRE(r.reconstructed);
    CHECK(r.exact);
    CHECK(r.reconstruction == static_cast<i64>(r.brute));
    CHECK(r.small_conductor_fraction >= -1e-9);
    ++done;
  }
}

TEST_CASE("coprime admissible z1, z2 give gcd(delta, N z1 N z2) = 1") {
  // Exhaustive over primary generators with norm <= 10^4.
  std::vector<GaussInt> primaries;
  for (i64 x = -100; x <= 100; ++x)
    for (i64 y = -100; y <= 100; ++y) {
      const GaussInt z{x, y};
      if (x * x + y * y <= 10000 && admissible(z) && is_primary(z)) primaries.push_back(z);
    }
  u64 checked = 0;
  for (std::size_t i = 0; i < primaries.size(); ++i)
    for (std::size_t j = i + 1; j < primaries.size(); ++j) {
      const GaussInt z1 = primaries[i], z2 = primaries[j];
      const u64 n1 = norm(z1), n2 = norm(z2);
      const i64 d = delta_im(z1, z2);
      const u64 g1 = std::gcd(u64(std::llabs(d)), n1), g2 = std::gcd(u64(std::llabs(d)), n2);
      if (g1 == 1 && g2 == 1) {
        ++checked;
        continue;
      }
      // A common factor is only allowed when z1 and z2 share a Gaussian prime.
      if (is_unit(ggcd(z1, z2))) FAIL(to_string(z1) << ", " << to_string(z2));
    }
  CHECK(checked > 100000);
  // Every associate, at smaller norms.
  for (i64 x1 = -20; x1 <= 20; ++x1)
    for (i64 y1 = -20; y1 <= 20; ++y1)
      for (i64 x2 = -20; x2 <= 20; ++x2)
        for (i64 y2 = -20; y2 <= 20; ++y2) {
          const GaussInt z1{x1, y1}, z2{x2, y2};
          if (norm(z1) > 400 || norm(z2) > 400 || !admissible(z1) || !admissible(z2)) continue;
          const i64 d = delta_im(z1, z2);
          if (d == 0 || !is_unit(ggcd(z1, z2))) continue;
          if (std::gcd(u64(std::llabs(d)), norm(z1) * norm(z2)) != 1) FAIL(to_string(z1) << ", " << to_string(z2));
        }
}

TEST_CASE("gcd(b1, b2) divides delta when i delta w = z2 b1 - z1 b2 with (w, conj w) = 1") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<i64> c(-25, 25);
  u64 witnessed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const GaussInt z1{c(rng), c(rng)}, z2{c(rng), c(rng)};
    if (!admissible(z1) || !admissible(z2) || !is_unit(ggcd(z1, z2))) continue;
    const i64 d = delta_im(z1, z2);
    if (d == 0) continue;
    for (i64 b1 = 1; b1 <= 60; ++b1)
      for (i64 b2 = 1; b2 <= 60; ++b2) {
        const i64 re = b1 * z2.re - b2 * z1.re, im = b1 * z2.im - b2 * z1.im;
        if (re % d || im % d) continue;
        // w = (re + i im) / (i d) = im / d - i re / d
        const GaussInt w{im / d, -re / d};
        if (!admissible(w)) continue;
        ++witnessed;
        if (d % std::gcd(b1, b2) != 0) FAIL("b1=" << b1 << " b2=" << b2 << " delta=" << d);
      }
  }
  CHECK(witnessed > 1000);
}

TEST_CASE("typeI_remainder") {
  const SetB B = SetB::from_members(range(1, 1000));
  const auto trivial = typeI_remainder(B, 1000000, {1, 0});
  CHECK(trivial.abs_remainder == 0.0);
  CHECK(trivial.ratio == 0.0);

  const auto r = typeI_remainder(B, 1000000, {2, 1});
  CHECK(r.ratio <= 0.2);
  CHECK(r.normalizer == doctest::Approx(1000.0 * 1000 / 5));

  // b divisible by N(w): the main term vanishes and so does the count.
  const auto aligned = typeI_remainder(SetB::from_members({5, 10, 15}), 10000, {2, 1});
  CHECK(aligned.counted == 0);
  CHECK(aligned.expected == 0.0);
  CHECK(aligned.abs_remainder == 0.0);

  try {
    typeI_remainder(B, 1000000, {1, 1});
    FAIL("expected EvenModulus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenModulus);
  }
  CHECK_THROWS_AS(typeI_remainder(B, 1000000, {3, 0}), Error);  // (3, 3) != 1
}

TEST_CASE("typeI_remainder counts match enumeration") {
  for (GaussInt w : {GaussInt{2, 1}, GaussInt{3, 2}, GaussInt{-4, 1}, GaussInt{5, 2}}) {
    const u64 X = 200000;
    const auto B = range(1, 400);
    const auto r = typeI_remainder(SetB::from_members(B), X, w);
    const i64 nw = i64(norm(w));
    u64 counted = 0;
    double expected = 0;
    for (u64 b : B) {
      u64 main = 0;
      for (u64 a = 1; a * a + b * b <= X; ++a) {
        if ((a + b) % 2 == 0 || std::gcd(a, b) != 1) continue;
        ++main;
        const GaussInt z{i64(b), i64(a)};
        const GaussInt p = z * conj(w);
        counted += p.re % nw == 0 && p.im % nw == 0;
      }
      if (std::gcd(b, u64(nw)) == 1) expected += double(main) / double(nw);
    }
    CHECK(r.counted == counted);
    CHECK(r.expected == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("typeI ratios shrink as X grows") {
  double prev = 0;
  for (u64 X : {10000ULL, 100000ULL, 1000000ULL}) {
    const u64 root = static_cast<u64>(std::sqrt(double(X)));
    const auto r = typeI_remainder(SetB::from_members(range(1, root)), X, {2, 1});
    if (prev > 0) CHECK(r.ratio <= 2 * prev);
    prev = r.ratio;
  }
}

TEST_CASE("rough_mobius_sequence") {
  const auto seq = rough_mobius_sequence(1000, 30);
  u64 count = 0;
  for (i64 x = -50; x <= 50; ++x)
    for (i64 y = -50; y <= 50; ++y) {
      const u64 n = u64(x * x + y * y);
      count += n > 1000 && n <= 2000 && is_primary({x, y});
    }
  CHECK(seq.size() == count);
  for (const auto& s : seq) {
    CHECK(is_primary(s.z));
    CHECK(norm(s.z) == s.n);
    const bool rough = least_prime_factor(s.n) >= 30;
    CHECK(s.beta == (rough ? double(mobius_oracle(s.n)) : 0.0));
  }
}

TEST_CASE("mobius_balance") {
  // u = 1: one character, so the statistic is |sum beta|^2 / N^2 over primary z.
  const u64 N = 10000;
  long long total = 0;
  for (i64 x = -142; x <= 142; ++x)
    for (i64 y = -142; y <= 142; ++y) {
      const u64 n = u64(x * x + y * y);
      if (n <= N || n > 2 * N || !is_primary({x, y})) continue;
      if (least_prime_factor(n) >= 30) total += mobius_oracle(n);
    }
  const auto one = mobius_balance({1, 0}, N, 30);
  CHECK(one.statistic == doctest::Approx(double(total) * double(total) / (double(N) * double(N))));
  CHECK(one.statistic <= 1e-2);
  CHECK(one.phi_u == 1);

  const auto small = mobius_balance({2, 1}, 10000, 30);
  const auto large = mobius_balance({2, 1}, 100000, 30);
  CHECK(large.statistic < small.statistic);
  CHECK(small.phi_u == 4);

  const auto empty = mobius_balance({2, 1}, 10, 100);
  CHECK(empty.statistic == 0.0);
  CHECK(empty.support == 0);
}

TEST_CASE("beta-flat is orthogonal to the supplied characters") {
  const CharTable table(GaussInt{3, 2});
  const auto seq = rough_mobius_sequence(5000, 20);
  for (std::uint32_t chi : {0u, 1u, 2u}) {
    const HeckeChar h{0, &table, chi};
    const auto sharp = beta_sharp(seq, {h});
    std::complex<double> inner{0, 0};
    double scale = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!seq[i].admissible) continue;
      const auto label = table.group().label(seq[i].z);
      const std::complex<double> alpha = label ? std::conj(hecke_eval(h, seq[i].z)) : 0.0;
      inner += (seq[i].beta - sharp[i]) * std::conj(alpha);
      scale += std::abs(alpha);
    }
    CHECK(std::abs(inner) <= 1e-9 * std::max(1.0, scale));
  }
}
