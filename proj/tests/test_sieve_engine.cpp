#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "gplab/error.hpp"
#include "gplab/sieve_engine.hpp"

using namespace gplab;

namespace {

bool prime_oracle(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

double lambda_oracle(u64 n) {
  if (n < 2) return 0.0;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(double(p)) : 0.0;
  }
  return std::log(double(n));
}

// Pairs (a >= 1, b in B) with a^2 + b^2 in (lo, hi], weighted, by direct enumeration.
double brute_count(const std::vector<u64>& B, u64 lo, u64 hi, bool lambda, bool coprime) {
  double s = 0;
  for (u64 b : B)
    for (u64 a = 1; a * a + b * b <= hi; ++a) {
      const u64 m = a * a + b * b;
      if (m <= lo) continue;
      if (coprime && std::gcd(a, b) != 1) continue;
      s += lambda ? lambda_oracle(m) : (prime_oracle(m) ? 1.0 : 0.0);
    }
  return s;
}

SparseSetSpec spec(SetKind kind, u64 lo, u64 hi) {
  SparseSetSpec s;
  s.kind = kind;
  s.lo = lo;
  s.hi = hi;
  return s;
}

}  // namespace

TEST_CASE("is_prime64 worked examples and brute force") {
  CHECK(arith::is_prime64(97));
  CHECK_FALSE(arith::is_prime64(561));
  CHECK_FALSE(arith::is_prime64(1));
  CHECK_FALSE(arith::is_prime64(0));
  CHECK(arith::is_prime64(2));
  for (u64 n = 0; n <= 200000; ++n)
    if (arith::is_prime64(n) != prime_oracle(n)) FAIL("n=" << n);
  CHECK(arith::is_prime64((1ULL << 61) - 1));
  CHECK_FALSE(arith::is_prime64(3215031751ULL));             // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(arith::is_prime64(3825123056546413051ULL));    // strong pseudoprime to the first nine prime bases
  CHECK_FALSE(arith::is_prime64(4611686014132420609ULL));    // (2^31 - 1)^2
  CHECK(arith::is_prime64(4611686018427387847ULL));          // 2^62 - 57
}

TEST_CASE("PrimeSieve agrees with trial division") {
  const PrimeSieve sieve(300000);
  for (u64 n = 0; n <= 300000; ++n)
    if (sieve.is_prime(n) != prime_oracle(n)) FAIL("n=" << n);
  CHECK(sieve.primes().size() == 25997);  // pi(300000)
  CHECK(sieve.is_prime(1000003));         // beyond the limit
}

TEST_CASE("von_mangoldt worked examples") {
  CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(von_mangoldt(6) == 0.0);
  CHECK(von_mangoldt(97) == doctest::Approx(std::log(97.0)));
  CHECK(von_mangoldt(1) == 0.0);
  CHECK(von_mangoldt(4052555153018976267ULL) == doctest::Approx(std::log(3.0)));  // 3^39
  CHECK(von_mangoldt(999999999989ULL * 1) == doctest::Approx(std::log(999999999989.0)));
  for (u64 n = 1; n <= 100000; ++n)
    if (std::abs(von_mangoldt(n) - lambda_oracle(n)) > 1e-12) FAIL("n=" << n);
}

TEST_CASE("LambdaTable agrees with von_mangoldt") {
  const LambdaTable t(1000000);
  for (u64 n = 1; n <= 1000000; ++n)
    if (t(n) != von_mangoldt(n)) FAIL("n=" << n);
}

TEST_CASE("Chebyshev identity sum_{d | n} Lambda(d) = log n") {
  for (u64 n = 1; n <= 100000; ++n) {
    double s = 0;
    for (u64 d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      s += von_mangoldt(d);
      if (d * d != n) s += von_mangoldt(n / d);
    }
    if (std::abs(s - std::log(double(n))) > 1e-9) FAIL("n=" << n);
  }
}

TEST_CASE("parse_set_spec") {
  const auto s = parse_set_spec("multiples:q=5,lo=10,hi=300");
  CHECK(s.kind == SetKind::multiples);
  CHECK(s.q == 5);
  CHECK(s.lo == 10);
  CHECK(s.hi == 300);
  CHECK(parse_set_spec("all").kind == SetKind::all);
  CHECK(parse_set_spec("random:delta=0.2,seed=9").delta == doctest::Approx(0.2));
  for (const char* bad : {"cubes", "all:foo=1", "multiples:q", "random:delta=x", ""}) {
    try {
      parse_set_spec(bad);
      FAIL("expected BadSpec for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadSpec);
    }
  }
  CHECK(parse_set_spec(describe(s)).q == 5);
}

TEST_CASE("build_set worked examples") {
  CHECK(build_set(spec(SetKind::squares, 1, 100), 10000).members ==
        std::vector<u64>{1, 4, 9, 16, 25, 36, 49, 64, 81, 100});
  auto m7 = spec(SetKind::multiples, 1, 30);
  m7.q = 7;
  CHECK(build_set(m7, 900).members == std::vector<u64>{7, 14, 21, 28});
  CHECK(build_set(spec(SetKind::primes, 1, 20), 400).members == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19});
  auto dm = spec(SetKind::digit_missing, 60, 80);
  dm.digit = 7;
  CHECK(build_set(dm, 6400).members == std::vector<u64>{60, 61, 62, 63, 64, 65, 66, 68, 69, 80});
}

TEST_CASE("random sets are deterministic and sized by the density target") {
  auto r = spec(SetKind::random, 1000, 10000);
  r.delta = 0.1;
  r.seed = 42;
  const SetB a = build_set(r, 100000000), b = build_set(r, 100000000);
  CHECK(a.members == b.members);
  CHECK(a.size() == static_cast<std::size_t>(std::floor(std::pow(9000.0, 0.8))));
  CHECK(std::is_sorted(a.members.begin(), a.members.end()));
  CHECK(std::adjacent_find(a.members.begin(), a.members.end()) == a.members.end());
  CHECK(a.members.front() >= 1000);
  CHECK(a.members.back() <= 10000);
  r.seed = 43;
  CHECK(build_set(r, 100000000).members != a.members);
}

TEST_CASE("SetB bitmap matches the member list") {
  auto r = spec(SetKind::random, 5, 500);
  r.seed = 3;
  const SetB B = build_set(r, 250000);
  std::size_t set_bits = 0;
  for (u64 b = B.lo; b <= B.hi; ++b) {
    set_bits += B.contains(b);
    CHECK(B.contains(b) == std::binary_search(B.members.begin(), B.members.end(), b));
  }
  CHECK(set_bits == B.size());
}

TEST_CASE("build_set errors") {
  try {
    build_set(spec(SetKind::primes, 24, 28), 1000);
    FAIL("expected EmptySet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySet);
  }
  try {
    build_set(spec(SetKind::all, 1, 50), 100);  // hi beyond sqrt X
    FAIL("expected BadSpec");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadSpec);
  }
  auto missing = spec(SetKind::explicit_file, 1, 10);
  missing.path = "/nonexistent/set.txt";
  CHECK_THROWS_AS(build_set(missing, 100), Error);
}

TEST_CASE("explicit sets read a newline-delimited file") {
  const std::string path = "test_sieve_engine_set.txt";
  {
    std::ofstream f(path);
    f << "# members\n7\n3\n\n7\n10\n";
  }
  auto e = spec(SetKind::explicit_file, 1, 10);
  e.path = path;
  CHECK(build_set(e, 100).members == std::vector<u64>{3, 7, 10});
  std::remove(path.c_str());
}

TEST_CASE("count_weighted worked examples") {
  const SetB B10 = build_set(spec(SetKind::all, 1, 10), 100);
  CountOptions unit;
  const auto r = count_weighted(B10, 100, unit);
  CHECK(r.prime_count == 23);
  CHECK(r.S_observed == 23.0);

  CountOptions lam;
  lam.weight = Weight::lambda;
  const SetB one = SetB::from_members({1});
  CHECK(count_weighted(one, 50, lam).S_observed == doctest::Approx(std::log(2.0 * 5 * 17 * 37)));

  const SetB empty = SetB::from_members({});
  CHECK(count_weighted(empty, 1000, unit).S_observed == 0.0);
  CHECK(count_weighted(empty, 1000, lam).S_observed == 0.0);
}

TEST_CASE("count_weighted equals brute-force enumeration") {
  const LambdaTable table(200000);
  for (u64 X : {1ULL, 2ULL, 5ULL, 99ULL, 1000ULL, 4097ULL, 33333ULL, 100000ULL}) {
    const u64 root = static_cast<u64>(std::sqrt(double(X)));
    std::vector<u64> all(root);
    std::iota(all.begin(), all.end(), 1);
    const SetB B = SetB::from_members(all);
    for (bool lambda : {false, true})
      for (bool coprime : {false, true})
        for (bool dyadic : {false, true}) {
          CountOptions o;
          o.weight = lambda ? Weight::lambda : Weight::unit;
          o.coprime = coprime;
          o.dyadic = dyadic;
          o.table = &table;
          const double got = count_weighted(B, X, o).S_observed;
          const double want = dyadic ? brute_count(all, X, 2 * X, lambda, coprime) : brute_count(all, 0, X, lambda, coprime);
          CHECK(got == doctest::Approx(want).epsilon(1e-12));
        }
  }
}

TEST_CASE("count_weighted is independent of the worker count") {
  auto r = spec(SetKind::random, 1, 1000);
  r.delta = 0.05;
  r.seed = 5;
  const SetB B = build_set(r, 1000000);
  for (Weight w : {Weight::unit, Weight::lambda}) {
    CountOptions o;
    o.weight = w;
    o.workers = 1;
    const auto base = count_weighted(B, 1000000, o);
    for (unsigned workers : {4u, 16u}) {
      o.workers = workers;
      const auto other = count_weighted(B, 1000000, o);
      CHECK(other.S_observed == base.S_observed);
      CHECK(other.prime_count == base.prime_count);
      CHECK(other.per_b == base.per_b);
    }
  }
}

TEST_CASE("count_weighted is monotone in X and in B") {
  const SetB small = build_set(spec(SetKind::primes, 1, 300), 100000);
  const SetB large = build_set(spec(SetKind::all, 1, 300), 100000);
  CountOptions o;
  o.weight = Weight::lambda;
  double last = 0;
  for (u64 X = 1000; X <= 100000; X += 9000) {
    const double s = count_weighted(large, X, o).S_observed;
    CHECK(s >= last);
    last = s;
    CHECK(count_weighted(small, X, o).S_observed <= s);
  }
}

TEST_CASE("B = squares counts primes a^2 + b^4") {
  const u64 X = 1000000;
  const SetB sq = build_set(spec(SetKind::squares, 1, 1000), X);
  CountOptions o;
  const u64 got = count_weighted(sq, X, o).prime_count;
  u64 want = 0;
  for (u64 c = 1; c * c * c * c <= X; ++c)
    for (u64 a = 1; a * a + c * c * c * c <= X; ++a) want += prime_oracle(a * a + c * c * c * c);
  CHECK(got == want);
}

TEST_CASE("count_weighted reports per-b partials that sum to the total") {
  auto m = spec(SetKind::multiples, 1, 300);
  m.q = 3;
  const SetB B = build_set(m, 100000);
  CountOptions o;
  o.weight = Weight::lambda;
  const auto r = count_weighted(B, 100000, o);
  REQUIRE(r.per_b.size() == B.size());
  double s = 0;
  for (double x : r.per_b) s += x;
  CHECK(s == doctest::Approx(r.S_observed).epsilon(1e-12));
  CHECK(r.pairs_scanned > 0);
}
