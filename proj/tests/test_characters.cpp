#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <set>

#include "gplab/characters.hpp"
#include "gplab/error.hpp"

using namespace gplab;
using cd = std::complex<double>;

namespace {

bool divides_oracle(GaussInt w, GaussInt z) {
  const i64 n = w.re * w.re + w.im * w.im;
  const i64 re = z.re * w.re + z.im * w.im;
  const i64 im = z.im * w.re - z.re * w.im;
  return re % n == 0 && im % n == 0;
}

// Units mod u counted in the box [0, N)^2, which holds N(u) copies of each class.
u64 unit_count_oracle(GaussInt u) {
  const i64 n = u.re * u.re + u.im * u.im;
  u64 units = 0;
  for (i64 x = 0; x < n; ++x)
    for (i64 y = 0; y < n; ++y) units += is_unit(ggcd(GaussInt{x, y}, u));
  return units / static_cast<u64>(n);
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

u64 phi_oracle(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

// sum over primitive characters mod d by Moebius inversion over the full sums
// sum_{chi mod e} chi(a) = phi(e) 1_{a == 1 (e)} for (a, e) = 1.
i64 primitive_sum_oracle(i64 a, u64 d) {
  const i64 ar = ((a % i64(d)) + i64(d)) % i64(d);
  if (std::gcd(u64(ar), d) != 1) return 0;
  i64 total = 0;
  for (u64 e = 1; e <= d; ++e) {
    if (d % e) continue;
    const i64 full = ((ar - 1) % i64(e) == 0) ? i64(phi_oracle(e)) : 0;
    total += mobius_oracle(d / e) * full;
  }
  return total;
}

std::vector<GaussInt> moduli_with_m_at_most(u64 limit) {
  std::vector<GaussInt> out;
  for (i64 x = 1; x <= i64(limit); ++x)
    for (i64 y = 0; y <= i64(limit); ++y) {
      const GaussInt u{x, y};
      if (norm(u) <= limit * limit && m_of(u) <= limit) out.push_back(u);
    }
  return out;
}

}  // namespace

TEST_CASE("residue_group worked examples") {
  const ResidueGroup g1(GaussInt{2, 1});
  CHECK(g1.order() == 4);
  REQUIRE(g1.generators().size() == 1);
  CHECK(g1.generators()[0].second == 4);

  const ResidueGroup trivial(GaussInt{1, 0});
  CHECK(trivial.order() == 1);

  const ResidueGroup g3(GaussInt{3, 0});
  CHECK(g3.order() == 8);
  REQUIRE(g3.generators().size() == 1);
  CHECK(g3.generators()[0].second == 8);

  try {
    ResidueGroup big(GaussInt{211, 0});
    FAIL("expected ModulusTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModulusTooLarge);
  }
}

TEST_CASE("group order and discrete logs are consistent") {
  for (GaussInt u : {GaussInt{2, 1}, GaussInt{3, 0}, GaussInt{5, 0}, GaussInt{1, 1}, GaussInt{4, 0}, GaussInt{3, 2},
                     GaussInt{6, 3}, GaussInt{2, 2}, GaussInt{7, 1}}) {
    const ResidueGroup g(u);
    CHECK(g.order() == unit_count_oracle(u));
    u64 prod = 1;
    for (const auto& [r, ord] : g.generators()) prod *= ord;
    CHECK(prod == g.order());
    const auto& G = g.group();
    std::set<std::uint32_t> indices;
    for (std::uint32_t a = 0; a < g.order(); ++a) indices.insert(G.dlog_index(a));
    CHECK(indices.size() == g.order());
    // exponent arithmetic reproduces multiplication
    const auto& orders = G.generator_orders();
    for (std::uint32_t a = 0; a < g.order(); a += 3)
      for (std::uint32_t b = 0; b < g.order(); b += 5) {
        const auto ea = G.exponents(a), eb = G.exponents(b), ec = G.exponents(G.mul(a, b));
        for (std::size_t j = 0; j < orders.size(); ++j) CHECK(ec[j] == (ea[j] + eb[j]) % orders[j]);
        const GaussInt prod_res = g.residue(a) * g.residue(b);
        CHECK(g.label(prod_res) == G.mul(a, b));
      }
  }
}

TEST_CASE("character_table worked examples") {
  const CharTable t1(GaussInt{2, 1});
  CHECK(t1.size() == 4);
  int primitive = 0;
  for (std::uint32_t c = 0; c < t1.size(); ++c) primitive += t1.primitive(c);
  CHECK(primitive == 3);

  const CharTable t0(GaussInt{1, 0});
  CHECK(t0.size() == 1);
  CHECK(t0.principal(0));

  const CharTable t5(GaussInt{5, 0});
  CHECK(t5.size() == 16);
  // 5 = pi pi-bar: primitive characters are products of non-principal characters mod each prime
  int prim5 = 0;
  for (std::uint32_t c = 0; c < t5.size(); ++c) prim5 += t5.primitive(c);
  CHECK(prim5 == 9);
}

TEST_CASE("orthogonality to 1e-10 for every modulus with M(u) <= 50") {
  for (GaussInt u : moduli_with_m_at_most(50)) {
    const CharTable t(u, 50);
    const std::uint32_t h = t.size();
    const std::uint32_t one = *t.group().label(GaussInt{1, 0});
    double worst = 0;
    for (std::uint32_t c = 0; c < h; ++c) {
      cd s = 0;
      for (std::uint32_t z = 0; z < h; ++z) s += t.eval(c, t.group().residue(z));
      worst = std::max(worst, std::abs(s - (c == 0 ? double(h) : 0.0)));
    }
    for (std::uint32_t z = 0; z < h; ++z) {
      cd s = 0;
      for (std::uint32_t c = 0; c < h; ++c) s += t.eval(c, t.group().residue(z));
      worst = std::max(worst, std::abs(s - (z == one ? double(h) : 0.0)));
    }
    if (worst > 1e-10) FAIL("orthogonality fails mod " << to_string(u) << ": " << worst);
  }
}

TEST_CASE("conductors divide the modulus and detect primitivity") {
  for (GaussInt u : {GaussInt{2, 1}, GaussInt{3, 0}, GaussInt{5, 0}, GaussInt{2, 2}, GaussInt{4, 0}, GaussInt{6, 3},
                     GaussInt{9, 0}, GaussInt{5, 5}}) {
    const CharTable t(u);
    for (std::uint32_t c = 0; c < t.size(); ++c) {
      const GaussInt f = t.conductor(c);
      CHECK(divides_oracle(f, u));
      CHECK(t.primitive(c) == (norm(f) == norm(u)));
      // chi is trivial on residues == 1 mod f that are units mod u
      for (std::uint32_t z = 0; z < t.size(); ++z) {
        const GaussInt r = t.group().residue(z);
        if (divides_oracle(f, r - GaussInt{1, 0})) CHECK(std::abs(t.eval(c, r) - 1.0) < 1e-12);
      }
    }
    CHECK(norm(t.conductor(0)) == 1);
  }
}

TEST_CASE("hecke_eval worked examples") {
  const CharTable t1(GaussInt{1, 0});
  CHECK(std::abs(hecke_eval(HeckeChar{0, &t1, 0}, {3, 2}) - 1.0) < 1e-15);
  const cd expect = std::polar(1.0, 4.0 * std::atan2(-2.0, -1.0));
  CHECK(std::abs(hecke_eval(HeckeChar{4, &t1, 0}, {1, 2}) - expect) < 1e-12);
  try {
    hecke_eval(HeckeChar{0, &t1, 0}, {1, 1});
    FAIL("expected EvenArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenArgument);
  }
  const CharTable t3(GaussInt{3, 0});
  try {
    hecke_eval(HeckeChar{0, &t3, 1}, {3, 0});
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
}

TEST_CASE("quadratic character mod 3 is z -> z^4 in F_9") {
  const CharTable t3(GaussInt{3, 0});
  const auto quad = t3.quadratic_characters();
  REQUIRE(quad.size() == 1);
  for (i64 x = -9; x <= 9; ++x)
    for (i64 y = -9; y <= 9; ++y) {
      const GaussInt z{x, y};
      if ((x + y) % 2 == 0 || (x % 3 == 0 && y % 3 == 0)) continue;
      const GaussInt pz = primary_associate(z);
      const GaussInt p4 = gpow(pz, 4);
      // p4 == +-1 mod 3
      const int sign = ((p4.re % 3) + 3) % 3 == 1 ? 1 : -1;
      CHECK(std::abs(hecke_eval(HeckeChar{0, &t3, quad[0]}, z) - double(sign)) < 1e-12);
    }
}

TEST_CASE("hecke_eval is completely multiplicative") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> c(-200, 200);
  for (GaussInt u : {GaussInt{2, 1}, GaussInt{3, 0}, GaussInt{5, 0}, GaussInt{3, 2}}) {
    const CharTable t(u);
    for (std::uint32_t chi = 0; chi < t.size(); ++chi)
      for (int k : {0, 1, 4, -3}) {
        const HeckeChar h{k, &t, chi};
        int done = 0;
        while (done < 1000 / int(t.size()) + 20) {
          const GaussInt z1{c(rng), c(rng)}, z2{c(rng), c(rng)};
          if (norm(z1) % 2 == 0 || norm(z2) % 2 == 0) continue;
          if (!t.group().label(z1) || !t.group().label(z2)) continue;
          ++done;
          CHECK(std::abs(hecke_eval(h, z1 * z2) - hecke_eval(h, z1) * hecke_eval(h, z2)) < 1e-9);
        }
      }
  }
}

TEST_CASE("primitive_char_sum worked examples") {
  CHECK(primitive_char_sum(1, 5).value == 3);
  CHECK(primitive_char_sum(2, 5).value == -1);
  CHECK(primitive_char_sum(1, 1).value == 1);
}

TEST_CASE("primitive_char_sum matches Moebius inversion and the gcd bound for d <= 200") {
  for (u64 d = 1; d <= 200; ++d)
    for (i64 a = 0; a < i64(d); ++a) {
      const auto r = primitive_char_sum(a, d);
      if (r.value != primitive_sum_oracle(a, d)) FAIL("value a=" << a << " d=" << d);
      const u64 g = std::gcd(u64(((a - 1) % i64(d) + i64(d)) % i64(d)), d);
      if (r.bound != g || !r.ok || u64(std::llabs(r.value)) > g) FAIL("bound a=" << a << " d=" << d);
    }
}

TEST_CASE("primitive_char_sum agrees with enumeration of primitive Dirichlet characters") {
  for (u64 d : {5ULL, 8ULL, 12ULL, 15ULL, 16ULL, 21ULL, 45ULL, 60ULL}) {
    const DirichletTable t(d);
    for (i64 a = 0; a < i64(d); ++a) {
      cd s = 0;
      for (std::uint32_t c : t.primitive_characters()) s += t.eval(c, a);
      CHECK(std::abs(s - double(primitive_char_sum(a, d).value)) < 1e-9);
    }
  }
}

TEST_CASE("Dirichlet conductors by brute force") {
  for (u64 d : {7ULL, 9ULL, 12ULL, 20ULL, 24ULL}) {
    const DirichletTable t(d);
    for (std::uint32_t c = 0; c < t.size(); ++c) {
      u64 f = 0;
      for (u64 e = 1; e <= d && !f; ++e) {
        if (d % e) continue;
        bool trivial = true;
        for (u64 n = 1; n < d; ++n)
          if (std::gcd(n, d) == 1 && (n - 1) % e == 0 && std::abs(t.eval(c, i64(n)) - 1.0) > 1e-12) trivial = false;
        if (trivial) f = e;
      }
      CHECK(t.conductor(c) == f);
    }
  }
}

TEST_CASE("gauss_sum_check worked examples") {
  const auto r5 = gauss_sum_check(5, 1, 0);
  CHECK(r5.ok);
  CHECK(r5.checks.size() == 15);
  for (const auto& c : r5.checks) CHECK(c.observed <= 2 * std::sqrt(5.0) + 1e-12);
  const auto r13 = gauss_sum_check(13, 1, 0);
  CHECK(r13.ok);
  CHECK(r13.checks.size() == 143);  // every non-principal character of (Z[i]/13)^x, order 12 * 12
  const auto r52 = gauss_sum_check(5, 2, 1);
  CHECK(r52.ok);
  for (const auto& c : r52.checks) CHECK(c.observed <= 2 * std::pow(5.0, 1.5) + 1e-9);
  CHECK_THROWS_AS(gauss_sum_check(4, 1, 0), Error);
}

TEST_CASE("gauss sums by direct summation for p = 3, k = 1") {
  const CharTable t(GaussInt{3, 0});
  const auto r = gauss_sum_check(3, 1, 0);
  double worst = 0;
  for (std::uint32_t c = 1; c < t.size(); ++c) {
    cd s = 0;
    for (i64 x = 0; x < 3; ++x) s += t.eval(c, GaussInt{x, 1});
    worst = std::max(worst, std::abs(s));
  }
  CHECK(r.max_ratio == doctest::Approx(worst / (2 * std::sqrt(3.0))));
}

TEST_CASE("gauss sum bound holds for all p^k <= 200 and l <= 2") {
  for (u64 p = 3; p <= 200; p += 2) {
    if (!arith::is_prime64(p)) continue;
    u64 pk = p;
    for (int k = 1; pk <= 200; ++k, pk *= p)
      for (int l = 0; l <= 2; ++l)
        if (!gauss_sum_check(p, k, l).ok) FAIL("p=" << p << " k=" << k << " l=" << l);
  }
}

TEST_CASE("short_interval_char_sum") {
  const CharTable t(GaussInt{2, 1});
  for (std::uint32_t c = 1; c < t.size(); ++c) {
    const auto r = short_interval_char_sum(t, c, 1, 10000, 0.3, 1);
    CHECK(r.ratio <= 10.0);
    CHECK(!r.principal);
  }
  // principal character: no cancellation, the sum counts the admissible a with 2+i not dividing 1 + ia,
  // and i = -2 mod 2+i turns that into 1 - 2a != 0 mod 5
  const auto p = short_interval_char_sum(t, 0, 1, 10000, 0.3, 1);
  CHECK(p.principal);
  const u64 span = static_cast<u64>(std::floor(std::pow(10000.0, 0.7)));
  u64 coprime_terms = 0, all_terms = 0;
  for (u64 a = 10001; a <= 10000 + span; ++a) {
    if (a % 4 != 1) continue;
    ++all_terms;
    coprime_terms += a % 5 != 3;
  }
  CHECK(p.terms == all_terms);
  CHECK(p.sum.real() == doctest::Approx(double(coprime_terms)));

  // u = 7, b = 7: v = 7 = u and the bound is the interval length
  const CharTable t7(GaussInt{7, 0});
  for (std::uint32_t c = 1; c < t7.size(); c += 5) {
    const auto r = short_interval_char_sum(t7, c, 7, 10000, 0.3, 1);
    CHECK(r.quotient == doctest::Approx(1.0));
    CHECK(std::abs(r.sum) <= r.length + 1);
  }
  CHECK_THROWS_AS(short_interval_char_sum(t7, 1, 7, 100, 0.3, 1), Error);
}

TEST_CASE("polya_vinogradov_check") {
  const CharTable t1(GaussInt{1, 0});
  const auto p = polya_vinogradov_check(t1, 0, 100.5, 100.25, 100.0);
  CHECK(p.sum.real() == doctest::Approx(p.mass));
  for (GaussInt u : {GaussInt{2, 1}, GaussInt{5, 0}}) {
    const CharTable t(u);
    for (std::uint32_t c = 1; c < t.size(); ++c)
      if (t.primitive(c)) CHECK(polya_vinogradov_check(t, c, 1000.5, 1000.25, 1000.0).ratio <= 5.0);
  }
}

TEST_CASE("lambda1 worked examples") {
  const CharTable t5(GaussInt{5, 0});
  const auto chi1 = t5.norm_legendre_character(5);
  REQUIRE(chi1.has_value());
  const HeckeChar h{0, &t5, *chi1};
  CHECK(lambda1({1, 0}, h) == 1);
  // chi1(p) = (N p / 5): N(3) = 9 and N(2+5i) = 29 are squares mod 5, 13 and 17 are not
  CHECK(lambda1({3, 0}, h) == 2);
  CHECK(lambda1({2, 5}, h) == 2);
  CHECK(lambda1({3, 2}, h) == 0);
  CHECK(lambda1({1, 4}, h) == 0);
  CHECK(lambda1(GaussInt{3, 2} * GaussInt{3, 2}, h) == 1);
  CHECK_THROWS_AS(lambda1({1, 1}, h), Error);
}

TEST_CASE("lambda1 is multiplicative on coprime ideals") {
  const CharTable t5(GaussInt{5, 0});
  const HeckeChar h{0, &t5, *t5.norm_legendre_character(5)};
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<i64> c(-30, 30);
  int done = 0;
  while (done < 1000) {
    const GaussInt a{c(rng), c(rng)}, b{c(rng), c(rng)};
    if (norm(a) % 2 == 0 || norm(b) % 2 == 0) continue;
    if (!is_unit(ggcd(a, b)) || norm(a) * norm(b) > 1000000) continue;
    ++done;
    CHECK(lambda1(a * b, h) == lambda1(a, h) * lambda1(b, h));
  }
}
