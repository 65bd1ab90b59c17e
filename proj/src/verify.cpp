// Check batteries behind `verify-lemma`. Every line carries a claim string,
// the worst observed value, its bound and the ratio between them.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "gplab/analysis.hpp"
#include "gplab/bilinear.hpp"
#include "gplab/characters.hpp"
#include "gplab/cli.hpp"
#include "gplab/error.hpp"
#include "gplab/parallel.hpp"
#include "gplab/residue_density.hpp"

namespace gplab {

namespace {

CheckLine make_line(std::string anchor, std::string label, double observed, double bound, bool pass) {
  CheckLine c;
  c.anchor = std::move(anchor);
  c.label = std::move(label);
  c.observed = observed;
  c.bound = bound;
  c.ratio = bound != 0 ? observed / bound : (observed == 0 ? 0.0 : INFINITY);
  c.pass = pass;
  return c;
}

// "ratio <= bound" style line where observed/bound are the quantities compared.
CheckLine upper_line(std::string anchor, std::string label, double observed, double bound) {
  const bool pass = observed <= bound;
  return make_line(std::move(anchor), std::move(label), observed, bound, pass);
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

SparseSetSpec interval_spec(SetKind kind, u64 lo, u64 hi) {
  SparseSetSpec spec;
  spec.kind = kind;
  spec.lo = lo;
  spec.hi = hi;
  return spec;
}

// ---- characters ----

// Representatives of nonzero Gaussian integers up to units with M(u) <= limit.
std::vector<GaussInt> moduli_up_to(u64 limit) {
  std::vector<GaussInt> out;
  const i64 L = static_cast<i64>(limit);
  for (i64 x = 1; x <= L; ++x) {
    for (i64 y = 0; y <= L; ++y) {
      const GaussInt u{x, y};
      if (norm(u) > limit * limit) continue;
      if (m_of(u) <= limit) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end(), [](GaussInt a, GaussInt b) {
    const u64 na = norm(a), nb = norm(b);
    return na != nb ? na < nb : a < b;
  });
  return out;
}

void orthogonality_checks(u64 limit, std::vector<CheckLine>& out) {
  double worst_rows = 0, worst_cols = 0;
  std::string worst_rows_at = "-", worst_cols_at = "-";
  u64 tables = 0;
  for (GaussInt u : moduli_up_to(limit)) {
    const CharTable table(u, limit);
    ++tables;
    const std::uint32_t h = table.size();
    // value matrix, row = character, column = residue label
    std::vector<std::complex<double>> values(static_cast<std::size_t>(h) * h);
    for (std::uint32_t c = 0; c < h; ++c)
      for (std::uint32_t z = 0; z < h; ++z) values[std::size_t(c) * h + z] = table.eval(c, table.group().residue(z));
    const std::uint32_t identity = *table.group().label(GaussInt{1, 0});
    for (std::uint32_t c = 0; c < h; ++c) {
      std::complex<double> s = 0;
      for (std::uint32_t z = 0; z < h; ++z) s += values[std::size_t(c) * h + z];
      const double dev = c == 0 ? std::abs(s - double(h)) : std::abs(s);
      if (dev > worst_rows) worst_rows = dev, worst_rows_at = to_string(u);
    }
    for (std::uint32_t z = 0; z < h; ++z) {
      std::complex<double> s = 0;
      for (std::uint32_t c = 0; c < h; ++c) s += values[std::size_t(c) * h + z];
      const double dev = z == identity ? std::abs(s - double(h)) : std::abs(s);
      if (dev > worst_cols) worst_cols = dev, worst_cols_at = to_string(u);
    }
  }
  const std::string scope = " over " + std::to_string(tables) + " moduli with M(u) <= " + std::to_string(limit);
  out.push_back(upper_line("orthogonality: sum_z chi(z) = 0 for chi non-principal", "worst at " + worst_rows_at + scope,
                           worst_rows, 1e-10));
  out.push_back(upper_line("orthogonality: sum_chi chi(z) = 0 for z != 1", "worst at " + worst_cols_at + scope,
                           worst_cols, 1e-10));
}

void primitive_sum_checks(u64 dmax, std::vector<CheckLine>& out) {
  double worst = 0;
  bool pass = true;
  std::string at = "-";
  u64 cases = 0;
  for (u64 d = 1; d <= dmax; ++d) {
    for (u64 a = 0; a < d; ++a) {
      const auto r = primitive_char_sum(static_cast<i64>(a), d);
      ++cases;
      pass = pass && r.ok;
      const double ratio = double(std::llabs(r.value)) / double(r.bound);
      if (ratio > worst) worst = ratio, at = "a=" + std::to_string(a) + ", d=" + std::to_string(d);
    }
  }
  out.push_back(make_line("primitive_char_sum: |sum*_{chi mod d} chi(a)| <= (a-1, d)",
                          "max |S|/(a-1,d) at " + at + " over " + std::to_string(cases) + " pairs, d <= " +
                              std::to_string(dmax),
                          worst, 1.0, pass));
}

void gauss_sum_checks(u64 limit, std::vector<CheckLine>& out) {
  for (u64 p = 3; p <= limit; p += 2) {
    if (!arith::is_prime64(p)) continue;
    u64 pk = p;
    for (int k = 1; pk <= limit; ++k, pk *= p) {
      for (int l = 0; l <= 2; ++l) {
        const auto r = gauss_sum_check(p, k, l, limit);
        double worst = 0;
        for (const auto& c : r.checks) worst = std::max(worst, c.observed);
        const double bound = 2.0 * std::pow(double(p), 0.5 * k + 0.5 * l);
        std::ostringstream label;
        label << "p=" << p << ", k=" << k << ", l=" << l << ", " << r.checks.size() << " characters";
        out.push_back(make_line("gauss_sum: |sum_{r mod p^k} chi(r + i p^l)| <= 2 p^(k/2+l/2)", label.str(), worst,
                                bound, r.ok));
      }
    }
  }
}

void hecke_checks(u64 seed, std::vector<CheckLine>& out) {
  std::mt19937_64 rng(seed ^ 0x6865636bULL);
  std::uniform_int_distribution<i64> coord(-300, 300);
  auto random_odd = [&]() {
    while (true) {
      const GaussInt z{coord(rng), coord(rng)};
      if (z != GaussInt{0, 0} && norm(z) % 2 == 1) return z;
    }
  };
  double worst = 0;
  u64 trials = 0;
  for (GaussInt u : {GaussInt{2, 1}, GaussInt{3, 0}, GaussInt{5, 0}, GaussInt{3, 2}}) {
    const CharTable table(u);
    for (std::uint32_t c = 0; c < table.size(); ++c) {
      for (int k : {0, 4, -8}) {
        const HeckeChar h{k, &table, c};
        for (int t = 0; t < 40; ++t) {
          GaussInt z1 = random_odd(), z2 = random_odd();
          if (!table.group().label(z1) || !table.group().label(z2)) continue;
          const auto lhs = hecke_eval(h, z1 * z2);
          const auto rhs = hecke_eval(h, z1) * hecke_eval(h, z2);
          worst = std::max(worst, std::abs(lhs - rhs));
          ++trials;
        }
      }
    }
  }
  out.push_back(upper_line("hecke_eval: xi_k chi(z1 z2) = xi_k chi(z1) xi_k chi(z2)",
                           std::to_string(trials) + " random pairs", worst, 1e-9));
}

void short_sum_checks(std::vector<CheckLine>& out) {
  struct Case {
    GaussInt u;
    i64 b;
    u64 Y;
    double eta;
  };
  double worst = 0;
  std::string at = "-";
  u64 sums = 0;
  for (const Case& cs : {Case{{2, 1}, 1, 10000, 0.3}, Case{{3, 0}, 2, 20000, 0.3}, Case{{3, 2}, 5, 50000, 0.25}}) {
    const CharTable table(cs.u);
    for (std::uint32_t c = 1; c < table.size(); ++c) {
      if (!table.primitive(c)) continue;
      for (int a0 = 0; a0 < 4; ++a0) {
        try {
          const auto r = short_interval_char_sum(table, c, cs.b, cs.Y, cs.eta, a0);
          ++sums;
          if (r.ratio > worst) worst = r.ratio, at = to_string(cs.u);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::IntervalEmpty) throw;
        }
      }
    }
  }
  out.push_back(upper_line("short_interval: |sum chi(b+ia)| <= C Y^(1-eta) / |u/v|^0.4, C = 10",
                           std::to_string(sums) + " sums, worst at u=" + at, worst, 10.0));
}

void polya_checks(std::vector<CheckLine>& out) {
  double worst = 0;
  std::string at = "-";
  for (GaussInt u : {GaussInt{2, 1}, GaussInt{5, 0}, GaussInt{3, 0}}) {
    const CharTable table(u);
    for (std::uint32_t c = 1; c < table.size(); ++c) {
      if (!table.primitive(c)) continue;
      const auto r = polya_vinogradov_check(table, c, 1000.5, 1000.25, 1000.0);
      if (r.ratio > worst) worst = r.ratio, at = to_string(u);
    }
  }
  out.push_back(upper_line("polya_vinogradov: |sum_z F(z) chi(z)| <= C |u|, C = " + fmt("%g", kPolyaEnvelope),
                           "radius 1000, worst at u=" + at, worst, kPolyaEnvelope));
}

std::vector<CheckLine> characters_suite(u64 seed) {
  std::vector<CheckLine> out;
  primitive_sum_checks(200, out);
  gauss_sum_checks(200, out);
  orthogonality_checks(50, out);
  hecke_checks(seed, out);
  short_sum_checks(out);
  polya_checks(out);
  return out;
}

// ---- analysis ----

std::vector<CheckLine> analysis_suite(u64 seed, unsigned workers) {
  std::vector<CheckLine> out;
  for (double nu : {0.01, 0.05, 0.09}) {
    const SmoothBump bump = make_bump(nu);
    const double integral = bump.normalization_integral();
    out.push_back(upper_line("bump: int_{1/2}^{2} F(1/t) dt/t = nu", fmt("nu=%g", nu), std::abs(integral - nu), 1e-9));
    for (int j = 0; j <= 4; ++j) {
      const double env = derivative_envelope(bump, j);
      out.push_back(upper_line("bump: |F^(j)| <= C_j nu^(-j)", fmt("nu=%g", nu) + ", j=" + std::to_string(j), env,
                               kDerivativeEnvelope[j]));
    }
  }
  for (double nu : {0.05, 0.09}) {
    const auto mellin = transform_decay_report(make_bump(nu));
    out.push_back(upper_line("mellin: F-dot(0) = nu", fmt("nu=%g", nu), std::abs(mellin.zero_value - nu), 1e-9));
    out.push_back(upper_line("mellin: |F-dot(it)| <= C nu (1 + nu|t|)^-3", fmt("nu=%g", nu),
                             mellin.observed_constant, kDecayEnvelope));
    const auto ang = transform_decay_report(make_angular_bump(nu, 0.7));
    out.push_back(upper_line("angular: G-check(0) = nu", fmt("nu=%g", nu), std::abs(ang.zero_value - nu), 1e-9));
    out.push_back(upper_line("angular: |G-check(k)| <= C nu (1 + nu|k|)^-3", fmt("nu=%g", nu), ang.observed_constant,
                             kDecayEnvelope));
    out.push_back(upper_line("angular: sum_k |G-check(k)|^2 = 2 pi int G^2", fmt("nu=%g", nu),
                             std::abs(ang.parseval_lhs - ang.parseval_rhs), 1e-6));
  }

  // truncated Poisson summation
  {
    double worst = 0;
    std::string at = "-";
    bool pass = true;
    u64 cases = 0;
    for (double nu : {0.02, 0.05})
      for (u64 N : {1000ULL, 10000ULL, 100000ULL})
        for (u64 q : {1ULL, 2ULL, 7ULL, 13ULL, 50ULL}) {
          const auto r = truncated_poisson_check(nu, N, q, static_cast<i64>(3 % q));
          ++cases;
          pass = pass && r.ok;
          const double ratio = r.difference / r.tolerance;
          if (ratio > worst) {
            worst = ratio;
            std::ostringstream s;
            s << "nu=" << nu << ", N=" << N << ", q=" << q;
            at = s.str();
          }
        }
    out.push_back(make_line("poisson: sum_{n == a (q)} F(n/N) matches the dual sum over |h| <= H",
                            "max |diff|/(1e-6 N/q) at " + at + " over " + std::to_string(cases) + " cases", worst, 1.0,
                            pass));
  }

  // large sieve envelopes
  for (const auto& line : large_sieve_battery(seed, 1000, workers)) out.push_back(line);

  // Vaughan's identity and the Chebyshev identity
  for (auto [Y, Z] : {std::pair<u64, u64>{10, 10}, {30, 100}}) {
    const auto r = vaughan_battery(Y, Z, 100000, workers);
    for (const auto& line : r) out.push_back(line);
  }
  {
    double worst = 0;
    for (u64 n = 1; n <= 100000; ++n) {
      double s = 0;
      for (u64 d : arith::divisors(arith::factor(n))) s += von_mangoldt(d);
      worst = std::max(worst, std::abs(s - std::log(double(n))));
    }
    out.push_back(upper_line("chebyshev: sum_{d | n} Lambda(d) = log n", "n <= 100000", worst, 1e-9));
  }
  return out;
}

// ---- density ----

std::vector<CheckLine> density_suite(u64 seed) {
  std::vector<CheckLine> out;
  {
    std::mt19937_64 rng(seed ^ 0x72686fULL);
    std::uniform_int_distribution<u64> dist(1, 1000000);
    u64 bad = 0, pairs = 0;
    while (pairs < 1000) {
      const u64 m = dist(rng), n = dist(rng);
      if (std::gcd(m, n) != 1) continue;
      ++pairs;
      if (rho(m * n) != rho(m) * rho(n)) ++bad;
    }
    out.push_back(upper_line("rho: rho(mn) = rho(m) rho(n) for (m, n) = 1", "1000 random pairs up to 10^6",
                             double(bad), 0));
  }
  {
    u64 bad = 0;
    for (u64 d = 1; d <= 10000; ++d) {
      u64 brute = 0;
      for (u64 v = 0; v < d; ++v)
        if ((v * v + 1) % d == 0) ++brute;
      const auto roots = roots_of_minus_one(d);
      bool ok = roots.size() == brute && rho(d) == brute;
      for (u64 v : roots) ok = ok && (v * v + 1) % d == 0;
      if (!ok) ++bad;
    }
    out.push_back(upper_line("rho: roots of v^2 + 1 == 0 mod d match brute force", "d <= 10000", double(bad), 0));
  }
  {
    u64 bad = 0;
    for (u64 p = 3; p <= 100000; p += 2)
      if (arith::is_prime64(p) && static_cast<int>(rho(p)) != 1 + arith::chi4(p)) ++bad;
    out.push_back(upper_line("rho: rho(p) = 1 + chi_4(p)", "odd p <= 100000", double(bad), 0));
  }
  {
    u64 bad = 0;
    for (u64 b = 1; b <= 100000; ++b) {
      // product over prime factors found by trial division
      Rational expect(1);
      u64 m = b;
      for (u64 p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        u64 roots = 0;
        for (u64 v = 0; v < p; ++v) roots += (v * v + 1) % p == 0;
        expect *= Rational(static_cast<i64>(p), static_cast<i64>(p - roots));
      }
      if (m > 1) {
        const u64 roots = m == 2 ? 1 : (m % 4 == 1 ? 2 : 0);
        expect *= Rational(static_cast<i64>(m), static_cast<i64>(m - roots));
      }
      if (density_factor(b, DensityVariant::omega) != expect) ++bad;
    }
    out.push_back(upper_line("omega: prod_{p | b} (1 - rho(p)/p)^-1", "b <= 100000 against trial division",
                             double(bad), 0));
  }
  {
    const double p6 = static_cast<double>(partial_4_over_pi(1000000));
    out.push_back(upper_line("euler product: prod_p (1 - rho(p)/p)(1 - 1/p)^-1 -> kappa",
                             "|P(10^6) - 1.3728134628|", std::abs(p6 - kEulerProductLimit), 1e-3));
  }
  return out;
}

// ---- bilinear ----

std::vector<CheckLine> bilinear_suite(u64 seed, unsigned workers) {
  std::vector<CheckLine> out;
  out.push_back(correlation_battery(seed, 100, 150, workers));
  {
    double last = 0;
    std::vector<double> ratios;
    const SetB B = build_set(interval_spec(SetKind::all, 1, 300), 1000000);
    for (u64 X : {10000ULL, 100000ULL, 1000000ULL}) {
      SetB Bx = B;
      const u64 hi = arith::isqrt(X);
      if (hi < B.hi) Bx = build_set(interval_spec(SetKind::all, 1, hi), X);
      ratios.push_back(typeI_remainder(Bx, X, GaussInt{2, 1}).ratio);
    }
    for (std::size_t i = 1; i < ratios.size(); ++i) {
      last = ratios[i];
      out.push_back(upper_line("type I: remainder ratio shrinks as X grows (slack 2)",
                               "w=2+i, step " + std::to_string(i), last, 2.0 * ratios[i - 1]));
    }
    const SetB B1000 = build_set(interval_spec(SetKind::all, 1, 1000), 1000000);
    out.push_back(upper_line("type I: sum_b |remainder| / (sqrt X |B| / N(w)) <= 0.2", "w=2+i, B=[1,1000], X=10^6",
                             typeI_remainder(B1000, 1000000, GaussInt{2, 1}).ratio, 0.2));
  }
  {
    std::vector<double> s;
    for (u64 N : {10000ULL, 100000ULL, 1000000ULL}) s.push_back(mobius_balance(GaussInt{2, 1}, N, 30).statistic);
    out.push_back(upper_line("balance: statistic decreases from N = 10^4 to 10^6", "u=2+i, W=30", s[2], s[0]));
    for (std::size_t i = 1; i < s.size(); ++i)
      out.push_back(upper_line("balance: consecutive decay within slack 2", "u=2+i, W=30, step " + std::to_string(i),
                               s[i], 2.0 * s[i - 1]));
  }
  return out;
}

}  // namespace

std::vector<CheckLine> vaughan_battery(u64 Y, u64 Z, u64 n_max, unsigned workers) {
  const std::size_t count = n_max > Y ? n_max - Y : 0;
  std::vector<double> completed(count), literal(count, 0.0);
  parallel_for(count, workers, [&](std::size_t i) {
    const u64 n = Y + 1 + i;
    const auto t = vaughan_decompose(n, Y, Z);
    completed[i] = std::abs(t.residual);
    if (n > Z) literal[i] = std::abs(t.s1 - t.s2 + t.s3 - t.lambda);
  });
  const double worst_completed = count ? *std::max_element(completed.begin(), completed.end()) : 0.0;
  const double worst_literal = count ? *std::max_element(literal.begin(), literal.end()) : 0.0;
  std::ostringstream scope;
  scope << "Y=" << Y << ", Z=" << Z;
  std::vector<CheckLine> out;
  out.push_back(upper_line("vaughan: S1 - S2 + S3 + Lambda(n) 1_{n<=Z} = Lambda(n)",
                           scope.str() + ", " + std::to_string(Y + 1) + " <= n <= " + std::to_string(n_max),
                           worst_completed, 1e-9));
  out.push_back(upper_line("vaughan: S1 - S2 + S3 = Lambda(n) for n > max(Y, Z)",
                           scope.str() + ", " + std::to_string(std::max(Y, Z) + 1) + " <= n <= " +
                               std::to_string(n_max),
                           worst_literal, 1e-9));
  return out;
}

std::vector<CheckLine> large_sieve_battery(u64 seed, u64 trials, unsigned workers) {
  struct Cell {
    bool quadratic;
    u64 q, D, N;
    bool adversarial;
  };
  const std::vector<Cell> grid = {
      {false, 1, 5, 50, false},  {false, 1, 10, 100, false}, {false, 1, 10, 30, false},
      {false, 1, 20, 100, false}, {false, 1, 10, 100, true},  {true, 1, 10, 100, false},
      {true, 1, 20, 200, false},  {true, 3, 20, 200, false},  {true, 5, 10, 100, false},
      {true, 1, 20, 200, true},
  };
  std::vector<double> ratio(trials);
  parallel_for(trials, workers, [&](std::size_t t) {
    const Cell& cell = grid[t % grid.size()];
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + t);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Coefficients gamma(cell.N);
    if (cell.adversarial) {
      // support on one residue class r mod d0
      const u64 d0 = 2 + rng() % (cell.D - 1);
      const u64 r = rng() % d0;
      for (u64 n = 1; n <= cell.N; ++n)
        if (n % d0 == r) gamma[n - 1] = {1.0 + 0.1 * unit(rng), 0.1 * unit(rng)};
      if (std::all_of(gamma.begin(), gamma.end(), [](auto g) { return g == std::complex<double>{}; }))
        gamma[0] = 1.0;
    } else {
      for (auto& g : gamma) g = {unit(rng), unit(rng)};
    }
    ratio[t] = cell.quadratic ? quad_large_sieve_ratio(cell.q, cell.D, gamma) : large_sieve_ratio(cell.D, gamma);
  });
  double worst_mult = 0, worst_quad = 0;
  u64 n_mult = 0, n_quad = 0;
  for (u64 t = 0; t < trials; ++t) {
    if (grid[t % grid.size()].quadratic) {
      worst_quad = std::max(worst_quad, ratio[t]);
      ++n_quad;
    } else {
      worst_mult = std::max(worst_mult, ratio[t]);
      ++n_mult;
    }
  }
  std::vector<CheckLine> out;
  out.push_back(upper_line("large sieve: sum_d d/phi(d) sum*_chi |sum gamma chi|^2 <= C (D^2 + N) |gamma|^2, C = 10",
                           std::to_string(n_mult) + " seeded trials", worst_mult, 10.0));
  out.push_back(upper_line("quadratic large sieve: sum_{d~D} sum_v |sum gamma e_d(v n q')|^2 <= C (qD + N) |gamma|^2, C = 10",
                           std::to_string(n_quad) + " seeded trials", worst_quad, 10.0));
  return out;
}

std::vector<CorrelationCase> correlation_cases(u64 seed, u64 count, i64 max_delta) {
  std::mt19937_64 rng(seed ^ 0x636f7272ULL);
  std::uniform_int_distribution<i64> coord(-40, 40);
  auto admissible = [](GaussInt z) {
    // (z, conj z) = 1: odd norm and coprime components
    return z != GaussInt{0, 0} && norm(z) % 2 == 1 && std::gcd(z.re, z.im) == 1;
  };
  std::vector<CorrelationCase> cases;
  while (cases.size() < count) {
    const GaussInt z1{coord(rng), coord(rng)}, z2{coord(rng), coord(rng)};
    if (!admissible(z1) || !admissible(z2) || !is_unit(ggcd(z1, z2))) continue;
    const i64 delta = delta_im(z1, z2);
    if (delta == 0 || std::llabs(delta) > max_delta) continue;
    CorrelationCase c;
    c.z1 = z1;
    c.z2 = z2;
    const u64 hi = 50 + rng() % 451;
    const u64 lo = 1 + rng() % hi;
    const int style = static_cast<int>(rng() % 3);
    if (style == 0) {
      c.spec = interval_spec(SetKind::all, lo, hi);
    } else if (style == 1) {
      c.spec = interval_spec(SetKind::random, 1, hi);
      c.spec.delta = 0.1;
      c.spec.seed = rng();
    } else {
      c.spec = interval_spec(SetKind::multiples, 1, hi);
      c.spec.q = 2 + rng() % 5;
    }
    cases.push_back(c);
  }
  return cases;
}

CheckLine correlation_battery(u64 seed, u64 count, i64 max_delta, unsigned workers) {
  const auto cases = correlation_cases(seed, count, max_delta);
  std::vector<int> status(cases.size(), 0);  // 1 exact, 0 mismatch, -1 skipped
  parallel_for(cases.size(), workers, [&](std::size_t i) {
    const auto& c = cases[i];
    const SetB B = build_set(c.spec, c.spec.hi * c.spec.hi);
    DirichletCache cache;
    const auto r = correlation_T(B, c.z1, c.z2, 0, kDefaultModulusBound, &cache);
    status[i] = !r.reconstructed ? -1 : (r.exact && u64(r.reconstruction) == r.brute ? 1 : 0);
  });
  const auto exact = std::count(status.begin(), status.end(), 1);
  const auto skipped = std::count(status.begin(), status.end(), -1);
  const auto bad = static_cast<double>(cases.size()) - double(exact);
  std::ostringstream label;
  label << cases.size() << " seeded instances, |delta| <= " << max_delta << ", " << exact << " exact, " << skipped
        << " not reconstructed";
  return upper_line("correlation: character expansion of T_B(z1, z2) equals the direct count", label.str(), bad, 0);
}

bool VerifySummary::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites = {"characters", "analysis", "density", "bilinear"};
  return suites;
}

VerifySummary verify_all(const std::string& suite, u64 seed, unsigned workers) {
  if (suite.empty()) throw Error(ErrorCode::ConfigError, "empty suite name");
  VerifySummary s;
  s.suite = suite;
  if (suite == "characters") {
    s.checks = characters_suite(seed);
  } else if (suite == "analysis") {
    s.checks = analysis_suite(seed, workers);
  } else if (suite == "density") {
    s.checks = density_suite(seed);
  } else if (suite == "bilinear") {
    s.checks = bilinear_suite(seed, workers);
  } else {
    throw Error(ErrorCode::ConfigError, "unknown suite '" + suite + "'");
  }
  return s;
}

}  // namespace gplab
