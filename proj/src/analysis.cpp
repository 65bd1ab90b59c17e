#include "gplab/analysis.hpp"

#include <algorithm>
#include <boost/math/differentiation/autodiff.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gplab/characters.hpp"
#include "gplab/error.hpp"
#include "gplab/residue_density.hpp"

namespace gplab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOmegaMax = 2000.0;  // |phi-hat| < 1e-19 beyond this

// Adaptive Gauss-Kronrod with an absolute tolerance, so integrals that
// cancel to nearly zero do not force maximal subdivision.
template <class F>
double integrate_abs(const F& f, double a, double b, double abs_tol, int depth) {
  double err = 0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 0, 0.0, &err);
  if (!std::isfinite(value)) throw Error(ErrorCode::QuadratureFailure, "non-finite integrand");
  if (err <= abs_tol) return value;
  if (depth == 0) {
    if (err > 1e-9) throw Error(ErrorCode::QuadratureFailure, "error estimate " + std::to_string(err));
    return value;
  }
  const double mid = 0.5 * (a + b);
  return integrate_abs(f, a, mid, abs_tol, depth - 1) + integrate_abs(f, mid, b, abs_tol, depth - 1);
}

template <class F>
double integrate(F f, double a, double b) {
  return integrate_abs(f, a, b, 1e-15, 12);
}

// Integral over [-1, 1] split into pieces short enough to resolve frequency w.
template <class F>
double integrate_oscillatory(F f, double w) {
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(w) / kPi)));
  double total = 0;
  for (int j = 0; j < pieces; ++j) {
    const double a = -1.0 + 2.0 * j / pieces, b = -1.0 + 2.0 * (j + 1) / pieces;
    total += integrate(f, a, b);
  }
  return total;
}

void check_nu(double nu) {
  if (!(nu > 0 && nu < 0.1)) throw Error(ErrorCode::NuOutOfRange, "nu = " + std::to_string(nu) + " not in (0, 1/10)");
}

}  // namespace

double mollifier(double t) {
  if (!(t > -1 && t < 1)) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

double mollifier_mass() {
  static const double mass = integrate(mollifier, -1.0, 1.0);
  return mass;
}

double mollifier_transform(double w) {
  w = std::abs(w);
  if (w == 0) return mollifier_mass();
  if (w > kOmegaMax) return 0.0;
  return integrate_oscillatory([w](double s) { return mollifier(s) * std::cos(w * s); }, w);
}

double SmoothBump::operator()(double x) const { return scale_ * mollifier((x - 1.0) / nu_); }

double SmoothBump::derivative(double x, int order) const {
  using namespace boost::math::differentiation;
  if (order < 0 || order > 4) throw Error(ErrorCode::InvalidArgument, "derivative order must be in [0, 4]");
  const double t0 = (x - 1.0) / nu_;
  if (!(t0 > -1 && t0 < 1)) return 0.0;
  const auto v = make_fvar<double, 4>(x);
  const auto t = (v - 1.0) / nu_;
  const auto y = scale_ * exp(-1.0 / (1.0 - t * t));
  return y.derivative(static_cast<std::size_t>(order));
}

double SmoothBump::normalization_integral() const {
  return integrate([this](double t) { return (*this)(1.0 / t) / t; }, 1.0 / (1.0 + nu_), 1.0 / (1.0 - nu_));
}

std::complex<double> SmoothBump::mellin(double t) const {
  const double nu = nu_;
  auto part = [nu, t](double s, bool imag) {
    const double lg = std::log1p(nu * s);
    const double mag = mollifier(s) * std::exp(-lg);
    return imag ? mag * std::sin(t * lg) : mag * std::cos(t * lg);
  };
  const double w = std::abs(t) * nu;
  const double re = integrate_oscillatory([&](double s) { return part(s, false); }, w);
  const double im = integrate_oscillatory([&](double s) { return part(s, true); }, w);
  return scale_ * nu_ * std::complex<double>(re, im);
}

std::complex<double> SmoothBump::fourier(double xi) const {
  return scale_ * nu_ * std::polar(1.0, 2 * kPi * xi) * mollifier_transform(2 * kPi * xi * nu_);
}

SmoothBump make_bump(double nu) {
  check_nu(nu);
  const double inner = integrate([nu](double t) { return mollifier(t) / (1.0 + nu * t); }, -1.0, 1.0);
  return SmoothBump(nu, 1.0 / inner);
}

double AngularBump::operator()(double alpha) const {
  double d = std::remainder(alpha - theta_, 2 * kPi);
  return scale_ * mollifier(d / nu_);
}

std::complex<double> AngularBump::coefficient(long k) const {
  const double kd = static_cast<double>(k);
  return std::polar(1.0, -kd * theta_) * scale_ * nu_ * mollifier_transform(kd * nu_);
}

double AngularBump::l2_mass() const {
  static const double phi2 = integrate([](double s) { return mollifier(s) * mollifier(s); }, -1.0, 1.0);
  return scale_ * scale_ * nu_ * phi2;
}

AngularBump make_angular_bump(double nu, double theta) {
  check_nu(nu);
  return AngularBump(nu, theta, 1.0 / mollifier_mass());
}

double derivative_envelope(const SmoothBump& bump, int order, int samples) {
  double best = 0;
  const double nu = bump.nu();
  for (int j = 0; j < samples; ++j) {
    const double x = 1.0 - nu + 2.0 * nu * j / (samples - 1);
    best = std::max(best, std::abs(bump.derivative(x, order)));
  }
  return best * std::pow(nu, order);
}

DecayReport transform_decay_report(const SmoothBump& bump) {
  DecayReport r;
  const double nu = bump.nu();
  r.zero_value = bump.mellin(0.0).real();
  r.expected_zero = nu;
  r.zero_ok = std::abs(r.zero_value - nu) <= 1e-9;
  const int steps = 200;
  for (int j = 0; j <= steps; ++j) {
    const double t = (10.0 / nu) * j / steps;
    DecaySample s{t, std::abs(bump.mellin(t)), nu * std::pow(1.0 + nu * t, -3.0)};
    r.observed_constant = std::max(r.observed_constant, s.magnitude / s.envelope);
    r.samples.push_back(s);
  }
  r.decay_ok = r.observed_constant <= r.recorded_constant;
  return r;
}

DecayReport transform_decay_report(const AngularBump& bump) {
  DecayReport r;
  const double nu = bump.nu();
  r.zero_value = bump.coefficient(0).real();
  r.expected_zero = nu;
  r.zero_ok = std::abs(r.zero_value - nu) <= 1e-9;
  const long kmax = static_cast<long>(std::floor(10.0 / nu));
  for (long k = 0; k <= kmax; ++k) {
    const double kd = static_cast<double>(k);
    DecaySample s{kd, std::abs(bump.coefficient(k)), nu * std::pow(1.0 + nu * kd, -3.0)};
    r.observed_constant = std::max(r.observed_constant, s.magnitude / s.envelope);
    r.samples.push_back(s);
  }
  r.decay_ok = r.observed_constant <= r.recorded_constant;
  r.has_parseval = true;
  const long kpar = static_cast<long>(std::floor(40.0 / nu));
  double lhs = std::norm(bump.coefficient(0));
  for (long k = 1; k <= kpar; ++k) lhs += 2.0 * std::norm(bump.coefficient(k));
  r.parseval_lhs = lhs;
  r.parseval_rhs = 2 * kPi * bump.l2_mass();
  r.parseval_ok = std::abs(r.parseval_lhs - r.parseval_rhs) <= 1e-6;
  return r;
}

PoissonReport truncated_poisson_check(double nu, u64 N, u64 q, i64 a, double eps) {
  if (N == 0 || q == 0) throw Error(ErrorCode::InvalidArgument, "N and q must be positive");
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const SmoothBump F = make_bump(nu);
  PoissonReport r;
  const double Nd = static_cast<double>(N), qd = static_cast<double>(q);
  const i64 lo = static_cast<i64>(std::ceil(Nd * (1 - nu))), hi = static_cast<i64>(std::floor(Nd * (1 + nu)));
  const i64 qi = static_cast<i64>(q);
  const i64 ar = ((a % qi) + qi) % qi;
  i64 start = lo + ((ar - lo % qi) % qi + qi) % qi;
  for (i64 n = start; n <= hi; n += qi) r.lhs += F(static_cast<double>(n) / Nd);

  r.H = std::pow(qd * Nd, eps) * qd / (nu * Nd);
  std::complex<double> dual = F.fourier(0.0);
  for (long h = 1; h <= static_cast<long>(std::floor(r.H)); ++h) {
    const double xi = static_cast<double>(h) * Nd / qd;
    if (2 * kPi * xi * nu > kOmegaMax) break;
    for (long sgn : {1L, -1L}) {
      const double hs = static_cast<double>(sgn * h);
      // e_q(-a h) with the phase reduced modulo q first.
      const double phase = -2 * kPi * static_cast<double>((ar * (sgn * h % qi) % qi + qi) % qi) / qd;
      dual += F.fourier(hs * Nd / qd) * std::polar(1.0, phase);
    }
    r.terms += 2;
  }
  r.rhs = (Nd / qd) * dual.real();
  r.difference = std::abs(r.lhs - r.rhs);
  r.tolerance = 1e-6 * Nd / qd;
  r.ok = r.difference <= r.tolerance;
  return r;
}

double large_sieve_ratio(u64 D, const Coefficients& gamma) {
  if (D == 0 || gamma.empty()) throw Error(ErrorCode::InvalidArgument, "need D >= 1 and N >= 1");
  check_budget(D * D * sizeof(double) * 4, "large sieve character tables");
  double mass = 0;
  for (const auto& g : gamma) mass += std::norm(g);
  if (mass == 0) return 0.0;
  double lhs = 0;
  for (u64 d = 1; d <= D; ++d) {
    const DirichletTable table(d);
    const double weight = static_cast<double>(d) / static_cast<double>(arith::euler_phi(d == 1 ? 1 : d));
    for (std::uint32_t chi : table.primitive_characters()) {
      std::complex<double> s{0.0, 0.0};
      for (std::size_t n = 0; n < gamma.size(); ++n) s += gamma[n] * table.eval(chi, static_cast<i64>(n + 1));
      lhs += weight * std::norm(s);
    }
  }
  const double Dd = static_cast<double>(D);
  return lhs / ((Dd * Dd + static_cast<double>(gamma.size())) * mass);
}

double quad_large_sieve_ratio(u64 q, u64 D, const Coefficients& gamma) {
  if (q == 0 || D == 0 || gamma.empty()) throw Error(ErrorCode::InvalidArgument, "need q, D, N >= 1");
  double mass = 0;
  for (const auto& g : gamma) mass += std::norm(g);
  if (mass == 0) return 0.0;
  double lhs = 0;
  for (u64 d = D + 1; d <= 2 * D; ++d) {
    if (std::gcd(d, q) != 1) continue;
    const u64 qbar = arith::invmod(q % d, d);
    for (u64 nu : roots_of_minus_one(d)) {
      const u64 step = arith::mulmod(nu, qbar, d);
      std::complex<double> s{0.0, 0.0};
      for (std::size_t n = 0; n < gamma.size(); ++n) {
        const u64 k = arith::mulmod(step, (n + 1) % d, d);
        s += gamma[n] * std::polar(1.0, 2 * kPi * static_cast<double>(k) / static_cast<double>(d));
      }
      lhs += std::norm(s);
    }
  }
  const double denom = static_cast<double>(q) * static_cast<double>(D) + static_cast<double>(gamma.size());
  return lhs / (denom * mass);
}

VaughanTerms vaughan_decompose(u64 n, u64 Y, u64 Z) {
  if (n <= Y) throw Error(ErrorCode::InvalidArgument, "need n > Y");
  const Factorization f = arith::factor(n);
  VaughanTerms v;
  const double logn = std::log(static_cast<double>(n));
  if (f.size() == 1) v.lambda = std::log(static_cast<double>(f[0].prime));
  v.s4 = n <= Z ? v.lambda : 0.0;

  // Squarefree divisors b with mu(b).
  std::vector<std::pair<u64, int>> sqfree{{1, 1}};
  for (const auto& pp : f) {
    const std::size_t base = sqfree.size();
    for (std::size_t i = 0; i < base; ++i) sqfree.push_back({sqfree[i].first * pp.prime, -sqfree[i].second});
  }
  for (const auto& [b, mu] : sqfree) {
    if (b <= Y) v.s1 += mu * (logn - std::log(static_cast<double>(b)));
    // Prime powers c dividing n / b.
    u64 rest = n / b;
    for (const auto& pp : f) {
      const double lp = std::log(static_cast<double>(pp.prime));
      u64 c = 1;
      while (rest % (c * pp.prime) == 0) {
        c *= pp.prime;
        if (b <= Y && c <= Z) v.s2 += mu * lp;
        if (b > Y && c > Z) v.s3 += mu * lp;
      }
    }
  }
  v.residual = v.s1 - v.s2 + v.s3 + v.s4 - v.lambda;
  return v;
}

}  // namespace gplab
