#pragma once

// Smooth weights, their Fourier and Mellin transforms, truncated Poisson
// summation, both large sieve ratios and Vaughan's identity.

#include <complex>
#include <vector>

#include "gplab/arith.hpp"

namespace gplab {

// Standard mollifier exp(-1/(1 - t^2)) on (-1, 1), zero outside.
double mollifier(double t);

// Integral of the mollifier over [-1, 1].
double mollifier_mass();

// phi-hat(w) = int phi(s) e^{-iws} ds (real and even in w).
double mollifier_transform(double w);

// F(x) = scale * phi((x - 1) / nu), supported on [1 - nu, 1 + nu], scaled so
// that int_{1/2}^{2} F(1/t) dt/t = nu.
class SmoothBump {
 public:
  SmoothBump(double nu, double scale) : nu_(nu), scale_(scale) {}

  double nu() const { return nu_; }
  double scale() const { return scale_; }
  double operator()(double x) const;
  double derivative(double x, int order) const;  // order <= 4
  // int_{1/2}^{2} F(1/t) dt/t by quadrature.
  double normalization_integral() const;
  // Mellin transform int F(x) x^{s-1} dx at s = it.
  std::complex<double> mellin(double t) const;
  // F-hat(xi) = int F(u) e(xi u) du.
  std::complex<double> fourier(double xi) const;

 private:
  double nu_;
  double scale_;
};

SmoothBump make_bump(double nu);

// G(alpha) = scale * phi(dist(alpha, theta) / nu) on R / 2 pi Z with
// int G = nu.
class AngularBump {
 public:
  AngularBump(double nu, double theta, double scale) : nu_(nu), theta_(theta), scale_(scale) {}

  double nu() const { return nu_; }
  double theta() const { return theta_; }
  double operator()(double alpha) const;
  // G-check(k) = int G(alpha) e^{-ik alpha} d alpha.
  std::complex<double> coefficient(long k) const;
  double l2_mass() const;  // int G^2

 private:
  double nu_;
  double theta_;
  double scale_;
};

AngularBump make_angular_bump(double nu, double theta);

// max |F^{(j)}| * nu^j over a dense grid on the support.
double derivative_envelope(const SmoothBump& bump, int order, int samples = 4001);

// Recorded envelope constants.
inline constexpr double kDerivativeEnvelope[5] = {1.0, 2.5, 25.0, 500.0, 25000.0};
inline constexpr double kDecayEnvelope = 60.0;

struct DecaySample {
  double frequency = 0;
  double magnitude = 0;
  double envelope = 0;  // nu (1 + nu |frequency|)^{-3}
};

struct DecayReport {
  double zero_value = 0;  // F-dot(0) or G-check(0)
  double expected_zero = 0;
  bool zero_ok = false;
  double observed_constant = 0;  // max magnitude / envelope
  double recorded_constant = kDecayEnvelope;
  bool decay_ok = false;
  bool has_parseval = false;
  double parseval_lhs = 0;
  double parseval_rhs = 0;
  bool parseval_ok = true;
  std::vector<DecaySample> samples;
  bool ok() const { return zero_ok && decay_ok && parseval_ok; }
};

DecayReport transform_decay_report(const SmoothBump& bump);
DecayReport transform_decay_report(const AngularBump& bump);

struct PoissonReport {
  double lhs = 0;
  double rhs = 0;
  double H = 0;
  long terms = 0;  // number of h != 0 kept
  double difference = 0;
  double tolerance = 0;
  bool ok = false;
};

inline constexpr double kPoissonEpsilon = 0.5;

// sum_{n == a (q)} F(n/N) against the truncated dual sum over |h| <= H.
PoissonReport truncated_poisson_check(double nu, u64 N, u64 q, i64 a, double eps = kPoissonEpsilon);

using Coefficients = std::vector<std::complex<double>>;  // gamma_1 .. gamma_N

double large_sieve_ratio(u64 D, const Coefficients& gamma);
double quad_large_sieve_ratio(u64 q, u64 D, const Coefficients& gamma);

struct VaughanTerms {
  double s1 = 0;  // sum_{b | n, b <= Y} mu(b) log(n/b)
  double s2 = 0;  // sum_{bc | n, b <= Y, c <= Z} mu(b) Lambda(c)
  double s3 = 0;  // sum_{bc | n, b > Y, c > Z} mu(b) Lambda(c)
  double s4 = 0;  // Lambda(n) 1_{n <= Z}
  double lambda = 0;
  double residual = 0;  // s1 - s2 + s3 + s4 - lambda
};

VaughanTerms vaughan_decompose(u64 n, u64 Y, u64 Z);

}  // namespace gplab
