#pragma once

// Square roots of -1 modulo d and the local densities built from them.

#include <boost/rational.hpp>
#include <vector>

#include "gplab/arith.hpp"

namespace gplab {

using Rational = boost::rational<i64>;

enum class DensityVariant { omega, omega2 };

u64 rho(u64 d);

// Sorted roots of x^2 + 1 == 0 mod d.
std::vector<u64> roots_of_minus_one(u64 d);

// omega:  prod_{p | b} (1 - rho(p)/p)^{-1}
// omega2: 2 prod_{p | b, p odd} (1 - rho(p)/p)^{-1}
Rational density_factor(u64 b, DensityVariant variant);
double density_factor_value(u64 b, DensityVariant variant);

// prod_{p <= limit} (1 - rho(p)/p)(1 - 1/p)^{-1}, accumulated in long double.
long double partial_4_over_pi(u64 prime_limit);

// Limit of partial_4_over_pi, evaluated from its absolutely convergent form
// (4/pi) prod_{p==1(4)} (1 - 1/(p-1)^2) prod_{p==3(4)} (1 - 1/p^2)^{-1}
// up to 2*10^7.
inline constexpr double kEulerProductLimit = 1.3728134628177455;

// rho(d) for all d <= limit, by a multiplicative sieve.
class RhoTable {
 public:
  explicit RhoTable(u64 limit);
  u64 limit() const { return limit_; }
  unsigned operator()(u64 d) const { return values_.at(d); }

 private:
  u64 limit_;
  std::vector<unsigned char> values_;
};

}  // namespace gplab
