#pragma once

// Dirichlet characters modulo a Gaussian integer u (and modulo a rational
// integer d), Hecke characters xi_k chi, and checkable character-sum bounds.

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gplab/gaussian.hpp"
#include "gplab/group.hpp"

namespace gplab {

inline constexpr u64 kDefaultModulusBound = 200;

// Z[i]/uZ[i] with canonical representatives x + iy, 0 <= x < M(u), 0 <= y < g,
// g = gcd(re u, im u). Index is y * M(u) + x.
class ResidueRing {
 public:
  explicit ResidueRing(GaussInt u);

  GaussInt modulus() const { return u_; }
  u64 size() const { return norm_; }
  u64 index(GaussInt z) const;
  GaussInt element(u64 index) const;
  GaussInt reduce(GaussInt z) const { return element(index(z)); }

 private:
  GaussInt u_;
  u64 norm_;
  u64 g_;
  u64 m_;  // N(u)/g, the smallest positive integer in uZ[i]
  i64 c_;  // u Z[i] contains c + g i
};

// (Z[i]/uZ[i])^x with its cyclic decomposition.
class ResidueGroup {
 public:
  explicit ResidueGroup(GaussInt u, u64 modulus_bound = kDefaultModulusBound);

  GaussInt modulus() const { return ring_.modulus(); }
  const ResidueRing& ring() const { return ring_; }
  u64 order() const { return units_.size(); }
  const FiniteAbelianGroup& group() const { return *group_; }
  const GaussFactorization& modulus_factors() const { return factors_; }

  // Label of a residue, or nullopt when z is not a unit mod u.
  std::optional<std::uint32_t> label(GaussInt z) const;
  GaussInt residue(std::uint32_t label) const { return units_[label]; }

  // Generators as residues with orders.
  std::vector<std::pair<GaussInt, u64>> generators() const;

 private:
  ResidueRing ring_;
  GaussFactorization factors_;
  std::vector<GaussInt> units_;
  std::vector<std::int64_t> label_of_index_;
  std::unique_ptr<FiniteAbelianGroup> group_;
};

class CharTable {
 public:
  explicit CharTable(GaussInt u, u64 modulus_bound = kDefaultModulusBound);

  const ResidueGroup& group() const { return group_; }
  const CharacterSystem& system() const { return *system_; }
  GaussInt modulus() const { return group_.modulus(); }
  std::uint32_t size() const { return static_cast<std::uint32_t>(group_.order()); }

  // chi(z); zero when z is not coprime to the modulus.
  std::complex<double> eval(std::uint32_t chi, GaussInt z) const;
  // Exact value as a multiple of 1/exponent(), or nullopt when chi(z) = 0.
  std::optional<u64> eval_exponent(std::uint32_t chi, GaussInt z) const;

  GaussInt conductor(std::uint32_t chi) const { return conductor_[chi]; }
  bool primitive(std::uint32_t chi) const;
  bool principal(std::uint32_t chi) const { return chi == 0; }
  u64 order(std::uint32_t chi) const { return system_->character_order(chi); }
  std::vector<std::uint32_t> quadratic_characters() const;

  // Index of the character z -> chi_d(N z) for the real character chi_d mod p
  // given by the Legendre symbol, when it is a character mod u.
  std::optional<std::uint32_t> norm_legendre_character(u64 p) const;

 private:
  ResidueGroup group_;
  std::unique_ptr<CharacterSystem> system_;
  std::vector<GaussInt> conductor_;
};

// Characters of (Z/dZ)^x.
class DirichletTable {
 public:
  explicit DirichletTable(u64 d);

  u64 modulus() const { return d_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(units_.size()); }
  const CharacterSystem& system() const { return *system_; }
  std::complex<double> eval(std::uint32_t chi, i64 n) const;
  u64 conductor(std::uint32_t chi) const { return conductor_[chi]; }
  bool primitive(std::uint32_t chi) const { return conductor_[chi] == d_; }
  std::vector<std::uint32_t> primitive_characters() const;

 private:
  u64 d_;
  std::vector<u64> units_;
  std::vector<std::int64_t> label_of_;
  std::unique_ptr<FiniteAbelianGroup> group_;
  std::unique_ptr<CharacterSystem> system_;
  std::vector<u64> conductor_;
};

struct HeckeChar {
  int k = 0;
  const CharTable* table = nullptr;
  std::uint32_t chi = 0;
};

// xi_k(primary z) chi(primary z).
std::complex<double> hecke_eval(const HeckeChar& h, GaussInt z);

// (1 * chi_1)(a) over ideal divisors of the odd ideal (a); chi_1 real.
i64 lambda1(GaussInt a, const HeckeChar& chi1);

struct PrimitiveSumReport {
  i64 value = 0;
  u64 bound = 0;  // gcd(a - 1, d)
  bool ok = false;
};

// Sum of chi(a) over primitive characters mod d, from the prime-power formula.
PrimitiveSumReport primitive_char_sum(i64 a, u64 d);

struct BoundCheck {
  std::string label;
  double observed = 0;
  double bound = 0;
  double ratio = 0;
  bool ok = false;
};

struct GaussSumReport {
  u64 p = 0;
  int k = 0;
  int l = 0;
  std::vector<BoundCheck> checks;  // one per qualifying character
  double max_ratio = 0;
  bool ok = true;
};

// |sum_{r mod p^k} chi(r + i p^l)| <= 2 p^{k/2 + l/2} for chi mod p^k with
// conductor of p-level exactly k.
GaussSumReport gauss_sum_check(u64 p, int k, int l, u64 modulus_bound = kDefaultModulusBound);

struct ShortSumReport {
  std::complex<double> sum;
  u64 terms = 0;
  double length = 0;      // Y^{1 - eta}
  double quotient = 0;    // |u / v|
  double ratio = 0;       // |sum| / (length / quotient^{0.4})
  bool principal = false;
};

// sum chi(b + ia) over Y < a <= Y + Y^{1-eta}, a == a0 mod 4, (a, b) = 1.
ShortSumReport short_interval_char_sum(const CharTable& table, std::uint32_t chi, i64 b, u64 Y, double eta, int a0);

struct PolyaReport {
  std::complex<double> sum;
  double mass = 0;  // sum of F over the lattice
  double modulus_abs = 0;
  double ratio = 0;  // |sum| / |u|
};

// sum_z F(z) chi(z) for the product mollifier centred at (cx, cy) with the
// given radius.
PolyaReport polya_vinogradov_check(const CharTable& table, std::uint32_t chi, double cx, double cy, double radius);

}  // namespace gplab
