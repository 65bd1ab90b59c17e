#pragma once

// Sparse sets B and the weighted counter
//   S(B, X) = sum_{a >= 1, b in B, a^2 + b^2 <= X} w(a^2 + b^2).

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gplab/arith.hpp"

namespace gplab {

enum class Weight { unit, lambda };
std::string to_string(Weight w);
Weight parse_weight(const std::string& text);

double von_mangoldt(u64 n);

// Lambda(n) for n <= limit from a prime bitmap plus a table of higher prime
// powers; larger n fall back to von_mangoldt.
class LambdaTable {
 public:
  explicit LambdaTable(u64 limit);
  u64 limit() const { return sieve_.limit(); }
  bool is_prime(u64 n) const { return sieve_.is_prime(n); }
  const PrimeSieve& sieve() const { return sieve_; }
  double operator()(u64 n) const;

 private:
  PrimeSieve sieve_;
  std::unordered_map<u64, double> higher_powers_;
};

enum class SetKind { all, primes, squares, multiples, random, digit_missing, explicit_file };
std::string to_string(SetKind k);

struct SparseSetSpec {
  SetKind kind = SetKind::all;
  u64 lo = 0;  // 0 means 1
  u64 hi = 0;  // 0 means floor(sqrt X)
  u64 q = 1;
  double delta = 0.1;
  u64 seed = 0;
  u64 base = 10;
  u64 digit = 7;
  std::string path;
};

// Parses "kind:key=val,key=val", e.g. "multiples:q=5,lo=10,hi=300".
SparseSetSpec parse_set_spec(const std::string& text);
std::string describe(const SparseSetSpec& spec);

struct SetB {
  u64 lo = 1;
  u64 hi = 0;
  std::vector<u64> members;  // sorted, distinct
  std::vector<bool> bitmap;  // bitmap[b - lo]

  static SetB from_members(std::vector<u64> members);
  bool contains(u64 b) const { return b >= lo && b <= hi && bitmap[b - lo]; }
  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
};

SetB build_set(const SparseSetSpec& spec, u64 X);

// Interval [ceil(lo_frac sqrt X), floor(hi_frac sqrt X)].
std::pair<u64, u64> fractional_interval(u64 X, double lo_frac, double hi_frac);

struct CountOptions {
  Weight weight = Weight::unit;
  bool coprime = false;
  bool dyadic = false;  // norms in (X, 2X] instead of [1, X]
  unsigned workers = 1;
  const LambdaTable* table = nullptr;  // reused when large enough
};

struct CountReport {
  double S_observed = 0;
  u64 prime_count = 0;  // exact count for unit weight
  u64 pairs_scanned = 0;
  Weight weight = Weight::unit;
  bool coprime = false;
  bool dyadic = false;
  double wall_time = 0;
  unsigned worker_count = 1;
  std::vector<double> per_b;  // partial sum for each member of B
};

CountReport count_weighted(const SetB& B, u64 X, const CountOptions& options);

}  // namespace gplab
