#include "gplab/sieve_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "gplab/error.hpp"
#include "gplab/parallel.hpp"

namespace gplab {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

u64 parse_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!value.empty() && value[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadSpec, "bad value for " + key + ": '" + value + "'");
  }
  if (used != value.size()) throw Error(ErrorCode::BadSpec, "bad value for " + key + ": '" + value + "'");
  return v;
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadSpec, "bad value for " + key + ": '" + value + "'");
  }
  if (used != value.size()) throw Error(ErrorCode::BadSpec, "bad value for " + key + ": '" + value + "'");
  return v;
}

// Uniform integer in [0, m) by rejection; identical on every platform.
u64 bounded_draw(std::mt19937_64& gen, u64 m) {
  const u64 limit = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % m;
  for (;;) {
    const u64 x = gen();
    if (x < limit) return x % m;
  }
}

bool lacks_digit(u64 n, u64 base, u64 digit) {
  do {
    if (n % base == digit) return false;
    n /= base;
  } while (n);
  return true;
}

}  // namespace

std::string to_string(Weight w) { return w == Weight::unit ? "unit" : "lambda"; }

Weight parse_weight(const std::string& text) {
  if (text == "unit") return Weight::unit;
  if (text == "lambda") return Weight::lambda;
  throw Error(ErrorCode::BadSpec, "unknown weight '" + text + "'");
}

double von_mangoldt(u64 n) {
  if (n < 2) return 0.0;
  if (arith::is_prime64(n)) return std::log(static_cast<double>(n));
  for (int k = 2; (u64{1} << k) <= n; ++k) {
    const u64 r = arith::iroot(n, k);
    u128 pw = 1;
    for (int j = 0; j < k; ++j) pw *= r;
    if (pw == n && arith::is_prime64(r)) return std::log(static_cast<double>(r));
  }
  return 0.0;
}

LambdaTable::LambdaTable(u64 limit) : sieve_(limit, false) {
  for (u64 p = 2; p <= limit / p; ++p) {
    if (!sieve_.is_prime(p)) continue;
    const double lp = std::log(static_cast<double>(p));
    for (u64 pk = p * p;; pk *= p) {
      higher_powers_[pk] = lp;
      if (pk > limit / p) break;
    }
  }
}

double LambdaTable::operator()(u64 n) const {
  if (n > limit()) return von_mangoldt(n);
  if (n < 2) return 0.0;
  if (sieve_.is_prime(n)) return std::log(static_cast<double>(n));
  const auto it = higher_powers_.find(n);
  return it == higher_powers_.end() ? 0.0 : it->second;
}

std::string to_string(SetKind k) {
  switch (k) {
    case SetKind::all: return "all";
    case SetKind::primes: return "primes";
    case SetKind::squares: return "squares";
    case SetKind::multiples: return "multiples";
    case SetKind::random: return "random";
    case SetKind::digit_missing: return "digit_missing";
    case SetKind::explicit_file: return "explicit";
  }
  return "?";
}

SparseSetSpec parse_set_spec(const std::string& text) {
  SparseSetSpec spec;
  const auto colon = text.find(':');
  const std::string kind = trim(text.substr(0, colon));
  if (kind == "all") {
    spec.kind = SetKind::all;
  } else if (kind == "primes") {
    spec.kind = SetKind::primes;
  } else if (kind == "squares") {
    spec.kind = SetKind::squares;
  } else if (kind == "multiples") {
    spec.kind = SetKind::multiples;
  } else if (kind == "random") {
    spec.kind = SetKind::random;
  } else if (kind == "digit_missing") {
    spec.kind = SetKind::digit_missing;
  } else if (kind == "explicit") {
    spec.kind = SetKind::explicit_file;
  } else {
    throw Error(ErrorCode::BadSpec, "unknown set kind '" + kind + "'");
  }
  if (colon == std::string::npos) return spec;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::BadSpec, "expected key=value, got '" + item + "'");
    const std::string key = trim(item.substr(0, eq)), value = trim(item.substr(eq + 1));
    if (key == "lo") {
      spec.lo = parse_u64(key, value);
    } else if (key == "hi") {
      spec.hi = parse_u64(key, value);
    } else if (key == "q") {
      spec.q = parse_u64(key, value);
    } else if (key == "delta") {
      spec.delta = parse_double(key, value);
    } else if (key == "seed") {
      spec.seed = parse_u64(key, value);
    } else if (key == "base") {
      spec.base = parse_u64(key, value);
    } else if (key == "digit") {
      spec.digit = parse_u64(key, value);
    } else if (key == "path") {
      spec.path = value;
    } else {
      throw Error(ErrorCode::BadSpec, "unknown set parameter '" + key + "'");
    }
  }
  return spec;
}

std::string describe(const SparseSetSpec& spec) {
  std::ostringstream out;
  out << to_string(spec.kind) << ":lo=" << spec.lo << ",hi=" << spec.hi;
  switch (spec.kind) {
    case SetKind::multiples: out << ",q=" << spec.q; break;
    case SetKind::random: out << ",delta=" << spec.delta << ",seed=" << spec.seed; break;
    case SetKind::digit_missing: out << ",base=" << spec.base << ",digit=" << spec.digit; break;
    case SetKind::explicit_file: out << ",path=" << spec.path; break;
    default: break;
  }
  return out.str();
}

SetB SetB::from_members(std::vector<u64> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SetB B;
  if (!members.empty() && members.front() == 0) throw Error(ErrorCode::BadSpec, "members must be positive");
  B.members = std::move(members);
  if (!B.members.empty()) {
    B.lo = B.members.front();
    B.hi = B.members.back();
    B.bitmap.assign(B.hi - B.lo + 1, false);
    for (u64 b : B.members) B.bitmap[b - B.lo] = true;
  }
  return B;
}

std::pair<u64, u64> fractional_interval(u64 X, double lo_frac, double hi_frac) {
  const double s = std::sqrt(static_cast<double>(X));
  u64 lo = static_cast<u64>(std::ceil(lo_frac * s));
  u64 hi = static_cast<u64>(std::floor(hi_frac * s));
  lo = std::max<u64>(lo, 1);
  hi = std::min(hi, arith::isqrt(X));
  return {lo, hi};
}

SetB build_set(const SparseSetSpec& spec, u64 X) {
  if (X == 0) throw Error(ErrorCode::BadSpec, "X must be positive");
  const u64 root = arith::isqrt(X);
  const u64 lo = spec.lo ? spec.lo : 1;
  const u64 hi = spec.hi ? spec.hi : root;
  if (lo > hi || hi > root) {
    throw Error(ErrorCode::BadSpec, "interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                        "] not inside [1, " + std::to_string(root) + "]");
  }
  check_budget((hi - lo + 1) * sizeof(u64), "set B");
  std::vector<u64> m;
  switch (spec.kind) {
    case SetKind::all:
      for (u64 b = lo; b <= hi; ++b) m.push_back(b);
      break;
    case SetKind::primes:
      for (u64 b = lo; b <= hi; ++b) {
        if (arith::is_prime64(b)) m.push_back(b);
      }
      break;
    case SetKind::squares:
      for (u64 r = arith::isqrt(lo - 1) + 1; r * r <= hi; ++r) m.push_back(r * r);
      break;
    case SetKind::multiples:
      if (spec.q == 0) throw Error(ErrorCode::BadSpec, "multiples needs q >= 1");
      for (u64 b = (lo + spec.q - 1) / spec.q * spec.q; b <= hi; b += spec.q) m.push_back(b);
      break;
    case SetKind::random: {
      if (!(spec.delta >= 0 && spec.delta < 0.5)) throw Error(ErrorCode::BadSpec, "delta must lie in [0, 1/2)");
      const u64 width = hi - lo + 1;
      u64 target = static_cast<u64>(std::floor(std::pow(static_cast<double>(hi - lo), 1.0 - 2.0 * spec.delta)));
      target = std::min(target, width);
      std::vector<u64> pool(width);
      std::iota(pool.begin(), pool.end(), lo);
      std::mt19937_64 gen(spec.seed);
      for (u64 i = 0; i < target; ++i) {
        const u64 j = i + bounded_draw(gen, width - i);
        std::swap(pool[i], pool[j]);
      }
      m.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(target));
      break;
    }
    case SetKind::digit_missing:
      if (spec.base < 2 || spec.digit >= spec.base) throw Error(ErrorCode::BadSpec, "need base >= 2, digit < base");
      for (u64 b = lo; b <= hi; ++b) {
        if (lacks_digit(b, spec.base, spec.digit)) m.push_back(b);
      }
      break;
    case SetKind::explicit_file: {
      std::ifstream in(spec.path);
      if (!in) throw Error(ErrorCode::IoError, "cannot open '" + spec.path + "'");
      std::string line;
      while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const u64 b = parse_u64("member", line);
        if (b < lo || b > hi) throw Error(ErrorCode::BadSpec, "member " + line + " outside the interval");
        m.push_back(b);
      }
      break;
    }
  }
  if (m.empty()) throw Error(ErrorCode::EmptySet, "set " + describe(spec) + " is empty at X = " + std::to_string(X));
  SetB B = SetB::from_members(std::move(m));
  B.lo = lo;
  B.hi = hi;
  B.bitmap.assign(hi - lo + 1, false);
  for (u64 b : B.members) B.bitmap[b - lo] = true;
  return B;
}

CountReport count_weighted(const SetB& B, u64 X, const CountOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (X == 0) throw Error(ErrorCode::InvalidArgument, "X must be positive");
  const u64 upper = options.dyadic ? static_cast<u64>(arith::checked_mul(static_cast<i64>(X), 2)) : X;
  if (upper > (u64{1} << 62)) throw Error(ErrorCode::Overflow, "X beyond the 64-bit norm budget");
  std::optional<LambdaTable> local;
  const LambdaTable* table = options.table;
  if (table == nullptr || table->limit() < upper) {
    local.emplace(upper);
    table = &*local;
  }
  CountReport r;
  r.weight = options.weight;
  r.coprime = options.coprime;
  r.dyadic = options.dyadic;
  r.worker_count = std::max(1u, options.workers);
  const std::size_t n = B.members.size();
  r.per_b.assign(n, 0.0);
  std::vector<u64> counts(n, 0), pairs(n, 0);
  parallel_for(n, r.worker_count, [&](std::size_t i) {
    const u64 b = B.members[i];
    const u64 b2 = b * b;
    if (b2 >= upper) return;
    const u64 a_max = arith::isqrt(upper - b2);
    u64 a_min = 1;
    if (options.dyadic && b2 <= X) a_min = arith::isqrt(X - b2) + 1;
    CompensatedSum acc;
    u64 cnt = 0;
    const u64 scanned = a_max >= a_min ? a_max - a_min + 1 : 0;
    if (options.weight == Weight::unit) {
      // The only even prime is 1 + 1; otherwise a and b have opposite parity.
      if (b == 1 && a_min == 1 && a_max >= 1) ++cnt;
      const u64 a0 = a_min + ((a_min + b) % 2 == 0 ? 1 : 0);
      const std::uint64_t* bits = table->sieve().odd_composite_bits();
      if (options.coprime) {
        for (u64 a = a0; a <= a_max; a += 2) {
          const u64 m = a * a + b2;
          if (std::gcd(a, b) == 1 && !((bits[m >> 7] >> ((m >> 1) & 63)) & 1)) ++cnt;
        }
      } else {
        // m runs over a^2 + b^2 with a stepping by 2
        u64 m = a0 * a0 + b2;
        for (u64 a = a0; a <= a_max; a += 2) {
          cnt += !((bits[m >> 7] >> ((m >> 1) & 63)) & 1);
          m += 4 * a + 4;
        }
      }
    } else {
      for (u64 a = a_min; a <= a_max; ++a) {
        if (options.coprime && std::gcd(a, b) != 1) continue;
        const double w = (*table)(a * a + b2);
        if (w != 0.0) acc.add(w);
      }
    }
    counts[i] = cnt;
    pairs[i] = scanned;
    r.per_b[i] = options.weight == Weight::unit ? static_cast<double>(cnt) : acc.value();
  });
  CompensatedSum total;
  for (std::size_t i = 0; i < n; ++i) {
    total.add(r.per_b[i]);
    r.prime_count += counts[i];
    r.pairs_scanned += pairs[i];
  }
  r.S_observed = options.weight == Weight::unit ? static_cast<double>(r.prime_count) : total.value();
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace gplab
