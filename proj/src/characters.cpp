#include "gplab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gplab/analysis.hpp"
#include "gplab/error.hpp"

namespace gplab {

namespace {

// g = gcd(|a|, |b|) >= 0 with a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 mod_pos(i128 a, i128 m) {
  const i128 r = a % m;
  return r < 0 ? r + m : r;
}

// Divisors of the modulus as products of its prime powers, ascending norm.
std::vector<GaussInt> gaussian_divisors(const GaussFactorization& f) {
  std::vector<GaussInt> out{GaussInt{1, 0}};
  for (const auto& [pi, e] : f.factors) {
    const std::size_t base = out.size();
    GaussInt power{1, 0};
    for (int j = 1; j <= e; ++j) {
      power = power * pi;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  for (auto& d : out) d = ggcd(d, GaussInt{});
  std::stable_sort(out.begin(), out.end(), [](GaussInt a, GaussInt b) { return norm(a) < norm(b); });
  return out;
}

int legendre(u64 n, u64 p) {
  n %= p;
  if (n == 0) return 0;
  return arith::powmod(n, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

ResidueRing::ResidueRing(GaussInt u) : u_(u) {
  if (u == GaussInt{}) throw Error(ErrorCode::ZeroArgument, "modulus 0");
  norm_ = norm(u);
  i64 s = 0, t = 0;
  // b s + a t = g, so u (s + t i) has imaginary part g.
  g_ = static_cast<u64>(ext_gcd(u.im, u.re, s, t));
  m_ = norm_ / g_;
  const i128 real = static_cast<i128>(u.re) * s - static_cast<i128>(u.im) * t;
  c_ = static_cast<i64>(mod_pos(real, static_cast<i128>(m_)));
}

u64 ResidueRing::index(GaussInt z) const {
  const i128 t = floor_div(z.im, static_cast<i128>(g_));
  const i128 y = static_cast<i128>(z.im) - t * static_cast<i128>(g_);
  const i128 x = mod_pos(static_cast<i128>(z.re) - t * c_, static_cast<i128>(m_));
  return static_cast<u64>(y) * m_ + static_cast<u64>(x);
}

GaussInt ResidueRing::element(u64 index) const {
  return {static_cast<i64>(index % m_), static_cast<i64>(index / m_)};
}

ResidueGroup::ResidueGroup(GaussInt u, u64 modulus_bound) : ring_(u) {
  const u64 m = m_of(u);
  if (m > modulus_bound) {
    throw Error(ErrorCode::ModulusTooLarge, "M(" + to_string(u) + ") = " + std::to_string(m) + " exceeds " +
                                                std::to_string(modulus_bound));
  }
  factors_ = factor_gaussian(u);
  check_budget(ring_.size() * (sizeof(GaussInt) + 2 * sizeof(std::int64_t)), "residue group");
  label_of_index_.assign(ring_.size(), -1);
  for (u64 idx = 0; idx < ring_.size(); ++idx) {
    const GaussInt z = ring_.element(idx);
    bool unit = true;
    for (const auto& [pi, e] : factors_.factors) {
      (void)e;
      if (divides(pi, z)) {
        unit = false;
        break;
      }
    }
    if (!unit) continue;
    label_of_index_[idx] = static_cast<std::int64_t>(units_.size());
    units_.push_back(z);
  }
  const std::uint32_t one = static_cast<std::uint32_t>(label_of_index_[ring_.index(GaussInt{1, 0})]);
  group_ = std::make_unique<FiniteAbelianGroup>(
      static_cast<std::uint32_t>(units_.size()), one, [this](std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint32_t>(label_of_index_[ring_.index(units_[a] * units_[b])]);
      });
}

std::optional<std::uint32_t> ResidueGroup::label(GaussInt z) const {
  const std::int64_t l = label_of_index_[ring_.index(z)];
  if (l < 0) return std::nullopt;
  return static_cast<std::uint32_t>(l);
}

std::vector<std::pair<GaussInt, u64>> ResidueGroup::generators() const {
  std::vector<std::pair<GaussInt, u64>> out;
  for (std::size_t j = 0; j < group_->generators().size(); ++j) {
    out.push_back({units_[group_->generators()[j]], group_->generator_orders()[j]});
  }
  return out;
}

CharTable::CharTable(GaussInt u, u64 modulus_bound) : group_(u, modulus_bound) {
  system_ = std::make_unique<CharacterSystem>(&group_.group());
  const std::uint32_t n = size();
  conductor_.assign(n, GaussInt{});
  std::vector<std::pair<GaussInt, std::vector<std::uint32_t>>> kernels;
  for (GaussInt f : gaussian_divisors(group_.modulus_factors())) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (divides(f, group_.residue(a) - GaussInt{1, 0})) members.push_back(a);
    }
    kernels.push_back({f, system_->subgroup_generators(members)});
  }
  for (std::uint32_t chi = 0; chi < n; ++chi) {
    for (const auto& [f, gens] : kernels) {
      if (system_->trivial_on(chi, gens)) {
        conductor_[chi] = f;
        break;
      }
    }
  }
}

std::complex<double> CharTable::eval(std::uint32_t chi, GaussInt z) const {
  const auto l = group_.label(z);
  if (!l) return {0.0, 0.0};
  return system_->value(chi, *l);
}

std::optional<u64> CharTable::eval_exponent(std::uint32_t chi, GaussInt z) const {
  const auto l = group_.label(z);
  if (!l) return std::nullopt;
  return system_->value_exponent(chi, *l);
}

bool CharTable::primitive(std::uint32_t chi) const { return norm(conductor_[chi]) == norm(modulus()); }

std::vector<std::uint32_t> CharTable::quadratic_characters() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t chi = 0; chi < size(); ++chi) {
    if (order(chi) == 2) out.push_back(chi);
  }
  return out;
}

std::optional<std::uint32_t> CharTable::norm_legendre_character(u64 p) const {
  const u64 L = system_->exponent();
  std::vector<u64> target(size());
  for (std::uint32_t a = 0; a < size(); ++a) {
    const int s = legendre(norm(group_.residue(a)), p);
    if (s == 0) return std::nullopt;
    if (s == -1 && L % 2 != 0) return std::nullopt;
    target[a] = s == 1 ? 0 : L / 2;
  }
  for (std::uint32_t chi = 0; chi < size(); ++chi) {
    bool match = true;
    for (std::uint32_t a = 0; a < size() && match; ++a) match = system_->value_exponent(chi, a) == target[a];
    if (match) return chi;
  }
  return std::nullopt;
}

DirichletTable::DirichletTable(u64 d) : d_(d) {
  if (d == 0) throw Error(ErrorCode::ZeroArgument, "modulus 0");
  check_budget(d * 2 * sizeof(std::int64_t), "Dirichlet table");
  label_of_.assign(d, -1);
  for (u64 n = 0; n < d; ++n) {
    if (std::gcd(n, d) != 1) continue;
    label_of_[n] = static_cast<std::int64_t>(units_.size());
    units_.push_back(n);
  }
  const std::uint32_t one = static_cast<std::uint32_t>(label_of_[1 % d]);
  group_ = std::make_unique<FiniteAbelianGroup>(static_cast<std::uint32_t>(units_.size()), one,
                                                [this](std::uint32_t a, std::uint32_t b) {
                                                  return static_cast<std::uint32_t>(
                                                      label_of_[arith::mulmod(units_[a], units_[b], d_)]);
                                                });
  system_ = std::make_unique<CharacterSystem>(group_.get());
  const auto divs = d == 1 ? std::vector<u64>{1} : arith::divisors(arith::factor(d));
  std::vector<std::pair<u64, std::vector<std::uint32_t>>> kernels;
  for (u64 f : divs) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t a = 0; a < size(); ++a) {
      if (units_[a] % f == 1 % f) members.push_back(a);
    }
    kernels.push_back({f, system_->subgroup_generators(members)});
  }
  conductor_.assign(size(), d);
  for (std::uint32_t chi = 0; chi < size(); ++chi) {
    for (const auto& [f, gens] : kernels) {
      if (system_->trivial_on(chi, gens)) {
        conductor_[chi] = f;
        break;
      }
    }
  }
}

std::complex<double> DirichletTable::eval(std::uint32_t chi, i64 n) const {
  const i64 r = static_cast<i64>(mod_pos(n, static_cast<i128>(d_)));
  const std::int64_t l = label_of_[static_cast<u64>(r)];
  if (l < 0) return {0.0, 0.0};
  return system_->value(chi, static_cast<std::uint32_t>(l));
}

std::vector<std::uint32_t> DirichletTable::primitive_characters() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t chi = 0; chi < size(); ++chi) {
    if (primitive(chi)) out.push_back(chi);
  }
  return out;
}

std::complex<double> hecke_eval(const HeckeChar& h, GaussInt z) {
  if (h.table == nullptr) throw Error(ErrorCode::InvalidArgument, "Hecke character without table");
  if (z == GaussInt{}) throw Error(ErrorCode::ZeroArgument, "hecke_eval(0)");
  if (!is_odd(z)) throw Error(ErrorCode::EvenArgument, "hecke_eval(" + to_string(z) + ")");
  const GaussInt p = primary_associate(z);
  const auto l = h.table->group().label(p);
  if (!l) throw Error(ErrorCode::NotCoprime, to_string(z) + " shares a factor with " + to_string(h.table->modulus()));
  const double angle = static_cast<double>(h.k) * std::atan2(static_cast<double>(p.im), static_cast<double>(p.re));
  return std::polar(1.0, angle) * h.table->system().value(h.chi, *l);
}

i64 lambda1(GaussInt a, const HeckeChar& chi1) {
  if (a == GaussInt{}) throw Error(ErrorCode::ZeroArgument, "lambda1(0)");
  if (!is_odd(a)) throw Error(ErrorCode::EvenArgument, "lambda1(" + to_string(a) + ")");
  const GaussFactorization f = factor_gaussian(a);
  std::vector<GaussInt> divisors{GaussInt{1, 0}};
  for (const auto& [pi, e] : f.factors) {
    const std::size_t base = divisors.size();
    GaussInt power{1, 0};
    for (int j = 1; j <= e; ++j) {
      power = power * pi;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  double total = 0;
  for (GaussInt d : divisors) {
    if (!chi1.table->group().label(primary_associate(d))) continue;
    total += hecke_eval(chi1, d).real();
  }
  return static_cast<i64>(std::llround(total));
}

PrimitiveSumReport primitive_char_sum(i64 a, u64 d) {
  if (d == 0) throw Error(ErrorCode::ZeroArgument, "modulus 0");
  PrimitiveSumReport r;
  const u64 ar = static_cast<u64>(mod_pos(a, static_cast<i128>(d)));
  const u64 am1 = static_cast<u64>(mod_pos(static_cast<i128>(a) - 1, static_cast<i128>(d)));
  r.bound = std::gcd(am1, d);
  if (std::gcd(ar, d) != 1) {
    r.value = 0;  // every character vanishes off the unit group
  } else {
    i64 value = 1;
    for (const auto& [p, k] : (d == 1 ? Factorization{} : arith::factor(d))) {
      u64 pk = 1;
      for (int j = 0; j < k; ++j) pk *= p;
      const u64 pk1 = pk / p;
      const i64 phi_k = static_cast<i64>(pk - pk1);
      const i64 phi_k1 = k == 1 ? 1 : static_cast<i64>(pk1 - pk1 / p);
      const i64 local = (ar % pk == 1 % pk ? phi_k : 0) - (ar % pk1 == 1 % pk1 ? phi_k1 : 0);
      value *= local;
    }
    r.value = value;
  }
  r.ok = static_cast<u64>(std::llabs(r.value)) <= r.bound;
  return r;
}

GaussSumReport gauss_sum_check(u64 p, int k, int l, u64 modulus_bound) {
  if (p % 2 == 0 || !arith::is_prime64(p)) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
  if (k < 1 || l < 0) throw Error(ErrorCode::InvalidArgument, "need k >= 1 and l >= 0");
  u64 pk = 1;
  for (int j = 0; j < k; ++j) pk = static_cast<u64>(arith::checked_mul(static_cast<i64>(pk), static_cast<i64>(p)));
  u64 pl = 1;
  for (int j = 0; j < l; ++j) pl = static_cast<u64>(arith::checked_mul(static_cast<i64>(pl), static_cast<i64>(p)));
  const CharTable table(GaussInt{static_cast<i64>(pk), 0}, modulus_bound);
  GaussSumReport report{p, k, l, {}, 0.0, true};
  const double bound = 2.0 * std::pow(static_cast<double>(p), 0.5 * k + 0.5 * l);
  const GaussInt shift{0, static_cast<i64>(pl % pk)};
  for (std::uint32_t chi = 0; chi < table.size(); ++chi) {
    int level = 0;
    for (const auto& [pi, e] : factor_gaussian(table.conductor(chi)).factors) {
      (void)pi;
      level = std::max(level, e);
    }
    if (level != k) continue;
    std::complex<double> s{0.0, 0.0};
    for (u64 r = 0; r < pk; ++r) s += table.eval(chi, GaussInt{static_cast<i64>(r), 0} + shift);
    BoundCheck c;
    c.label = "chi#" + std::to_string(chi) + " conductor " + to_string(table.conductor(chi));
    c.observed = std::abs(s);
    c.bound = bound;
    c.ratio = c.observed / bound;
    c.ok = c.observed <= bound * (1 + 1e-12);
    report.max_ratio = std::max(report.max_ratio, c.ratio);
    report.ok = report.ok && c.ok;
    report.checks.push_back(std::move(c));
  }
  return report;
}

ShortSumReport short_interval_char_sum(const CharTable& table, std::uint32_t chi, i64 b, u64 Y, double eta,
                                       int a0) {
  const u64 nu = norm(table.modulus());
  if (!(eta > 0 && eta < 1)) throw Error(ErrorCode::InvalidArgument, "eta must lie in (0, 1)");
  if (static_cast<long double>(Y) <= static_cast<long double>(nu) * nu) {
    throw Error(ErrorCode::InvalidArgument, "Y must exceed |u|^4");
  }
  ShortSumReport r;
  r.principal = table.principal(chi);
  r.length = std::pow(static_cast<double>(Y), 1.0 - eta);
  const u64 span = static_cast<u64>(std::floor(r.length));
  if (span < 1) throw Error(ErrorCode::IntervalEmpty, "interval shorter than 1");
  const u64 residue = static_cast<u64>(((a0 % 4) + 4) % 4);
  const u64 bb = static_cast<u64>(std::llabs(b));
  for (u64 a = Y + 1; a <= Y + span; ++a) {
    if (a % 4 != residue || std::gcd(a, bb) != 1) continue;
    r.sum += table.eval(chi, GaussInt{b, static_cast<i64>(a)});
    ++r.terms;
  }
  if (r.terms == 0) throw Error(ErrorCode::IntervalEmpty, "no admissible a in the interval");
  const GaussInt v = ggcd(table.modulus(), GaussInt{b, 0});
  r.quotient = std::sqrt(static_cast<double>(nu) / static_cast<double>(norm(v)));
  r.ratio = std::abs(r.sum) / (r.length / std::pow(r.quotient, 0.4));
  return r;
}

PolyaReport polya_vinogradov_check(const CharTable& table, std::uint32_t chi, double cx, double cy, double radius) {
  if (!(radius > 0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  const i64 x0 = static_cast<i64>(std::ceil(cx - radius)), x1 = static_cast<i64>(std::floor(cx + radius));
  const i64 y0 = static_cast<i64>(std::ceil(cy - radius)), y1 = static_cast<i64>(std::floor(cy + radius));
  std::vector<double> wx, wy;
  for (i64 x = x0; x <= x1; ++x) wx.push_back(mollifier((static_cast<double>(x) - cx) / radius));
  for (i64 y = y0; y <= y1; ++y) wy.push_back(mollifier((static_cast<double>(y) - cy) / radius));
  PolyaReport r;
  for (i64 y = y0; y <= y1; ++y) {
    const double fy = wy[static_cast<std::size_t>(y - y0)];
    if (fy == 0) continue;
    std::complex<double> row{0.0, 0.0};
    for (i64 x = x0; x <= x1; ++x) {
      const double f = wx[static_cast<std::size_t>(x - x0)];
      if (f == 0) continue;
      row += f * table.eval(chi, GaussInt{x, y});
      r.mass += f * fy;
    }
    r.sum += fy * row;
  }
  r.modulus_abs = std::sqrt(static_cast<double>(norm(table.modulus())));
  r.ratio = std::abs(r.sum) / r.modulus_abs;
  return r;
}

}  // namespace gplab
