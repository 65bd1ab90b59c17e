#include "gplab/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "gplab/error.hpp"

namespace gplab {

using Label = FiniteAbelianGroup::Label;

FiniteAbelianGroup::FiniteAbelianGroup(Label order, Label identity, Mul op)
    : order_(order), identity_(identity), mul_(std::move(op)) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "empty group");
  order_factors_ = order == 1 ? Factorization{} : arith::factor(order);

  std::vector<u64> orders(order_);
  for (Label a = 0; a < order_; ++a) orders[a] = element_order(a);

  for (const auto& [ell, power] : order_factors_) {
    (void)power;
    std::vector<Label> sylow;
    for (Label a = 0; a < order_; ++a) {
      u64 o = orders[a];
      while (o % ell == 0) o /= ell;
      if (o == 1) sylow.push_back(a);
    }
    // S = subgroup spanned by chosen generators, with exponent vectors.
    std::vector<Label> local_gens;
    std::vector<u64> local_orders;
    std::unordered_map<Label, std::vector<u64>> coords{{identity_, {}}};
    while (coords.size() < sylow.size()) {
      // Element of maximal order modulo S.
      Label best = identity_;
      u64 best_order = 1;
      for (Label a : sylow) {
        u64 o = 1;
        Label x = a;
        while (!coords.count(x)) {
          x = pow(x, ell);
          o *= ell;
        }
        if (o > best_order) {
          best_order = o;
          best = a;
        }
      }
      // best^{best_order} lies in S; strip its root inside S.
      const std::vector<u64>& v = coords.at(pow(best, best_order));
      Label fix = identity_;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] % best_order != 0) throw Error(ErrorCode::InvalidArgument, "group basis lift failed");
        const u64 inv_exp = local_orders[j] - (v[j] / best_order) % local_orders[j];
        fix = mul(fix, pow(local_gens[j], inv_exp));
      }
      const Label g = mul(best, fix);
      // Extend S by <g>.
      std::unordered_map<Label, std::vector<u64>> next;
      next.reserve(coords.size() * best_order);
      for (const auto& [elem, vec] : coords) {
        Label x = elem;
        for (u64 e = 0; e < best_order; ++e) {
          std::vector<u64> w = vec;
          w.resize(local_gens.size(), 0);
          w.push_back(e);
          next.emplace(x, std::move(w));
          x = mul(x, g);
        }
      }
      coords = std::move(next);
      local_gens.push_back(g);
      local_orders.push_back(best_order);
    }
    gens_.insert(gens_.end(), local_gens.begin(), local_gens.end());
    gen_orders_.insert(gen_orders_.end(), local_orders.begin(), local_orders.end());
  }
  for (u64 o : gen_orders_) exponent_ = std::lcm(exponent_, o);

  // Enumerate all exponent vectors.
  dlog_.assign(order_, order_);
  by_index_.assign(order_, identity_);
  std::vector<u64> e(gens_.size(), 0);
  Label current = identity_;
  for (Label index = 0; index < order_; ++index) {
    if (dlog_[current] != order_) throw Error(ErrorCode::InvalidArgument, "group basis is not independent");
    dlog_[current] = index;
    by_index_[index] = current;
    // Increment the mixed-radix counter, tracking the product.
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      current = mul(current, gens_[j]);
      if (++e[j] < gen_orders_[j]) break;
      e[j] = 0;  // wrapped: current already returned to g_j^0 in this digit
    }
  }
}

Label FiniteAbelianGroup::pow(Label a, u64 e) const {
  Label result = identity_;
  while (e) {
    if (e & 1) result = mul_(result, a);
    e >>= 1;
    if (e) a = mul_(a, a);
  }
  return result;
}

u64 FiniteAbelianGroup::element_order(Label a) const {
  u64 o = order_;
  for (const auto& [p, e] : order_factors_) {
    (void)e;
    while (o % p == 0 && pow(a, o / p) == identity_) o /= p;
  }
  return o;
}

std::vector<u64> FiniteAbelianGroup::unpack(Label index) const {
  std::vector<u64> e(gens_.size());
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    e[j] = index % gen_orders_[j];
    index = static_cast<Label>(index / gen_orders_[j]);
  }
  return e;
}

std::vector<Label> FiniteAbelianGroup::span(const std::vector<Label>& gens) const {
  std::vector<char> seen(order_, 0);
  std::vector<Label> out{identity_};
  seen[identity_] = 1;
  for (Label g : gens) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      Label x = mul_(out[i], g);
      while (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
        x = mul_(x, g);
      }
    }
  }
  return out;
}

CharacterSystem::CharacterSystem(const FiniteAbelianGroup* group) : group_(group) {
  const u64 L = group_->exponent();
  roots_.resize(L);
  for (u64 k = 0; k < L; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(L);
    roots_[k] = {std::cos(angle), std::sin(angle)};
  }
  for (u64 o : group_->generator_orders()) scale_.push_back(L / o);
}

u64 CharacterSystem::value_exponent(std::uint32_t chi, std::uint32_t a) const {
  const u64 L = group_->exponent();
  Label ci = chi, ai = group_->dlog_index(a);
  u64 acc = 0;
  const auto& ords = group_->generator_orders();
  for (std::size_t j = 0; j < ords.size(); ++j) {
    const u64 cj = ci % ords[j], ej = ai % ords[j];
    ci = static_cast<Label>(ci / ords[j]);
    ai = static_cast<Label>(ai / ords[j]);
    acc = (acc + (cj * ej % ords[j]) * scale_[j]) % L;
  }
  return acc;
}

std::complex<double> CharacterSystem::value(std::uint32_t chi, std::uint32_t a) const {
  return roots_[value_exponent(chi, a)];
}

bool CharacterSystem::trivial_on(std::uint32_t chi, const std::vector<std::uint32_t>& elems) const {
  for (std::uint32_t a : elems) {
    if (value_exponent(chi, a) != 0) return false;
  }
  return true;
}

u64 CharacterSystem::character_order(std::uint32_t chi) const {
  u64 o = 1;
  const auto c = group_->unpack(chi);
  const auto& ords = group_->generator_orders();
  for (std::size_t j = 0; j < c.size(); ++j) o = std::lcm(o, ords[j] / std::gcd(ords[j], c[j]));
  return o;
}

std::uint32_t CharacterSystem::conjugate(std::uint32_t chi) const {
  const auto c = group_->unpack(chi);
  const auto& ords = group_->generator_orders();
  std::uint32_t index = 0, radix = 1;
  for (std::size_t j = 0; j < c.size(); ++j) {
    index += static_cast<std::uint32_t>(((ords[j] - c[j]) % ords[j]) * radix);
    radix *= static_cast<std::uint32_t>(ords[j]);
  }
  return index;
}

std::vector<std::uint32_t> CharacterSystem::subgroup_generators(const std::vector<std::uint32_t>& members) const {
  std::vector<char> covered(group_->order(), 0);
  covered[group_->identity()] = 1;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t a : members) {
    if (covered[a]) continue;
    gens.push_back(a);
    for (Label x : group_->span(gens)) covered[x] = 1;
  }
  return gens;
}

}  // namespace gplab
