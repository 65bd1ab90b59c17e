#pragma once

// Structure of a finite abelian group given only by its multiplication.
// Elements are dense labels 0..n-1. The constructor finds a basis of
// prime-power cyclic factors and a discrete-log table, so every element has a
// unique mixed-radix exponent index.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "gplab/arith.hpp"

namespace gplab {

class FiniteAbelianGroup {
 public:
  using Label = std::uint32_t;
  using Mul = std::function<Label(Label, Label)>;

  FiniteAbelianGroup(Label order, Label identity, Mul op);

  Label order() const { return order_; }
  Label identity() const { return identity_; }
  Label mul(Label a, Label b) const { return mul_(a, b); }
  Label pow(Label a, u64 e) const;
  u64 element_order(Label a) const;

  // Generators with their orders; prod of orders == order().
  const std::vector<Label>& generators() const { return gens_; }
  const std::vector<u64>& generator_orders() const { return gen_orders_; }
  u64 exponent() const { return exponent_; }

  // Mixed-radix index sum_j e_j * prod_{i<j} ord_i of the exponent vector.
  Label dlog_index(Label a) const { return dlog_[a]; }
  std::vector<u64> exponents(Label a) const { return unpack(dlog_[a]); }
  Label from_index(Label index) const { return by_index_[index]; }
  std::vector<u64> unpack(Label index) const;

  // Elements of the subgroup generated by gens.
  std::vector<Label> span(const std::vector<Label>& gens) const;

 private:
  Label order_;
  Label identity_;
  Mul mul_;
  Factorization order_factors_;
  std::vector<Label> gens_;
  std::vector<u64> gen_orders_;
  u64 exponent_ = 1;
  std::vector<Label> dlog_;
  std::vector<Label> by_index_;
};

// Character values on a FiniteAbelianGroup. Characters share the mixed-radix
// indexing of group elements: character c sends generator j to
// e(c_j / ord_j).
class CharacterSystem {
 public:
  explicit CharacterSystem(const FiniteAbelianGroup* group);

  const FiniteAbelianGroup& group() const { return *group_; }
  std::uint32_t size() const { return group_->order(); }

  // Exponent of chi(a) as a multiple of 1/exponent().
  u64 value_exponent(std::uint32_t chi, std::uint32_t a) const;
  std::complex<double> value(std::uint32_t chi, std::uint32_t a) const;
  const std::complex<double>& root(u64 k) const { return roots_[k % roots_.size()]; }
  u64 exponent() const { return group_->exponent(); }

  bool trivial_on(std::uint32_t chi, const std::vector<std::uint32_t>& elems) const;
  u64 character_order(std::uint32_t chi) const;
  std::uint32_t conjugate(std::uint32_t chi) const;

  // Greedy generating set of a subgroup given as a membership predicate.
  std::vector<std::uint32_t> subgroup_generators(const std::vector<std::uint32_t>& members) const;

 private:
  const FiniteAbelianGroup* group_;
  std::vector<std::complex<double>> roots_;
  std::vector<u64> scale_;  // exponent / ord_j
};

}  // namespace gplab
