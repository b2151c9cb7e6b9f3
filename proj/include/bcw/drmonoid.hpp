#pragma once

#include <optional>

#include "bcw/rayclass.hpp"

namespace bcw {

// Finite quotient of the monoid of integral ideals: elements carry a
// component divisor d | f, a canonical representative ideal (constructions A
// and B), and a full multiplication table.
class DRMonoid {
 public:
  std::size_t size() const { return table_.size(); }
  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
  std::size_t identity_index() const { return identity_; }
  const FractionalIdeal& modulus() const { return f_; }
  const NumberField& field() const { return *k_; }

  // component divisor gcd(a, f) of the class
  const FractionalIdeal& component_divisor(std::size_t i) const {
    return divisors_[i];
  }
  bool has_representatives() const { return !reps_.empty(); }
  const FractionalIdeal& representative(std::size_t i) const {
    return reps_.at(i);
  }

  // class index of an integral ideal (requires representatives)
  std::size_t class_of(const FractionalIdeal& a) const;

  std::vector<std::size_t> idempotent_indices() const;
  std::size_t act(const FractionalIdeal& a, std::size_t i) const {
    return mul(class_of(a), i);
  }

  const NumberField* k_ = nullptr;
  FractionalIdeal f_;
  std::vector<FractionalIdeal> reps_;      // empty for construction C
  std::vector<FractionalIdeal> divisors_;  // per element
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
};

// a ~ b at level f: a*b^(-1) has a totally positive generator congruent to 1
// modulo f*b^(-1), in either orientation.
bool dr_equivalent(const NumberField& k, const FractionalIdeal& a,
                   const FractionalIdeal& b, const FractionalIdeal& f);

// sum of strict ray class orders over the divisors of f; the certified
// cardinality of the quotient
Int dr_cardinality(const NumberField& k, const FractionalIdeal& f);

// construction A: brute-force quotient of enumerated ideals, completeness
// certified by the divisor-sum cardinality
DRMonoid dr_quotient(const NumberField& k, const FractionalIdeal& f);

// construction B: coproduct of strict ray class groups over divisors of f,
// glued to construction A by the verified bijection (d, c) -> [d * rep(c)]
DRMonoid dr_structural(const NumberField& k, const FractionalIdeal& f);

// construction C: orbits of (O_K/f) x Cl^+_f under the antidiagonal unit
// action, with componentwise multiplication checked for well-definedness
DRMonoid dr_fiber_product(const NumberField& k, const FractionalIdeal& f);

// index map realizing the projection from level f' to level f | f'
std::vector<std::size_t> dr_project(const DRMonoid& fine,
                                    const DRMonoid& coarse);

// explicit isomorphism between commutative monoid tables, if one exists
std::optional<std::vector<std::size_t>> monoid_isomorphism(const DRMonoid& a,
                                                           const DRMonoid& b);

}  // namespace bcw
