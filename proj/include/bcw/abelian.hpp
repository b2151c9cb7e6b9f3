#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bcw/intmat.hpp"

namespace bcw {

// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k,
// all d_i >= 2. Elements are exponent vectors modulo the factors.
class FiniteAbelianGroup {
 public:
  using Element = std::vector<Int>;

  FiniteAbelianGroup() = default;  // trivial group
  explicit FiniteAbelianGroup(std::vector<Int> invariant_factors);

  const std::vector<Int>& invariant_factors() const { return d_; }
  std::size_t num_factors() const { return d_.size(); }
  Int order() const;

  Element zero() const { return Element(d_.size(), Int(0)); }
  Element reduce(const Element& v) const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(const Int& k, const Element& a) const;
  bool is_zero(const Element& a) const;
  Int element_order(const Element& a) const;
  Int exponent() const;  // d_k, or 1 for the trivial group

  // All group elements, lexicographically by exponent vector.
  std::vector<Element> elements() const;

  bool operator==(const FiniteAbelianGroup& o) const = default;

 private:
  std::vector<Int> d_;
};

// Quotient Z^num_generators / (row span of relations), which must be finite.
struct GroupPresentation {
  FiniteAbelianGroup group;
  // image of each original generator as an exponent vector
  std::vector<FiniteAbelianGroup::Element> generator_images;
};

class InfiniteQuotientError : public std::runtime_error {
 public:
  InfiniteQuotientError(std::size_t free_rank)
      : std::runtime_error("quotient is infinite with free rank " +
                           std::to_string(free_rank)),
        free_rank(free_rank) {}
  std::size_t free_rank;
};

GroupPresentation group_from_relations(std::size_t num_generators,
                                       const IntMatrix& relations);

}  // namespace bcw
