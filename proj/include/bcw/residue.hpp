#pragma once

#include <map>

#include "bcw/abelian.hpp"
#include "bcw/ideal.hpp"

namespace bcw {

// The quotient ring O_K/f for an integral ideal f, with canonical coset
// representatives read off the HNF pivots of the ideal lattice.
class ResidueRing {
 public:
  ResidueRing(const NumberField& k, const FractionalIdeal& f);

  const NumberField& field() const { return *k_; }
  const FractionalIdeal& modulus() const { return f_; }
  const Int& size() const { return size_; }

  // canonical representative of an integral element
  FieldElement reduce(const FieldElement& x) const;
  // all coset representatives, lexicographic in reduced coordinates
  const std::vector<FieldElement>& representatives() const { return reps_; }

  bool is_unit(const FieldElement& x) const;

 private:
  const NumberField* k_;
  FractionalIdeal f_;
  Int size_;
  std::vector<FieldElement> reps_;
};

// (O_K/f)^x as a finite abelian group, with a residue <-> exponent-vector
// dictionary built by incremental generator discovery.
class ResidueUnits {
 public:
  ResidueUnits(const NumberField& k, const FractionalIdeal& f);

  const ResidueRing& ring() const { return ring_; }
  const FiniteAbelianGroup& group() const { return group_; }
  Int order() const { return Int(unit_reps_.size()); }

  // exponent vector of a residue coprime to f
  FiniteAbelianGroup::Element log(const FieldElement& x) const;
  // a coset representative with the given exponent vector
  const FieldElement& representative(
      const FiniteAbelianGroup::Element& e) const;
  const std::vector<FieldElement>& unit_representatives() const {
    return unit_reps_;
  }

 private:
  ResidueRing ring_;
  FiniteAbelianGroup group_;
  std::vector<FieldElement> unit_reps_;
  std::map<std::vector<Int>, FiniteAbelianGroup::Element> log_;
  std::map<FiniteAbelianGroup::Element, FieldElement> rep_;
};

}  // namespace bcw
