#pragma once

#include "bcw/residue.hpp"

namespace bcw {

enum class SearchStatus { Found, None, Inconclusive };

struct GeneratorSearch {
  SearchStatus status = SearchStatus::None;
  FieldElement x;  // valid only when status == Found
};

// Searches for x with (x) = c, x totally positive, and x - 1 in the lattice
// of m. Complete (Found/None certified) for degree <= 2; degree >= 3 returns
// Inconclusive.
GeneratorSearch congruent_generator(const NumberField& k,
                                    const FractionalIdeal& c,
                                    const FractionalIdeal& m);

// Same search without the positivity constraint (principality testing).
GeneratorSearch principal_generator(const NumberField& k,
                                    const FractionalIdeal& c);

// Image of the unit group O_K^x in (O_K/f)^x x {+-1}^r1.
struct UnitImage {
  Int image_order;
  Int index;  // (|(O_K/f)^x| * 2^r1) / image_order
  std::vector<Int> unit_periods;  // order of each fundamental unit's image
};
UnitImage unit_image_mod(const NumberField& k, const FractionalIdeal& f);

// Ordinary class number by complete enumeration up to the Minkowski bound.
Int class_number(const NumberField& k);

// Strict (narrow) ray class group of conductor f: generated by small prime
// ideals coprime to f, relations found by congruent-generator searches, and
// the order certified against the analytic formula
//   h^+_f = h_K * |(O_K/f)^x| * 2^r1 / [O_K^x : U^+_{f,1}].
class RayClassGroup {
 public:
  RayClassGroup(const NumberField& k, const FractionalIdeal& f,
                bool strict = true);

  const NumberField& field() const { return *k_; }
  const FractionalIdeal& modulus() const { return f_; }
  bool strict() const { return strict_; }
  const FiniteAbelianGroup& group() const { return group_; }
  Int order() const { return group_.order(); }
  const std::vector<FractionalIdeal>& generator_ideals() const {
    return gens_;
  }

  // exponent vector of [a] for a coprime to f
  FiniteAbelianGroup::Element class_of(const FractionalIdeal& a) const;
  // an ideal coprime to f representing the given class
  const FractionalIdeal& representative(
      const FiniteAbelianGroup::Element& e) const;

 private:
  const NumberField* k_;
  FractionalIdeal f_;
  bool strict_;
  FiniteAbelianGroup group_;
  std::vector<FractionalIdeal> gens_;
  // one representative ideal per class, paired with its exponent vector
  std::vector<std::pair<FractionalIdeal, FiniteAbelianGroup::Element>> table_;
};

// a ~ b in the ray class sense: a*b^(-1) has a generator x with x - 1 in
// f*b^(-1) (and x totally positive when strict).
bool ray_equivalent(const NumberField& k, const FractionalIdeal& a,
                    const FractionalIdeal& b, const FractionalIdeal& f,
                    bool strict = true);

}  // namespace bcw
