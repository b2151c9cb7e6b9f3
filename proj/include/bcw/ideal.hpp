#pragma once

#include <vector>

#include "bcw/intmat.hpp"
#include "bcw/numfield.hpp"

namespace bcw {

// Fractional ideal of O_K as an HNF lattice with denominator: the ideal is
// (1/den) * (Z-span of the numerator rows), rows in O_K coordinates.
// Canonical form (HNF numerator, normalized denominator) makes equality
// structural.
class FractionalIdeal {
 public:
  FractionalIdeal() = default;

  static FractionalIdeal unit(const NumberField& k);
  // from a lattice spanned by the given rows (need not be in HNF)
  static FractionalIdeal from_lattice(const NumberField& k, const IntMatrix& m,
                                      const Int& den);

  const IntMatrix& numerator() const { return num_; }
  const Int& denominator() const { return den_; }
  bool is_integral() const { return den_ == 1; }

  bool operator==(const FractionalIdeal& o) const = default;
  // total order: (norm, denominator, HNF entries)
  int compare(const NumberField& k, const FractionalIdeal& o) const;

 private:
  IntMatrix num_;
  Int den_ = 1;
};

struct PrimeIdeal {
  Int p;                 // residue characteristic
  FractionalIdeal ideal;
  int deg = 1;           // residue degree
  int e = 1;             // ramification index
  Int norm() const;      // p^deg
};

// HNF lattice of the O_K-module generated by the given elements.
FractionalIdeal ideal_from_generators(const NumberField& k,
                                      const std::vector<FieldElement>& xs);
FractionalIdeal principal_ideal(const NumberField& k, const FieldElement& x);

FractionalIdeal ideal_product(const NumberField& k, const FractionalIdeal& a,
                              const FractionalIdeal& b);
// a^(-1) = {x in K : x*a is contained in O_K}; a * a^(-1) = (1) is asserted.
FractionalIdeal ideal_inverse(const NumberField& k, const FractionalIdeal& a);
FractionalIdeal ideal_pow(const NumberField& k, const FractionalIdeal& a,
                          const Int& e);
Rat ideal_norm(const NumberField& k, const FractionalIdeal& a);

// sum a + b (the ideal gcd)
FractionalIdeal ideal_sum(const NumberField& k, const FractionalIdeal& a,
                          const FractionalIdeal& b);

bool ideal_contains(const NumberField& k, const FractionalIdeal& a,
                    const FieldElement& x);
// is b a subset of a?
bool ideal_contains_ideal(const NumberField& k, const FractionalIdeal& a,
                          const FractionalIdeal& b);
bool ideals_coprime(const NumberField& k, const FractionalIdeal& a,
                    const FractionalIdeal& b);

// Prime ideals above the rational prime p, each with residue degree and
// ramification index. Requires a monogenic O_K (automatic for degree <= 2).
std::vector<PrimeIdeal> primes_above(const NumberField& k, const Int& p);

// largest v with a contained in P^v
int ideal_valuation(const NumberField& k, const FractionalIdeal& a,
                    const PrimeIdeal& P);

// Factorization of a nonzero integral ideal into prime ideals; the product
// of the factors is verified to reassemble the input.
std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const NumberField& k,
                                                     const FractionalIdeal& a);

// All integral ideals of norm <= bound, sorted by (norm, HNF order).
std::vector<FractionalIdeal> enumerate_ideals(const NumberField& k,
                                              const Int& bound);

// All integral divisors of f, sorted by (norm, HNF order).
std::vector<FractionalIdeal> divisors_of(const NumberField& k,
                                         const FractionalIdeal& f);

}  // namespace bcw
