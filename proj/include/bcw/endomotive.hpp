#pragma once

#include "bcw/witt.hpp"

namespace bcw {

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_identity(std::size_t n);
RatMat rat_mat_mul(const RatMat& a, const RatMat& b);

// Finite set with a validated action of a DRMonoid.
struct DRSet {
  DRMonoid monoid;
  // action[c][x]: result of the class c acting on the point x
  std::vector<std::vector<std::size_t>> action;

  std::size_t size() const { return action.empty() ? 0 : action[0].size(); }
  std::size_t act(std::size_t c, std::size_t x) const { return action[c][x]; }
};

// The regular DR_f-set: carrier = the quotient monoid, action = its table.
DRSet spectrum(const NumberField& k, const FractionalIdeal& f);

// Surjection from the finer level to the coarser one as an equivariant map of
// regular sets; the homomorphism property is checked on all pairs.
std::vector<std::size_t> level_map(const DRSet& fine, const DRSet& coarse);

// Algebra homomorphisms out of the product of the cyclotomic fields of the
// divisor levels: each is a root of unity inside the level-n cyclotomic ring,
// recorded by its exponent.
struct GGCWitness {
  bool ok = false;
  std::vector<long> hom_exponents;        // zeta_n^e, component n/gcd(n,e)
  std::vector<std::size_t> bijection;     // spectrum point -> hom index
};

// Builds the homomorphism set with the powering action and searches for an
// equivariant bijection with spectrum((n)) over the rationals. n <= 30.
GGCWitness ggc_check_Q(long n);

// Finite-level crossed-product operators on the rational function space of
// the quotient monoid, indexed by monoid class: sigma (action pullback),
// proj (range projection e(a)), mu / mu_star (0/1 partial isometries).
struct CrossedOps {
  DRMonoid monoid;
  std::vector<RatMat> sigma, proj, mu, mu_star;
};

// Constructs the family and verifies the semigroup relations as exact matrix
// identities. Throws MathInputError when no multiplicative family of 0/1
// isometry sections exists at this level (this does happen, e.g. level (4)
// over the rationals).
CrossedOps crossed_ops(const NumberField& k, const FractionalIdeal& f);

// a(n) = number of integral ideals of norm n, n = 1..B; with euler_check the
// sequence is re-derived from the Euler product over rational primes and the
// two computations must agree.
std::vector<Int> zeta_coefficients(const NumberField& k, long B,
                                   bool euler_check = true);

}  // namespace bcw
