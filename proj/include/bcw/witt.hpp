#pragma once

#include <map>

#include "bcw/drmonoid.hpp"

namespace bcw {

// Z[zeta_m] (rational coefficients allowed) as polynomials modulo the m-th
// cyclotomic polynomial; level 1 degenerates to the rationals.
class CyclotomicRing {
 public:
  using Elem = std::vector<Rat>;

  explicit CyclotomicRing(long level);

  long level() const { return m_; }
  std::size_t degree() const { return deg_; }
  const IntPolynomial& modulus_poly() const { return phi_; }

  Elem zero() const { return Elem(deg_, Rat(0)); }
  Elem one() const { return from_rational(Rat(1)); }
  Elem from_rational(const Rat& q) const;
  Elem root_power(long k) const;  // zeta^k reduced mod Phi_m

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Rat& c, const Elem& a) const;
  Elem pow(const Elem& a, const Int& e) const;  // e >= 0

  bool is_zero(const Elem& a) const;
  bool is_integral(const Elem& a) const;
  // a integral and every coefficient divisible by q
  bool divisible(const Elem& a, const Int& q) const;

  // Frobenius lift zeta -> zeta^p; requires p coprime to the level
  Elem sigma(const Int& p, const Elem& a) const;

 private:
  long m_;
  IntPolynomial phi_;
  std::size_t deg_;
  std::vector<Elem> xpow_;  // x^k mod Phi_m for k < 2*deg
};

// Finite divisor-closed set of positive integers.
class TruncationSet {
 public:
  TruncationSet() : elems_{1} {}
  explicit TruncationSet(std::vector<long> elems);  // validates closure
  static TruncationSet divisors(long n);

  const std::vector<long>& elements() const { return elems_; }
  bool contains(long n) const;
  long max() const { return elems_.back(); }
  bool operator==(const TruncationSet& o) const = default;

 private:
  std::vector<long> elems_;  // sorted ascending
};

struct GhostVector {
  TruncationSet S;
  std::map<long, CyclotomicRing::Elem> w;
  bool operator==(const GhostVector& o) const = default;
};

struct WittVector {
  TruncationSet S;
  std::map<long, CyclotomicRing::Elem> x;
  bool operator==(const WittVector& o) const = default;
};

// w_n = sum over d | n of d * x_d^(n/d)
GhostVector ghost(const CyclotomicRing& R, const WittVector& x);
// exact inverse over rational coefficients
WittVector unghost(const CyclotomicRing& R, const GhostVector& w);
// inverse with the integrality assertion (errors on fractional coordinates)
WittVector unghost_integral(const CyclotomicRing& R, const GhostVector& w);

// Dwork criterion: w_(pn) = sigma_p(w_n) mod p^(v_p(pn)) for all p, n with
// pn in S, over primes p coprime to the ring level. Entries must be integral.
bool dwork_member(const CyclotomicRing& R, const GhostVector& w);

WittVector witt_add(const CyclotomicRing& R, const WittVector& a,
                    const WittVector& b);
WittVector witt_mul(const CyclotomicRing& R, const WittVector& a,
                    const WittVector& b);
WittVector witt_neg(const CyclotomicRing& R, const WittVector& a);

// (F_m w)_n = w_(mn) on the truncation {n : mn in S}
WittVector frobenius(const CyclotomicRing& R, long m, const WittVector& x);
// (V_m x)_(mn) = x_n, other coordinates 0, on the divisor closure of m*S
WittVector verschiebung(const CyclotomicRing& R, long m, const WittVector& x);
// [r]: x_1 = r, all other coordinates 0; ghost components r^n
WittVector teichmuller(const CyclotomicRing& R, const CyclotomicRing::Elem& r,
                       const TruncationSet& S);

enum class Periodicity { Periodic, NotPeriodic, Vacuous };

// F_a(x) = F_b(x) for every pair a, b <= max(S) identified in the level-N
// quotient monoid over the rationals; Vacuous when no pair is testable.
Periodicity is_periodic(const CyclotomicRing& R, const WittVector& x, long N);

// sum of strict ray class orders over divisors of f, asserted equal to the
// size of the quotient monoid
Int periodic_rank(const NumberField& k, const FractionalIdeal& f);

// sigma_p(x) - x^p has all coordinates divisible by p, on every basis
// monomial and `trials` seeded random elements
bool cyclotomic_frobenius_check(long m, const Int& p, int trials,
                                unsigned long seed = 1);

}  // namespace bcw
