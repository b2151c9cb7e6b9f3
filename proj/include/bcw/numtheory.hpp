#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace bcw {

using Int = mpz_class;
using Rat = mpq_class;

// Deterministic below 2^64, Miller-Rabin with error < 2^-128 beyond.
bool is_prime(const Int& n);

// Prime factorization by trial division (desk-scale inputs).
// Returns (p, e) pairs with p ascending.
std::vector<std::pair<Int, int>> factor_integer(const Int& n);

// Largest s with s^2 | n, together with the squarefree part d = n / s^2.
// Works for negative n (sign goes into d).
void squarefree_decompose(const Int& n, Int& d, Int& s);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// g = gcd(a,b) = s*a + t*b
void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t);

// a^e mod m, e >= 0, m > 1
Int powmod(const Int& a, const Int& e, const Int& m);

// Rational enclosure lo <= sqrt(d) <= hi with hi - lo <= 2^-bits, d >= 0.
void rat_sqrt_bounds(const Int& d, int bits, Rat& lo, Rat& hi);

}  // namespace bcw
