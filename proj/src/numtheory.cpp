#include "bcw/numtheory.hpp"

#include <stdexcept>

namespace bcw {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

Int powmod(const Int& a, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

void rat_sqrt_bounds(const Int& d, int bits, Rat& lo, Rat& hi) {
  if (d < 0) throw std::invalid_argument("rat_sqrt_bounds of negative number");
  // integer sqrt of d * 4^k gives both bounds at precision 2^-k
  Int scale = Int(1) << (2 * bits);
  Int r = isqrt(d * scale);
  Int den = Int(1) << bits;
  lo = Rat(r, den);
  hi = Rat(r + 1, den);
  lo.canonicalize();
  hi.canonicalize();
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& a) {
  // returns true if a proves n composite
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  d >>= r;
  Int x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int bound64 = Int(1) << 64;
  if (n < bound64) {
    // this witness set is deterministic below 3.3 * 10^24 > 2^64
    for (long a : small)
      if (miller_rabin_witness(n, a)) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

std::vector<std::pair<Int, int>> factor_integer(const Int& n) {
  if (n == 0) throw std::invalid_argument("factor_integer(0)");
  std::vector<std::pair<Int, int>> out;
  Int m = abs(n);
  Int p = 2;
  while (m > 1) {
    if (is_prime(m)) {
      p = m;
    } else {
      while (m % p != 0) {
        p = (p == 2) ? Int(3) : Int(p + 2);
      }
    }
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

void squarefree_decompose(const Int& n, Int& d, Int& s) {
  if (n == 0) throw std::invalid_argument("squarefree_decompose(0)");
  s = 1;
  d = n < 0 ? -1 : 1;
  for (auto& [p, e] : factor_integer(n)) {
    for (int i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) d *= p;
  }
}

}  // namespace bcw
