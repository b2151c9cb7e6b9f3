#include "bcw/witt.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace bcw {

namespace {

long vp(long p, long n) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Int int_pow(long p, long e) {
  Int r = 1;
  for (long i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

CyclotomicRing::CyclotomicRing(long level) : m_(level) {
  if (level < 1) throw MathInputError("cyclotomic level must be positive");
  phi_ = cyclotomic(level);
  deg_ = static_cast<std::size_t>(phi_.degree());
  // x^k mod Phi_m, enough for products of reduced elements and for zeta^k
  // with k < m
  std::size_t count = std::max<std::size_t>(
      2 * deg_ >= 1 ? 2 * deg_ - 1 : 1, static_cast<std::size_t>(m_));
  std::vector<Rat> cur(deg_, Rat(0));
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    xpow_.push_back(cur);
    // multiply by x: shift, then fold the overflow through
    // x^deg = -(phi_0 + phi_1 x + ...)/1 (Phi_m is monic)
    Rat top = cur.back();
    for (std::size_t i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg_; ++i)
        cur[i] -= top * Rat(phi_.coeff(i));
  }
}

CyclotomicRing::Elem CyclotomicRing::from_rational(const Rat& q) const {
  Elem e = zero();
  e[0] = q;
  return e;
}

CyclotomicRing::Elem CyclotomicRing::root_power(long k) const {
  k %= m_;
  if (k < 0) k += m_;
  return xpow_[static_cast<std::size_t>(k)];
}

CyclotomicRing::Elem CyclotomicRing::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (std::size_t i = 0; i < deg_; ++i) r[i] += b[i];
  return r;
}

CyclotomicRing::Elem CyclotomicRing::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (std::size_t i = 0; i < deg_; ++i) r[i] -= b[i];
  return r;
}

CyclotomicRing::Elem CyclotomicRing::neg(const Elem& a) const {
  Elem r = a;
  for (Rat& c : r) c = -c;
  return r;
}

CyclotomicRing::Elem CyclotomicRing::mul(const Elem& a, const Elem& b) const {
  std::vector<Rat> conv(2 * deg_ - 1, Rat(0));
  for (std::size_t i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < deg_; ++j) conv[i + j] += a[i] * b[j];
  }
  Elem r = zero();
  for (std::size_t k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    for (std::size_t i = 0; i < deg_; ++i) r[i] += conv[k] * xpow_[k][i];
  }
  return r;
}

CyclotomicRing::Elem CyclotomicRing::scale(const Rat& c, const Elem& a) const {
  Elem r = a;
  for (Rat& x : r) x *= c;
  return r;
}

CyclotomicRing::Elem CyclotomicRing::pow(const Elem& a, const Int& e) const {
  if (e < 0) throw MathInputError("negative exponent in cyclotomic power");
  Elem r = one();
  Elem base = a;
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return r;
}

bool CyclotomicRing::is_zero(const Elem& a) const {
  for (const Rat& c : a)
    if (c != 0) return false;
  return true;
}

bool CyclotomicRing::is_integral(const Elem& a) const {
  for (const Rat& c : a)
    if (c.get_den() != 1) return false;
  return true;
}

bool CyclotomicRing::divisible(const Elem& a, const Int& q) const {
  if (!is_integral(a)) return false;
  for (const Rat& c : a)
    if (c.get_num() % q != 0) return false;
  return true;
}

CyclotomicRing::Elem CyclotomicRing::sigma(const Int& p, const Elem& a) const {
  if (gcd(p, Int(m_)) != 1)
    throw MathInputError("no Frobenius lift at a prime dividing the level");
  long pm = mpz_fdiv_ui(p.get_mpz_t(), static_cast<unsigned long>(m_));
  Elem r = zero();
  for (std::size_t i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    Elem term = root_power(static_cast<long>(i) * pm);
    for (std::size_t j = 0; j < deg_; ++j) r[j] += a[i] * term[j];
  }
  return r;
}

TruncationSet::TruncationSet(std::vector<long> elems) {
  std::set<long> s(elems.begin(), elems.end());
  if (s.empty() || *s.begin() < 1)
    throw MathInputError("truncation set needs positive entries");
  for (long n : s)
    for (long d = 1; d * d <= n; ++d)
      if (n % d == 0 && (!s.count(d) || !s.count(n / d)))
        throw MathInputError("truncation set is not divisor-closed");
  elems_.assign(s.begin(), s.end());
}

TruncationSet TruncationSet::divisors(long n) {
  if (n < 1) throw MathInputError("truncation set needs positive entries");
  std::vector<long> d;
  for (long k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return TruncationSet(d);
}

bool TruncationSet::contains(long n) const {
  return std::binary_search(elems_.begin(), elems_.end(), n);
}

GhostVector ghost(const CyclotomicRing& R, const WittVector& x) {
  GhostVector g{x.S, {}};
  for (long n : x.S.elements()) {
    CyclotomicRing::Elem w = R.zero();
    for (long d : x.S.elements()) {
      if (d > n) break;
      if (n % d != 0) continue;
      w = R.add(w, R.scale(Rat(d), R.pow(x.x.at(d), Int(n / d))));
    }
    g.w[n] = w;
  }
  return g;
}

WittVector unghost(const CyclotomicRing& R, const GhostVector& w) {
  WittVector x{w.S, {}};
  for (long n : w.S.elements()) {
    CyclotomicRing::Elem rest = R.zero();
    for (long d : w.S.elements()) {
      if (d >= n) break;
      if (n % d != 0) continue;
      rest = R.add(rest, R.scale(Rat(d), R.pow(x.x.at(d), Int(n / d))));
    }
    x.x[n] = R.scale(Rat(1, n), R.sub(w.w.at(n), rest));
  }
  return x;
}

WittVector unghost_integral(const CyclotomicRing& R, const GhostVector& w) {
  WittVector x = unghost(R, w);
  for (auto& [n, c] : x.x)
    if (!R.is_integral(c))
      throw MathInputError("ghost vector has no integral Witt coordinates");
  return x;
}

bool dwork_member(const CyclotomicRing& R, const GhostVector& w) {
  for (auto& [n, c] : w.w)
    if (!R.is_integral(c))
      throw MathInputError("Dwork membership needs integral ghost entries");
  long top = w.S.max();
  for (long p = 2; p <= top; ++p) {
    if (!is_prime(Int(p))) continue;
    if (R.level() % p == 0) continue;  // no designated lift at this prime
    for (long n : w.S.elements()) {
      if (n % p != 0) continue;
      long m = n / p;
      if (!w.S.contains(m)) continue;
      CyclotomicRing::Elem diff = R.sub(w.w.at(n), R.sigma(Int(p), w.w.at(m)));
      if (!R.divisible(diff, int_pow(p, vp(p, n)))) return false;
    }
  }
  return true;
}

namespace {

WittVector witt_binop(const CyclotomicRing& R, const WittVector& a,
                      const WittVector& b, bool add) {
  if (!(a.S == b.S))
    throw MathInputError("Witt operands need matching truncation sets");
  GhostVector ga = ghost(R, a), gb = ghost(R, b);
  GhostVector gc{a.S, {}};
  for (long n : a.S.elements())
    gc.w[n] = add ? R.add(ga.w.at(n), gb.w.at(n))
                  : R.mul(ga.w.at(n), gb.w.at(n));
  WittVector c = unghost(R, gc);
  bool integral_in = true;
  for (auto& [n, x] : a.x) integral_in = integral_in && R.is_integral(x);
  for (auto& [n, x] : b.x) integral_in = integral_in && R.is_integral(x);
  if (integral_in)
    for (auto& [n, x] : c.x)
      if (!R.is_integral(x))
        throw InternalCheckError("Witt operation left the integral subring");
  return c;
}

}  // namespace

WittVector witt_add(const CyclotomicRing& R, const WittVector& a,
                    const WittVector& b) {
  return witt_binop(R, a, b, true);
}

WittVector witt_mul(const CyclotomicRing& R, const WittVector& a,
                    const WittVector& b) {
  return witt_binop(R, a, b, false);
}

WittVector witt_neg(const CyclotomicRing& R, const WittVector& a) {
  GhostVector g = ghost(R, a);
  for (auto& [n, c] : g.w) c = R.neg(c);
  WittVector r = unghost(R, g);
  bool integral_in = true;
  for (auto& [n, x] : a.x) integral_in = integral_in && R.is_integral(x);
  if (integral_in)
    for (auto& [n, x] : r.x)
      if (!R.is_integral(x))
        throw InternalCheckError("Witt negation left the integral subring");
  return r;
}

WittVector frobenius(const CyclotomicRing& R, long m, const WittVector& x) {
  if (m < 1) throw MathInputError("Frobenius index must be positive");
  std::vector<long> kept;
  for (long n : x.S.elements())
    if (x.S.contains(m * n)) kept.push_back(n);
  if (kept.empty())
    throw MathInputError("empty truncation set for this Frobenius index");
  GhostVector g = ghost(R, x);
  GhostVector h{TruncationSet(kept), {}};
  for (long n : kept) h.w[n] = g.w.at(m * n);
  return unghost(R, h);
}

WittVector verschiebung(const CyclotomicRing& R, long m, const WittVector& x) {
  if (m < 1) throw MathInputError("Verschiebung index must be positive");
  std::set<long> out;
  for (long n : x.S.elements()) {
    long t = m * n;
    for (long d = 1; d <= t; ++d)
      if (t % d == 0) out.insert(d);
  }
  WittVector v{TruncationSet(std::vector<long>(out.begin(), out.end())), {}};
  for (long n : v.S.elements()) {
    if (n % m == 0 && x.S.contains(n / m))
      v.x[n] = x.x.at(n / m);
    else
      v.x[n] = R.zero();
  }
  // ghost law (V_m w)_n = m * w_(n/m), zero when m does not divide n
  GhostVector gx = ghost(R, x);
  GhostVector gv = ghost(R, v);
  for (long n : v.S.elements()) {
    CyclotomicRing::Elem want =
        (n % m == 0 && x.S.contains(n / m))
            ? R.scale(Rat(m), gx.w.at(n / m))
            : R.zero();
    if (!(gv.w.at(n) == want))
      throw InternalCheckError("Verschiebung ghost law failed");
  }
  return v;
}

WittVector teichmuller(const CyclotomicRing& R, const CyclotomicRing::Elem& r,
                       const TruncationSet& S) {
  WittVector t{S, {}};
  for (long n : S.elements()) t.x[n] = (n == 1) ? r : R.zero();
  return t;
}

Periodicity is_periodic(const CyclotomicRing& R, const WittVector& x, long N) {
  if (N < 1) throw MathInputError("periodicity level must be positive");
  // the rational level-N quotients are reused heavily; cache them
  static NumberField q = NumberField::make(parse_poly("x"));
  static std::map<long, DRMonoid> cache;
  auto it = cache.find(N);
  if (it == cache.end())
    it = cache
             .emplace(N,
                      dr_quotient(q, principal_ideal(q, q.from_rational(
                                                            Rat(N)))))
             .first;
  const DRMonoid& m = it->second;
  long top = x.S.max();
  std::vector<std::size_t> cls(static_cast<std::size_t>(top) + 1);
  for (long a = 1; a <= top; ++a)
    cls[a] = m.class_of(principal_ideal(q, q.from_rational(Rat(a))));
  GhostVector g = ghost(R, x);
  bool tested = false;
  for (long a = 1; a <= top; ++a)
    for (long b = a + 1; b <= top; ++b) {
      if (cls[a] != cls[b]) continue;
      bool pair_tested = false;
      for (long n : x.S.elements()) {
        if (!x.S.contains(a * n) || !x.S.contains(b * n)) continue;
        pair_tested = true;
        if (!(g.w.at(a * n) == g.w.at(b * n))) return Periodicity::NotPeriodic;
      }
      tested = tested || pair_tested;
    }
  return tested ? Periodicity::Periodic : Periodicity::Vacuous;
}

Int periodic_rank(const NumberField& k, const FractionalIdeal& f) {
  Int rank = dr_cardinality(k, f);
  DRMonoid m = dr_quotient(k, f);
  if (rank != Int(m.size()))
    throw InternalCheckError("periodic rank does not match the quotient size");
  return rank;
}

bool cyclotomic_frobenius_check(long m, const Int& p, int trials,
                                unsigned long seed) {
  if (!is_prime(p)) throw MathInputError("Frobenius check needs a prime");
  if (gcd(p, Int(m)) != 1)
    throw MathInputError("no Frobenius lift at a prime dividing the level");
  CyclotomicRing R(m);
  auto ok = [&](const CyclotomicRing::Elem& x) {
    return R.divisible(R.sub(R.sigma(p, x), R.pow(x, p)), p);
  };
  for (std::size_t i = 0; i < R.degree(); ++i) {
    CyclotomicRing::Elem e = R.zero();
    e[i] = 1;
    if (!ok(e)) return false;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int t = 0; t < trials; ++t) {
    CyclotomicRing::Elem e = R.zero();
    for (std::size_t i = 0; i < R.degree(); ++i) e[i] = Rat(coef(rng));
    if (!ok(e)) return false;
  }
  return true;
}

}  // namespace bcw
