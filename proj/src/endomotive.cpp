#include "bcw/endomotive.hpp"

#include <algorithm>
#include <set>

namespace bcw {

RatMat rat_identity(std::size_t n) {
  RatMat m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size();
  RatMat r(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

DRSet spectrum(const NumberField& k, const FractionalIdeal& f) {
  DRSet s;
  s.monoid = dr_quotient(k, f);
  std::size_t n = s.monoid.size();
  s.action.assign(n, std::vector<std::size_t>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = 0; x < n; ++x) s.action[c][x] = s.monoid.mul(c, x);
  std::size_t id = s.monoid.identity_index();
  for (std::size_t x = 0; x < n; ++x)
    if (s.action[id][x] != x)
      throw InternalCheckError("spectrum action has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (s.action[a][s.action[b][x]] !=
            s.action[s.monoid.mul(a, b)][x])
          throw InternalCheckError("spectrum action is not compositive");
  return s;
}

std::vector<std::size_t> level_map(const DRSet& fine, const DRSet& coarse) {
  std::vector<std::size_t> pi = dr_project(fine.monoid, coarse.monoid);
  for (std::size_t c = 0; c < fine.size(); ++c)
    for (std::size_t x = 0; x < fine.size(); ++x)
      if (pi[fine.act(c, x)] != coarse.act(pi[c], pi[x]))
        throw InternalCheckError("level map is not equivariant");
  return pi;
}

GGCWitness ggc_check_Q(long n) {
  if (n < 1 || n > 30)
    throw MathInputError("homomorphism-set check supports 1 <= n <= 30");
  CyclotomicRing R(n);
  NumberField q = NumberField::make(parse_poly("x"));
  DRMonoid m = dr_quotient(q, principal_ideal(q, q.from_rational(Rat(n))));
  std::size_t N = m.size();

  // one algebra homomorphism per root of unity zeta_n^e: the component is
  // the cyclotomic field of level n/gcd(n,e), the image is the root itself
  std::vector<CyclotomicRing::Elem> val;
  GGCWitness w;
  for (long e = 0; e < n; ++e) {
    w.hom_exponents.push_back(e);
    val.push_back(R.root_power(e));
  }
  if (val.size() != N)
    throw InternalCheckError("homomorphism count does not match the monoid");

  // smallest integer representative of each monoid class
  std::vector<long> rep(N, 0);
  for (long t = n; t >= 1; --t)
    rep[m.class_of(principal_ideal(q, q.from_rational(Rat(t))))] = t;

  // powering action, computed in the cyclotomic ring and identified by value
  std::vector<std::vector<std::size_t>> act(N, std::vector<std::size_t>(N));
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t h = 0; h < N; ++h) {
      CyclotomicRing::Elem p = R.pow(val[h], Int(rep[c]));
      std::size_t target = N;
      for (std::size_t h2 = 0; h2 < N; ++h2)
        if (val[h2] == p) target = h2;
      if (target == N)
        throw InternalCheckError("powering left the homomorphism set");
      act[c][h] = target;
    }

  // spectrum((n)) is regular, so any equivariant bijection is determined by
  // the image of the identity point; candidates are pruned to full orbits
  std::size_t id = m.identity_index();
  for (std::size_t h = 0; h < N; ++h) {
    std::set<std::size_t> orbit;
    for (std::size_t c = 0; c < N; ++c) orbit.insert(act[c][h]);
    if (orbit.size() != N) continue;
    std::vector<std::size_t> phi(N);
    for (std::size_t c = 0; c < N; ++c) phi[c] = act[c][h];
    if (phi[id] != h) continue;
    bool ok = true;
    for (std::size_t c = 0; c < N && ok; ++c)
      for (std::size_t x = 0; x < N && ok; ++x)
        if (phi[m.mul(c, x)] != act[c][phi[x]]) ok = false;
    if (ok) {
      w.ok = true;
      w.bijection = phi;
      return w;
    }
  }
  return w;
}

namespace {

// backtracking search for sections s_a : a*X -> X with a*s_a(y) = y,
// s_1 = id and s_(ab) = s_b of s_a wherever defined
struct SectionSearch {
  const DRMonoid& m;
  std::size_t N;
  std::vector<std::vector<bool>> in_im;
  std::vector<std::vector<std::vector<std::size_t>>> preim;
  std::vector<std::vector<long>> sec;  // -1 unassigned; indexed [a][y]
  std::vector<std::pair<std::size_t, std::size_t>> vars;

  explicit SectionSearch(const DRMonoid& mm) : m(mm), N(mm.size()) {
    in_im.assign(N, std::vector<bool>(N, false));
    preim.assign(N, std::vector<std::vector<std::size_t>>(N));
    sec.assign(N, std::vector<long>(N, -1));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t x = 0; x < N; ++x) {
        std::size_t y = m.mul(a, x);
        in_im[a][y] = true;
        preim[a][y].push_back(x);
      }
    std::size_t id = m.identity_index();
    for (std::size_t y = 0; y < N; ++y) sec[id][y] = static_cast<long>(y);
    for (std::size_t a = 0; a < N; ++a) {
      if (a == id) continue;
      for (std::size_t y = 0; y < N; ++y)
        if (in_im[a][y]) vars.emplace_back(a, y);
    }
  }

  bool consistent() const {
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        std::size_t ab = m.mul(a, b);
        for (std::size_t y = 0; y < N; ++y) {
          if (!in_im[ab][y]) continue;
          long x1 = sec[a][y];
          if (x1 < 0) continue;
          if (!in_im[b][static_cast<std::size_t>(x1)]) return false;
          long x2 = sec[b][static_cast<std::size_t>(x1)];
          long x3 = sec[ab][y];
          if (x2 >= 0 && x3 >= 0 && x2 != x3) return false;
        }
      }
    return true;
  }

  bool solve(std::size_t i) {
    if (i == vars.size()) return true;
    auto [a, y] = vars[i];
    for (std::size_t x : preim[a][y]) {
      sec[a][y] = static_cast<long>(x);
      if (consistent() && solve(i + 1)) return true;
    }
    sec[a][y] = -1;
    return false;
  }
};

}  // namespace

CrossedOps crossed_ops(const NumberField& k, const FractionalIdeal& f) {
  CrossedOps ops;
  ops.monoid = dr_quotient(k, f);
  const DRMonoid& m = ops.monoid;
  std::size_t N = m.size();

  SectionSearch s(m);
  if (!s.solve(0))
    throw MathInputError(
        "no multiplicative family of 0/1 isometry sections at this level");

  RatMat zero(N, std::vector<Rat>(N, Rat(0)));
  for (std::size_t a = 0; a < N; ++a) {
    RatMat sig = zero, pr = zero, mu = zero;
    for (std::size_t x = 0; x < N; ++x) sig[x][m.mul(a, x)] = 1;
    for (std::size_t y = 0; y < N; ++y)
      if (s.in_im[a][y]) {
        pr[y][y] = 1;
        mu[y][static_cast<std::size_t>(s.sec[a][y])] = 1;
      }
    RatMat mus = zero;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) mus[i][j] = mu[j][i];
    ops.sigma.push_back(sig);
    ops.proj.push_back(pr);
    ops.mu.push_back(mu);
    ops.mu_star.push_back(mus);
  }

  // the semigroup relations are the contract; verify them all
  std::size_t id = m.identity_index();
  if (ops.mu[id] != rat_identity(N) || ops.sigma[id] != rat_identity(N))
    throw InternalCheckError("identity operators are not the identity");
  for (std::size_t a = 0; a < N; ++a) {
    if (rat_mat_mul(ops.proj[a], ops.proj[a]) != ops.proj[a])
      throw InternalCheckError("range projection is not idempotent");
    if (rat_mat_mul(ops.mu[a], ops.mu_star[a]) != ops.proj[a])
      throw InternalCheckError("mu mu* is not the range projection");
    RatMat dom = rat_mat_mul(ops.mu_star[a], ops.mu[a]);
    RatMat want = zero;
    for (std::size_t y = 0; y < N; ++y)
      if (s.in_im[a][y]) want[static_cast<std::size_t>(s.sec[a][y])]
                             [static_cast<std::size_t>(s.sec[a][y])] = 1;
    if (dom != want)
      throw InternalCheckError("mu* mu is not the domain projection");
    for (std::size_t b = 0; b < N; ++b) {
      std::size_t ab = m.mul(a, b);
      if (rat_mat_mul(ops.sigma[a], ops.sigma[b]) != ops.sigma[ab])
        throw InternalCheckError("sigma is not multiplicative");
      if (rat_mat_mul(ops.mu[a], ops.mu[b]) != ops.mu[ab])
        throw InternalCheckError("mu is not multiplicative");
    }
  }
  return ops;
}

std::vector<Int> zeta_coefficients(const NumberField& k, long B,
                                   bool euler_check) {
  if (B < 1) throw MathInputError("coefficient bound must be positive");
  std::vector<Int> a(static_cast<std::size_t>(B) + 1, Int(0));
  for (const FractionalIdeal& I : enumerate_ideals(k, Int(B))) {
    long n = ideal_norm(k, I).get_num().get_si();
    ++a[static_cast<std::size_t>(n)];
  }

  if (euler_check) {
    std::vector<Int> b(static_cast<std::size_t>(B) + 1, Int(0));
    b[1] = 1;
    for (long p = 2; p <= B; ++p) {
      if (!is_prime(Int(p))) continue;
      std::vector<int> fs;
      for (const PrimeIdeal& P : primes_above(k, Int(p)))
        fs.push_back(P.deg);
      // l[e] = number of ideals of norm p^e supported above p
      long emax = 0;
      for (long q = 1; q <= B / p; q *= p) ++emax;
      std::vector<Int> l(static_cast<std::size_t>(emax) + 1, Int(0));
      l[0] = 1;
      for (int fdeg : fs)
        for (long e = fdeg; e <= emax; ++e)
          l[static_cast<std::size_t>(e)] +=
              l[static_cast<std::size_t>(e - fdeg)];
      std::vector<Int> nb = b;
      for (long n = 1; n <= B; ++n) {
        if (n % p == 0 || b[static_cast<std::size_t>(n)] == 0) continue;
        long pe = 1;
        for (long e = 1; e <= emax; ++e) {
          pe *= p;
          if (n > B / pe) break;
          nb[static_cast<std::size_t>(n * pe)] =
              b[static_cast<std::size_t>(n)] * l[static_cast<std::size_t>(e)];
        }
      }
      b = std::move(nb);
    }
    for (long n = 1; n <= B; ++n)
      if (a[static_cast<std::size_t>(n)] != b[static_cast<std::size_t>(n)])
        throw InternalCheckError(
            "ideal count disagrees with the Euler product");
  }

  return std::vector<Int>(a.begin() + 1, a.end());
}

}  // namespace bcw
