#include "bcw/verify.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "bcw/endomotive.hpp"

namespace bcw {

namespace {

struct MatrixCase {
  const char* g;
  long a, b;
};

const MatrixCase kMatrix[] = {
    {"x", 4, 0},     {"x", 6, 0},     {"x", 12, 0},
    {"x^2+1", 2, 0}, {"x^2+1", 2, 1}, {"x^2+1", 3, 0},
    {"x^2+5", 2, 0}, {"x^2+5", 3, 0}, {"x^2-3", 2, 0},
};

NumberField field(const char* s) { return NumberField::make(parse_poly(s)); }

FieldElement el(const NumberField& k, long a, long b) {
  FieldElement x = k.zero();
  x.coords[0] = a;
  if (k.degree() > 1) x.coords[1] = b;
  return x;
}

FractionalIdeal rat_ideal(const NumberField& k, long n) {
  return principal_ideal(k, k.from_rational(Rat(n)));
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::runtime_error(msg);
}

WittVector random_witt(const CyclotomicRing& R, const TruncationSet& S,
                       std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  WittVector x{S, {}};
  for (long n : S.elements()) x.x[n] = R.from_rational(Rat(d(rng)));
  return x;
}

std::string residue_iso(unsigned long) {
  NumberField q = field("x");
  for (long n = 1; n <= 24; ++n) {
    DRMonoid m = dr_quotient(q, rat_ideal(q, n));
    require(m.size() == static_cast<std::size_t>(n), "quotient size");
    std::vector<std::size_t> cls(static_cast<std::size_t>(n));
    std::set<std::size_t> seen;
    for (long r = 0; r < n; ++r) {
      cls[static_cast<std::size_t>(r)] =
          m.class_of(rat_ideal(q, r == 0 ? n : r));
      seen.insert(cls[static_cast<std::size_t>(r)]);
    }
    require(seen.size() == static_cast<std::size_t>(n), "map not bijective");
    for (long r1 = 0; r1 < n; ++r1)
      for (long r2 = 0; r2 < n; ++r2)
        require(m.mul(cls[static_cast<std::size_t>(r1)],
                      cls[static_cast<std::size_t>(r2)]) ==
                    cls[static_cast<std::size_t>((r1 * r2) % n)],
                "map not multiplicative");
    require(m.identity_index() == cls[static_cast<std::size_t>(1 % n)],
            "identity mismatch");
  }
  return "levels (1)..(24) over the rationals isomorphic to (Z/n, *)";
}

std::string triple_agreement(unsigned long) {
  for (const MatrixCase& c : kMatrix) {
    NumberField k = field(c.g);
    FractionalIdeal f = principal_ideal(k, el(k, c.a, c.b));
    DRMonoid a = dr_quotient(k, f);
    DRMonoid b = dr_structural(k, f);
    DRMonoid cc = dr_fiber_product(k, f);
    auto ab = monoid_isomorphism(a, b);
    auto ac = monoid_isomorphism(a, cc);
    require(ab.has_value() && ac.has_value(), "no isomorphism found");
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        require((*ab)[a.mul(i, j)] == b.mul((*ab)[i], (*ab)[j]),
                "quotient/coproduct map is not an isomorphism");
        require((*ac)[a.mul(i, j)] == cc.mul((*ac)[i], (*ac)[j]),
                "quotient/orbit map is not an isomorphism");
      }
  }
  return "9 cases, explicit isomorphisms checked on full tables";
}

std::string cardinality_law(unsigned long) {
  for (const MatrixCase& c : kMatrix) {
    NumberField k = field(c.g);
    FractionalIdeal f = principal_ideal(k, el(k, c.a, c.b));
    // each ray class order inside the sum is certified against the
    // analytic order formula during construction
    require(Int(dr_quotient(k, f).size()) == dr_cardinality(k, f),
            "quotient size differs from the divisor sum");
  }
  return "quotient sizes equal the strict ray class divisor sums, 9 cases";
}

std::string projection_coherence(unsigned long) {
  auto check_chain = [](const NumberField& k, const FractionalIdeal& ff,
                        const FractionalIdeal& fm, const FractionalIdeal& fc) {
    DRMonoid fine = dr_quotient(k, ff);
    DRMonoid mid = dr_quotient(k, fm);
    DRMonoid coarse = dr_quotient(k, fc);
    auto a = dr_project(fine, mid);
    auto b = dr_project(mid, coarse);
    auto c = dr_project(fine, coarse);
    std::set<std::size_t> ia(a.begin(), a.end()), ib(b.begin(), b.end());
    require(ia.size() == mid.size() && ib.size() == coarse.size(),
            "projection not surjective");
    for (std::size_t i = 0; i < fine.size(); ++i) {
      require(b[a[i]] == c[i], "projections do not compose");
      for (std::size_t j = 0; j < fine.size(); ++j)
        require(a[fine.mul(i, j)] == mid.mul(a[i], a[j]),
                "projection is not a monoid map");
    }
  };
  NumberField q = field("x");
  check_chain(q, rat_ideal(q, 12), rat_ideal(q, 6), rat_ideal(q, 2));
  NumberField g = field("x^2+1");
  check_chain(g, principal_ideal(g, el(g, 2, 2)), rat_ideal(g, 2),
              principal_ideal(g, el(g, 1, 1)));
  return "chains (2)|(6)|(12) and (1+i)|(2)|(2+2i): surjective, coherent";
}

std::string witt_laws(unsigned long seed) {
  CyclotomicRing R(1);
  std::mt19937_64 rng(seed);

  TruncationSet s24 = TruncationSet::divisors(24);
  for (int t = 0; t < 100; ++t) {
    WittVector x = random_witt(R, s24, rng);
    require(unghost(R, ghost(R, x)) == x, "ghost round trip failed");
  }

  TruncationSet s72 = TruncationSet::divisors(72);
  for (int t = 0; t < 100; ++t) {
    GhostVector g = ghost(R, random_witt(R, s72, rng));
    require(dwork_member(R, g), "image rejected by the congruences");
    if (t < 10)
      for (long n : {2L, 4L, 3L, 9L})
        for (long eps : {1L, -1L}) {
          GhostVector bad = g;
          bad.w[n] = R.add(bad.w[n], R.from_rational(Rat(eps)));
          require(!dwork_member(R, bad), "perturbation accepted");
        }
  }

  TruncationSet s12 = TruncationSet::divisors(12);
  for (long m : {2L, 3L})
    for (int t = 0; t < 10; ++t) {
      WittVector z = random_witt(R, s12, rng);
      WittVector fv = frobenius(R, m, verschiebung(R, m, z));
      GhostVector gz = ghost(R, z), gfv = ghost(R, fv);
      require(fv.S == s12, "truncation changed");
      for (long n : s12.elements())
        require(gfv.w.at(n) == R.scale(Rat(m), gz.w.at(n)),
                "F_m V_m is not multiplication by m");
    }

  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 20; ++t) {
    auto r = R.from_rational(Rat(d(rng))), s = R.from_rational(Rat(d(rng)));
    require(witt_mul(R, teichmuller(R, r, s12), teichmuller(R, s, s12)) ==
                teichmuller(R, R.mul(r, s), s12),
            "multiplicative lift failed");
  }

  for (long p : {2L, 3L})
    for (int t = 0; t < 25; ++t) {
      WittVector x = random_witt(R, s24, rng);
      WittVector f = frobenius(R, p, x);
      GhostVector gp = ghost(R, x);
      for (auto& [n, c] : gp.w) c = R.pow(c, Int(p));
      WittVector pw = unghost(R, gp);  // x^p
      GhostVector diff{f.S, {}};
      GhostVector gf = ghost(R, f), gq = ghost(R, pw);
      for (long n : f.S.elements()) {
        diff.w[n] = R.sub(gf.w.at(n), gq.w.at(n));
        require(R.divisible(diff.w[n], Int(p)), "ghost gap not divisible");
        diff.w[n] = R.scale(Rat(1, p), diff.w[n]);
      }
      WittVector q = unghost(R, diff);
      for (auto& [n, c] : q.x)
        require(R.is_integral(c), "F_p(x) - x^p is not p times a vector");
    }

  return "round trips, congruence membership, F/V/lift laws, F_p mod p";
}

std::string frobenius_lift_congruence(unsigned long seed) {
  int checked = 0;
  for (long m = 1; m <= 20; ++m)
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      if (m % p == 0) continue;
      require(cyclotomic_frobenius_check(m, Int(p), 20, seed + checked),
              "lift congruence failed");
      ++checked;
    }
  std::ostringstream os;
  os << checked << " (level, prime) pairs, full bases plus 20 random each";
  return os.str();
}

std::string periodicity_and_rank(unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> cdist(-4, 4);
  TruncationSet s = TruncationSet::divisors(24);
  for (long N : {2L, 3L, 4L, 6L}) {
    CyclotomicRing R(N);
    std::uniform_int_distribution<long> jdist(0, N - 1);
    auto random_periodic = [&]() {
      WittVector t = teichmuller(R, R.root_power(jdist(rng)), s);
      WittVector c = unghost(R, [&] {
        GhostVector g{s, {}};
        long v = cdist(rng);
        for (long n : s.elements()) g.w[n] = R.from_rational(Rat(v));
        return g;
      }());
      WittVector u = teichmuller(R, R.root_power(jdist(rng)), s);
      return witt_add(R, witt_mul(R, t, c), u);
    };
    for (int t = 0; t < 50; ++t) {
      WittVector x = random_periodic();
      WittVector y = random_periodic();
      require(is_periodic(R, x, N) == Periodicity::Periodic &&
                  is_periodic(R, y, N) == Periodicity::Periodic,
              "generator vector not periodic");
      require(is_periodic(R, witt_add(R, x, y), N) == Periodicity::Periodic,
              "sum of periodic vectors not periodic");
      require(is_periodic(R, witt_mul(R, x, y), N) == Periodicity::Periodic,
              "product of periodic vectors not periodic");
    }
  }
  for (const MatrixCase& c : kMatrix) {
    NumberField k = field(c.g);
    FractionalIdeal f = principal_ideal(k, el(k, c.a, c.b));
    require(periodic_rank(k, f) == Int(dr_quotient(k, f).size()),
            "rank identity failed");
  }
  return "ring closure, 50 pairs for N in {2,3,4,6}; rank identity, 9 cases";
}

std::string ggc_spot_check(unsigned long) {
  for (long n : {1L, 2L, 3L, 4L, 6L, 8L, 12L}) {
    GGCWitness w = ggc_check_Q(n);
    require(w.ok, "no equivariant bijection found");
    std::set<std::size_t> im(w.bijection.begin(), w.bijection.end());
    require(im.size() == static_cast<std::size_t>(n), "witness not bijective");
  }
  return "equivariant bijections found for n in {1,2,3,4,6,8,12}";
}

std::string endomotive_relations(unsigned long) {
  struct Case {
    const char* g;
    long a, b;
  };
  for (Case c : {Case{"x", 6, 0}, Case{"x^2+1", 2, 0}}) {
    NumberField k = field(c.g);
    CrossedOps ops = crossed_ops(k, principal_ideal(k, el(k, c.a, c.b)));
    const DRMonoid& m = ops.monoid;
    std::vector<std::size_t> classes;
    for (const FractionalIdeal& a : enumerate_ideals(k, Int(10)))
      classes.push_back(m.class_of(a));
    for (std::size_t ca : classes) {
      require(rat_mat_mul(ops.mu[ca], ops.mu_star[ca]) == ops.proj[ca],
              "mu mu* is not the range projection");
      RatMat dom = rat_mat_mul(ops.mu_star[ca], ops.mu[ca]);
      require(rat_mat_mul(dom, dom) == dom,
              "mu* mu is not a projection");
      for (std::size_t cb : classes) {
        require(rat_mat_mul(ops.sigma[ca], ops.sigma[cb]) ==
                    ops.sigma[m.mul(ca, cb)],
                "sigma is not multiplicative");
        require(rat_mat_mul(ops.mu[ca], ops.mu[cb]) == ops.mu[m.mul(ca, cb)],
                "mu is not multiplicative");
      }
    }
  }
  return "matrix identities for all generators of norm <= 10, both levels";
}

std::string zeta_counting(unsigned long) {
  NumberField gauss = field("x^2+1");
  std::vector<Int> a = zeta_coefficients(gauss, 500, true);
  for (long n = 1; n <= 500; ++n) {
    Int want = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      if (d % 4 == 1) want += 1;
      if (d % 4 == 3) want -= 1;
    }
    require(a[static_cast<std::size_t>(n - 1)] == want,
            "coefficient differs from the character sum");
  }
  NumberField r5 = field("x^2+5");
  zeta_coefficients(r5, 200, true);  // throws if the Euler product disagrees
  return "character-sum match to 500; Euler product cross-check to 200";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned long seed) {
  struct Entry {
    const char* name;
    std::function<std::string(unsigned long)> fn;
  };
  const Entry entries[] = {
      {"residue model of the rational quotient monoids", residue_iso},
      {"three constructions agree on the test matrix", triple_agreement},
      {"divisor-sum cardinality law", cardinality_law},
      {"projection coherence along divisor chains", projection_coherence},
      {"Witt ring laws and congruence membership", witt_laws},
      {"cyclotomic Frobenius lift congruence", frobenius_lift_congruence},
      {"periodic vectors form a ring; rank identity", periodicity_and_rank},
      {"homomorphism sets match the spectra", ggc_spot_check},
      {"crossed-product operator relations", endomotive_relations},
      {"ideal counting against the zeta expansion", zeta_counting},
  };
  std::vector<CriterionResult> out;
  int idx = 1;
  for (const Entry& e : entries) {
    CriterionResult r;
    r.index = idx++;
    r.name = e.name;
    try {
      r.detail = e.fn(seed);
      r.passed = true;
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = ex.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace bcw
