#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcw/witt.hpp"

using namespace bcw;

namespace {

WittVector make_witt(const CyclotomicRing& R, const TruncationSet& S,
                     const std::vector<long>& coords) {
  WittVector x{S, {}};
  std::size_t i = 0;
  for (long n : S.elements()) x.x[n] = R.from_rational(Rat(coords[i++]));
  return x;
}

WittVector random_witt(const CyclotomicRing& R, const TruncationSet& S,
                       std::mt19937_64& rng, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<long> c;
  for (std::size_t i = 0; i < S.elements().size(); ++i) c.push_back(d(rng));
  return make_witt(R, S, c);
}

GhostVector constant_ghost(const CyclotomicRing& R, const TruncationSet& S,
                           long c) {
  GhostVector g{S, {}};
  for (long n : S.elements()) g.w[n] = R.from_rational(Rat(c));
  return g;
}

WittVector restrict_to(const WittVector& x, const TruncationSet& S) {
  WittVector r{S, {}};
  for (long n : S.elements()) r.x[n] = x.x.at(n);
  return r;
}

long ghost_entry_num(const CyclotomicRing& R, const GhostVector& g, long n) {
  REQUIRE(R.degree() == 1);
  return static_cast<long>(g.w.at(n)[0].get_num().get_si());
}

}  // namespace

TEST_CASE("cyclotomic ring structure at several levels") {
  CyclotomicRing q(1);
  CHECK(q.degree() == 1);
  CHECK(q.mul(q.from_rational(Rat(2, 3)), q.from_rational(Rat(6)))[0] ==
        Rat(4));

  CyclotomicRing g4(4);  // zeta^2 = -1
  REQUIRE(g4.degree() == 2);
  auto z = g4.root_power(1);
  CHECK(g4.mul(z, z) == g4.from_rational(Rat(-1)));
  CHECK(g4.root_power(2) == g4.from_rational(Rat(-1)));
  CHECK(g4.root_power(3) == g4.neg(z));

  CyclotomicRing g6(6);  // zeta^2 = zeta - 1
  auto z6 = g6.root_power(1);
  CHECK(g6.mul(z6, z6) == g6.sub(z6, g6.one()));
  CHECK(g6.pow(z6, Int(6)) == g6.one());
  CHECK(g6.pow(z6, Int(3)) == g6.from_rational(Rat(-1)));
}

TEST_CASE("Frobenius lifts are commuting ring endomorphisms") {
  CyclotomicRing R(5);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int t = 0; t < 25; ++t) {
    CyclotomicRing::Elem a = R.zero(), b = R.zero();
    for (std::size_t i = 0; i < R.degree(); ++i) {
      a[i] = Rat(d(rng));
      b[i] = Rat(d(rng));
    }
    CHECK(R.sigma(Int(2), R.mul(a, b)) ==
          R.mul(R.sigma(Int(2), a), R.sigma(Int(2), b)));
    CHECK(R.sigma(Int(2), R.add(a, b)) ==
          R.add(R.sigma(Int(2), a), R.sigma(Int(2), b)));
    CHECK(R.sigma(Int(2), R.sigma(Int(3), a)) ==
          R.sigma(Int(3), R.sigma(Int(2), a)));
  }
  CHECK_THROWS_AS(R.sigma(Int(5), R.one()), MathInputError);
}

TEST_CASE("truncation sets enforce divisor closure") {
  TruncationSet s = TruncationSet::divisors(24);
  CHECK(s.elements() == std::vector<long>{1, 2, 3, 4, 6, 8, 12, 24});
  CHECK(s.contains(6));
  CHECK(!s.contains(5));
  CHECK(s.max() == 24);
  CHECK_THROWS_AS(TruncationSet({1, 4}), MathInputError);
  CHECK_THROWS_AS(TruncationSet({2, 4}), MathInputError);
  CHECK_THROWS_AS(TruncationSet({0, 1}), MathInputError);
  CHECK(TruncationSet({2, 1}).elements() == std::vector<long>{1, 2});
}

TEST_CASE("ghost map basics and the exact inverse") {
  CyclotomicRing R(1);
  TruncationSet s4 = TruncationSet::divisors(4);
  WittVector t2 = teichmuller(R, R.from_rational(Rat(2)), s4);
  GhostVector g = ghost(R, t2);
  CHECK(ghost_entry_num(R, g, 1) == 2);
  CHECK(ghost_entry_num(R, g, 2) == 4);
  CHECK(ghost_entry_num(R, g, 4) == 16);

  // solve 2 = 4 + 2*x_2
  TruncationSet s2 = TruncationSet::divisors(2);
  GhostVector w22 = constant_ghost(R, s2, 2);
  WittVector u = unghost(R, w22);
  CHECK(u.x.at(1)[0] == Rat(2));
  CHECK(u.x.at(2)[0] == Rat(-1));

  TruncationSet s24 = TruncationSet::divisors(24);
  std::mt19937_64 rng(20260824);
  for (int t = 0; t < 100; ++t) {
    WittVector x = random_witt(R, s24, rng);
    CHECK(unghost(R, ghost(R, x)) == x);
  }

  GhostVector bad = constant_ghost(R, s2, 1);
  bad.w[2] = R.from_rational(Rat(2));  // x_2 = 1/2
  CHECK_THROWS_AS(unghost_integral(R, bad), MathInputError);
}

TEST_CASE("ghost transports the ring operations componentwise") {
  CyclotomicRing R(1);
  TruncationSet s = TruncationSet::divisors(24);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    WittVector x = random_witt(R, s, rng);
    WittVector y = random_witt(R, s, rng);
    GhostVector gs = ghost(R, witt_add(R, x, y));
    GhostVector gp = ghost(R, witt_mul(R, x, y));
    GhostVector gx = ghost(R, x), gy = ghost(R, y);
    for (long n : s.elements()) {
      CHECK(gs.w.at(n) == R.add(gx.w.at(n), gy.w.at(n)));
      CHECK(gp.w.at(n) == R.mul(gx.w.at(n), gy.w.at(n)));
    }
    // unit laws
    WittVector zero = make_witt(R, s, std::vector<long>(s.elements().size()));
    WittVector one = teichmuller(R, R.one(), s);
    CHECK(witt_add(R, x, zero) == x);
    CHECK(witt_mul(R, x, one) == x);
    CHECK(witt_add(R, x, witt_neg(R, x)) == zero);
  }
}

TEST_CASE("addition of Teichmueller units matches the worked example") {
  CyclotomicRing R(1);
  TruncationSet s2 = TruncationSet::divisors(2);
  WittVector one = teichmuller(R, R.one(), s2);
  WittVector sum = witt_add(R, one, one);
  CHECK(sum.x.at(1)[0] == Rat(2));
  CHECK(sum.x.at(2)[0] == Rat(-1));

  WittVector p = witt_mul(R, teichmuller(R, R.from_rational(Rat(2)), s2),
                          teichmuller(R, R.from_rational(Rat(3)), s2));
  GhostVector gp = ghost(R, p);
  CHECK(ghost_entry_num(R, gp, 1) == 6);
  CHECK(ghost_entry_num(R, gp, 2) == 36);

  CHECK_THROWS_AS(
      witt_add(R, one, teichmuller(R, R.one(), TruncationSet::divisors(4))),
      MathInputError);
}

TEST_CASE("Dwork membership criterion") {
  CyclotomicRing R(1);
  TruncationSet s8 = TruncationSet::divisors(8);
  CHECK(dwork_member(R, constant_ghost(R, s8, 1)));

  GhostVector w01{TruncationSet::divisors(2), {}};
  w01.w[1] = R.zero();
  w01.w[2] = R.one();
  CHECK(!dwork_member(R, w01));

  TruncationSet s4 = TruncationSet::divisors(4);
  GhostVector g137 = ghost(R, make_witt(R, s4, {1, 1, 1}));
  CHECK(ghost_entry_num(R, g137, 2) == 3);
  CHECK(ghost_entry_num(R, g137, 4) == 7);
  CHECK(dwork_member(R, g137));

  std::mt19937_64 rng(3);
  TruncationSet s72 = TruncationSet::divisors(72);
  for (int t = 0; t < 10; ++t) {
    GhostVector g = ghost(R, random_witt(R, s72, rng));
    CHECK(dwork_member(R, g));
    for (long n : {2L, 4L, 3L, 9L})
      for (long eps : {1L, -1L}) {
        GhostVector bad = g;
        bad.w[n] = R.add(bad.w[n], R.from_rational(Rat(eps)));
        CHECK(!dwork_member(R, bad));
      }
  }
}

TEST_CASE("Dwork membership coincides with integrality of the inverse") {
  CyclotomicRing R(1);
  TruncationSet s = TruncationSet::divisors(24);
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> d(-6, 6);
  int members = 0;
  for (int t = 0; t < 200; ++t) {
    GhostVector g{s, {}};
    for (long n : s.elements()) g.w[n] = R.from_rational(Rat(d(rng)));
    WittVector x = unghost(R, g);
    bool integral = true;
    for (auto& [n, c] : x.x) integral = integral && R.is_integral(c);
    CHECK(dwork_member(R, g) == integral);
    if (integral) ++members;
  }
  // make sure both outcomes occurred
  GhostVector g1 = ghost(R, random_witt(R, s, rng));
  CHECK(dwork_member(R, g1));
  CHECK(members < 200);
}

TEST_CASE("Frobenius, Verschiebung, Teichmueller ghost laws") {
  CyclotomicRing R(1);
  TruncationSet s8 = TruncationSet::divisors(8);
  std::mt19937_64 rng(21);

  WittVector x = random_witt(R, s8, rng);
  GhostVector gx = ghost(R, x);
  WittVector f2 = frobenius(R, 2, x);
  GhostVector gf = ghost(R, f2);
  CHECK(f2.S.elements() == std::vector<long>{1, 2, 4});
  for (long n : f2.S.elements()) CHECK(gf.w.at(n) == gx.w.at(2 * n));

  // F_a F_b = F_ab, V_a V_b = V_ab
  TruncationSet s24 = TruncationSet::divisors(24);
  WittVector y = random_witt(R, s24, rng);
  CHECK(frobenius(R, 2, frobenius(R, 3, y)) == frobenius(R, 6, y));
  CHECK(verschiebung(R, 2, verschiebung(R, 3, y)) == verschiebung(R, 6, y));

  // F_m V_m = multiplication by m
  TruncationSet s12 = TruncationSet::divisors(12);
  for (long m : {2L, 3L}) {
    WittVector z = random_witt(R, s12, rng);
    WittVector fv = frobenius(R, m, verschiebung(R, m, z));
    GhostVector gz = ghost(R, z), gfv = ghost(R, fv);
    REQUIRE(fv.S == s12);
    for (long n : s12.elements())
      CHECK(gfv.w.at(n) == R.scale(Rat(m), gz.w.at(n)));
  }

  // [r][s] = [rs]
  for (int t = 0; t < 10; ++t) {
    std::uniform_int_distribution<long> d(-9, 9);
    auto r = R.from_rational(Rat(d(rng))), sE = R.from_rational(Rat(d(rng)));
    CHECK(witt_mul(R, teichmuller(R, r, s12), teichmuller(R, sE, s12)) ==
          teichmuller(R, R.mul(r, sE), s12));
  }

  CHECK_THROWS_AS(frobenius(R, 5, x), MathInputError);
}

TEST_CASE("F_2 is a Frobenius lift modulo 2") {
  // F_2(x) - x^2 lies in 2*W: its ghost is divisible by 2 and the quotient
  // unghosts to integer coordinates
  CyclotomicRing R(1);
  TruncationSet s24 = TruncationSet::divisors(24);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    WittVector x = random_witt(R, s24, rng);
    WittVector f = frobenius(R, 2, x);
    WittVector sq = restrict_to(witt_mul(R, x, x), f.S);
    GhostVector g = ghost(R, witt_add(R, f, witt_neg(R, sq)));
    for (auto& [n, c] : g.w) {
      CHECK(R.divisible(c, Int(2)));
      c = R.scale(Rat(1, 2), c);
    }
    WittVector half = unghost(R, g);
    for (auto& [n, c] : half.x) CHECK(R.is_integral(c));
  }

  // worked two-coordinate case: the only coordinate of F_2(x) - x^2 is 2*x_2
  TruncationSet s2 = TruncationSet::divisors(2);
  for (int t = 0; t < 20; ++t) {
    WittVector x = random_witt(R, s2, rng);
    WittVector f = frobenius(R, 2, x);
    WittVector sq = restrict_to(witt_mul(R, x, x), f.S);
    WittVector diff = witt_add(R, f, witt_neg(R, sq));
    CHECK(diff.x.at(1) == R.scale(Rat(2), x.x.at(2)));
  }
}

TEST_CASE("periodicity of ghost-constant and Teichmueller vectors") {
  CyclotomicRing R(1);
  TruncationSet s12 = TruncationSet::divisors(12);
  for (long N : {2L, 3L, 4L, 6L}) {
    WittVector c = unghost(R, constant_ghost(R, s12, 5));
    CHECK(is_periodic(R, c, N) == Periodicity::Periodic);
  }

  CyclotomicRing R2(2);
  TruncationSet s8 = TruncationSet::divisors(8);
  WittVector tz = teichmuller(R2, R2.root_power(1), s8);
  CHECK(is_periodic(R2, tz, 2) == Periodicity::Periodic);

  WittVector t2 = teichmuller(R, R.from_rational(Rat(2)), s12);
  CHECK(is_periodic(R, t2, 2) == Periodicity::NotPeriodic);

  WittVector tiny = teichmuller(R, R.from_rational(Rat(2)), TruncationSet());
  CHECK(is_periodic(R, tiny, 2) == Periodicity::Vacuous);
}

TEST_CASE("periodic vectors are closed under the ring operations") {
  TruncationSet s = TruncationSet::divisors(24);
  std::mt19937_64 rng(20260824);
  std::uniform_int_distribution<long> cdist(-4, 4);
  for (long N : {2L, 3L, 4L, 6L}) {
    CyclotomicRing R(N);
    std::uniform_int_distribution<long> jdist(0, N - 1);
    auto random_periodic = [&]() {
      WittVector t = teichmuller(R, R.root_power(jdist(rng)), s);
      WittVector c = unghost(R, constant_ghost(R, s, cdist(rng)));
      WittVector u = teichmuller(R, R.root_power(jdist(rng)), s);
      return witt_add(R, witt_mul(R, t, c), u);
    };
    for (int t = 0; t < 12; ++t) {
      WittVector x = random_periodic();
      WittVector y = random_periodic();
      CHECK(is_periodic(R, x, N) == Periodicity::Periodic);
      CHECK(is_periodic(R, witt_add(R, x, y), N) == Periodicity::Periodic);
      CHECK(is_periodic(R, witt_mul(R, x, y), N) == Periodicity::Periodic);
    }
  }
}

TEST_CASE("rank identity across fields") {
  NumberField q = NumberField::make(parse_poly("x"));
  CHECK(periodic_rank(q, principal_ideal(q, q.from_rational(Rat(6)))) == 6);

  NumberField gauss = NumberField::make(parse_poly("x^2+1"));
  CHECK(periodic_rank(gauss,
                      principal_ideal(gauss, gauss.from_rational(Rat(2)))) ==
        3);
  CHECK(periodic_rank(gauss, FractionalIdeal::unit(gauss)) == 1);

  NumberField r5 = NumberField::make(parse_poly("x^2+5"));
  CHECK(periodic_rank(r5, FractionalIdeal::unit(r5)) == 2);
}

TEST_CASE("Frobenius lift congruence on cyclotomic integers") {
  CHECK(cyclotomic_frobenius_check(5, Int(2), 20));
  CHECK(cyclotomic_frobenius_check(1, Int(7), 20));
  CHECK(cyclotomic_frobenius_check(4, Int(3), 20));
  CHECK(cyclotomic_frobenius_check(12, Int(5), 20));
  CHECK_THROWS_AS(cyclotomic_frobenius_check(4, Int(2), 5), MathInputError);
  CHECK_THROWS_AS(cyclotomic_frobenius_check(5, Int(4), 5), MathInputError);
}
