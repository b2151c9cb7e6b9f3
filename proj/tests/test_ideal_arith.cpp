#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "bcw/ideal.hpp"

using namespace bcw;

namespace {

NumberField field(const char* s) { return NumberField::make(parse_poly(s)); }

FieldElement el(const NumberField& k, long a, long b) {
  FieldElement x = k.zero();
  x.coords[0] = a;
  if (k.degree() > 1) x.coords[1] = b;
  return x;
}

FractionalIdeal random_integral_ideal(const NumberField& k,
                                      std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-9, 9);
  for (;;) {
    std::vector<FieldElement> gens;
    for (int i = 0; i < 2; ++i) {
      FieldElement x = k.zero();
      for (auto& c : x.coords) c = coef(rng);
      gens.push_back(x);
    }
    bool ok = false;
    for (const auto& g : gens)
      if (!g.is_zero()) ok = true;
    if (ok) return ideal_from_generators(k, gens);
  }
}

}  // namespace

TEST_CASE("unit ideal has identity HNF") {
  for (const char* s : {"x", "x^2+1", "x^2+5"}) {
    NumberField k = field(s);
    FractionalIdeal one = principal_ideal(k, k.one());
    CHECK(one == FractionalIdeal::unit(k));
    CHECK(one.numerator() == IntMatrix::identity(k.degree()));
    CHECK(one.denominator() == 1);
  }
}

TEST_CASE("the norm-2 prime above 2 in the field of root -5") {
  NumberField k = field("x^2+5");
  FractionalIdeal p2 = ideal_from_generators(k, {el(k, 2, 0), el(k, 1, 1)});
  CHECK(ideal_norm(k, p2) == 2);
  FractionalIdeal sq = ideal_product(k, p2, p2);
  CHECK(ideal_norm(k, sq) == 4);
  CHECK(sq == principal_ideal(k, el(k, 2, 0)));
}

TEST_CASE("gaussian principal ideals") {
  NumberField k = field("x^2+1");
  FractionalIdeal a = principal_ideal(k, el(k, 2, 1));
  CHECK(a.numerator().det() == 5);
  CHECK(ideal_norm(k, a) == 5);
  // (1+i)(1-i) = (2)
  FractionalIdeal p = principal_ideal(k, el(k, 1, 1));
  FractionalIdeal q = principal_ideal(k, el(k, 1, -1));
  CHECK(ideal_product(k, p, q) == principal_ideal(k, el(k, 2, 0)));
}

TEST_CASE("ideal inverse: a times a inverse is the unit ideal") {
  std::mt19937_64 rng(20260824);
  for (const char* s : {"x", "x^2+1", "x^2+5", "x^2-3"}) {
    NumberField k = field(s);
    for (int trial = 0; trial < 50; ++trial) {
      FractionalIdeal a = random_integral_ideal(k, rng);
      FractionalIdeal inv = ideal_inverse(k, a);
      CHECK(ideal_product(k, a, inv) == FractionalIdeal::unit(k));
      // fractional input as well
      FractionalIdeal b = ideal_product(k, inv, inv);
      CHECK(ideal_product(k, b, ideal_inverse(k, b)) ==
            FractionalIdeal::unit(k));
    }
  }
}

TEST_CASE("norm is multiplicative on random ideal pairs") {
  std::mt19937_64 rng(31337);
  for (const char* s : {"x^2+1", "x^2+5", "x^2-2"}) {
    NumberField k = field(s);
    for (int trial = 0; trial < 200; ++trial) {
      FractionalIdeal a = random_integral_ideal(k, rng);
      FractionalIdeal b = random_integral_ideal(k, rng);
      CHECK(ideal_norm(k, ideal_product(k, a, b)) ==
            ideal_norm(k, a) * ideal_norm(k, b));
    }
  }
}

TEST_CASE("prime factorization in the gaussian integers") {
  NumberField k = field("x^2+1");

  auto f5 = factor_ideal(k, principal_ideal(k, el(k, 5, 0)));
  REQUIRE(f5.size() == 2);
  for (auto& [P, e] : f5) {
    CHECK(P.p == 5);
    CHECK(P.deg == 1);
    CHECK(P.e == 1);
    CHECK(e == 1);
  }
  CHECK(!(f5[0].first.ideal == f5[1].first.ideal));

  auto f2 = factor_ideal(k, principal_ideal(k, el(k, 2, 0)));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].first.e == 2);
  CHECK(f2[0].second == 2);
  CHECK(f2[0].first.ideal == principal_ideal(k, el(k, 1, 1)));

  auto f3 = factor_ideal(k, principal_ideal(k, el(k, 3, 0)));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].first.deg == 2);

  CHECK(factor_ideal(k, FractionalIdeal::unit(k)).empty());
}

TEST_CASE("factor then multiply returns the input, norms to 200") {
  for (const char* s : {"x^2+1", "x^2+5"}) {
    NumberField k = field(s);
    for (const FractionalIdeal& a : enumerate_ideals(k, Int(200))) {
      auto factors = factor_ideal(k, a);
      FractionalIdeal prod = FractionalIdeal::unit(k);
      Rat nrm(1);
      for (auto& [P, e] : factors) {
        prod = ideal_product(k, prod, ideal_pow(k, P.ideal, Int(e)));
        for (int i = 0; i < e; ++i) nrm *= Rat(P.norm());
      }
      CHECK(prod == a);
      CHECK(nrm == ideal_norm(k, a));
    }
  }
}

TEST_CASE("ideal enumeration: rational and gaussian base cases") {
  NumberField q = field("x");
  auto rational = enumerate_ideals(q, Int(10));
  REQUIRE(rational.size() == 10);
  for (int n = 1; n <= 10; ++n)
    CHECK(ideal_norm(q, rational[n - 1]) == n);

  NumberField k = field("x^2+1");
  auto gauss = enumerate_ideals(k, Int(5));
  REQUIRE(gauss.size() == 5);
  CHECK(gauss[0] == FractionalIdeal::unit(k));
  CHECK(gauss[1] == principal_ideal(k, el(k, 1, 1)));
  CHECK(gauss[2] == principal_ideal(k, el(k, 2, 0)));
  CHECK(ideal_norm(k, gauss[3]) == 5);
  CHECK(ideal_norm(k, gauss[4]) == 5);
  CHECK(!(gauss[3] == gauss[4]));

  CHECK(enumerate_ideals(k, Int(1)) ==
        std::vector<FractionalIdeal>{FractionalIdeal::unit(k)});
}

TEST_CASE("enumeration is strictly sorted and duplicate-free") {
  for (const char* s : {"x", "x^2+1", "x^2+5", "x^2-3"}) {
    NumberField k = field(s);
    auto ideals = enumerate_ideals(k, Int(60));
    for (std::size_t i = 0; i + 1 < ideals.size(); ++i)
      CHECK(ideals[i].compare(k, ideals[i + 1]) < 0);
  }
}

TEST_CASE("gaussian norm counts match the divisor-sum character formula") {
  NumberField k = field("x^2+1");
  const int bound = 500;
  std::map<long, long> counts;
  for (const FractionalIdeal& a : enumerate_ideals(k, Int(bound)))
    counts[ideal_norm(k, a).get_num().get_si()]++;

  // independent oracle: lattice points a^2 + b^2 = n, modulo the four units
  for (long n = 1; n <= bound; ++n) {
    long lattice = 0;
    long r = isqrt(Int(n)).get_si();
    for (long a = -r; a <= r; ++a)
      for (long b = 0; b <= r; ++b)
        if (a * a + b * b == n && !(a == 0 && b == 0)) lattice += (b ? 2 : 1);
    CHECK(counts[n] == lattice / 4);

    long chi_sum = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      if (d % 4 == 1) chi_sum += 1;
      if (d % 4 == 3) chi_sum -= 1;
    }
    CHECK(counts[n] == chi_sum);
  }
}

TEST_CASE("divisor lists") {
  NumberField q = field("x");
  auto d6 = divisors_of(q, principal_ideal(q, q.from_rational(Rat(6))));
  REQUIRE(d6.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(ideal_norm(q, d6[i]) == std::vector<int>{1, 2, 3, 6}[i]);

  NumberField k = field("x^2+1");
  auto d2 = divisors_of(k, principal_ideal(k, el(k, 2, 0)));
  REQUIRE(d2.size() == 3);
  CHECK(d2[0] == FractionalIdeal::unit(k));
  CHECK(d2[1] == principal_ideal(k, el(k, 1, 1)));
  CHECK(d2[2] == principal_ideal(k, el(k, 2, 0)));

  CHECK(divisors_of(k, FractionalIdeal::unit(k)).size() == 1);

  // count = product of (e_i + 1)
  NumberField r = field("x^2+5");
  FractionalIdeal f = principal_ideal(r, el(r, 12, 0));  // (12) = p2^4 (3)...
  auto factors = factor_ideal(r, f);
  std::size_t expected = 1;
  for (auto& [P, e] : factors) expected *= e + 1;
  CHECK(divisors_of(r, f).size() == expected);
}

TEST_CASE("containment, sum, and coprimality") {
  NumberField k = field("x^2+1");
  FractionalIdeal two = principal_ideal(k, el(k, 2, 0));
  FractionalIdeal onepi = principal_ideal(k, el(k, 1, 1));
  CHECK(ideal_contains_ideal(k, onepi, two));
  CHECK(!ideal_contains_ideal(k, two, onepi));
  CHECK(ideal_contains(k, onepi, el(k, 1, 1)));
  CHECK(!ideal_contains(k, onepi, k.one()));
  CHECK(ideal_sum(k, two, onepi) == onepi);

  FractionalIdeal three = principal_ideal(k, el(k, 3, 0));
  CHECK(ideals_coprime(k, two, three));
  CHECK(!ideals_coprime(k, two, onepi));
}

TEST_CASE("rejects degenerate inputs") {
  NumberField k = field("x^2+1");
  CHECK_THROWS_AS(ideal_from_generators(k, {k.zero()}), MathInputError);
  CHECK_THROWS_AS(factor_ideal(k, ideal_inverse(k, principal_ideal(
                                      k, el(k, 1, 1)))),
                  MathInputError);
  CHECK_THROWS_AS(primes_above(k, Int(6)), MathInputError);
}
