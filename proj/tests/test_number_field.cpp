#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcw/numfield.hpp"

using namespace bcw;

namespace {

NumberField field(const char* s) { return NumberField::make(parse_poly(s)); }

FieldElement el(const NumberField& k, long a, long b) {
  FieldElement x = k.zero();
  x.coords[0] = a;
  if (k.degree() > 1) x.coords[1] = b;
  return x;
}

FieldElement random_element(const NumberField& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-9, 9);
  FieldElement x = k.zero();
  for (auto& c : x.coords) c = coef(rng);
  return x;
}

}  // namespace

TEST_CASE("gaussian field: discriminant, signature, torsion") {
  NumberField k = field("x^2+1");
  CHECK(k.degree() == 2);
  CHECK(k.discriminant() == -4);
  CHECK(k.r1() == 0);
  CHECK(k.r2() == 1);
  CHECK(k.units().torsion_order == 4);
  // the torsion generator i squares to -1
  FieldElement t = k.units().torsion_generator;
  CHECK(k.mul(t, t) == k.from_rational(Rat(-1)));
  CHECK(k.units().fundamental_units.empty());
}

TEST_CASE("reducible polynomial is rejected") {
  CHECK_THROWS_AS(field("x^2-x"), MathInputError);
  CHECK_THROWS_AS(field("x^2-4"), MathInputError);
  CHECK_THROWS_AS(field("x^3-1"), MathInputError);
}

TEST_CASE("real quadratic field of 3: signature and fundamental unit") {
  NumberField k = field("x^2-3");
  CHECK(k.r1() == 2);
  CHECK(k.r2() == 0);
  REQUIRE(k.units().fundamental_units.size() == 1);
  FieldElement e = k.units().fundamental_units[0];
  // 2 + sqrt(3), coordinates in the basis {1, sqrt(3)}
  CHECK(e == el(k, 2, 1));
  CHECK(k.norm(e) == 1);
}

TEST_CASE("pell minimality of the fundamental unit, brute force") {
  // integer Pell oracle for D = 2, 3, 7 (D = 2, 3 mod 4: basis {1, sqrt(D)})
  for (long D : {2L, 3L, 7L}) {
    IntPolynomial g = IntPolynomial::x_power(2) -
                      IntPolynomial::constant(Int(D));
    NumberField k = NumberField::make(g);
    REQUIRE(k.units().fundamental_units.size() == 1);
    FieldElement e = k.units().fundamental_units[0];
    Rat nrm = k.norm(e);
    CHECK((nrm == 1 || nrm == -1));
    // minimal y >= 1 with D*y^2 +- 1 a perfect square
    Int ymin = 0;
    for (Int y = 1;; ++y) {
      Int a = D * y * y;
      bool hit = false;
      for (Int delta : {Int(1), Int(-1)}) {
        Int c = a + delta;
        if (c >= 0) {
          Int r = isqrt(c);
          if (r * r == c) hit = true;
        }
      }
      if (hit) {
        ymin = y;
        break;
      }
    }
    CHECK(e.coords[1].get_num() == ymin);
    CHECK(e.coords[1].get_den() == 1);
  }
}

TEST_CASE("half-integer basis and golden-ratio unit for D = 5") {
  NumberField k = field("x^2-5");
  // integral basis {1, (1 + sqrt(5)) / 2}
  CHECK(k.basis_matrix()[1] == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  CHECK(k.discriminant() == 5);
  REQUIRE(k.units().fundamental_units.size() == 1);
  FieldElement e = k.units().fundamental_units[0];
  CHECK(e == el(k, 0, 1));  // the golden ratio itself
  CHECK(k.norm(e) == -1);
}

TEST_CASE("norm and trace of the multiplication map") {
  NumberField gauss = field("x^2+1");
  auto [n1, t1] = norm_trace(gauss, el(gauss, 2, 1));  // 2 + i
  CHECK(n1 == 5);
  CHECK(t1 == 4);

  auto [n2, t2] = norm_trace(gauss, gauss.one());
  CHECK(n2 == 1);
  CHECK(t2 == 2);

  NumberField root2 = field("x^2-2");
  auto [n3, t3] = norm_trace(root2, el(root2, 1, 1));  // 1 + sqrt(2)
  CHECK(n3 == -1);
  CHECK(t3 == 2);
}

TEST_CASE("total positivity via exact real signs") {
  NumberField root2 = field("x^2-2");
  CHECK(root2.is_totally_positive(el(root2, 2, 1)));   // 2 + sqrt(2)
  CHECK(!root2.is_totally_positive(el(root2, 1, 1)));  // 1 - sqrt(2) < 0
  CHECK_THROWS_AS(root2.is_totally_positive(root2.zero()), MathInputError);

  NumberField gauss = field("x^2+1");
  CHECK(gauss.is_totally_positive(el(gauss, 0, 1)));  // vacuous: r1 = 0
  CHECK(gauss.is_totally_positive(el(gauss, -3, 5)));

  NumberField rationals = field("x");
  CHECK(rationals.is_totally_positive(rationals.from_rational(Rat(7))));
  CHECK(!rationals.is_totally_positive(rationals.from_rational(Rat(-7))));
}

TEST_CASE("norm is multiplicative on random pairs") {
  std::mt19937_64 rng(20260824);
  for (const char* s : {"x", "x^2+1", "x^2-2", "x^2-5", "x^2+5"}) {
    NumberField k = field(s);
    for (int trial = 0; trial < 200; ++trial) {
      FieldElement x = random_element(k, rng);
      FieldElement y = random_element(k, rng);
      CHECK(k.norm(k.mul(x, y)) == k.norm(x) * k.norm(y));
    }
  }
}

TEST_CASE("squares are totally positive in fields with a real place") {
  std::mt19937_64 rng(7);
  for (const char* s : {"x", "x^2-2", "x^2-3", "x^2-5"}) {
    NumberField k = field(s);
    for (int trial = 0; trial < 100; ++trial) {
      FieldElement x = random_element(k, rng);
      if (x.is_zero()) continue;
      CHECK(k.is_totally_positive(k.mul(x, x)));
    }
  }
}

TEST_CASE("inverse and power round trips") {
  std::mt19937_64 rng(99);
  for (const char* s : {"x^2+1", "x^2-2", "x^2+5"}) {
    NumberField k = field(s);
    for (int trial = 0; trial < 50; ++trial) {
      FieldElement x = random_element(k, rng);
      if (x.is_zero()) continue;
      CHECK(k.mul(x, k.inverse(x)) == k.one());
      CHECK(k.pow(x, Int(3)) == k.mul(x, k.mul(x, x)));
      CHECK(k.mul(k.pow(x, Int(-2)), k.pow(x, Int(2))) == k.one());
    }
  }
}

TEST_CASE("power basis round trip") {
  std::mt19937_64 rng(5);
  NumberField k = field("x^2-5");
  for (int trial = 0; trial < 50; ++trial) {
    FieldElement x = random_element(k, rng);
    CHECK(k.from_power_basis(k.to_power_basis(x)) == x);
  }
}
