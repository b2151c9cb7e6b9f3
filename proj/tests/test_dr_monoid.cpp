#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "bcw/drmonoid.hpp"

using namespace bcw;

namespace {

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

// [(m)] -> m mod n must be a monoid isomorphism onto (Z/n, *)
void check_residue_model(const NumberField& q, long n, const DRMonoid& m) {
  REQUIRE(m.size() == static_cast<std::size_t>(n));
  std::vector<std::size_t> cls(n);
  std::set<std::size_t> seen;
  for (long r = 0; r < n; ++r) {
    cls[r] = m.class_of(rat_ideal(q, r == 0 ? n : r));
    seen.insert(cls[r]);
  }
  CHECK(seen.size() == static_cast<std::size_t>(n));
  for (long r1 = 0; r1 < n; ++r1)
    for (long r2 = 0; r2 < n; ++r2)
      CHECK(m.mul(cls[r1], cls[r2]) == cls[(r1 * r2) % n]);
  CHECK(m.identity_index() == cls[1 % n]);
}

void check_table_laws(const DRMonoid& m) {
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(m.mul(m.identity_index(), i) == i);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(m.mul(i, j) == m.mul(j, i));
      for (std::size_t l = 0; l < n; ++l)
        CHECK(m.mul(m.mul(i, j), l) == m.mul(i, m.mul(j, l)));
    }
  }
}

}  // namespace

TEST_CASE("equivalence examples over the rationals at level 6") {
  NumberField q = field("x");
  FractionalIdeal f = rat_ideal(q, 6);
  CHECK(dr_equivalent(q, rat_ideal(q, 1), rat_ideal(q, 7), f));
  CHECK(dr_equivalent(q, rat_ideal(q, 2), rat_ideal(q, 8), f));
  CHECK(dr_equivalent(q, rat_ideal(q, 15), rat_ideal(q, 15), f));
  CHECK(!dr_equivalent(q, rat_ideal(q, 2), rat_ideal(q, 3), f));
  CHECK(!dr_equivalent(q, rat_ideal(q, 1), rat_ideal(q, 5), f));
}

TEST_CASE("equivalence is an equivalence relation matching the partition") {
  struct Case {
    const char* g;
    long a, b;
  };
  for (Case c : {Case{"x", 4, 0}, Case{"x", 6, 0}, Case{"x", 12, 0},
                 Case{"x^2+1", 2, 0}, Case{"x^2+1", 2, 1}}) {
    NumberField k = field(c.g);
    FractionalIdeal f = principal_ideal(k, el(k, c.a, c.b));
    DRMonoid m = dr_quotient(k, f);
    auto ideals = enumerate_ideals(k, Int(60));
    std::vector<std::size_t> cls;
    for (const FractionalIdeal& a : ideals) cls.push_back(m.class_of(a));
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = i; j < ideals.size(); ++j)
        CHECK(dr_equivalent(k, ideals[i], ideals[j], f) ==
              (cls[i] == cls[j]));
  }
}

TEST_CASE("quotient sizes and the divisor-sum cardinality") {
  NumberField q = field("x");
  CHECK(dr_quotient(q, rat_ideal(q, 6)).size() == 6);
  CHECK(dr_cardinality(q, rat_ideal(q, 6)) == 6);

  NumberField gauss = field("x^2+1");
  CHECK(dr_quotient(gauss, rat_ideal(gauss, 2)).size() == 3);
  CHECK(dr_quotient(gauss, FractionalIdeal::unit(gauss)).size() == 1);

  NumberField r5 = field("x^2+5");
  CHECK(dr_cardinality(r5, rat_ideal(r5, 2)) == 8);
  NumberField r3 = field("x^2-3");
  CHECK(dr_cardinality(r3, rat_ideal(r3, 2)) == 6);
}

TEST_CASE("residue model of the rational quotients up to 24") {
  NumberField q = field("x");
  for (long n = 1; n <= 24; ++n) {
    DRMonoid m = dr_quotient(q, rat_ideal(q, n));
    check_residue_model(q, n, m);
    // idempotent count 2^(number of distinct primes)
    long omega = 0;
    for (auto& [p, e] : factor_integer(Int(n))) ++omega;
    CHECK(m.idempotent_indices().size() ==
          static_cast<std::size_t>(1L << omega));
  }
}

TEST_CASE("tables are unital, commutative, associative") {
  NumberField q = field("x");
  check_table_laws(dr_quotient(q, rat_ideal(q, 12)));
  NumberField gauss = field("x^2+1");
  check_table_laws(dr_quotient(gauss, rat_ideal(gauss, 3)));
  NumberField r3 = field("x^2-3");
  check_table_laws(dr_quotient(r3, rat_ideal(r3, 2)));
}

TEST_CASE("structural coproduct component sizes") {
  NumberField q = field("x");
  DRMonoid b6 = dr_structural(q, rat_ideal(q, 6));
  REQUIRE(b6.size() == 6);
  std::map<std::string, int> sizes;
  for (std::size_t i = 0; i < b6.size(); ++i)
    sizes[b6.component_divisor(i).numerator().row(0)[0].get_str()]++;
  // the coprime component is a torsor under the full ray class group,
  // the gcd-6 component under the trivial one
  CHECK(sizes["1"] == 2);
  CHECK(sizes["2"] == 2);
  CHECK(sizes["3"] == 1);
  CHECK(sizes["6"] == 1);

  NumberField gauss = field("x^2+1");
  DRMonoid b2 = dr_structural(gauss, rat_ideal(gauss, 2));
  REQUIRE(b2.size() == 3);
  std::set<std::string> divs;
  for (std::size_t i = 0; i < b2.size(); ++i)
    divs.insert(ideal_norm(gauss, b2.component_divisor(i)).get_str());
  CHECK(divs == std::set<std::string>{"1", "2", "4"});

  CHECK(dr_structural(gauss, FractionalIdeal::unit(gauss)).size() == 1);
}

TEST_CASE("fiber product carriers") {
  NumberField gauss = field("x^2+1");
  CHECK(dr_fiber_product(gauss, rat_ideal(gauss, 2)).size() == 3);
  NumberField q = field("x");
  DRMonoid c4 = dr_fiber_product(q, rat_ideal(q, 4));
  CHECK(c4.size() == 4);
  CHECK(dr_fiber_product(q, rat_ideal(q, 1)).size() == 1);
}

TEST_CASE("three constructions agree for the test matrix") {
  struct Case {
    const char* g;
    long a, b;
  };
  for (Case c : {Case{"x", 4, 0}, Case{"x", 6, 0}, Case{"x", 12, 0},
                 Case{"x^2+1", 2, 0}, Case{"x^2+1", 2, 1},
                 Case{"x^2+1", 3, 0}, Case{"x^2+5", 2, 0},
                 Case{"x^2+5", 3, 0}, Case{"x^2-3", 2, 0}}) {
    CAPTURE(c.g);
    CAPTURE(c.a);
    CAPTURE(c.b);
    NumberField k = field(c.g);
    FractionalIdeal f = principal_ideal(k, el(k, c.a, c.b));
    DRMonoid a = dr_quotient(k, f);
    DRMonoid b = dr_structural(k, f);
    DRMonoid cc = dr_fiber_product(k, f);
    auto ab = monoid_isomorphism(a, b);
    auto ac = monoid_isomorphism(a, cc);
    REQUIRE(ab.has_value());
    REQUIRE(ac.has_value());
    // explicit isomorphism property on the full tables
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK((*ab)[a.mul(i, j)] == b.mul((*ab)[i], (*ab)[j]));
        CHECK((*ac)[a.mul(i, j)] == cc.mul((*ac)[i], (*ac)[j]));
      }
    CHECK(Int(a.size()) == dr_cardinality(k, f));
  }
}

TEST_CASE("projections between levels") {
  NumberField q = field("x");
  DRMonoid d12 = dr_quotient(q, rat_ideal(q, 12));
  DRMonoid d6 = dr_quotient(q, rat_ideal(q, 6));
  DRMonoid d3 = dr_quotient(q, rat_ideal(q, 3));
  DRMonoid d2 = dr_quotient(q, rat_ideal(q, 2));

  // reduction Z/6 -> Z/3 through the residue labels
  auto p63 = dr_project(d6, d3);
  for (long m = 1; m <= 6; ++m)
    CHECK(p63[d6.class_of(rat_ideal(q, m))] ==
          d3.class_of(rat_ideal(q, m)));

  // projection at equal levels is the identity
  auto pid = dr_project(d6, d6);
  for (std::size_t i = 0; i < d6.size(); ++i) CHECK(pid[i] == i);

  // surjective monoid homomorphism
  std::set<std::size_t> image(p63.begin(), p63.end());
  CHECK(image.size() == d3.size());
  for (std::size_t i = 0; i < d6.size(); ++i)
    for (std::size_t j = 0; j < d6.size(); ++j)
      CHECK(p63[d6.mul(i, j)] == d3.mul(p63[i], p63[j]));

  // coherence along the chain (2) | (6) | (12)
  auto p126 = dr_project(d12, d6);
  auto p62 = dr_project(d6, d2);
  auto p122 = dr_project(d12, d2);
  for (std::size_t i = 0; i < d12.size(); ++i)
    CHECK(p62[p126[i]] == p122[i]);

  CHECK_THROWS_AS(dr_project(d6, d12), MathInputError);
}

TEST_CASE("projection chain over the gaussian integers") {
  NumberField k = field("x^2+1");
  DRMonoid fine = dr_quotient(k, principal_ideal(k, el(k, 2, 2)));
  DRMonoid mid = dr_quotient(k, rat_ideal(k, 2));
  DRMonoid coarse = dr_quotient(k, principal_ideal(k, el(k, 1, 1)));
  auto a = dr_project(fine, mid);
  auto b = dr_project(mid, coarse);
  auto c = dr_project(fine, coarse);
  for (std::size_t i = 0; i < fine.size(); ++i) CHECK(b[a[i]] == c[i]);
  std::set<std::size_t> im(a.begin(), a.end());
  CHECK(im.size() == mid.size());
}

TEST_CASE("idempotents and the ideal action at level 6") {
  NumberField q = field("x");
  DRMonoid m = dr_quotient(q, rat_ideal(q, 6));
  auto idem = m.idempotent_indices();
  CHECK(idem.size() == 4);  // classes of 1, 3, 4, 0 mod 6
  std::set<std::size_t> expected;
  for (long r : {6L, 1L, 3L, 4L}) expected.insert(m.class_of(rat_ideal(q, r)));
  CHECK(std::set<std::size_t>(idem.begin(), idem.end()) == expected);

  for (std::size_t i = 0; i < m.size(); ++i)
    CHECK(m.act(rat_ideal(q, 1), i) == i);
  CHECK(m.act(rat_ideal(q, 5), m.identity_index()) ==
        m.class_of(rat_ideal(q, 5)));
}
