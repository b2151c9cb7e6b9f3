#include "bcw/rayclass.hpp"

#include <algorithm>
#include <set>

namespace bcw {

namespace {

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// real and imaginary-part data of the second basis element under a root of
// g = x^2 + bx + c: omega = u + v*sqrt(delta), delta = b^2 - 4c
struct QuadEmbedding {
  Rat u, v;
  Int delta;
};

QuadEmbedding quad_embedding(const NumberField& k) {
  const IntPolynomial& g = k.poly();
  Int b = g.coeff(1), c = g.coeff(0);
  Rat s0 = k.basis_matrix()[1][0], s1 = k.basis_matrix()[1][1];
  QuadEmbedding e;
  e.delta = b * b - 4 * c;
  e.u = s0 - s1 * Rat(b) / 2;
  e.v = s1 / 2;
  return e;
}

// one generator of c, if c is principal; complete for degree <= 2
GeneratorSearch find_any_generator(const NumberField& k,
                                   const FractionalIdeal& c) {
  GeneratorSearch out;
  std::size_t n = k.degree();
  Rat nc = ideal_norm(k, c);
  if (n == 1) {
    out.status = SearchStatus::Found;
    out.x = k.from_rational(nc);
    if (!(principal_ideal(k, out.x) == c))
      throw InternalCheckError("rational ideal norm is not a generator");
    return out;
  }
  if (n > 2) {
    out.status = SearchStatus::Inconclusive;
    return out;
  }

  const IntMatrix& L = c.numerator();
  const Int& den = c.denominator();
  Rat mr = nc * den * den;
  if (mr.get_den() != 1)
    throw InternalCheckError("lattice norm target is not integral");
  Int M = mr.get_num();

  QuadEmbedding emb = quad_embedding(k);
  Rat loM, hiM, loD, hiD;
  rat_sqrt_bounds(M, 16, loM, hiM);
  rat_sqrt_bounds(abs(emb.delta), 16, loD, hiD);
  if (loD == 0) loD = Rat(1, 1000);  // delta is never 0 for a field

  Rat c1max_r, c0max_r;
  if (emb.delta < 0) {
    // definite norm form: |c1 * v * sqrt(|delta|)| <= sqrt(M)
    c1max_r = hiM / (abs(emb.v) * loD);
    c0max_r = hiM + c1max_r * abs(emb.u);
  } else {
    // real quadratic: some unit multiple of any generator has both
    // embeddings bounded by sqrt(M) * (embedding size of the fundamental
    // unit), so a box of that radius is complete
    const FieldElement& eps = k.units().fundamental_units.at(0);
    Rat ue = eps.coords[0] + eps.coords[1] * emb.u;
    Rat ve = eps.coords[1] * emb.v;
    Rat esize = abs(ue) + abs(ve) * hiD;
    Rat t = hiM * esize;
    c1max_r = t / (abs(emb.v) * loD);
    c0max_r = t + c1max_r * abs(emb.u);
  }
  Int c1max = rat_floor(c1max_r) + 1;
  Int c0max = rat_floor(c0max_r) + 1;

  const Int& h00 = L.at(0, 0);
  const Int& h01 = L.at(0, 1);
  const Int& h11 = L.at(1, 1);
  Int amax = c0max / h00 + 1;
  for (Int a = -amax; a <= amax; ++a) {
    Int c0 = a * h00;
    Int c1base = a * h01;
    Int blo, bhi;
    mpz_fdiv_q(bhi.get_mpz_t(), Int(c1max - c1base).get_mpz_t(),
               h11.get_mpz_t());
    mpz_cdiv_q(blo.get_mpz_t(), Int(-c1max - c1base).get_mpz_t(),
               h11.get_mpz_t());
    for (Int b = blo; b <= bhi; ++b) {
      Int c1 = c1base + b * h11;
      if (c0 == 0 && c1 == 0) continue;
      FieldElement x = k.zero();
      x.coords[0] = Rat(c0, den);
      x.coords[1] = Rat(c1, den);
      x.coords[0].canonicalize();
      x.coords[1].canonicalize();
      if (abs(k.norm(x)) != nc) continue;
      if (principal_ideal(k, x) == c) {
        out.status = SearchStatus::Found;
        out.x = x;
        return out;
      }
    }
  }
  out.status = SearchStatus::None;
  return out;
}

// full search: (x) = c, optional congruence x - 1 in *m, optional positivity
GeneratorSearch generator_search(const NumberField& k, const FractionalIdeal& c,
                                 const FractionalIdeal* m, bool pos) {
  GeneratorSearch base = find_any_generator(k, c);
  if (base.status != SearchStatus::Found) return base;
  if (!m && !pos) return base;

  auto predicate = [&](const FieldElement& x) {
    if (pos && !k.is_totally_positive(x)) return false;
    if (m && !ideal_contains(k, *m, k.sub(x, k.one()))) return false;
    return true;
  };

  const UnitGroup& ug = k.units();
  long tq = ug.torsion_order.get_si();

  // period of the fundamental-unit sweep: least P with eps^P congruent to 1
  // modulo m*c^(-1) (when m is present) and totally positive (when needed)
  long period = 1;
  FieldElement eps = k.one();
  bool have_eps = !ug.fundamental_units.empty();
  if (have_eps) {
    eps = ug.fundamental_units[0];
    FractionalIdeal j = FractionalIdeal::unit(k);
    if (m) j = ideal_product(k, *m, ideal_inverse(k, c));
    FieldElement ep = k.one();
    for (long t = 1;; ++t) {
      if (t > 1000000)
        throw InternalCheckError("unit period search did not terminate");
      ep = k.mul(ep, eps);
      bool cong = !m || ideal_contains(k, j, k.sub(ep, k.one()));
      bool posi = !pos || k.is_totally_positive(ep);
      if (cong && posi) {
        period = t;
        break;
      }
    }
  }

  FieldElement xt = base.x;
  for (long t = 0; t < period; ++t) {
    FieldElement xj = xt;
    for (long j = 0; j < tq; ++j) {
      if (predicate(xj)) {
        GeneratorSearch out;
        out.status = SearchStatus::Found;
        out.x = xj;
        return out;
      }
      xj = k.mul(xj, ug.torsion_generator);
    }
    if (have_eps) xt = k.mul(xt, eps);
  }
  GeneratorSearch out;
  out.status = SearchStatus::None;
  return out;
}

std::vector<int> sign_bits(const NumberField& k, const FieldElement& x) {
  std::vector<int> bits;
  for (Sign s : k.real_signs(x)) bits.push_back(s == Sign::Negative ? 1 : 0);
  return bits;
}

// subgroup of (O_K/f)^x x {+-1}^r1 generated by the images of the units
struct ProductImage {
  std::set<std::pair<FiniteAbelianGroup::Element, std::vector<int>>> elems;
  std::vector<Int> fundamental_periods;
};

ProductImage unit_image(const NumberField& k, const FractionalIdeal& f,
                        const ResidueUnits& ru, bool with_signs) {
  auto image_of = [&](const FieldElement& x) {
    std::pair<FiniteAbelianGroup::Element, std::vector<int>> p;
    p.first = ru.log(x);
    if (with_signs) p.second = sign_bits(k, x);
    return p;
  };
  auto mul = [&](const auto& a, const auto& b) {
    auto r = a;
    r.first = ru.group().add(a.first, b.first);
    for (std::size_t i = 0; i < r.second.size(); ++i)
      r.second[i] = (a.second[i] + b.second[i]) % 2;
    return r;
  };

  FieldElement one = k.one();
  auto ident = image_of(one);
  ProductImage out;
  out.elems.insert(ident);
  std::vector<FieldElement> gens{k.units().torsion_generator};
  for (const auto& u : k.units().fundamental_units) gens.push_back(u);
  for (const FieldElement& g : gens) {
    auto gi = image_of(g);
    // close the current set under multiplication by gi
    for (;;) {
      std::set<std::pair<FiniteAbelianGroup::Element, std::vector<int>>> next =
          out.elems;
      for (const auto& e : out.elems) next.insert(mul(e, gi));
      if (next.size() == out.elems.size()) break;
      out.elems = std::move(next);
    }
  }
  for (const auto& u : k.units().fundamental_units) {
    auto gi = image_of(u);
    auto cur = gi;
    Int ord = 1;
    while (!(cur == ident)) {
      cur = mul(cur, gi);
      ++ord;
    }
    out.fundamental_periods.push_back(ord);
  }
  return out;
}

}  // namespace

GeneratorSearch congruent_generator(const NumberField& k,
                                    const FractionalIdeal& c,
                                    const FractionalIdeal& m) {
  return generator_search(k, c, &m, true);
}

GeneratorSearch principal_generator(const NumberField& k,
                                    const FractionalIdeal& c) {
  return generator_search(k, c, nullptr, false);
}

UnitImage unit_image_mod(const NumberField& k, const FractionalIdeal& f) {
  ResidueUnits ru(k, f);
  ProductImage img = unit_image(k, f, ru, true);
  UnitImage out;
  out.image_order = Int(img.elems.size());
  Int full = ru.order();
  for (int i = 0; i < k.r1(); ++i) full *= 2;
  out.index = full / out.image_order;
  out.unit_periods = img.fundamental_periods;
  return out;
}

Int class_number(const NumberField& k) {
  if (k.degree() == 1) return 1;
  Rat lo, hi;
  rat_sqrt_bounds(abs(k.discriminant()), 8, lo, hi);
  // Minkowski bound: (2/pi)*sqrt(|d|) if imaginary, sqrt(d)/2 if real;
  // any upper bound is safe, pi > 3
  Rat mb = (k.r2() == 1) ? Rat(Rat(2, 3) * hi) : Rat(hi / 2);
  Int bound = rat_floor(mb) + 1;
  std::vector<FractionalIdeal> reps;
  for (const FractionalIdeal& a : enumerate_ideals(k, bound)) {
    bool matched = false;
    for (const FractionalIdeal& r : reps) {
      GeneratorSearch s =
          principal_generator(k, ideal_product(k, a, ideal_inverse(k, r)));
      if (s.status == SearchStatus::Inconclusive)
        throw MathInputError("principality test inconclusive");
      if (s.status == SearchStatus::Found) {
        matched = true;
        break;
      }
    }
    if (!matched) reps.push_back(a);
  }
  return Int(reps.size());
}

bool ray_equivalent(const NumberField& k, const FractionalIdeal& a,
                    const FractionalIdeal& b, const FractionalIdeal& f,
                    bool strict) {
  FractionalIdeal binv = ideal_inverse(k, b);
  FractionalIdeal c = ideal_product(k, a, binv);
  FractionalIdeal m = ideal_product(k, f, binv);
  GeneratorSearch s = generator_search(k, c, &m, strict);
  if (s.status == SearchStatus::Inconclusive)
    throw MathInputError("ray equivalence test inconclusive");
  return s.status == SearchStatus::Found;
}

RayClassGroup::RayClassGroup(const NumberField& k, const FractionalIdeal& f,
                             bool strict)
    : k_(&k), f_(f), strict_(strict) {
  if (!f.is_integral())
    throw MathInputError("ray class modulus must be integral");
  ResidueUnits ru(k, f);
  Int h = class_number(k);
  ProductImage img = unit_image(k, f, ru, strict);
  Int target = h * ru.order();
  if (strict)
    for (int i = 0; i < k.r1(); ++i) target *= 2;
  if (target % Int(img.elems.size()) != 0)
    throw InternalCheckError("unit image does not divide the group bound");
  target /= Int(img.elems.size());

  Rat lo, hi;
  Int mink = 1;
  if (k.degree() == 2) {
    rat_sqrt_bounds(abs(k.discriminant()), 8, lo, hi);
    mink = rat_floor((k.r2() == 1) ? Rat(Rat(2, 3) * hi) : Rat(hi / 2)) + 1;
  }
  Int bound = mink * ideal_norm(k, f).get_num();
  if (bound < 2) bound = 2;

  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<FractionalIdeal> gens;
    for (Int p = 2; p <= bound; ++p) {
      if (!is_prime(p)) continue;
      for (const PrimeIdeal& P : primes_above(k, p)) {
        if (P.norm() > bound) continue;
        if (!ideals_coprime(k, P.ideal, f)) continue;
        gens.push_back(P.ideal);
      }
    }

    std::vector<std::pair<FractionalIdeal, std::vector<Int>>> span;
    span.emplace_back(FractionalIdeal::unit(k), std::vector<Int>{});
    std::vector<FractionalIdeal> used;
    std::vector<std::vector<Int>> relations;

    auto find_in_span = [&](const FractionalIdeal& a) {
      for (std::size_t i = 0; i < span.size(); ++i)
        if (ray_equivalent(k, a, span[i].first, f, strict)) return (long)i;
      return -1L;
    };

    for (const FractionalIdeal& g : gens) {
      if (Int(span.size()) == target) break;
      if (find_in_span(g) >= 0) continue;
      std::size_t ngens = used.size();
      // least m with g^m falling into the current span
      FractionalIdeal gm = g;
      long hit = -1;
      Int m = 1;
      for (;;) {
        hit = find_in_span(gm);
        if (hit >= 0) break;
        gm = ideal_product(k, gm, g);
        ++m;
        if (m > 4 * target)
          throw InternalCheckError("generator order search overran the bound");
      }
      std::vector<Int> rel(ngens + 1, Int(0));
      const std::vector<Int>& basev = span[hit].second;
      for (std::size_t i = 0; i < basev.size(); ++i) rel[i] = -basev[i];
      rel[ngens] = m;
      for (auto& r : relations) r.resize(ngens + 1, Int(0));
      relations.push_back(rel);
      std::vector<std::pair<FractionalIdeal, std::vector<Int>>> grown;
      for (auto& [rep, e] : span) {
        std::vector<Int> e2 = e;
        e2.resize(ngens + 1, Int(0));
        FractionalIdeal cur = rep;
        for (Int t = 0; t < m; ++t) {
          std::vector<Int> et = e2;
          et[ngens] = t;
          grown.emplace_back(cur, et);
          cur = ideal_product(k, cur, g);
        }
      }
      span = std::move(grown);
      used.push_back(g);
    }

    if (Int(span.size()) == target) {
      std::size_t ngens = used.size();
      IntMatrix relmat(0, ngens);
      for (auto& r : relations) {
        r.resize(ngens, Int(0));
        relmat.append_row(r);
      }
      GroupPresentation pres = group_from_relations(ngens, relmat);
      if (pres.group.order() != target)
        throw InternalCheckError(
            "relation presentation disagrees with the order formula");
      group_ = pres.group;
      gens_ = used;
      for (auto& [rep, e] : span) {
        FiniteAbelianGroup::Element img2 = group_.zero();
        for (std::size_t i = 0; i < ngens; ++i)
          img2 =
              group_.add(img2, group_.scale(e[i], pres.generator_images[i]));
        table_.emplace_back(rep, img2);
      }
      return;
    }
    if (Int(span.size()) > target)
      throw InternalCheckError("more classes found than the order formula");
    bound *= 2;
  }
  throw InternalCheckError("ray class generator bound ladder exhausted");
}

FiniteAbelianGroup::Element RayClassGroup::class_of(
    const FractionalIdeal& a) const {
  if (!ideals_coprime(*k_, a, f_))
    throw MathInputError("ideal is not coprime to the modulus");
  for (const auto& [rep, e] : table_)
    if (ray_equivalent(*k_, a, rep, f_, strict_)) return e;
  throw InternalCheckError("ideal matched no ray class");
}

const FractionalIdeal& RayClassGroup::representative(
    const FiniteAbelianGroup::Element& e) const {
  FiniteAbelianGroup::Element r = group_.reduce(e);
  for (const auto& [rep, e2] : table_)
    if (e2 == r) return rep;
  throw InternalCheckError("no representative for ray class element");
}

}  // namespace bcw
