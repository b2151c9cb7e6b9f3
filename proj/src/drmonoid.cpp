#include "bcw/drmonoid.hpp"

#include <algorithm>
#include <map>

namespace bcw {

namespace {

// deterministic order for classes: component divisor first, then the
// representative ideal
bool element_less(const NumberField& k,
                  const std::pair<FractionalIdeal, FractionalIdeal>& a,
                  const std::pair<FractionalIdeal, FractionalIdeal>& b) {
  int c = a.first.compare(k, b.first);
  if (c != 0) return c < 0;
  return a.second.compare(k, b.second) < 0;
}

}  // namespace

std::size_t DRMonoid::class_of(const FractionalIdeal& a) const {
  if (reps_.empty())
    throw MathInputError("this monoid carries no representative ideals");
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (dr_equivalent(*k_, a, reps_[i], f_)) return i;
  throw InternalCheckError("ideal matched no class of the quotient");
}

std::vector<std::size_t> DRMonoid::idempotent_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (mul(i, i) == i) out.push_back(i);
  return out;
}

bool dr_equivalent(const NumberField& k, const FractionalIdeal& a,
                   const FractionalIdeal& b, const FractionalIdeal& f) {
  if (!a.is_integral() || !b.is_integral() || !f.is_integral())
    throw MathInputError("equivalence needs integral ideals");
  auto one_sided = [&](const FractionalIdeal& x, const FractionalIdeal& y) {
    FractionalIdeal yinv = ideal_inverse(k, y);
    GeneratorSearch s = congruent_generator(k, ideal_product(k, x, yinv),
                                            ideal_product(k, f, yinv));
    if (s.status == SearchStatus::Inconclusive)
      throw MathInputError("equivalence test inconclusive");
    return s.status == SearchStatus::Found;
  };
  if (a == b) return true;
  return one_sided(a, b) || one_sided(b, a);
}

Int dr_cardinality(const NumberField& k, const FractionalIdeal& f) {
  Int total = 0;
  for (const FractionalIdeal& d : divisors_of(k, f))
    total += RayClassGroup(k, d).order();
  return total;
}

DRMonoid dr_quotient(const NumberField& k, const FractionalIdeal& f) {
  if (!f.is_integral()) throw MathInputError("modulus must be integral");
  Int rank = dr_cardinality(k, f);
  Int bound = 2 * ideal_norm(k, f).get_num();
  if (bound < 4) bound = 4;
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<FractionalIdeal> reps;
    for (const FractionalIdeal& a : enumerate_ideals(k, bound)) {
      bool matched = false;
      for (const FractionalIdeal& r : reps)
        if (dr_equivalent(k, a, r, f)) {
          matched = true;
          break;
        }
      if (!matched) reps.push_back(a);
      if (Int(reps.size()) == rank) break;
    }
    if (Int(reps.size()) > rank)
      throw InternalCheckError("more classes than the divisor-sum cardinality");
    if (Int(reps.size()) < rank) {
      bound *= 2;
      continue;
    }
    // canonical order by (component divisor, representative)
    std::vector<std::pair<FractionalIdeal, FractionalIdeal>> labeled;
    for (const FractionalIdeal& r : reps)
      labeled.emplace_back(ideal_sum(k, r, f), r);
    std::sort(labeled.begin(), labeled.end(),
              [&k](const auto& a, const auto& b) {
                return element_less(k, a, b);
              });
    DRMonoid m;
    m.k_ = &k;
    m.f_ = f;
    for (auto& [d, r] : labeled) {
      m.divisors_.push_back(d);
      m.reps_.push_back(r);
    }
    std::size_t n = m.reps_.size();
    m.table_.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        std::size_t c =
            m.class_of(ideal_product(k, m.reps_[i], m.reps_[j]));
        m.table_[i][j] = c;
        m.table_[j][i] = c;
      }
    m.identity_ = m.class_of(FractionalIdeal::unit(k));
    return m;
  }
  throw InternalCheckError("quotient enumeration bound ladder exhausted");
}

DRMonoid dr_structural(const NumberField& k, const FractionalIdeal& f) {
  DRMonoid a = dr_quotient(k, f);
  // the component of classes with gcd e against f is a torsor under the
  // strict ray class group of the complementary conductor f/e
  struct Component {
    FractionalIdeal d;  // component divisor e
    RayClassGroup group;  // conductor f/e
    std::vector<std::pair<FiniteAbelianGroup::Element, FractionalIdeal>> reps;
  };
  std::vector<Component> comps;
  for (const FractionalIdeal& e : divisors_of(k, f))
    comps.push_back(
        {e, RayClassGroup(k, ideal_product(k, f, ideal_inverse(k, e))), {}});
  Int bound = 2 * ideal_norm(k, f).get_num();
  if (bound < 4) bound = 4;
  for (int attempt = 0; attempt < 12; ++attempt) {
    bool all_covered = true;
    for (Component& c : comps) {
      c.reps.clear();
      std::map<std::vector<Int>, FractionalIdeal> found;
      for (const FractionalIdeal& x : enumerate_ideals(k, bound)) {
        if (Int(found.size()) == c.group.order()) break;
        if (!ideals_coprime(k, x, f)) continue;
        auto e = c.group.class_of(x);
        found.emplace(e, x);
      }
      if (Int(found.size()) < c.group.order()) {
        all_covered = false;
        break;
      }
      for (auto& [e, x] : found) c.reps.emplace_back(e, x);
    }
    if (all_covered) break;
    bound *= 2;
    if (attempt == 11)
      throw InternalCheckError("no coprime class representatives in range");
  }

  // the bijection (d, class) -> [d * rep]
  std::vector<std::size_t> to_a;
  std::vector<std::pair<FractionalIdeal, FractionalIdeal>> labeled;
  std::vector<bool> hit(a.size(), false);
  for (Component& c : comps)
    for (auto& [e, r] : c.reps) {
      FractionalIdeal rep = ideal_product(k, c.d, r);
      std::size_t idx = a.class_of(rep);
      if (hit[idx])
        throw InternalCheckError(
            "structural labeling is not injective at a divisor class");
      if (!(a.component_divisor(idx) == c.d))
        throw InternalCheckError(
            "component divisor mismatch in the structural labeling");
      hit[idx] = true;
      to_a.push_back(idx);
      labeled.emplace_back(c.d, rep);
    }
  if (to_a.size() != a.size())
    throw InternalCheckError("structural labeling is not surjective");

  // transport the quotient table through the bijection, keeping the
  // coproduct ordering (divisors ascending, class exponent vectors within)
  DRMonoid b;
  b.k_ = &k;
  b.f_ = f;
  std::size_t n = a.size();
  std::vector<std::size_t> from_a(n);
  for (std::size_t i = 0; i < n; ++i) from_a[to_a[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    b.divisors_.push_back(labeled[i].first);
    b.reps_.push_back(labeled[i].second);
  }
  b.table_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b.table_[i][j] = from_a[a.mul(to_a[i], to_a[j])];
  b.identity_ = from_a[a.identity_index()];
  return b;
}

namespace {

std::vector<Int> coords_key(const FieldElement& x) {
  std::vector<Int> v;
  for (const Rat& c : x.coords) v.push_back(c.get_num());
  return v;
}

// totally positive representative of the coset x + f (shift by a rational
// integer in f until every real embedding is positive)
FieldElement totally_positive_lift(const NumberField& k,
                                   const FractionalIdeal& f,
                                   const FieldElement& x) {
  Int nf = ideal_norm(k, f).get_num();
  FieldElement shift = k.from_rational(Rat(nf));
  FieldElement cur = x;
  for (int step = 0; step < 1000000; ++step) {
    if (!cur.is_zero() && (k.r1() == 0 || k.is_totally_positive(cur)))
      return cur;
    cur = k.add(cur, shift);
  }
  throw InternalCheckError("no totally positive lift found");
}

}  // namespace

DRMonoid dr_fiber_product(const NumberField& k, const FractionalIdeal& f) {
  ResidueRing ring(k, f);
  ResidueUnits ru(k, f);
  RayClassGroup g(k, f);

  // s(u) = ray class of a totally positive lift of the unit residue u
  std::map<std::vector<Int>, FiniteAbelianGroup::Element> s;
  for (const FieldElement& u : ru.unit_representatives()) {
    FieldElement lift = totally_positive_lift(k, f, u);
    s[coords_key(ring.reduce(u))] = g.class_of(principal_ideal(k, lift));
  }

  using Point = std::pair<std::vector<Int>, FiniteAbelianGroup::Element>;
  std::vector<Point> points;
  std::map<Point, std::size_t> point_index;
  for (const FieldElement& r : ring.representatives())
    for (const auto& c : g.group().elements()) {
      Point p{coords_key(r), c};
      point_index[p] = points.size();
      points.push_back(p);
    }

  // orbits of the antidiagonal action u * (r, c) = (u r, s(u)^(-1) c)
  std::vector<long> orbit_of(points.size(), -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<std::size_t> orb;
    std::vector<std::size_t> stack{i};
    orbit_of[i] = static_cast<long>(orbits.size());
    while (!stack.empty()) {
      std::size_t p = stack.back();
      stack.pop_back();
      orb.push_back(p);
      FieldElement r = k.zero();
      for (std::size_t t = 0; t < k.degree(); ++t)
        r.coords[t] = Rat(points[p].first[t]);
      for (const FieldElement& u : ru.unit_representatives()) {
        Point q{coords_key(ring.reduce(k.mul(u, r))),
                g.group().add(points[p].second,
                              g.group().neg(s.at(coords_key(u))))};
        std::size_t qi = point_index.at(q);
        if (orbit_of[qi] < 0) {
          orbit_of[qi] = orbit_of[p];
          stack.push_back(qi);
        } else if (orbit_of[qi] != orbit_of[p]) {
          throw InternalCheckError("orbit bookkeeping failure");
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(orb);
  }

  // componentwise multiplication must be constant on orbits
  auto product_point = [&](std::size_t p, std::size_t q) {
    FieldElement rp = k.zero(), rq = k.zero();
    for (std::size_t t = 0; t < k.degree(); ++t) {
      rp.coords[t] = Rat(points[p].first[t]);
      rq.coords[t] = Rat(points[q].first[t]);
    }
    Point out{coords_key(ring.reduce(k.mul(rp, rq))),
              g.group().add(points[p].second, points[q].second)};
    return point_index.at(out);
  };
  std::size_t n = orbits.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long target = -1;
      for (std::size_t p : orbits[i])
        for (std::size_t q : orbits[j]) {
          long o = orbit_of[product_point(p, q)];
          if (target < 0) target = o;
          if (o != target)
            throw InternalCheckError(
                "fiber-product multiplication is not well defined on orbits");
        }
      table[i][j] = static_cast<std::size_t>(target);
      table[j][i] = static_cast<std::size_t>(target);
    }

  // component divisor of an orbit: gcd((lift of r), f); invariant because
  // units are coprime to f
  std::vector<FractionalIdeal> divisors(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = points[orbits[i][0]];
    FieldElement r = k.zero();
    bool zero = true;
    for (std::size_t t = 0; t < k.degree(); ++t) {
      r.coords[t] = Rat(p.first[t]);
      if (p.first[t] != 0) zero = false;
    }
    divisors[i] =
        zero ? f : ideal_sum(k, principal_ideal(k, r), f);
  }

  // canonical order: by (component divisor, smallest member point)
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    int c = divisors[x].compare(k, divisors[y]);
    if (c != 0) return c < 0;
    return points[orbits[x][0]] < points[orbits[y][0]];
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  DRMonoid m;
  m.k_ = &k;
  m.f_ = f;
  m.table_.assign(n, std::vector<std::size_t>(n));
  m.divisors_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.divisors_[rank[i]] = divisors[i];
    for (std::size_t j = 0; j < n; ++j)
      m.table_[rank[i]][rank[j]] = rank[table[i][j]];
  }
  Point ident{coords_key(ring.reduce(k.one())), g.group().zero()};
  m.identity_ = rank[orbit_of[point_index.at(ident)]];
  return m;
}

std::vector<std::size_t> dr_project(const DRMonoid& fine,
                                    const DRMonoid& coarse) {
  const NumberField& k = fine.field();
  if (!ideal_contains_ideal(k, coarse.modulus(), fine.modulus()))
    throw MathInputError("projection requires the coarse modulus to divide");
  std::vector<std::size_t> out(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i)
    out[i] = coarse.class_of(fine.representative(i));
  return out;
}

namespace {

// iterative color refinement shared between two tables
std::vector<std::vector<long>> refine_colors(const DRMonoid& a,
                                             const DRMonoid& b) {
  std::vector<std::vector<long>> colors{
      std::vector<long>(a.size(), 0), std::vector<long>(b.size(), 0)};
  for (int round = 0; round < 64; ++round) {
    std::map<std::vector<long>, long> dict;
    std::vector<std::vector<long>> next(2);
    bool changed = false;
    for (int side = 0; side < 2; ++side) {
      const DRMonoid& m = side == 0 ? a : b;
      for (std::size_t x = 0; x < m.size(); ++x) {
        std::vector<long> sig{colors[side][x],
                              x == m.identity_index() ? 1L : 0L,
                              colors[side][m.mul(x, x)]};
        std::vector<std::pair<long, long>> prods;
        for (std::size_t y = 0; y < m.size(); ++y)
          prods.emplace_back(colors[side][y], colors[side][m.mul(x, y)]);
        std::sort(prods.begin(), prods.end());
        for (auto& [u, v] : prods) {
          sig.push_back(u);
          sig.push_back(v);
        }
        auto [it, fresh] = dict.emplace(sig, (long)dict.size());
        next[side].push_back(it->second);
        if (it->second != colors[side][x]) changed = true;
      }
    }
    colors = std::move(next);
    if (!changed) break;
  }
  return colors;
}

bool extend_isomorphism(const DRMonoid& a, const DRMonoid& b,
                        const std::vector<std::vector<long>>& colors,
                        std::vector<long>& phi, std::vector<bool>& used) {
  // propagate forced assignments from products of mapped elements
  std::vector<std::pair<std::size_t, long>> trail;
  auto undo = [&]() {
    for (auto& [x, y] : trail) {
      phi[x] = -1;
      used[y] = false;
    }
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (phi[x] < 0) continue;
      for (std::size_t y = 0; y < a.size(); ++y) {
        if (phi[y] < 0) continue;
        std::size_t p = a.mul(x, y);
        long q = b.mul(phi[x], phi[y]);
        if (phi[p] < 0) {
          if (used[q] || colors[0][p] != colors[1][q]) {
            undo();
            return false;
          }
          phi[p] = q;
          used[q] = true;
          trail.emplace_back(p, q);
          progress = true;
        } else if (phi[p] != q) {
          undo();
          return false;
        }
      }
    }
  }
  std::size_t pick = a.size();
  for (std::size_t x = 0; x < a.size(); ++x)
    if (phi[x] < 0) {
      pick = x;
      break;
    }
  if (pick == a.size()) return true;
  for (std::size_t y = 0; y < b.size(); ++y) {
    if (used[y] || colors[1][y] != colors[0][pick]) continue;
    phi[pick] = y;
    used[y] = true;
    if (extend_isomorphism(a, b, colors, phi, used)) return true;
    phi[pick] = -1;
    used[y] = false;
  }
  undo();
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> monoid_isomorphism(const DRMonoid& a,
                                                           const DRMonoid& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto colors = refine_colors(a, b);
  std::map<long, long> count_a, count_b;
  for (long c : colors[0]) ++count_a[c];
  for (long c : colors[1]) ++count_b[c];
  if (count_a != count_b) return std::nullopt;
  std::vector<long> phi(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  if (!extend_isomorphism(a, b, colors, phi, used)) return std::nullopt;
  std::vector<std::size_t> out(phi.begin(), phi.end());
  return out;
}

}  // namespace bcw
