#include "bcw/residue.hpp"

namespace bcw {

namespace {

std::vector<Int> int_coords(const FieldElement& x) {
  std::vector<Int> r;
  for (const Rat& c : x.coords) {
    if (c.get_den() != 1)
      throw MathInputError("residue arithmetic needs an integral element");
    r.push_back(c.get_num());
  }
  return r;
}

}  // namespace

ResidueRing::ResidueRing(const NumberField& k, const FractionalIdeal& f)
    : k_(&k), f_(f) {
  if (!f.is_integral())
    throw MathInputError("residue ring modulus must be integral");
  Rat nrm = ideal_norm(k, f);
  size_ = nrm.get_num();
  std::size_t n = k.degree();
  // odometer over the HNF pivot ranges
  const IntMatrix& h = f.numerator();
  std::vector<Int> c(n, Int(0));
  for (;;) {
    FieldElement x = k.zero();
    for (std::size_t i = 0; i < n; ++i) x.coords[i] = Rat(c[i]);
    reps_.push_back(reduce(x));
    std::size_t i = 0;
    while (i < n) {
      ++c[i];
      if (c[i] < h.at(i, i)) break;
      c[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
}

FieldElement ResidueRing::reduce(const FieldElement& x) const {
  std::vector<Int> v = int_coords(x);
  const IntMatrix& h = f_.numerator();
  std::size_t n = v.size();
  for (std::size_t ii = 0; ii < n; ++ii) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v[ii].get_mpz_t(), h.at(ii, ii).get_mpz_t());
    if (q != 0)
      for (std::size_t j = ii; j < n; ++j) v[j] -= q * h.at(ii, j);
  }
  FieldElement r = k_->zero();
  for (std::size_t i = 0; i < n; ++i) r.coords[i] = Rat(v[i]);
  return r;
}

bool ResidueRing::is_unit(const FieldElement& x) const {
  if (size_ == 1) return true;
  FieldElement r = reduce(x);
  if (r.is_zero()) return false;
  return ideals_coprime(*k_, principal_ideal(*k_, r), f_);
}

ResidueUnits::ResidueUnits(const NumberField& k, const FractionalIdeal& f)
    : ring_(k, f) {
  std::vector<FieldElement> units;
  for (const FieldElement& r : ring_.representatives())
    if (ring_.is_unit(r)) units.push_back(r);
  unit_reps_ = units;

  FieldElement one = ring_.reduce(k.one());
  // incremental generator discovery: exponent vectors over the generators
  // found so far, one relation per generator
  auto key = [](const FieldElement& x) {
    std::vector<Int> v;
    for (const Rat& c : x.coords) v.push_back(c.get_num());
    return v;
  };

  std::map<std::vector<Int>, std::vector<Int>> expvec;
  std::vector<std::pair<FieldElement, std::vector<Int>>> span;
  expvec[key(one)] = {};
  span.emplace_back(one, std::vector<Int>{});
  std::size_t ngens = 0;
  std::vector<std::vector<Int>> relations;

  for (const FieldElement& g : units) {
    if (expvec.count(key(g))) continue;
    // least m >= 1 with g^m already in the span
    FieldElement cur = g;
    std::size_t m = 1;
    while (!expvec.count(key(cur))) {
      cur = ring_.reduce(k.mul(cur, g));
      ++m;
    }
    std::vector<Int> rel(ngens + 1, Int(0));
    const std::vector<Int>& base = expvec.at(key(cur));
    for (std::size_t i = 0; i < base.size(); ++i) rel[i] = -base[i];
    rel[ngens] = Int(m);
    // extend every relation and exponent vector to the new coordinate
    for (auto& r : relations) r.resize(ngens + 1, Int(0));
    relations.push_back(rel);
    std::vector<std::pair<FieldElement, std::vector<Int>>> grown;
    for (auto& [h, e] : span) {
      std::vector<Int> e2 = e;
      e2.resize(ngens + 1, Int(0));
      FieldElement prod = h;
      for (std::size_t t = 0; t < m; ++t) {
        std::vector<Int> et = e2;
        et[ngens] = Int(t);
        grown.emplace_back(prod, et);
        prod = ring_.reduce(k.mul(prod, g));
      }
    }
    span = std::move(grown);
    expvec.clear();
    for (auto& [h, e] : span) expvec[key(h)] = e;
    ++ngens;
  }

  if (span.size() != units.size())
    throw InternalCheckError("residue unit span does not exhaust the units");

  IntMatrix relmat(0, ngens);
  for (auto& r : relations) {
    r.resize(ngens, Int(0));
    relmat.append_row(r);
  }
  GroupPresentation pres = group_from_relations(ngens, relmat);
  group_ = pres.group;
  if (group_.order() != Int(units.size()))
    throw InternalCheckError("residue unit group order mismatch");
  for (auto& [h, e] : span) {
    FiniteAbelianGroup::Element img = group_.zero();
    for (std::size_t i = 0; i < ngens; ++i)
      img = group_.add(img, group_.scale(e[i], pres.generator_images[i]));
    log_[key(h)] = img;
    rep_.emplace(img, h);
  }
}

FiniteAbelianGroup::Element ResidueUnits::log(const FieldElement& x) const {
  FieldElement r = ring_.reduce(x);
  std::vector<Int> k;
  for (const Rat& c : r.coords) k.push_back(c.get_num());
  auto it = log_.find(k);
  if (it == log_.end())
    throw MathInputError("residue is not a unit modulo f");
  return it->second;
}

const FieldElement& ResidueUnits::representative(
    const FiniteAbelianGroup::Element& e) const {
  auto it = rep_.find(group_.reduce(e));
  if (it == rep_.end())
    throw InternalCheckError("no representative for group element");
  return it->second;
}

}  // namespace bcw
