#include "bcw/abelian.hpp"

namespace bcw {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> invariant_factors)
    : d_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] < 2) throw std::invalid_argument("invariant factor < 2");
    if (i + 1 < d_.size() && d_[i + 1] % d_[i] != 0)
      throw std::invalid_argument("invariant factors do not form a chain");
  }
}

Int FiniteAbelianGroup::order() const {
  Int n(1);
  for (const Int& d : d_) n *= d;
  return n;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::reduce(const Element& v) const {
  if (v.size() != d_.size()) throw std::invalid_argument("bad element size");
  Element r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_fdiv_r(r[i].get_mpz_t(), v[i].get_mpz_t(), d_[i].get_mpz_t());
  return r;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a,
                                                    const Element& b) const {
  Element r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) r[i] = a[i] + b[i];
  return reduce(r);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::neg(const Element& a) const {
  Element r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) r[i] = -a[i];
  return reduce(r);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::scale(const Int& k,
                                                      const Element& a) const {
  Element r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) r[i] = k * a[i];
  return reduce(r);
}

bool FiniteAbelianGroup::is_zero(const Element& a) const {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

Int FiniteAbelianGroup::element_order(const Element& a) const {
  Int ord(1);
  for (std::size_t i = 0; i < d_.size(); ++i) {
    Int o = d_[i] / gcd(a[i], d_[i]);
    ord = lcm(ord, o);
  }
  return ord;
}

Int FiniteAbelianGroup::exponent() const {
  return d_.empty() ? Int(1) : d_.back();
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out{zero()};
  for (std::size_t i = 0; i < d_.size(); ++i) {
    std::vector<Element> next;
    for (Int v(0); v < d_[i]; ++v)
      for (const Element& e : out) {
        Element f = e;
        f[i] = v;
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupPresentation group_from_relations(std::size_t num_generators,
                                       const IntMatrix& relations) {
  IntMatrix rel = relations;
  if (rel.rows() == 0) rel = IntMatrix(0, num_generators);
  if (rel.cols() != num_generators)
    throw std::invalid_argument("relation width != number of generators");

  SnfResult s = snf(rel);
  // diagonal entries, padded with zeros up to num_generators
  std::vector<Int> diag(num_generators, Int(0));
  for (std::size_t i = 0; i < std::min(rel.rows(), rel.cols()); ++i)
    diag[i] = s.d.at(i, i);

  std::size_t free_rank = 0;
  for (const Int& d : diag)
    if (d == 0) ++free_rank;
  if (free_rank > 0) throw InfiniteQuotientError(free_rank);

  // keep the columns with invariant factor >= 2
  std::vector<std::size_t> keep;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < num_generators; ++i)
    if (diag[i] >= 2) {
      keep.push_back(i);
      factors.push_back(diag[i]);
    }
  GroupPresentation out;
  out.group = FiniteAbelianGroup(std::move(factors));

  // generator e_i maps to (e_i * V) reduced modulo the factors
  for (std::size_t i = 0; i < num_generators; ++i) {
    FiniteAbelianGroup::Element img;
    for (std::size_t k : keep) img.push_back(s.v.at(i, k));
    out.generator_images.push_back(out.group.reduce(img));
  }
  return out;
}

}  // namespace bcw
