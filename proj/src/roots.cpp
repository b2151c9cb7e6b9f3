#include "bcw/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcw {

SturmChain::SturmChain(const RatPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  chain_.push_back(p);
  RatPolynomial d = p.derivative();
  if (!d.is_zero()) {
    chain_.push_back(d);
    for (;;) {
      RatPolynomial r = chain_[chain_.size() - 2].rem(chain_.back());
      if (r.is_zero()) break;
      // negate the remainder
      std::vector<Rat> neg = r.coeffs();
      for (Rat& x : neg) x = -x;
      chain_.emplace_back(std::move(neg));
    }
  }
  // Cauchy bound: 1 + max |c_i| / |lead|
  Rat lead = abs(p.coeffs().back());
  Rat m(0);
  for (const Rat& c : p.coeffs())
    if (abs(c) > m) m = abs(c);
  bound_ = Rat(1) + m / lead;
  bound_.canonicalize();
}

int SturmChain::variations_at(const Rat& x) const {
  int var = 0, prev = 0;
  for (const RatPolynomial& f : chain_) {
    Rat v = f.eval(x);
    int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_all_roots() const {
  return count_roots(-bound_, bound_);
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& g) {
  RatPolynomial p{g};
  if (p.degree() < 1) return {};
  SturmChain sturm(p);
  Rat lead = abs(Rat(g.leading()));
  Rat m(0);
  for (const Int& c : g.coeffs())
    if (abs(Rat(c)) > m) m = abs(Rat(c));
  Rat bound = Rat(1) + m / lead;
  bound.canonicalize();

  std::vector<RootInterval> out;
  std::vector<RootInterval> work{{-bound, bound}};
  while (!work.empty()) {
    RootInterval iv = work.back();
    work.pop_back();
    int n = sturm.count_roots(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    Rat mid = (iv.lo + iv.hi) / 2;
    mid.canonicalize();
    work.push_back({mid, iv.hi});
    work.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) {
              return a.lo < b.lo;
            });
  return out;
}

std::vector<Sign> real_root_signs(const IntPolynomial& g,
                                  const IntPolynomial& a) {
  if (g.degree() < 1)
    throw std::invalid_argument("real_root_signs: g must be non-constant");
  RatPolynomial gq{g};
  if (RatPolynomial::gcd(gq, gq.derivative()).degree() > 0)
    throw std::invalid_argument("real_root_signs: g is not squarefree");

  std::vector<RootInterval> roots = isolate_real_roots(g);
  std::vector<Sign> out;
  if (roots.empty()) return out;

  SturmChain g_sturm(gq);
  RatPolynomial aq{a};

  // common roots of g and a get the "zero" sign
  RatPolynomial common = aq.is_zero()
                             ? gq
                             : RatPolynomial::gcd(gq, aq);

  for (const RootInterval& root : roots) {
    RootInterval iv = root;
    if (common.degree() > 0 &&
        SturmChain(common).count_roots(iv.lo, iv.hi) > 0) {
      out.push_back(Sign::Zero);
      continue;
    }
    if (aq.is_zero()) {
      out.push_back(Sign::Zero);
      continue;
    }
    // shrink until a has no root in (lo, hi] and a(hi) != 0; then the sign
    // of a is constant on the closure of the root's interval
    SturmChain a_sturm =
        aq.degree() >= 1 ? SturmChain(aq) : SturmChain(RatPolynomial{
                                                std::vector<Rat>{Rat(1)}});
    for (;;) {
      bool clear = aq.degree() < 1 || a_sturm.count_roots(iv.lo, iv.hi) == 0;
      if (clear && aq.eval(iv.hi) != 0) break;
      Rat mid = (iv.lo + iv.hi) / 2;
      mid.canonicalize();
      if (g_sturm.count_roots(iv.lo, mid) == 1)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
    int s = sgn(aq.eval(iv.hi));
    out.push_back(s > 0 ? Sign::Positive : Sign::Negative);
  }
  return out;
}

}  // namespace bcw
