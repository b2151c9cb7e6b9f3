#pragma once

#include <vector>

#include "bcw/poly.hpp"

namespace bcw {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

// Isolating interval (lo, hi] with rational endpoints containing exactly
// one real root of the polynomial it was produced for.
struct RootInterval {
  Rat lo, hi;
};

// Sturm sequence of a squarefree polynomial; supports exact root counting
// on half-open intervals (a, b].
class SturmChain {
 public:
  explicit SturmChain(const RatPolynomial& p);
  int variations_at(const Rat& x) const;
  int count_roots(const Rat& a, const Rat& b) const;  // roots in (a, b]
  int count_all_roots() const;

 private:
  std::vector<RatPolynomial> chain_;
  Rat bound_;  // all real roots lie in (-bound_, bound_]
};

// Isolating intervals for all real roots of squarefree g, in increasing
// order of the roots.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& g);

// Exact sign of a at each real root of g, roots in increasing order.
// Interval refinement only; no floating point in the decision path.
// Requires g squarefree (throws std::invalid_argument otherwise) and
// deg(a) < deg(g) is the documented contract, though any a is handled.
std::vector<Sign> real_root_signs(const IntPolynomial& g,
                                  const IntPolynomial& a);

}  // namespace bcw
