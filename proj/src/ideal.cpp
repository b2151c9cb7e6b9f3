#include "bcw/ideal.hpp"

#include <algorithm>

namespace bcw {

namespace {

// coordinates of x as integer row; throws if not integral
std::vector<Int> int_coords(const FieldElement& x) {
  std::vector<Int> r;
  for (const Rat& c : x.coords) {
    if (c.get_den() != 1) throw InternalCheckError("expected integral coords");
    r.push_back(c.get_num());
  }
  return r;
}

FieldElement element_from_row(const NumberField& k, const std::vector<Int>& v) {
  FieldElement e = k.zero();
  for (std::size_t i = 0; i < v.size(); ++i) e.coords[i] = Rat(v[i]);
  return e;
}

// rows x * basis_j for an integral element x
void append_module_rows(const NumberField& k, const FieldElement& x,
                        IntMatrix& m) {
  for (std::size_t j = 0; j < k.degree(); ++j)
    m.append_row(int_coords(k.mul(x, k.basis_element(j))));
}

Int matrix_content_gcd(const IntMatrix& m, const Int& extra) {
  Int g = extra;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = gcd(g, m.at(i, j));
  return g;
}

}  // namespace

FractionalIdeal FractionalIdeal::unit(const NumberField& k) {
  return from_lattice(k, IntMatrix::identity(k.degree()), Int(1));
}

FractionalIdeal FractionalIdeal::from_lattice(const NumberField& k,
                                              const IntMatrix& m,
                                              const Int& den) {
  if (den <= 0) throw MathInputError("ideal denominator must be positive");
  FractionalIdeal a;
  a.num_ = hnf(m);
  if (a.num_.rows() != k.degree())
    throw MathInputError("zero ideal is not allowed");
  a.den_ = den;
  Int g = matrix_content_gcd(a.num_, den);
  if (g > 1) {
    for (std::size_t i = 0; i < a.num_.rows(); ++i)
      for (std::size_t j = 0; j < a.num_.cols(); ++j)
        a.num_.at(i, j) /= g;
    a.den_ /= g;
  }
  return a;
}

int FractionalIdeal::compare(const NumberField& k,
                             const FractionalIdeal& o) const {
  Rat na = ideal_norm(k, *this), nb = ideal_norm(k, o);
  int c = cmp(na, nb);
  if (c != 0) return c;
  c = cmp(den_, o.den_);
  if (c != 0) return c;
  return num_.compare(o.num_);
}

Int PrimeIdeal::norm() const {
  Int n(1);
  for (int i = 0; i < deg; ++i) n *= p;
  return n;
}

FractionalIdeal ideal_from_generators(const NumberField& k,
                                      const std::vector<FieldElement>& xs) {
  Int den(1);
  bool nonzero = false;
  for (const FieldElement& x : xs) {
    if (!x.is_zero()) nonzero = true;
    for (const Rat& c : x.coords) den = lcm(den, c.get_den());
  }
  if (!nonzero) throw MathInputError("all ideal generators are zero");
  IntMatrix m(0, k.degree());
  for (const FieldElement& x : xs) {
    if (x.is_zero()) continue;
    append_module_rows(k, k.scale(Rat(den), x), m);
  }
  return FractionalIdeal::from_lattice(k, m, den);
}

FractionalIdeal principal_ideal(const NumberField& k, const FieldElement& x) {
  return ideal_from_generators(k, {x});
}

FractionalIdeal ideal_product(const NumberField& k, const FractionalIdeal& a,
                              const FractionalIdeal& b) {
  IntMatrix m(0, k.degree());
  for (std::size_t i = 0; i < a.numerator().rows(); ++i) {
    FieldElement xi = element_from_row(k, a.numerator().row(i));
    for (std::size_t j = 0; j < b.numerator().rows(); ++j) {
      FieldElement yj = element_from_row(k, b.numerator().row(j));
      m.append_row(int_coords(k.mul(xi, yj)));
    }
  }
  return FractionalIdeal::from_lattice(k, m,
                                       a.denominator() * b.denominator());
}

Rat ideal_norm(const NumberField& k, const FractionalIdeal& a) {
  Int d = a.numerator().det();
  if (d < 0) d = -d;
  Rat den(1);
  for (std::size_t i = 0; i < k.degree(); ++i) den *= a.denominator();
  Rat r = Rat(d) / den;
  r.canonicalize();
  return r;
}

FractionalIdeal ideal_inverse(const NumberField& k, const FractionalIdeal& a) {
  std::size_t n = k.degree();
  // work with the integral ideal A = den * a; then a^(-1) = den * A^(-1)
  const IntMatrix& A = a.numerator();
  Int N = A.det();
  if (N < 0) N = -N;
  // A^(-1) = {y/N : y*M_i in N*Z^n for all rows a_i of A}, where M_i is
  // multiplication by a_i on O_K coordinates
  IntMatrix stacked(n + n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement ai = element_from_row(k, A.row(i));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Int> prod = int_coords(k.mul(k.basis_element(j), ai));
      for (std::size_t c = 0; c < n; ++c) stacked.at(j, i * n + c) = prod[c];
    }
  }
  for (std::size_t z = 0; z < n * n; ++z) stacked.at(n + z, z) = N;
  IntMatrix ker = left_kernel(stacked);
  IntMatrix ybasis(0, n);
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    std::vector<Int> full = ker.row(i);
    std::vector<Int> y(full.begin(), full.begin() + n);
    bool all_zero = std::all_of(y.begin(), y.end(),
                                [](const Int& v) { return v == 0; });
    if (!all_zero) ybasis.append_row(y);
  }
  // a^(-1) = den * (ybasis / N)
  FractionalIdeal inv = FractionalIdeal::from_lattice(k, ybasis, N);
  IntMatrix scaled = inv.numerator();
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j)
      scaled.at(i, j) *= a.denominator();
  inv = FractionalIdeal::from_lattice(k, scaled, inv.denominator());
  if (!(ideal_product(k, a, inv) == FractionalIdeal::unit(k)))
    throw InternalCheckError("ideal inverse failed the a * a^(-1) = (1) check");
  return inv;
}

FractionalIdeal ideal_pow(const NumberField& k, const FractionalIdeal& a,
                          const Int& e) {
  if (e < 0) return ideal_pow(k, ideal_inverse(k, a), -e);
  FractionalIdeal r = FractionalIdeal::unit(k), base = a;
  Int m = e;
  while (m > 0) {
    if (mpz_odd_p(m.get_mpz_t())) r = ideal_product(k, r, base);
    base = ideal_product(k, base, base);
    m >>= 1;
  }
  return r;
}

FractionalIdeal ideal_sum(const NumberField& k, const FractionalIdeal& a,
                          const FractionalIdeal& b) {
  // common denominator lcm
  Int d = lcm(a.denominator(), b.denominator());
  IntMatrix m(0, k.degree());
  Int fa = d / a.denominator(), fb = d / b.denominator();
  for (std::size_t i = 0; i < a.numerator().rows(); ++i) {
    std::vector<Int> r = a.numerator().row(i);
    for (Int& x : r) x *= fa;
    m.append_row(r);
  }
  for (std::size_t i = 0; i < b.numerator().rows(); ++i) {
    std::vector<Int> r = b.numerator().row(i);
    for (Int& x : r) x *= fb;
    m.append_row(r);
  }
  return FractionalIdeal::from_lattice(k, m, d);
}

bool ideal_contains(const NumberField& k, const FractionalIdeal& a,
                    const FieldElement& x) {
  // x in (1/den)*L  iff  den*x has integer coords lying in L
  std::vector<Int> v(k.degree());
  for (std::size_t i = 0; i < k.degree(); ++i) {
    Rat c = x.coords[i] * Rat(a.denominator());
    c.canonicalize();
    if (c.get_den() != 1) return false;
    v[i] = c.get_num();
  }
  return hnf_contains(a.numerator(), v);
}

bool ideal_contains_ideal(const NumberField& k, const FractionalIdeal& a,
                          const FractionalIdeal& b) {
  for (std::size_t i = 0; i < b.numerator().rows(); ++i) {
    FieldElement x = element_from_row(k, b.numerator().row(i));
    x = k.scale(Rat(1, b.denominator()), x);
    for (Rat& c : x.coords) c.canonicalize();
    if (!ideal_contains(k, a, x)) return false;
  }
  return true;
}

bool ideals_coprime(const NumberField& k, const FractionalIdeal& a,
                    const FractionalIdeal& b) {
  return ideal_sum(k, a, b) == FractionalIdeal::unit(k);
}

std::vector<PrimeIdeal> primes_above(const NumberField& k, const Int& p) {
  if (!is_prime(p)) throw MathInputError("primes_above: not a rational prime");
  std::vector<PrimeIdeal> out;
  if (k.degree() == 1) {
    PrimeIdeal P{p, principal_ideal(k, k.from_rational(Rat(p))), 1, 1};
    out.push_back(std::move(P));
    return out;
  }
  if (!k.monogenic())
    throw MathInputError(
        "prime splitting requires a monogenic ring of integers");
  // factor the minimal polynomial of the generator omega modulo p
  IntPolynomial h = k.min_poly_of_basis(1);
  std::vector<Int> roots;
  for (Int r = 0; r < p; ++r)
    if (h.eval_int(r) % p == 0) roots.push_back(r);
  FieldElement omega = k.basis_element(1);
  FieldElement pe = k.from_rational(Rat(p));
  if (roots.empty()) {
    // inert
    out.push_back(PrimeIdeal{p, principal_ideal(k, pe), 2, 1});
  } else if (roots.size() == 2) {
    for (const Int& r : roots) {
      FieldElement gen = k.sub(omega, k.from_rational(Rat(r)));
      out.push_back(
          PrimeIdeal{p, ideal_from_generators(k, {pe, gen}), 1, 1});
    }
  } else {
    // single root: ramified iff it is a double root mod p
    const Int& r = roots[0];
    FieldElement gen = k.sub(omega, k.from_rational(Rat(r)));
    FractionalIdeal P = ideal_from_generators(k, {pe, gen});
    Int hp = h.derivative().eval_int(r) % p;
    if (hp == 0) {
      out.push_back(PrimeIdeal{p, P, 1, 2});
    } else {
      // simple root plus an irreducible factor cannot happen for degree 2
      throw InternalCheckError("unexpected splitting pattern");
    }
  }
  return out;
}

int ideal_valuation(const NumberField& k, const FractionalIdeal& a,
                    const PrimeIdeal& P) {
  if (!a.is_integral())
    throw MathInputError("ideal_valuation expects an integral ideal");
  int v = 0;
  FractionalIdeal power = P.ideal;
  while (ideal_contains_ideal(k, power, a)) {
    ++v;
    power = ideal_product(k, power, P.ideal);
    if (v > 4096) throw InternalCheckError("runaway valuation");
  }
  return v;
}

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const NumberField& k,
                                                     const FractionalIdeal& a) {
  if (!a.is_integral())
    throw MathInputError("factor_ideal expects a nonzero integral ideal");
  Rat nr = ideal_norm(k, a);
  Int n = nr.get_num();
  std::vector<std::pair<PrimeIdeal, int>> out;
  if (n == 1) return out;
  for (auto& [p, e] : factor_integer(n)) {
    for (PrimeIdeal& P : primes_above(k, p)) {
      int v = ideal_valuation(k, a, P);
      if (v > 0) out.emplace_back(std::move(P), v);
    }
  }
  FractionalIdeal check = FractionalIdeal::unit(k);
  for (auto& [P, e] : out)
    check = ideal_product(k, check, ideal_pow(k, P.ideal, e));
  if (!(check == a))
    throw InternalCheckError("ideal factorization failed to reassemble");
  return out;
}

std::vector<FractionalIdeal> enumerate_ideals(const NumberField& k,
                                              const Int& bound) {
  if (bound < 1) throw MathInputError("enumerate_ideals: bound must be >= 1");
  std::vector<std::pair<FractionalIdeal, Int>> acc{
      {FractionalIdeal::unit(k), Int(1)}};
  for (Int p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (const PrimeIdeal& P : primes_above(k, p)) {
      Int np = P.norm();
      if (np > bound) continue;
      std::size_t existing = acc.size();
      for (std::size_t i = 0; i < existing; ++i) {
        FractionalIdeal cur = acc[i].first;
        Int nn = acc[i].second;
        for (;;) {
          nn *= np;
          if (nn > bound) break;
          cur = ideal_product(k, cur, P.ideal);
          acc.emplace_back(cur, nn);
        }
      }
    }
  }
  std::vector<FractionalIdeal> out;
  out.reserve(acc.size());
  for (auto& [ideal, nrm] : acc) out.push_back(std::move(ideal));
  std::sort(out.begin(), out.end(),
            [&k](const FractionalIdeal& a, const FractionalIdeal& b) {
              return a.compare(k, b) < 0;
            });
  return out;
}

std::vector<FractionalIdeal> divisors_of(const NumberField& k,
                                         const FractionalIdeal& f) {
  auto factors = factor_ideal(k, f);
  std::vector<FractionalIdeal> out{FractionalIdeal::unit(k)};
  for (auto& [P, e] : factors) {
    std::size_t existing = out.size();
    FractionalIdeal power = FractionalIdeal::unit(k);
    for (int i = 1; i <= e; ++i) {
      power = ideal_product(k, power, P.ideal);
      for (std::size_t j = 0; j < existing; ++j)
        out.push_back(ideal_product(k, out[j], power));
    }
  }
  std::sort(out.begin(), out.end(),
            [&k](const FractionalIdeal& a, const FractionalIdeal& b) {
              return a.compare(k, b) < 0;
            });
  return out;
}

}  // namespace bcw
