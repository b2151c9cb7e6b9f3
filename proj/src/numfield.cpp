#include "bcw/numfield.hpp"

#include <algorithm>

namespace bcw {

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix rat_identity(std::size_t n) {
  RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Gauss-Jordan inverse; throws if singular.
RatMatrix rat_inverse(RatMatrix a) {
  std::size_t n = a.size();
  RatMatrix inv = rat_identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw MathInputError("integral basis matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rat piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      a[c][j].canonicalize();
      inv[c][j] /= piv;
      inv[c][j].canonicalize();
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        a[i][j].canonicalize();
        inv[i][j] -= f * inv[c][j];
        inv[i][j].canonicalize();
      }
    }
  }
  return inv;
}

Rat rat_det(RatMatrix a) {
  std::size_t n = a.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    det.canonicalize();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        a[i][j].canonicalize();
      }
    }
  }
  return det;
}

std::vector<Rat> rat_vec_mat(const std::vector<Rat>& v, const RatMatrix& m) {
  std::size_t n = m.size();
  std::vector<Rat> r(m[0].size(), Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) {
      r[j] += v[i] * m[i][j];
      r[j].canonicalize();
    }
  }
  return r;
}

// ---- polynomial arithmetic over F_p, for irreducibility certification ----

using PModPoly = std::vector<Int>;  // low-first, entries in [0, p)

PModPoly pmod_trim(PModPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PModPoly pmod_from(const IntPolynomial& f, const Int& p) {
  PModPoly a;
  for (const Int& c : f.coeffs()) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    a.push_back(r);
  }
  return pmod_trim(std::move(a));
}

PModPoly pmod_mul(const PModPoly& a, const PModPoly& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  PModPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (Int& c : r) c %= p;
  return pmod_trim(std::move(r));
}

PModPoly pmod_rem(PModPoly a, const PModPoly& m, const Int& p) {
  Int lead_inv = powmod(m.back(), p - 2, p);  // p prime
  while (a.size() >= m.size()) {
    Int f = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) {
      a[shift + j] = (a[shift + j] - f * m[j]) % p;
      if (a[shift + j] < 0) a[shift + j] += p;
    }
    a = pmod_trim(std::move(a));
    if (a.size() < m.size()) break;
  }
  return pmod_trim(std::move(a));
}

PModPoly pmod_gcd(PModPoly a, PModPoly b, const Int& p) {
  while (!b.empty()) {
    PModPoly r = pmod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Int inv = powmod(a.back(), p - 2, p);
    for (Int& c : a) c = (c * inv) % p;
  }
  return a;
}

PModPoly pmod_powmod(PModPoly base, Int e, const PModPoly& m, const Int& p) {
  PModPoly r{Int(1)};
  base = pmod_rem(std::move(base), m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmod_rem(pmod_mul(r, base, p), m, p);
    base = pmod_rem(pmod_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

PModPoly pmod_derivative(const PModPoly& a, const Int& p) {
  PModPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back((Int(i) * a[i]) % p);
  return pmod_trim(std::move(r));
}

PModPoly pmod_divexact(const PModPoly& a, const PModPoly& b, const Int& p) {
  // a = q*b exactly; reconstruct q by long division
  PModPoly rem = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0,
                      Int(0));
  Int lead_inv = powmod(b.back(), p - 2, p);
  while (rem.size() >= b.size()) {
    Int f = (rem.back() * lead_inv) % p;
    std::size_t shift = rem.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[shift + j] = (rem[shift + j] - f * b[j]) % p;
      if (rem[shift + j] < 0) rem[shift + j] += p;
    }
    rem = pmod_trim(std::move(rem));
    if (rem.empty()) break;
  }
  return pmod_trim(std::move(q));
}

// Multiset of irreducible-factor degrees of f mod p, or empty optional when
// f mod p is not squarefree (bad prime).
std::optional<std::vector<long>> factor_degree_pattern(const IntPolynomial& f,
                                                       const Int& p) {
  PModPoly g = pmod_from(f, p);
  if (static_cast<long>(g.size()) - 1 != f.degree()) return {};  // lead drop
  if (pmod_gcd(g, pmod_derivative(g, p), p).size() > 1) return {};
  std::vector<long> degs;
  PModPoly work = g;
  PModPoly h{Int(0), Int(1)};  // x
  long d = 0;
  while (work.size() > 1) {
    ++d;
    h = pmod_powmod(std::move(h), p, g, p);  // x^(p^d) mod g
    PModPoly hm = h;
    // h - x
    if (hm.size() < 2) hm.resize(2, Int(0));
    hm[1] = (hm[1] - 1) % p;
    if (hm[1] < 0) hm[1] += p;
    PModPoly f_d = pmod_gcd(pmod_trim(std::move(hm)), work, p);
    if (f_d.size() > 1) {
      long count = (static_cast<long>(f_d.size()) - 1) / d;
      for (long i = 0; i < count; ++i) degs.push_back(d);
      work = pmod_divexact(work, f_d, p);
    }
    if (d > f.degree()) break;
  }
  return degs;
}

std::vector<bool> subset_sums(const std::vector<long>& degs, long n) {
  std::vector<bool> can(n + 1, false);
  can[0] = true;
  for (long d : degs)
    for (long s = n; s >= d; --s)
      if (can[s - d]) can[s] = true;
  return can;
}

}  // namespace

bool is_irreducible(const IntPolynomial& g) {
  long n = g.degree();
  if (n < 1) return false;
  if (!g.is_monic()) throw MathInputError("defining polynomial must be monic");
  if (n == 1) return true;
  if (g.coeff(0) == 0) return false;  // x divides
  if (n <= 3) {
    // monic integer polynomial: rational roots are integer divisors of the
    // constant term
    Int c0 = abs(g.coeff(0));
    for (Int d = 1; d * d <= c0; ++d) {
      if (c0 % d != 0) continue;
      for (const Int& cand :
           {Int(d), Int(-d), Int(c0 / d), Int(-(c0 / d))})
        if (g.eval_int(cand) == 0) return false;
    }
    if (n == 2) return true;
    return true;  // cubic with no rational root is irreducible
  }
  // degree >= 4: intersect achievable factor degrees over three good primes
  std::vector<bool> possible(n + 1, true);
  int good = 0;
  for (Int p = 2; good < 3 && p < 1000; p = p == 2 ? Int(3) : Int(p + 2)) {
    if (!is_prime(p)) continue;
    auto pattern = factor_degree_pattern(g, p);
    if (!pattern) continue;
    ++good;
    std::vector<bool> can = subset_sums(*pattern, n);
    for (long s = 0; s <= n; ++s) possible[s] = possible[s] && can[s];
  }
  if (good < 3) throw MathInputError("cannot certify irreducibility");
  for (long s = 1; s < n; ++s)
    if (possible[s]) throw MathInputError("cannot certify irreducibility");
  return true;
}

bool FieldElement::is_integral() const {
  for (const Rat& c : coords)
    if (c.get_den() != 1) return false;
  return true;
}

bool FieldElement::is_zero() const {
  for (const Rat& c : coords)
    if (c != 0) return false;
  return true;
}

void NumberField::compute_signature() {
  std::size_t real_roots = isolate_real_roots(g_).size();
  r1_ = static_cast<int>(real_roots);
  r2_ = static_cast<int>((n_ - real_roots) / 2);
  if (static_cast<std::size_t>(r1_ + 2 * r2_) != n_)
    throw InternalCheckError("signature mismatch");
}

void NumberField::build_tables() {
  basis_inv_ = rat_inverse(basis_);
  table_.assign(n_, std::vector<std::vector<Int>>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      // product of basis elements in the power basis, reduced mod g
      std::vector<Rat> prod(2 * n_ - 1, Rat(0));
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
          prod[a + b] += basis_[i][a] * basis_[j][b];
          prod[a + b].canonicalize();
        }
      // reduce powers >= n via theta^n = -(lower coefficients of g)
      for (std::size_t d = 2 * n_ - 2; d >= n_ && d < prod.size(); --d) {
        if (prod[d] == 0) continue;
        Rat c = prod[d];
        prod[d] = 0;
        for (std::size_t k = 0; k < n_; ++k) {
          prod[d - n_ + k] -= c * Rat(g_.coeff(k));
          prod[d - n_ + k].canonicalize();
        }
      }
      prod.resize(n_);
      std::vector<Rat> coords = rat_vec_mat(prod, basis_inv_);
      std::vector<Int> row;
      for (Rat& c : coords) {
        c.canonicalize();
        if (c.get_den() != 1)
          throw MathInputError(
              "integral basis is not closed under multiplication");
        row.push_back(c.get_num());
      }
      table_[i][j] = std::move(row);
    }
  // 1 must be an integral combination of the basis
  std::vector<Rat> one_pb(n_, Rat(0));
  one_pb[0] = 1;
  for (const Rat& c : rat_vec_mat(one_pb, basis_inv_))
    if (c.get_den() != 1)
      throw MathInputError("1 is not in the span of the integral basis");
}

void NumberField::compute_discriminant() {
  RatMatrix tr(n_, std::vector<Rat>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      tr[i][j] = trace(mul(basis_element(i), basis_element(j)));
  Rat d = rat_det(tr);
  if (d.get_den() != 1)
    throw InternalCheckError("discriminant is not an integer");
  disc_ = d.get_num();
}

NumberField NumberField::make(
    const IntPolynomial& g,
    std::optional<std::vector<std::vector<Rat>>> integral_basis,
    std::optional<UnitGroup> units) {
  if (g.degree() < 1) throw MathInputError("degree must be at least 1");
  if (!g.is_monic()) throw MathInputError("defining polynomial must be monic");
  if (!is_irreducible(g))
    throw MathInputError("defining polynomial is reducible: " + g.to_string());

  NumberField k;
  k.n_ = static_cast<std::size_t>(g.degree());
  k.g_ = g;

  if (!integral_basis && k.n_ > 2)
    throw MathInputError(
        "degree >= 3 requires a user-supplied integral basis and units");

  Int disc0_d, disc0_s;  // squarefree part / square part of disc(g), n = 2
  if (integral_basis) {
    k.basis_ = *integral_basis;
    if (k.basis_.size() != k.n_)
      throw MathInputError("integral basis has wrong size");
    for (auto& row : k.basis_)
      if (row.size() != k.n_)
        throw MathInputError("integral basis has wrong size");
  } else if (k.n_ == 1) {
    k.basis_ = {{Rat(1)}};
  } else {
    // quadratic: {1, sqrt(D)} or {1, (1+sqrt(D))/2} with D the squarefree
    // part of disc(g); sqrt(D) = (2*theta + b) / s
    const Int& b = g.coeff(1);
    Int disc0 = b * b - 4 * g.coeff(0);
    squarefree_decompose(disc0, disc0_d, disc0_s);
    Rat inv_s(1, disc0_s);
    inv_s.canonicalize();
    std::vector<Rat> sqrtD{Rat(b) * inv_s, Rat(2) * inv_s};  // in power basis
    sqrtD[0].canonicalize();
    sqrtD[1].canonicalize();
    Int dmod4;
    mpz_fdiv_r(dmod4.get_mpz_t(), disc0_d.get_mpz_t(), Int(4).get_mpz_t());
    std::vector<Rat> omega = sqrtD;
    if (dmod4 == 1) {
      omega[0] = (Rat(1) + sqrtD[0]) / 2;
      omega[1] = sqrtD[1] / 2;
      omega[0].canonicalize();
      omega[1].canonicalize();
    }
    k.basis_ = {{Rat(1), Rat(0)}, omega};
  }

  k.build_tables();
  k.compute_signature();
  k.compute_discriminant();
  k.monogenic_ = k.n_ <= 2;

  if (units) {
    k.units_ = *units;
    // validate rather than trust
    const UnitGroup& u = k.units_;
    if (abs(k.norm(u.torsion_generator)) != 1)
      throw MathInputError("torsion generator is not a unit");
    FieldElement t = k.pow(u.torsion_generator, u.torsion_order);
    if (!(t == k.one()))
      throw MathInputError("torsion generator order is wrong");
    for (Int i = 1; i < u.torsion_order; ++i)
      if (k.pow(u.torsion_generator, i) == k.one())
        throw MathInputError("torsion generator order is wrong");
    for (const FieldElement& e : u.fundamental_units)
      if (abs(k.norm(e)) != 1)
        throw MathInputError("fundamental unit has |norm| != 1");
  } else if (k.n_ == 1) {
    k.units_.torsion_generator = k.from_rational(Rat(-1));
    k.units_.torsion_order = 2;
  } else if (k.n_ > 2) {
    throw MathInputError("degree >= 3 requires user-supplied units");
  } else if (k.r1_ == 0) {
    // imaginary quadratic: mu_4 for Q(i), mu_6 for Q(sqrt(-3)), else {+-1}
    const Int& b = g.coeff(1);
    Int disc0 = b * b - 4 * g.coeff(0);
    squarefree_decompose(disc0, disc0_d, disc0_s);
    Rat inv_s(1, disc0_s);
    inv_s.canonicalize();
    std::vector<Rat> sqrtD{Rat(b) * inv_s, Rat(2) * inv_s};
    sqrtD[0].canonicalize();
    sqrtD[1].canonicalize();
    if (disc0_d == -1) {
      k.units_.torsion_generator = k.from_power_basis(sqrtD);
      k.units_.torsion_order = 4;
    } else if (disc0_d == -3) {
      sqrtD[0] = (Rat(1) + sqrtD[0]) / 2;
      sqrtD[1] /= 2;
      sqrtD[0].canonicalize();
      sqrtD[1].canonicalize();
      k.units_.torsion_generator = k.from_power_basis(sqrtD);
      k.units_.torsion_order = 6;
    } else {
      k.units_.torsion_generator = k.from_rational(Rat(-1));
      k.units_.torsion_order = 2;
    }
  } else {
    // real quadratic: Pell-style sweep over the second coordinate
    k.units_.torsion_generator = k.from_rational(Rat(-1));
    k.units_.torsion_order = 2;
    FieldElement omega = k.basis_element(1);
    Int t = k.trace(omega).get_num();
    Int dK = t * t - 4 * k.norm(omega).get_num();  // disc of Z[omega]
    for (Int b = 1;; ++b) {
      bool found = false;
      for (int s = -1; s <= 1 && !found; s += 2) {
        Int rad = b * b * dK + 4 * s;
        if (rad < 0) continue;
        Int r = isqrt(rad);
        if (r * r != rad) continue;
        Int num = -t * b + r;
        if (mpz_odd_p(num.get_mpz_t())) continue;
        Int a = num / 2;
        FieldElement eps = k.add(k.from_rational(Rat(a)),
                                 k.scale(Rat(b), omega));
        if (abs(k.norm(eps)) != 1)
          throw InternalCheckError("Pell sweep produced a non-unit");
        k.units_.fundamental_units = {eps};
        found = true;
      }
      if (found) break;
    }
  }
  return k;
}

IntPolynomial NumberField::min_poly_of_basis(std::size_t i) const {
  // characteristic polynomial of multiplication by basis_i; for n <= 2 this
  // is the minimal polynomial whenever the element is not rational
  FieldElement x = basis_element(i);
  Rat tr = trace(x), nm = norm(x);
  if (n_ == 1) {
    return IntPolynomial({-tr.get_num(), Int(1)});
  }
  if (n_ != 2) throw MathInputError("min_poly_of_basis: unsupported degree");
  if (tr.get_den() != 1 || nm.get_den() != 1)
    throw InternalCheckError("non-integral trace/norm of basis element");
  return IntPolynomial({nm.get_num(), -tr.get_num(), Int(1)});
}

FieldElement NumberField::zero() const {
  return FieldElement{std::vector<Rat>(n_, Rat(0))};
}

FieldElement NumberField::one() const {
  std::vector<Rat> pb(n_, Rat(0));
  pb[0] = 1;
  return from_power_basis(pb);
}

FieldElement NumberField::basis_element(std::size_t i) const {
  FieldElement e = zero();
  e.coords[i] = 1;
  return e;
}

FieldElement NumberField::from_rational(const Rat& q) const {
  FieldElement e = one();
  return scale(q, e);
}

FieldElement NumberField::add(const FieldElement& x,
                              const FieldElement& y) const {
  FieldElement r = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    r.coords[i] = x.coords[i] + y.coords[i];
    r.coords[i].canonicalize();
  }
  return r;
}

FieldElement NumberField::sub(const FieldElement& x,
                              const FieldElement& y) const {
  FieldElement r = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    r.coords[i] = x.coords[i] - y.coords[i];
    r.coords[i].canonicalize();
  }
  return r;
}

FieldElement NumberField::mul(const FieldElement& x,
                              const FieldElement& y) const {
  FieldElement r = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y.coords[j] == 0) continue;
      Rat f = x.coords[i] * y.coords[j];
      for (std::size_t kk = 0; kk < n_; ++kk) {
        r.coords[kk] += f * Rat(table_[i][j][kk]);
        r.coords[kk].canonicalize();
      }
    }
  }
  return r;
}

FieldElement NumberField::scale(const Rat& c, const FieldElement& x) const {
  FieldElement r = x;
  for (Rat& v : r.coords) {
    v *= c;
    v.canonicalize();
  }
  return r;
}

FieldElement NumberField::neg(const FieldElement& x) const {
  return scale(Rat(-1), x);
}

FieldElement NumberField::inverse(const FieldElement& x) const {
  if (x.is_zero()) throw MathInputError("inverse of zero");
  // solve sum_j y_j (basis_j * x) = 1 over Q
  RatMatrix m(n_, std::vector<Rat>(n_, Rat(0)));
  for (std::size_t j = 0; j < n_; ++j) {
    FieldElement col = mul(basis_element(j), x);
    for (std::size_t i = 0; i < n_; ++i) m[j][i] = col.coords[i];
  }
  RatMatrix inv = rat_inverse(m);
  std::vector<Rat> onev = one().coords;
  return FieldElement{rat_vec_mat(onev, inv)};
}

FieldElement NumberField::pow(const FieldElement& x, const Int& e) const {
  if (e < 0) return pow(inverse(x), -e);
  FieldElement r = one(), base = x;
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

Rat NumberField::norm(const FieldElement& x) const {
  RatMatrix m(n_, std::vector<Rat>(n_));
  for (std::size_t j = 0; j < n_; ++j) {
    FieldElement row = mul(basis_element(j), x);
    m[j] = row.coords;
  }
  return rat_det(std::move(m));
}

Rat NumberField::trace(const FieldElement& x) const {
  Rat t(0);
  for (std::size_t j = 0; j < n_; ++j) {
    FieldElement row = mul(basis_element(j), x);
    t += row.coords[j];
    t.canonicalize();
  }
  return t;
}

std::vector<Rat> NumberField::to_power_basis(const FieldElement& x) const {
  return rat_vec_mat(x.coords, basis_);
}

FieldElement NumberField::from_power_basis(const std::vector<Rat>& p) const {
  if (p.size() != n_) throw std::invalid_argument("bad power basis size");
  return FieldElement{rat_vec_mat(p, basis_inv_)};
}

std::vector<Sign> NumberField::real_signs(const FieldElement& x) const {
  std::vector<Rat> pb = to_power_basis(x);
  // clear denominators with a positive factor
  Int den(1);
  for (const Rat& c : pb) den = lcm(den, c.get_den());
  std::vector<Int> coeffs;
  for (const Rat& c : pb) coeffs.push_back(c.get_num() * (den / c.get_den()));
  return real_root_signs(g_, IntPolynomial(std::move(coeffs)));
}

bool NumberField::is_totally_positive(const FieldElement& x) const {
  if (x.is_zero()) throw MathInputError("is_totally_positive(0)");
  if (r1_ == 0) return true;
  for (Sign s : real_signs(x))
    if (s != Sign::Positive) return false;
  return true;
}

std::pair<Rat, Rat> norm_trace(const NumberField& k, const FieldElement& x) {
  return {k.norm(x), k.trace(x)};
}

}  // namespace bcw
