#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bcw/poly.hpp"
#include "bcw/roots.hpp"

namespace bcw {

// Error in the mathematical input (reducible polynomial, zero ideal, ...).
class MathInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal cross-check failure; indicates a bug, not an input problem.
class InternalCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Element of K in coordinates with respect to the integral basis.
struct FieldElement {
  std::vector<Rat> coords;

  bool operator==(const FieldElement& o) const = default;
  bool is_integral() const;
  bool is_zero() const;
};

struct UnitGroup {
  FieldElement torsion_generator;
  Int torsion_order = 2;
  std::vector<FieldElement> fundamental_units;  // empty unless r1 > 0, n = 2
};

// K together with O_K: defining polynomial, integral basis (rows express the
// basis in the power basis of a root of g), multiplication data and units.
class NumberField {
 public:
  // degree <= 2: basis and units computed automatically.
  // degree >= 3: both must be supplied; they are validated, not trusted.
  static NumberField make(
      const IntPolynomial& g,
      std::optional<std::vector<std::vector<Rat>>> integral_basis = {},
      std::optional<UnitGroup> units = {});

  std::size_t degree() const { return n_; }
  const IntPolynomial& poly() const { return g_; }
  const Int& discriminant() const { return disc_; }
  int r1() const { return r1_; }
  int r2() const { return r2_; }
  const UnitGroup& units() const { return units_; }

  // basis in power-basis coordinates (rows)
  const std::vector<std::vector<Rat>>& basis_matrix() const { return basis_; }

  // Minimal polynomial of the i-th integral basis element (monic, degree n
  // only when that element generates K). Used for prime splitting via the
  // second basis element, which generates O_K for quadratic fields.
  IntPolynomial min_poly_of_basis(std::size_t i) const;
  bool monogenic() const { return monogenic_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement basis_element(std::size_t i) const;
  FieldElement from_rational(const Rat& q) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement scale(const Rat& c, const FieldElement& x) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement inverse(const FieldElement& x) const;
  FieldElement pow(const FieldElement& x, const Int& e) const;  // e may be < 0

  Rat norm(const FieldElement& x) const;
  Rat trace(const FieldElement& x) const;

  // power-basis coordinates of x (rational polynomial in theta)
  std::vector<Rat> to_power_basis(const FieldElement& x) const;
  FieldElement from_power_basis(const std::vector<Rat>& p) const;

  // true iff every real embedding of x is positive; vacuous when r1 = 0.
  // x = 0 is rejected.
  bool is_totally_positive(const FieldElement& x) const;

  // Signs of x at the real embeddings (roots of g in increasing order).
  std::vector<Sign> real_signs(const FieldElement& x) const;

 private:
  std::size_t n_ = 1;
  IntPolynomial g_;
  std::vector<std::vector<Rat>> basis_;      // rows: basis in power basis
  std::vector<std::vector<Rat>> basis_inv_;  // inverse of basis_
  Int disc_;
  int r1_ = 1, r2_ = 0;
  bool monogenic_ = false;
  UnitGroup units_;
  // structure constants: basis_i * basis_j = sum_k table_[i][j][k] * basis_k
  std::vector<std::vector<std::vector<Int>>> table_;

  void build_tables();
  void compute_signature();
  void compute_discriminant();
};

// (norm, trace) of the multiplication-by-x map.
std::pair<Rat, Rat> norm_trace(const NumberField& k, const FieldElement& x);

// Certified irreducibility test for monic integer polynomials.
// deg <= 3: rational root theorem. deg >= 4: inconsistent factorization
// degree patterns modulo three good primes; throws MathInputError
// ("cannot certify") when inconclusive.
bool is_irreducible(const IntPolynomial& g);

}  // namespace bcw
