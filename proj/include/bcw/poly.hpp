#pragma once

#include <string>
#include <vector>

#include "bcw/numtheory.hpp"

namespace bcw {

// Polynomial over Z, coefficients low-degree first, no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial constant(const Int& c);
  static IntPolynomial x_power(std::size_t k);  // x^k

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& coeff(std::size_t i) const;  // 0 beyond degree
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const = default;

  IntPolynomial derivative() const;
  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;

  // Exact quotient; throws if the division is not exact over Z.
  IntPolynomial divexact(const IntPolynomial& d) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Int> c_;
  void normalize();
};

// m-th cyclotomic polynomial, by recursive exact division of x^m - 1.
IntPolynomial cyclotomic(long m);

// Parse "x^2+1", "x^2-x-1", "2*x+3" style expressions (integer coefficients,
// single variable). Throws std::invalid_argument on malformed input.
IntPolynomial parse_poly(const std::string& s, char var = 'x');

// Polynomial over Q, used for Sturm sequences and gcds.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rat> coeffs);
  explicit RatPolynomial(const IntPolynomial& p);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  RatPolynomial operator-(const RatPolynomial& o) const;
  RatPolynomial operator*(const RatPolynomial& o) const;
  Rat eval(const Rat& x) const;
  RatPolynomial derivative() const;

  // Euclidean remainder.
  RatPolynomial rem(const RatPolynomial& d) const;
  // Monic gcd.
  static RatPolynomial gcd(RatPolynomial a, RatPolynomial b);
  RatPolynomial monic() const;

 private:
  std::vector<Rat> c_;
  void normalize();
};

}  // namespace bcw
