#include "bcw/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bcw {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(const Int& c) {
  return IntPolynomial(std::vector<Int>{c});
}

IntPolynomial IntPolynomial::x_power(std::size_t k) {
  std::vector<Int> c(k + 1, Int(0));
  c[k] = 1;
  return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(std::size_t i) const {
  static const Int zero(0);
  return i < c_.size() ? c_[i] : zero;
}

const Int& IntPolynomial::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading of zero polynomial");
  return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> r = c_;
  for (Int& x : r) x = -x;
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(i) * c_[i];
  return IntPolynomial(std::move(r));
}

Rat IntPolynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  acc.canonicalize();
  return acc;
}

Int IntPolynomial::eval_int(const Int& x) const {
  Int acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::divexact(const IntPolynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Int> rem = c_;
  long dr = static_cast<long>(rem.size()) - 1;
  long dd = d.degree();
  if (dr < dd) {
    for (const Int& x : rem)
      if (x != 0) throw std::invalid_argument("inexact polynomial division");
    return IntPolynomial();
  }
  std::vector<Int> q(dr - dd + 1, Int(0));
  for (long i = dr; i >= dd; --i) {
    if (rem[i] == 0) continue;
    if (rem[i] % d.leading() != 0)
      throw std::invalid_argument("inexact polynomial division");
    Int f = rem[i] / d.leading();
    q[i - dd] = f;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coeff(j);
  }
  for (const Int& x : rem)
    if (x != 0) throw std::invalid_argument("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Int& c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    Int a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

IntPolynomial cyclotomic(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic level must be positive");
  std::vector<Int> xm(m + 1, Int(0));
  xm[0] = -1;
  xm[m] = 1;
  IntPolynomial phi(std::move(xm));
  for (long d = 1; d < m; ++d)
    if (m % d == 0) phi = phi.divexact(cyclotomic(d));
  return phi;
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;
  char var;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("cannot parse polynomial '" + s + "': " + what);
  }

  Int parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected number");
    return Int(s.substr(start, pos - start));
  }

  // term := [int] ['*'] [var ['^' int]]
  void parse_term(std::vector<Int>& acc, int sign) {
    skip_ws();
    Int c(1);
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      c = parse_int();
      have_coeff = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    std::size_t power = 0;
    if (pos < s.size() && s[pos] == var) {
      ++pos;
      power = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        Int e = parse_int();
        if (e < 0 || e > 64) fail("bad exponent");
        power = e.get_ui();
      }
    } else if (!have_coeff) {
      fail("expected term");
    }
    if (acc.size() < power + 1) acc.resize(power + 1, Int(0));
    acc[power] += sign * c;
  }
};

}  // namespace

IntPolynomial parse_poly(const std::string& s, char var) {
  PolyParser p{s, 0, var};
  std::vector<Int> acc;
  int sign = 1;
  p.skip_ws();
  if (p.pos < s.size() && (s[p.pos] == '+' || s[p.pos] == '-')) {
    if (s[p.pos] == '-') sign = -1;
    ++p.pos;
  }
  for (;;) {
    p.parse_term(acc, sign);
    p.skip_ws();
    if (p.pos == s.size()) break;
    if (s[p.pos] == '+') sign = 1;
    else if (s[p.pos] == '-') sign = -1;
    else p.fail("unexpected character");
    ++p.pos;
  }
  return IntPolynomial(std::move(acc));
}

RatPolynomial::RatPolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (Rat& x : c_) x.canonicalize();
  normalize();
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  for (const Int& x : p.coeffs()) c_.emplace_back(x);
  normalize();
}

void RatPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] -= o.c_[i];
  }
  return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
  if (is_zero() || o.is_zero()) return RatPolynomial();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPolynomial(std::move(r));
}

Rat RatPolynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (c_.size() <= 1) return RatPolynomial();
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(Int(i)) * c_[i];
  return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::rem(const RatPolynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rat> r = c_;
  long dd = d.degree();
  while (static_cast<long>(r.size()) - 1 >= dd) {
    Rat f = r.back() / d.c_.back();
    long shift = static_cast<long>(r.size()) - 1 - dd;
    for (long j = 0; j <= dd; ++j) {
      r[shift + j] -= f * d.c_[j];
      r[shift + j].canonicalize();
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> r = c_;
  Rat lead = r.back();
  for (Rat& x : r) {
    x /= lead;
    x.canonicalize();
  }
  return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace bcw
