#pragma once

#include <string>
#include <vector>

#include "numeric.hpp"

namespace fm {

// Dense univariate polynomial over Z; c[i] is the coefficient of x^i.
struct IntPoly {
  std::vector<Integer> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) { trim(); }
  static IntPoly from_longs(const std::vector<long>& v);  // ascending
  static IntPoly monomial(size_t k, const Integer& a = 1);

  void trim();
  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const Integer& lead() const { return c.back(); }
  const Integer& trail() const { return c.front(); }
  Integer coeff(size_t i) const { return i < c.size() ? c[i] : Integer(0); }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return a.c != b.c; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly scale(const IntPoly& a, const Integer& k);

IntPoly derivative(const IntPoly& a);
Integer content(const IntPoly& a);
IntPoly primitive_part(const IntPoly& a);  // positive leading coefficient

// lead(b)^(deg a - deg b + 1) a = q b + r
void pseudo_divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r);
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);  // throws NotDivisible
bool divides(const IntPoly& b, const IntPoly& a);              // over Q

IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive lead
IntPoly squarefree_part(const IntPoly& a);         // primitive
IntPoly strip_x_power(const IntPoly& a, size_t* removed = nullptr);
// Remove every factor shared with x^k - 1 for k <= max_order.
IntPoly remove_cyclotomic(const IntPoly& a, int max_order = 60);

int sign_at(const IntPoly& a, const Rational& x);
Real eval(const IntPoly& a, const Real& x);

// Number of distinct real roots in (lo, hi], lo < hi.
long sturm_count(const IntPoly& a, const Rational& lo, const Rational& hi);

IntPoly reverse(const IntPoly& a);
// +1 if a(x) = x^n a(1/x), -1 if a(x) = -x^n a(1/x), else 0
int palindromic_kind(const IntPoly& a);
// Q with Q(Y + 1/Y) Y^(n/2) = P(Y), content-normalized
IntPoly palindromic_reduce(const IntPoly& a);

bool is_prime_small(unsigned long p);
bool irreducible_mod_p(const IntPoly& a, unsigned long p);

IntPoly resultant_sylvester(const std::vector<IntPoly>& f, const std::vector<IntPoly>& g);

std::string to_string(const IntPoly& a, const std::string& var = "x");

}  // namespace fm
