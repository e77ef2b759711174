#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <vector>

namespace fm {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

// decimal digits -> mpfr bits, with a few guard bits
mpfr_prec_t bits_for_digits(int digits);

// Precision used for Real values created on the calling thread.
mpfr_prec_t working_bits();

class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(double v);
  explicit Real(const Integer& v);
  explicit Real(const Rational& v);
  Real(const Rational& v, mpfr_rnd_t rnd);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real parse(const std::string& s);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_ldouble() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  Rational to_rational() const;  // exact

  // fixed number of significant digits; rnd picks the rounding of the decimal
  std::string str(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real exp(const Real& a);
Real log(const Real& a);
Real abs(const Real& a);
Real sqrt(const Real& a);
Real pow10(long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

// directed rounding helpers used by certificates
Real log_rounded(const Real& a, mpfr_rnd_t rnd);
Real div_rounded(const Real& a, const Real& b, mpfr_rnd_t rnd);

using RealVec = std::vector<Real>;

Real dot(const RealVec& a, const std::vector<long>& g);
Rational dot(const RatVec& a, const std::vector<long>& g);
RealVec to_real(const RatVec& v);

Rational parse_rational(const std::string& s);  // "p", "p/q" or a finite decimal
std::string to_string(const Rational& q);
Integer parse_integer(const std::string& s);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// gcd of rationals: largest r>0 with every entry an integer multiple of r; zero if all zero
Rational rational_gcd(const RatVec& v);

}  // namespace fm
