#include "numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "error.hpp"

namespace fm {

namespace {
thread_local mpfr_prec_t tl_bits = 200;
}

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) digits = 1;
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

mpfr_prec_t working_bits() { return tl_bits; }

PrecisionScope::PrecisionScope(int digits) : saved_(tl_bits) { tl_bits = bits_for_digits(digits); }
PrecisionScope::~PrecisionScope() { tl_bits = saved_; }

Real::Real() {
  mpfr_init2(v_, tl_bits);
  mpfr_set_zero(v_, 1);
}
Real::Real(int v) {
  mpfr_init2(v_, tl_bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(long v) {
  mpfr_init2(v_, tl_bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(double v) {
  mpfr_init2(v_, tl_bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}
Real::Real(const Integer& v) {
  mpfr_init2(v_, tl_bits);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
Real::Real(const Rational& v) {
  mpfr_init2(v_, tl_bits);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}
Real::Real(const Rational& v, mpfr_rnd_t rnd) {
  mpfr_init2(v_, tl_bits);
  mpfr_set_q(v_, v.get_mpq_t(), rnd);
}
Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real Real::parse(const std::string& s) {
  Real r;
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw Error(ErrorCode::Parse, "not a real number: " + s);
  return r;
}

Rational Real::to_rational() const {
  if (!is_finite()) throw Error(ErrorCode::Numeric, "non-finite value");
  if (is_zero()) return Rational(0);
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Rational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

std::string Real::str(int digits, mpfr_rnd_t rnd) const {
  if (digits < 1) digits = 1;
  const char* fmt = "%.*Re";
  switch (rnd) {
    case MPFR_RNDD: fmt = "%.*RDe"; break;
    case MPFR_RNDU: fmt = "%.*RUe"; break;
    case MPFR_RNDZ: fmt = "%.*RZe"; break;
    default: fmt = "%.*RNe"; break;
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, fmt, digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r;
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

Real exp(const Real& a) {
  Real r;
  mpfr_exp(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real log(const Real& a) {
  Real r;
  mpfr_log(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real abs(const Real& a) {
  Real r;
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real sqrt(const Real& a) {
  Real r;
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real pow10(long e) {
  Real r;
  mpfr_set_si(r.get(), 10, MPFR_RNDN);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real log_rounded(const Real& a, mpfr_rnd_t rnd) {
  Real r;
  mpfr_log(r.get(), a.get(), rnd);
  return r;
}
Real div_rounded(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_div(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real dot(const RealVec& a, const std::vector<long>& g) {
  Real s;
  for (size_t i = 0; i < a.size() && i < g.size(); ++i) {
    if (g[i] == 0) continue;
    Real t;
    mpfr_mul_si(t.get(), a[i].get(), g[i], MPFR_RNDN);
    s += t;
  }
  return s;
}

Rational dot(const RatVec& a, const std::vector<long>& g) {
  Rational s(0);
  for (size_t i = 0; i < a.size() && i < g.size(); ++i) {
    if (g[i] != 0) s += a[i] * g[i];
  }
  return s;
}

RealVec to_real(const RatVec& v) {
  RealVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q);
  return out;
}

Integer parse_integer(const std::string& s) {
  Integer z;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  if (t.empty() || z.set_str(t, 10) != 0) throw Error(ErrorCode::Parse, "not an integer: " + s);
  return z;
}

Rational parse_rational(const std::string& s) {
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos && s.find('/') == std::string::npos) {
    Rational m = parse_rational(s.substr(0, epos));
    std::string es = s.substr(epos + 1);
    if (!es.empty() && es[0] == '+') es = es.substr(1);
    long e = 0;
    try {
      size_t used = 0;
      e = std::stol(es, &used);
      if (used != es.size()) throw std::invalid_argument(es);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad exponent: " + s);
    }
    if (e > 100000 || e < -100000) throw Error(ErrorCode::Limit, "exponent out of range: " + s);
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    Rational r = e < 0 ? Rational(m / Rational(t)) : Rational(m * t);
    r.canonicalize();
    return r;
  }
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer p = parse_integer(s.substr(0, slash));
    Integer q = parse_integer(s.substr(slash + 1));
    if (q == 0) throw Error(ErrorCode::Parse, "zero denominator: " + s);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  auto dotpos = s.find('.');
  if (dotpos != std::string::npos) {
    std::string ip = s.substr(0, dotpos), fp = s.substr(dotpos + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    for (char c : fp) {
      if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "not a rational number: " + s);
    }
    Integer whole = parse_integer(ip);
    Integer frac = fp.empty() ? Integer(0) : parse_integer(fp);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    Rational r(abs(whole) * den + frac, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Rational rational_gcd(const RatVec& v) {
  Integer num(0), den(1);
  for (const auto& q : v) {
    if (q == 0) continue;
    num = gcd(num, q.get_num());
    den = lcm(den, q.get_den());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace fm
