#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilatation.hpp"
#include "groupring.hpp"
#include "intpoly.hpp"

namespace fm {

// Value and derivative equations in X = lambda^gx, Y = lambda^(sigma gy),
// where alpha(sigma) = origin + sigma direction and gx, gy are the rational
// gcds of <origin, g> and <direction, g> over the support.  Both are Laurent
// polynomials in (X, Y) with integer exponents.
struct CriticalSystem {
  GroupPoly value;
  GroupPoly derivative;
  Rational gx, gy;
  Chart chart;
  std::vector<ExpVec> removed;  // g for every stripped factor x^g - 1 of P
};

CriticalSystem build_critical_system(const GroupPoly& p, const Segment& seg);

// Sylvester resultant of two polynomials in two variables with respect to
// variable `eliminate` (0 or 1).  Laurent inputs are shifted to polynomials
// first.  The result is a polynomial in the other variable.
IntPoly resultant(const GroupPoly& f, const GroupPoly& g, size_t eliminate);

struct DenominatorBound {
  Integer c;
  Integer B;
  Integer worst_prime;
  long worst_valuation = 0;
  bool valuation_exact = true;  // false when a large cofactor was only bounded
};

// c = lcm(|lead|, |const|), B = D * max_p v_p(c).
DenominatorBound denominator_bound(const IntPoly& eliminant, long degree_bound);

struct Interval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

// No p/q with 1 <= q <= B lies in the closed interval.
bool exclude_rationals(const Interval& enc, const Integer& B);

// Smallest-denominator rational in the closed interval (continued fractions).
Rational simplest_rational(const Interval& enc);

enum class Verdict { Irrational, Inconclusive };
std::string to_string(Verdict v);

struct IrrationalityCertificate {
  CriticalSystem system;
  IntPoly eliminant;                 // S(Y): squarefree, Y^k and cyclotomic parts removed
  std::optional<IntPoly> reduced;    // palindromic reduction f(A), A = Y + 1/Y
  std::optional<unsigned long> irreducible_prime;
  std::string irreducible_target;    // "eliminant" or "reduced"
  long x_degree = 0;
  long D = 0;
  Integer c, B;
  Interval y_enclosure, x_enclosure;
  Interval ratio;                    // log X / log Y = gx / (sigma gy)
  std::string ratio_lo, ratio_hi;    // outward-rounded decimals; ratio == their parse
  std::string ratio_value, sigma_value;
  bool excluded = false;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> hypotheses;
  std::vector<std::string> failures;
  int digits = 0;
};

IrrationalityCertificate certify_slice(const GroupPoly& p, const ConeDesc& cone, const Segment& seg, int prec);
IrrationalityCertificate certify_minpoint(const GroupPoly& p, const MinPoint& mp, int prec);

// Re-verify a certificate from its recorded data only: c and B from the
// eliminant, the sign change of the eliminant across the Y enclosure, the
// width condition and the exclusion scan.
struct RecheckResult {
  bool ok = true;
  std::vector<std::string> failures;
};
RecheckResult recheck(const IrrationalityCertificate& cert);

}  // namespace fm
