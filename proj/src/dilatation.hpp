#pragma once

#include <optional>
#include <string>

#include "conenorm.hpp"
#include "groupring.hpp"

namespace fm {

struct DilatationValue {
  Real value;       // lambda > 1
  Real log_value;   // log lambda
  Real residual;    // |sum a_g lambda^(<alpha,g> - <alpha,g*>)|
  Real lo, hi;      // enclosure of lambda
  int digits = 0;
};

struct Chart {
  RatVec origin;
  RatVec direction;
};

// alpha(tau) = start + tau (end - start), tau in (0,1).  The optional chart
// names an affine coordinate sigma on the same line, alpha = origin + sigma
// direction, used for reporting and for the critical system.
struct Segment {
  RatVec start, end;
  std::optional<Chart> chart;
  std::optional<Covector> covector;

  RatVec direction() const;
  Chart effective_chart() const;
};

struct MinPoint {
  Real parameter;         // tau*
  Real chart_parameter;   // sigma* in the effective chart
  RealVec coordinates;
  DilatationValue lambda;
  Real first_order_residual;
  std::optional<Real> norm_check;
  std::optional<RatVec> exact;  // set when a symmetry of P pins the midpoint
  Segment segment;
  int digits = 0;
};

enum class RationalFlag { Rational, Irrational, Unknown };

struct AModulePresentation {
  RealVec coordinates;
  Real pairing;
  std::vector<RationalFlag> flags;
};

DilatationValue eval_lambda(const GroupPoly& p, const RealVec& alpha, const ConeDesc& cone, int prec);
DilatationValue eval_lambda(const GroupPoly& p, const RatVec& alpha, const ConeDesc& cone, int prec);

Real directional_derivative(const GroupPoly& p, const RealVec& alpha, const RealVec& v, const ConeDesc& cone, int prec);

Segment segment_from_covector(const ConeDesc& cone, const Covector& w);
void validate_segment(const ConeDesc& cone, const Segment& seg);

MinPoint minimize_on_slice(const GroupPoly& p, const ConeDesc& cone, const Segment& seg, int prec);

AModulePresentation a_module_presentation(const MinPoint& min, const Covector& x,
                                          std::optional<bool> certified_irrational = std::nullopt);

std::string to_string(RationalFlag f);

// True when flipping the signs of some coordinates swaps the endpoints and
// leaves P unchanged up to a unit; the minimizer is then the midpoint.
bool midpoint_symmetric(const GroupPoly& p, const Segment& seg);

// Coarse log-lambda in long double; used for bracketing and tests.
long double log_lambda_fast(const GroupPoly& p, const std::vector<long double>& alpha);

}  // namespace fm
