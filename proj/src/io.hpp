#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "certify.hpp"
#include "conenorm.hpp"
#include "dilatation.hpp"
#include "orbits.hpp"
#include "penner.hpp"
#include "polymat.hpp"

namespace fm {

using json = nlohmann::json;

// Parse JSON text; syntax errors carry line and column.
json parse_json_text(const std::string& text);

// Expressions like "x*y*z^-1 - x + 3" or "(u-1)^2 (t + t^-1)".  There is no
// division; negative powers apply only to monomials.
GroupPoly parse_poly_expr(const std::string& text, const std::vector<std::string>& vars);

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);
json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const json& j);
Covector covector_from_json(const json& j);

json poly_to_json(const GroupPoly& p);
GroupPoly poly_from_json(const json& j);
GroupPoly poly_from_json(const json& j, const std::vector<std::string>& vars);  // entry inside a matrix

json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j);

json penner_to_json(const PennerSpec& s);
PennerSpec penner_from_json(const json& j);

json segment_to_json(const Segment& s);
Segment segment_from_json(const json& j);

json cone_to_json(const ConeDesc& c);
ConeDesc cone_from_json(const json& j);

json intpoly_to_json(const IntPoly& p);
IntPoly intpoly_from_json(const json& j);

json lambda_to_json(const DilatationValue& v, int digits);
json minpoint_to_json(const MinPoint& m);
json amodule_to_json(const AModulePresentation& a, int digits);
json census_to_json(const std::vector<OrbitClass>& classes);

json certificate_to_json(const IrrationalityCertificate& c);
IrrationalityCertificate certificate_from_json(const json& j);

}  // namespace fm
