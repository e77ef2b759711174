#pragma once

#include <algorithm>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "io.hpp"
#include "presets.hpp"

namespace fmtest {

using namespace fm;

inline const std::vector<std::string> UT{"u", "t"};

inline GroupPoly P(const std::string& s, const std::vector<std::string>& vars = UT) {
  return parse_poly_expr(s, vars);
}

inline GroupPoly eq1() { return example1_theta(); }

inline RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Rational q(const std::string& s) { return parse_rational(s); }

inline double absd(const Real& r) { return std::abs(r.to_double()); }

// Small random Laurent polynomial with exponents in [-e, e] and coefficients in [-c, c].
inline GroupPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms = 4, long e = 2,
                             long c = 5) {
  std::uniform_int_distribution<long> ed(-e, e), cd(-c, c), nd(1, terms);
  GroupPoly p(vars);
  long n = nd(rng);
  for (long k = 0; k < n; ++k) {
    ExpVec g(vars.size());
    for (auto& x : g) x = ed(rng);
    p.add_term(g, Integer(cd(rng)));
  }
  return p;
}

// Random polynomial with positive coefficients whose exponents include the
// origin and +-unit vectors, so every class is in some cone of the dominant term.
inline GroupPoly random_positive(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<long> cd(1, 6), ed(-1, 1);
  GroupPoly p(vars);
  p.add_term(ExpVec(vars.size(), 0), Integer(cd(rng)));
  for (int k = 0; k < 4; ++k) {
    ExpVec g(vars.size());
    for (auto& x : g) x = ed(rng);
    p.add_term(g, Integer(cd(rng)));
  }
  return p;
}

}  // namespace fmtest
