#include "orbits.hpp"

#include "error.hpp"

namespace fm {

Covector OrbitClass::homology() const {
  Covector out{u_degree};
  out.insert(out.end(), t_class.begin(), t_class.end());
  return out;
}

std::vector<OrbitClass> census(const PolyMatrix& m, long max_power) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "census needs a square matrix");
  if (max_power < 1) throw Error(ErrorCode::InvalidArgument, "max_power must be at least 1");
  for (const auto& e : m.entries())
    for (const auto& [g, c] : e.terms())
      if (c < 0) throw Error(ErrorCode::Domain, "transition matrix has a negative coefficient");

  std::vector<OrbitClass> out;
  PolyMatrix pw = m;
  for (long k = 1; k <= max_power; ++k) {
    if (k > 1) pw = mat_mul(pw, m);
    for (size_t i = 0; i < pw.rows(); ++i) {
      for (const auto& [g, c] : pw.at(i, i).terms()) {
        OrbitClass oc;
        oc.u_degree = k;
        // a term t^g of the diagonal entry is an orbit in class t^-g
        for (long x : g) oc.t_class.push_back(-x);
        oc.multiplicity = c;
        oc.cell = i;
        out.push_back(std::move(oc));
      }
    }
  }
  return out;
}

std::vector<Covector> drilling_class_representatives(const std::vector<Covector>& classes, const Covector& x) {
  std::vector<Covector> reps;
  for (const auto& c : classes) {
    if (c.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "orbit class dimension");
    bool seen = false;
    for (const auto& r : reps) {
      if (drilling_equivalent(r, c, x)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(c);
  }
  return reps;
}

}  // namespace fm
