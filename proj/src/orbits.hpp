#pragma once

#include <vector>

#include "conenorm.hpp"
#include "polymat.hpp"

namespace fm {

// One term of a diagonal entry of M^m: a closed orbit class (m, t) of the
// suspension flow through cell `cell`, counted with multiplicity.
struct OrbitClass {
  long u_degree = 0;
  ExpVec t_class;
  Integer multiplicity;
  size_t cell = 0;

  // (m, t) as a class in the (u, t...) lattice
  Covector homology() const;
};

std::vector<OrbitClass> census(const PolyMatrix& m, long max_power);

// One class per drilling-equivalence class: x + c1 parallel to x + c2.
std::vector<Covector> drilling_class_representatives(const std::vector<Covector>& classes, const Covector& x);

}  // namespace fm
