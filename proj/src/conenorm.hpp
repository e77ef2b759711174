#pragma once

#include <optional>
#include <vector>

#include "groupring.hpp"

namespace fm {

using Covector = std::vector<long>;

// Open cone {alpha : <alpha, n_k> > 0 for all k}, the normal cone of the
// dominant support point.
struct ConeDesc {
  ExpVec dominant;
  std::vector<Covector> inequalities;
  RatVec reference;

  bool contains(const RatVec& alpha) const;   // strict
  bool contains(const RealVec& alpha) const;  // strict
  bool contains_closure(const RatVec& alpha) const;
};

Rational teich_norm(const GroupPoly& p, const RatVec& alpha);
Real teich_norm(const GroupPoly& p, const RealVec& alpha);

ConeDesc fibered_cone(const GroupPoly& p, const RatVec& ref);

// Irredundant generators of the inequality set (primitive, sorted).
std::vector<Covector> prune_redundant(const std::vector<Covector>& ineqs);

enum class SliceMode { Base, Drill, Branch };

Covector slice_covector(const Covector& x, const std::optional<Covector>& c, SliceMode mode, long d = 0);

struct FiberTopology {
  long neg_chi = 0;
  long meridian_count = 0;
  bool meridians_are_boundary = false;  // only when c is primitive
};

FiberTopology fiber_topology(const Covector& beta, const Covector& x, const std::optional<Covector>& c, SliceMode mode,
                             long d = 0);

// x+c1 and x+c2 linearly dependent.
bool drilling_equivalent(const Covector& c1, const Covector& c2, const Covector& x);

struct BranchAdmissibility {
  long d = 0;
  bool ok = false;
};
BranchAdmissibility branched_admissible(const Covector& c, long torsion_order);

bool linearly_dependent(const Covector& a, const Covector& b);
long content(const Covector& v);

}  // namespace fm
