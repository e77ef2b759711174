#include "conenorm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"

namespace fm {

namespace {

Rational pair(const RatVec& a, const Covector& n) { return dot(a, n); }

void require_len(size_t got, size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has length " + std::to_string(got) + ", expected " +
                                                  std::to_string(want));
  }
}

Covector primitive(const Covector& v) {
  long g = content(v);
  Covector out = v;
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

// Solve sum_j lambda_j * cols[j] = target exactly; returns nullopt when the
// columns are dependent or the system is inconsistent.
std::optional<RatVec> solve_independent(const std::vector<Covector>& cols, const Covector& target) {
  const size_t b = target.size(), k = cols.size();
  std::vector<RatVec> a(b, RatVec(k + 1));
  for (size_t i = 0; i < b; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
    a[i][k] = target[i];
  }
  size_t row = 0;
  std::vector<size_t> pivcol;
  for (size_t col = 0; col < k; ++col) {
    size_t piv = row;
    while (piv < b && a[piv][col] == 0) ++piv;
    if (piv == b) return std::nullopt;  // dependent columns
    std::swap(a[piv], a[row]);
    for (size_t i = 0; i < b; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[row][col];
      for (size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivcol.push_back(col);
    ++row;
  }
  for (size_t i = row; i < b; ++i)
    if (a[i][k] != 0) return std::nullopt;
  RatVec x(k);
  for (size_t i = 0; i < row; ++i) x[pivcol[i]] = a[i][k] / a[i][pivcol[i]];
  return x;
}

bool in_cone_of(const std::vector<Covector>& gens, const Covector& v, size_t b) {
  // Caratheodory: v is a nonnegative combination of at most b independent generators
  const size_t n = gens.size();
  std::vector<size_t> idx;
  for (size_t size = 1; size <= std::min(b, n); ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      std::vector<Covector> cols;
      for (size_t i = 0; i < n; ++i)
        if (pick[i]) cols.push_back(gens[i]);
      auto sol = solve_independent(cols, v);
      if (sol && std::all_of(sol->begin(), sol->end(), [](const Rational& q) { return q >= 0; })) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return false;
}

}  // namespace

long content(const Covector& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

bool linearly_dependent(const Covector& a, const Covector& b) {
  require_len(b.size(), a.size(), "covector");
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (Integer(a[i]) * b[j] - Integer(a[j]) * b[i] != 0) return false;
  return true;
}

bool ConeDesc::contains(const RatVec& alpha) const {
  for (const auto& n : inequalities)
    if (pair(alpha, n) <= 0) return false;
  return true;
}

bool ConeDesc::contains(const RealVec& alpha) const {
  for (const auto& n : inequalities)
    if (dot(alpha, n).sign() <= 0) return false;
  return true;
}

bool ConeDesc::contains_closure(const RatVec& alpha) const {
  for (const auto& n : inequalities)
    if (pair(alpha, n) < 0) return false;
  return true;
}

Rational teich_norm(const GroupPoly& p, const RatVec& alpha) {
  if (p.is_zero()) throw Error(ErrorCode::Domain, "Teichmuller norm of the zero polynomial");
  require_len(alpha.size(), p.nvars(), "class");
  bool first = true;
  Rational lo, hi;
  for (const auto& [g, c] : p.terms()) {
    Rational v = dot(alpha, g);
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  }
  return hi - lo;
}

Real teich_norm(const GroupPoly& p, const RealVec& alpha) {
  if (p.is_zero()) throw Error(ErrorCode::Domain, "Teichmuller norm of the zero polynomial");
  require_len(alpha.size(), p.nvars(), "class");
  bool first = true;
  Real lo, hi;
  for (const auto& [g, c] : p.terms()) {
    Real v = dot(alpha, g);
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  }
  return hi - lo;
}

ConeDesc fibered_cone(const GroupPoly& p, const RatVec& ref) {
  if (p.is_zero()) throw Error(ErrorCode::Domain, "fibered cone of the zero polynomial");
  require_len(ref.size(), p.nvars(), "reference class");
  const ExpVec* best = nullptr;
  Rational best_v;
  bool tie = false;
  for (const auto& [g, c] : p.terms()) {
    Rational v = dot(ref, g);
    if (!best || v > best_v) {
      best = &g;
      best_v = v;
      tie = false;
    } else if (v == best_v) {
      tie = true;
    }
  }
  if (tie) throw Error(ErrorCode::Domain, "tie at reference");
  ConeDesc cone;
  cone.dominant = *best;
  cone.reference = ref;
  std::set<Covector> seen;
  for (const auto& [g, c] : p.terms()) {
    if (g == *best) continue;
    Covector n(g.size());
    for (size_t i = 0; i < g.size(); ++i) n[i] = (*best)[i] - g[i];
    if (seen.insert(n).second) cone.inequalities.push_back(n);
  }
  for (const auto& n : cone.inequalities) {
    if (pair(ref, n) <= 0) throw Error(ErrorCode::Internal, "reference class not strictly inside its cone");
  }
  return cone;
}

std::vector<Covector> prune_redundant(const std::vector<Covector>& ineqs) {
  std::set<Covector> dirs;
  for (const auto& n : ineqs) {
    if (content(n) == 0) continue;
    dirs.insert(primitive(n));
  }
  std::vector<Covector> gens(dirs.begin(), dirs.end());
  if (gens.empty()) return gens;
  const size_t b = gens.front().size();
  std::vector<Covector> keep;
  std::vector<bool> dropped(gens.size(), false);
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<Covector> others;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i && !dropped[j]) others.push_back(gens[j]);
    if (in_cone_of(others, gens[i], b)) {
      dropped[i] = true;
    } else {
      keep.push_back(gens[i]);
    }
  }
  return keep;
}

Covector slice_covector(const Covector& x, const std::optional<Covector>& c, SliceMode mode, long d) {
  if (mode == SliceMode::Base) return x;
  if (!c) throw Error(ErrorCode::InvalidArgument, "drilling and branching need an orbit class c");
  require_len(c->size(), x.size(), "orbit class");
  Covector w(x.size());
  if (mode == SliceMode::Drill) {
    for (size_t i = 0; i < x.size(); ++i) w[i] = x[i] + (*c)[i];
    return w;
  }
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "branched cover degree must be at least 2");
  for (size_t i = 0; i < x.size(); ++i) w[i] = d * x[i] + (d - 1) * (*c)[i];
  return w;
}

FiberTopology fiber_topology(const Covector& beta, const Covector& x, const std::optional<Covector>& c, SliceMode mode,
                             long d) {
  Covector w = slice_covector(x, c, mode, d);
  require_len(beta.size(), w.size(), "class");
  FiberTopology out;
  Integer chi(0);
  for (size_t i = 0; i < w.size(); ++i) chi += Integer(beta[i]) * w[i];
  if (chi <= 0) throw Error(ErrorCode::Domain, "class pairs non-positively with the slice covector (outside the cone)");
  out.neg_chi = chi.get_si();
  if (c) {
    Integer mc(0);
    for (size_t i = 0; i < w.size(); ++i) mc += Integer(beta[i]) * (*c)[i];
    out.meridian_count = mc.get_si();
    out.meridians_are_boundary = content(*c) == 1;
  }
  return out;
}

bool drilling_equivalent(const Covector& c1, const Covector& c2, const Covector& x) {
  require_len(c1.size(), x.size(), "orbit class");
  require_len(c2.size(), x.size(), "orbit class");
  Covector a(x.size()), b(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    a[i] = x[i] + c1[i];
    b[i] = x[i] + c2[i];
  }
  return linearly_dependent(a, b);
}

BranchAdmissibility branched_admissible(const Covector& c, long torsion_order) {
  if (torsion_order < 1) throw Error(ErrorCode::InvalidArgument, "torsion order must be positive");
  long d = content(c);
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero orbit class");
  return {d, d > 1 && std::gcd(d, torsion_order) == 1};
}

}  // namespace fm
