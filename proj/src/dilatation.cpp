#include "dilatation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace fm {

namespace {

constexpr int kGuardDigits = 20;

// f(y) = sum_g a_g exp(-d_g y) with d_g >= 0 the gap to the dominant term,
// y = log k.  The sign is fixed so that f > 0 for large y.
struct GapSum {
  std::vector<Integer> a;
  std::vector<Real> d;
};

struct GapSumLD {
  std::vector<long double> a, d;

  long double operator()(long double y) const {
    long double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * std::exp(-d[i] * y);
    return s;
  }
};

GapSumLD to_ld(const GapSum& f) {
  GapSumLD out;
  for (size_t i = 0; i < f.a.size(); ++i) {
    out.a.push_back(static_cast<long double>(f.a[i].get_d()));
    out.d.push_back(f.d[i].to_ldouble());
  }
  return out;
}

Real eval(const GapSum& f, const Real& y, Real* deriv = nullptr, Real* scale = nullptr) {
  Real s, ds, sc;
  for (size_t i = 0; i < f.a.size(); ++i) {
    Real w = exp(-(f.d[i] * y));
    Real aw = Real(f.a[i]) * w;
    s += aw;
    if (deriv) ds -= aw * f.d[i];
    if (scale) sc += abs(aw) * f.d[i];
  }
  if (deriv) *deriv = ds;
  if (scale) *scale = sc;
  return s;
}

// Upper end of the search interval in y = log k: beyond it the dominant term
// outweighs the sum of all others.  With every gap >= 1 this is the Perron
// bound 1 + sum|a_g|; for smaller gaps the exponent 1/delta widens it.
long double search_top(const GapSumLD& f) {
  long double top = 0, rest = 0, delta = std::numeric_limits<long double>::infinity();
  for (size_t i = 0; i < f.a.size(); ++i) {
    if (f.d[i] == 0) {
      top += std::fabs(f.a[i]);
    } else {
      rest += std::fabs(f.a[i]);
      delta = std::min(delta, f.d[i]);
    }
  }
  if (rest == 0 || !std::isfinite(delta)) throw Error(ErrorCode::Domain, "no root above 1");
  return std::log1p(rest / top) / delta * (1 + 1e-9L) + 1e-30L;
}

// Bracket the largest root of f in (0, y_top]: returns (lo, hi) with
// f(lo) <= 0 < f(hi).
std::pair<long double, long double> bracket_top_root(const GapSumLD& f) {
  const long double ytop = search_top(f);
  for (long n = 256; n <= (1L << 16); n *= 2) {
    long double prev = ytop;
    for (long i = 1; i < n; ++i) {
      long double y = ytop * static_cast<long double>(n - i) / static_cast<long double>(n);
      if (f(y) <= 0) return {y, prev};
      prev = y;
    }
  }
  throw Error(ErrorCode::Domain, "no root above 1");
}

long double refine_ld(const GapSumLD& f, long double lo, long double hi) {
  for (int it = 0; it < 200; ++it) {
    long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    if (f(mid) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

struct RootResult {
  Real y, lo, hi, residual;
};

// Largest root of f, polished by safeguarded Newton at the current working
// precision.  prec is the number of digits the caller reports.
RootResult top_root(const GapSum& f, int prec) {
  GapSumLD fl = to_ld(f);
  auto [llo, lhi] = bracket_top_root(fl);
  long double ymid = refine_ld(fl, llo, lhi);

  Real lo(static_cast<double>(llo)), hi(static_cast<double>(lhi));
  Real y(static_cast<double>(ymid));
  // tighten the bracket around the long double estimate, widening if the
  // extended-precision signs disagree
  Real r = max(abs(y) * Real(1e-12), Real(1e-30));
  for (int k = 0; k < 40; ++k) {
    Real a = max(y - r, lo), b = min(y + r, hi);
    if (eval(f, a).sign() <= 0 && eval(f, b).sign() > 0) {
      lo = a;
      hi = b;
      break;
    }
    r *= Real(16);
  }
  if (!(eval(f, lo).sign() <= 0 && eval(f, hi).sign() > 0)) {
    throw Error(ErrorCode::Numeric, "could not bracket the top root in extended precision");
  }

  const Real tol = pow10(-(prec + kGuardDigits - 4));
  for (int it = 0; it < 200; ++it) {
    Real d, scale;
    Real v = eval(f, y, &d, &scale);
    if (v.is_zero()) break;
    if (v.sign() < 0) {
      lo = y;
    } else {
      hi = y;
    }
    Real next = (d.sign() != 0) ? y - v / d : (lo + hi) / Real(2);
    if (!(next > lo && next < hi)) next = (lo + hi) / Real(2);
    Real step = abs(next - y);
    y = next;
    if (step <= tol * abs(y)) break;
  }

  Real d, scale;
  Real v = eval(f, y, &d, &scale);
  if (scale.is_zero() || abs(d) <= scale * pow10(-(prec / 2))) throw Error(ErrorCode::Degenerate, "degenerate root");

  RootResult out;
  out.y = y;
  out.residual = abs(v);
  Real rad = abs(y) * pow10(-(prec + 3));
  for (int k = 0; k < 12; ++k) {
    if (eval(f, y - rad).sign() < 0 && eval(f, y + rad).sign() > 0) {
      out.lo = y - rad;
      out.hi = y + rad;
      return out;
    }
    rad *= Real(10);
  }
  throw Error(ErrorCode::Numeric, "could not verify the root enclosure");
}

size_t dominant_index(const std::vector<ExpVec>& g, const ExpVec& dom) {
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] == dom) return i;
  throw Error(ErrorCode::InvalidArgument, "cone does not belong to this polynomial (dominant term missing)");
}

GapSum gaps_at(const GroupPoly& p, const RealVec& alpha, const ConeDesc& cone) {
  std::vector<ExpVec> g;
  std::vector<Integer> a;
  for (const auto& [e, c] : p.terms()) {
    g.push_back(e);
    a.push_back(c);
  }
  size_t top = dominant_index(g, cone.dominant);
  Real etop = dot(alpha, g[top]);
  GapSum f;
  const bool flip = sgn(a[top]) < 0;
  for (size_t i = 0; i < g.size(); ++i) {
    Real d = etop - dot(alpha, g[i]);
    if (i != top && d.sign() <= 0) throw Error(ErrorCode::Domain, "class outside the fibered cone");
    f.a.push_back(flip ? Integer(-a[i]) : a[i]);
    f.d.push_back(i == top ? Real(0) : d);
  }
  return f;
}

void require_inside(const GroupPoly& p, const RealVec& alpha, const ConeDesc& cone) {
  if (p.is_zero()) throw Error(ErrorCode::Domain, "zero polynomial");
  if (alpha.size() != p.nvars()) throw Error(ErrorCode::DimensionMismatch, "class length differs from variable count");
  if (!cone.contains(alpha)) throw Error(ErrorCode::Domain, "class outside the fibered cone");
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool rat_dependent(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) return false;
  return true;
}

}  // namespace

DilatationValue eval_lambda(const GroupPoly& p, const RealVec& alpha_in, const ConeDesc& cone, int prec) {
  if (prec < 5) throw Error(ErrorCode::InvalidArgument, "precision must be at least 5 digits");
  PrecisionScope scope(prec + kGuardDigits);
  RealVec alpha;
  for (const auto& x : alpha_in) alpha.push_back(x);
  for (auto& x : alpha) mpfr_prec_round(x.get(), working_bits(), MPFR_RNDN);
  require_inside(p, alpha, cone);
  GapSum f = gaps_at(p, alpha, cone);
  RootResult r = top_root(f, prec);
  DilatationValue v;
  v.log_value = r.y;
  v.value = exp(r.y);
  v.residual = r.residual;
  v.lo = exp(r.lo);
  v.hi = exp(r.hi);
  v.digits = prec;
  return v;
}

DilatationValue eval_lambda(const GroupPoly& p, const RatVec& alpha, const ConeDesc& cone, int prec) {
  PrecisionScope scope(prec + kGuardDigits);
  return eval_lambda(p, to_real(alpha), cone, prec);
}

Real directional_derivative(const GroupPoly& p, const RealVec& alpha, const RealVec& v, const ConeDesc& cone,
                            int prec) {
  if (v.size() != alpha.size()) throw Error(ErrorCode::DimensionMismatch, "direction length differs from class length");
  DilatationValue lam = eval_lambda(p, alpha, cone, prec);
  PrecisionScope scope(prec + kGuardDigits);
  std::vector<ExpVec> g;
  std::vector<Integer> a;
  for (const auto& [e, c] : p.terms()) {
    g.push_back(e);
    a.push_back(c);
  }
  size_t top = dominant_index(g, cone.dominant);
  const Real& y = lam.log_value;
  Real etop = dot(alpha, g[top]), vtop = dot(v, g[top]);
  // G(y, eps) = sum a_g exp(((e_g - e*) + eps (v_g - v*)) y) = 0
  Real gy, ge, scale;
  for (size_t i = 0; i < g.size(); ++i) {
    Real de = dot(alpha, g[i]) - etop;
    Real dv = dot(v, g[i]) - vtop;
    Real w = Real(a[i]) * exp(de * y);
    gy += w * de;
    ge += w * dv * y;
    scale += abs(w * de);
  }
  if (scale.is_zero() || abs(gy) <= scale * pow10(-(prec / 2))) throw Error(ErrorCode::Degenerate, "degenerate root");
  return -(lam.value * ge / gy);
}

RatVec Segment::direction() const { return sub(end, start); }

Chart Segment::effective_chart() const {
  if (chart) return *chart;
  return Chart{start, direction()};
}

void validate_segment(const ConeDesc& cone, const Segment& seg) {
  const size_t b = cone.dominant.size();
  if (seg.start.size() != b || seg.end.size() != b) {
    throw Error(ErrorCode::DimensionMismatch, "segment endpoints do not match the cone dimension");
  }
  if (seg.start == seg.end) throw Error(ErrorCode::InvalidArgument, "segment endpoints coincide");
  RatVec mid(b);
  for (size_t i = 0; i < b; ++i) mid[i] = (seg.start[i] + seg.end[i]) / 2;
  if (!cone.contains_closure(seg.start) || !cone.contains_closure(seg.end) || !cone.contains(mid)) {
    throw Error(ErrorCode::Domain, "segment interior leaves the fibered cone");
  }
  if (seg.chart) {
    RatVec dir = seg.direction();
    const auto& c = *seg.chart;
    if (c.origin.size() != b || c.direction.size() != b) throw Error(ErrorCode::DimensionMismatch, "chart dimension");
    if (std::all_of(c.direction.begin(), c.direction.end(), [](const Rational& q) { return q == 0; })) {
      throw Error(ErrorCode::InvalidArgument, "chart direction is zero");
    }
    if (!rat_dependent(c.direction, dir) || !rat_dependent(sub(c.origin, seg.start), dir)) {
      throw Error(ErrorCode::InvalidArgument, "chart does not lie on the segment's line");
    }
  }
  if (seg.covector && seg.covector->size() != b) throw Error(ErrorCode::DimensionMismatch, "slice covector dimension");
}

Segment segment_from_covector(const ConeDesc& cone, const Covector& w) {
  if (cone.dominant.size() != 2) throw Error(ErrorCode::DimensionMismatch, "segment_from_covector needs b = 2");
  if (w.size() != 2) throw Error(ErrorCode::DimensionMismatch, "covector must have length 2");
  std::vector<Covector> rays;
  for (const auto& n : cone.inequalities) {
    for (int s : {1, -1}) {
      Covector r{-s * n[1], s * n[0]};
      bool ok = true;
      for (const auto& m : cone.inequalities) {
        if (Integer(r[0]) * m[0] + Integer(r[1]) * m[1] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      long g = content(r);
      r[0] /= g;
      r[1] /= g;
      if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
    }
  }
  if (rays.size() != 2) throw Error(ErrorCode::Domain, "cone is not a pointed two-dimensional cone");
  // start is the counterclockwise wall
  if (Integer(rays[0][0]) * rays[1][1] - Integer(rays[0][1]) * rays[1][0] > 0) std::swap(rays[0], rays[1]);
  Segment seg;
  for (int k = 0; k < 2; ++k) {
    Integer pw = Integer(rays[k][0]) * w[0] + Integer(rays[k][1]) * w[1];
    if (pw <= 0) throw Error(ErrorCode::Domain, "covector is not positive on the cone");
    RatVec pt{Rational(rays[k][0]) / Rational(pw), Rational(rays[k][1]) / Rational(pw)};
    for (auto& q : pt) q.canonicalize();
    (k == 0 ? seg.start : seg.end) = pt;
  }
  seg.covector = w;
  return seg;
}

bool midpoint_symmetric(const GroupPoly& p, const Segment& seg) {
  const size_t b = seg.start.size();
  if (b > 16 || p.nvars() != b) return false;
  GroupPoly np = normalize_unit(p);
  for (unsigned mask = 1; mask < (1u << b); ++mask) {
    bool swaps = true;
    for (size_t i = 0; i < b && swaps; ++i) {
      Rational s = (mask >> i & 1u) ? Rational(-seg.start[i]) : seg.start[i];
      swaps = (s == seg.end[i]);
    }
    if (!swaps) continue;
    GroupPoly q = p;
    for (size_t i = 0; i < b; ++i)
      if (mask >> i & 1u) q = substitute_inverse(q, i);
    if (normalize_unit(q) == np) return true;
  }
  return false;
}

long double log_lambda_fast(const GroupPoly& p, const std::vector<long double>& alpha) {
  if (p.is_zero()) throw Error(ErrorCode::Domain, "zero polynomial");
  std::vector<long double> e;
  std::vector<long double> a;
  for (const auto& [g, c] : p.terms()) {
    long double s = 0;
    for (size_t i = 0; i < g.size(); ++i) s += alpha[i] * g[i];
    e.push_back(s);
    a.push_back(static_cast<long double>(c.get_d()));
  }
  size_t top = static_cast<size_t>(std::max_element(e.begin(), e.end()) - e.begin());
  GapSumLD f;
  const long double sg = a[top] > 0 ? 1 : -1;
  for (size_t i = 0; i < e.size(); ++i) {
    f.a.push_back(sg * a[i]);
    f.d.push_back(e[top] - e[i]);
  }
  auto [lo, hi] = bracket_top_root(f);
  return refine_ld(f, lo, hi);
}

MinPoint minimize_on_slice(const GroupPoly& p, const ConeDesc& cone, const Segment& seg, int prec) {
  if (prec < 5) throw Error(ErrorCode::InvalidArgument, "precision must be at least 5 digits");
  if (p.is_zero()) throw Error(ErrorCode::Domain, "zero polynomial");
  validate_segment(cone, seg);
  PrecisionScope scope(prec + kGuardDigits);

  std::vector<ExpVec> g;
  std::vector<Integer> a;
  for (const auto& [e, c] : p.terms()) {
    g.push_back(e);
    a.push_back(c);
  }
  const size_t top = dominant_index(g, cone.dominant);
  const RatVec dir = seg.direction();
  // gap d_g(tau) = s_g + tau t_g with s_g, t_g exact
  std::vector<Rational> s(g.size()), t(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    s[i] = dot(seg.start, g[top]) - dot(seg.start, g[i]);
    t[i] = dot(dir, g[top]) - dot(dir, g[i]);
  }
  const int sg = sgn(a[top]) > 0 ? 1 : -1;

  GapSumLD fl;
  fl.a.resize(g.size());
  fl.d.resize(g.size());
  for (size_t i = 0; i < g.size(); ++i) fl.a[i] = sg * static_cast<long double>(a[i].get_d());
  auto phi = [&](long double tau) {
    for (size_t i = 0; i < g.size(); ++i) fl.d[i] = static_cast<long double>(s[i].get_d() + tau * t[i].get_d());
    auto [lo, hi] = bracket_top_root(fl);
    return refine_ld(fl, lo, hi);
  };

  // log lambda is convex along the segment; golden section on the open interval
  const long double gr = (std::sqrt(5.0L) - 1) / 2;
  long double lo = 0, hi = 1;
  long double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  long double fc = phi(c), fd = phi(d);
  for (int it = 0; it < 200 && hi - lo > 1e-13L; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = phi(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = phi(d);
    }
  }
  long double tau0 = (lo + hi) / 2;
  if (tau0 < 1e-9L || tau0 > 1 - 1e-9L) throw Error(ErrorCode::Domain, "minimum at boundary");

  // Newton on (y, tau) for  G1 = sum a_g w_g = 0,  G2 = sum a_g t_g w_g = 0,
  // w_g = exp(-d_g(tau) y)
  std::vector<Real> A(g.size()), S(g.size()), T(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    A[i] = Real(sg > 0 ? a[i] : Integer(-a[i]));
    S[i] = Real(s[i]);
    T[i] = Real(t[i]);
  }
  Real tau(static_cast<double>(tau0));
  auto system = [&](const Real& y, const Real& tt, Real& g1, Real& g2, Real& j11, Real& j12, Real& j21, Real& j22,
                    Real* scale2) {
    g1 = Real(0);
    g2 = Real(0);
    j11 = Real(0);
    j12 = Real(0);
    j21 = Real(0);
    j22 = Real(0);
    Real sc;
    for (size_t i = 0; i < g.size(); ++i) {
      Real dg = S[i] + tt * T[i];
      Real w = A[i] * exp(-(dg * y));
      g1 += w;
      g2 += w * T[i];
      j11 -= w * dg;
      j12 -= w * T[i] * y;
      j21 -= w * T[i] * dg;
      j22 -= w * T[i] * T[i] * y;
      if (scale2) sc += abs(w * T[i]);
    }
    if (scale2) *scale2 = sc;
  };

  GapSum f1;
  f1.a.resize(g.size());
  f1.d.resize(g.size());
  for (size_t i = 0; i < g.size(); ++i) f1.a[i] = sg > 0 ? a[i] : Integer(-a[i]);
  auto set_tau = [&](const Real& tt) {
    for (size_t i = 0; i < g.size(); ++i) f1.d[i] = S[i] + tt * T[i];
  };
  set_tau(tau);
  Real y = top_root(f1, prec).y;

  const Real tol = pow10(-(prec + kGuardDigits - 5));
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    Real g1, g2, j11, j12, j21, j22;
    system(y, tau, g1, g2, j11, j12, j21, j22, nullptr);
    Real det = j11 * j22 - j12 * j21;
    if (det.is_zero()) throw Error(ErrorCode::Degenerate, "singular critical-point Jacobian");
    Real dy = -(g1 * j22 - j12 * g2) / det;
    Real dt = -(j11 * g2 - j21 * g1) / det;
    Real ny = y + dy, nt = tau + dt;
    int guard = 0;
    while ((nt.sign() <= 0 || nt >= Real(1) || ny.sign() <= 0) && guard++ < 60) {
      dy /= Real(2);
      dt /= Real(2);
      ny = y + dy;
      nt = tau + dt;
    }
    y = ny;
    tau = nt;
    if (abs(dt) <= tol && abs(dy) <= tol * abs(y)) {
      converged = true;
      break;
    }
  }
  if (!converged) throw Error(ErrorCode::Numeric, "critical-point iteration did not converge");

  MinPoint mp;
  mp.digits = prec;
  mp.segment = seg;
  mp.parameter = tau;
  {
    Real g1, g2, j11, j12, j21, j22, sc;
    system(y, tau, g1, g2, j11, j12, j21, j22, &sc);
    mp.first_order_residual = sc.is_zero() ? abs(g2) : abs(g2) / sc;
  }
  for (size_t i = 0; i < seg.start.size(); ++i) mp.coordinates.push_back(Real(seg.start[i]) + tau * Real(dir[i]));
  mp.lambda = eval_lambda(p, mp.coordinates, cone, prec);

  Chart ch = seg.effective_chart();
  Real num, den;
  for (size_t i = 0; i < ch.origin.size(); ++i) {
    Real dd(ch.direction[i]);
    num += (mp.coordinates[i] - Real(ch.origin[i])) * dd;
    den += dd * dd;
  }
  mp.chart_parameter = num / den;
  if (seg.covector) {
    Real n;
    for (size_t i = 0; i < mp.coordinates.size(); ++i) n += mp.coordinates[i] * Real((*seg.covector)[i]);
    mp.norm_check = n;
  }
  if (midpoint_symmetric(p, seg)) {
    RatVec m(seg.start.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = (seg.start[i] + seg.end[i]) / 2;
    mp.exact = m;
  }
  return mp;
}

std::string to_string(RationalFlag f) {
  switch (f) {
    case RationalFlag::Rational: return "rational";
    case RationalFlag::Irrational: return "irrational";
    default: return "unknown";
  }
}

AModulePresentation a_module_presentation(const MinPoint& min, const Covector& x,
                                          std::optional<bool> certified_irrational) {
  if (x.size() != min.coordinates.size()) throw Error(ErrorCode::DimensionMismatch, "dual class dimension");
  PrecisionScope scope(min.digits + kGuardDigits);
  AModulePresentation out;
  out.coordinates = min.coordinates;
  Real pr;
  for (size_t i = 0; i < x.size(); ++i) pr += min.coordinates[i] * Real(x[i]);
  out.pairing = pr;
  if (abs(pr - Real(1)) > pow10(-(min.digits / 2))) {
    throw Error(ErrorCode::Domain, "norm check far from 1: the minimal point does not pair to 1 with the dual class");
  }
  RatVec dir = min.segment.direction();
  for (size_t i = 0; i < x.size(); ++i) {
    if (min.exact || dir[i] == 0) {
      out.flags.push_back(RationalFlag::Rational);
    } else if (certified_irrational && *certified_irrational) {
      out.flags.push_back(RationalFlag::Irrational);
    } else {
      out.flags.push_back(RationalFlag::Unknown);
    }
  }
  return out;
}

}  // namespace fm
