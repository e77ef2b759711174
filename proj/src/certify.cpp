#include "certify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "error.hpp"

namespace fm {

namespace {

constexpr int kGuardDigits = 30;
constexpr unsigned long kIrreduciblePrimeLimit = 600;
constexpr unsigned long kTrialDivisionLimit = 1000000;
constexpr long kScanLimit = 10000000;

// Primitive g with entries in [-r, r], first nonzero entry positive.
std::vector<ExpVec> binomial_candidates(size_t b) {
  const long r = b <= 4 ? 2 : 1;
  std::vector<ExpVec> out;
  ExpVec g(b, -r);
  while (true) {
    bool nonzero = false, first_pos = false, decided = false;
    for (long x : g) {
      if (x != 0 && !decided) {
        first_pos = x > 0;
        decided = true;
      }
      nonzero = nonzero || x != 0;
    }
    if (nonzero && first_pos && content(g) == 1) out.push_back(g);
    size_t i = 0;
    while (i < b && g[i] == r) g[i++] = -r;
    if (i == b) break;
    ++g[i];
  }
  // small support first so that u - 1 is found before u^2 t - 1 and friends
  std::stable_sort(out.begin(), out.end(), [](const ExpVec& a, const ExpVec& c) {
    long na = 0, nc = 0;
    for (long x : a) na += x < 0 ? -x : x;
    for (long x : c) nc += x < 0 ? -x : x;
    return na < nc;
  });
  return out;
}

// Coefficients of f in the eliminated variable.  With strip set, every common
// monomial factor is divided out; otherwise only negative exponents are cleared.
std::vector<IntPoly> as_coefficients(const GroupPoly& f, size_t eliminate, bool strip = true) {
  if (f.nvars() != 2) throw Error(ErrorCode::DimensionMismatch, "resultant needs polynomials in two variables");
  if (eliminate > 1) throw Error(ErrorCode::InvalidArgument, "eliminated variable index must be 0 or 1");
  if (f.is_zero()) throw Error(ErrorCode::Domain, "resultant of the zero polynomial");
  const size_t o = 1 - eliminate;
  long me = f.min_exp(eliminate), mo = f.min_exp(o);
  if (!strip) {
    me = std::min(me, 0L);
    mo = std::min(mo, 0L);
  }
  std::vector<std::vector<Integer>> c(static_cast<size_t>(f.max_exp(eliminate) - me + 1));
  for (const auto& [g, a] : f.terms()) {
    auto& row = c[static_cast<size_t>(g[eliminate] - me)];
    size_t k = static_cast<size_t>(g[o] - mo);
    if (row.size() <= k) row.resize(k + 1, Integer(0));
    row[k] += a;
  }
  std::vector<IntPoly> out;
  for (auto& row : c) out.emplace_back(std::move(row));
  return out;
}

IntPoly clean_eliminant(const IntPoly& r) {
  return remove_cyclotomic(squarefree_part(strip_x_power(r)));
}

Rational pow10_rat(long k) {
  Integer t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(1, t) : Rational(t);
}

// Isolate the root of s near v and shrink the interval to relative width 10^-digits.
std::optional<Interval> isolate(const IntPoly& s, const Real& v, int digits) {
  if (s.degree() < 1) return std::nullopt;
  const Rational vr = v.to_rational();
  const Rational mag = vr == 0 ? Rational(1) : Rational(abs(vr));
  for (long k : {static_cast<long>(std::max(digits / 2, 6)), 20L, 12L, 8L, 5L, 3L}) {
    Rational d = mag * pow10_rat(-k);
    Interval in{vr - d, vr + d};
    int sl = sign_at(s, in.lo), sh = sign_at(s, in.hi);
    if (sl == 0 || sh == 0 || sl == sh) continue;
    if (sturm_count(s, in.lo, in.hi) != 1) continue;
    const Rational target = mag * pow10_rat(-digits);
    while (in.width() > target) {
      Rational mid = (in.lo + in.hi) / 2;
      int sm = sign_at(s, mid);
      if (sm == 0) return Interval{mid, mid};
      if (sm == sl) {
        in.lo = mid;
      } else {
        in.hi = mid;
      }
    }
    return in;
  }
  return std::nullopt;
}

bool nonzero_on(const IntPoly& k, const Interval& in) {
  if (k.is_zero()) return false;
  if (k.degree() == 0) return true;
  int sl = sign_at(k, in.lo), sh = sign_at(k, in.hi);
  if (sl == 0 || sl != sh) return false;
  if (in.lo == in.hi) return true;
  return sturm_count(squarefree_part(k), in.lo, in.hi) == 0;
}

// Interval for log(b) with b in [lo, hi], lo > 0.
std::pair<Real, Real> log_interval(const Interval& in) {
  Real lo(in.lo, MPFR_RNDD), hi(in.hi, MPFR_RNDU);
  return {log_rounded(lo, MPFR_RNDD), log_rounded(hi, MPFR_RNDU)};
}

std::optional<std::pair<Real, Real>> ratio_interval(const Interval& x, const Interval& y) {
  if (x.lo <= 0 || y.lo <= 0) return std::nullopt;
  auto [a, b] = log_interval(x);
  auto [c, d] = log_interval(y);
  if (a.sign() <= 0) return std::nullopt;
  if (c.sign() > 0) return std::make_pair(div_rounded(a, d, MPFR_RNDD), div_rounded(b, c, MPFR_RNDU));
  if (d.sign() < 0) return std::make_pair(div_rounded(b, d, MPFR_RNDD), div_rounded(a, c, MPFR_RNDU));
  return std::nullopt;  // log Y interval straddles 0
}

std::string describe_binomial(const std::vector<std::string>& vars, const ExpVec& g) {
  GroupPoly q = sub(GroupPoly::monomial(vars, g), GroupPoly::constant(vars, 1));
  return "(" + to_string(q) + ")";
}

std::string interval_str(const Interval& in, int digits) {
  Real lo(in.lo, MPFR_RNDD), hi(in.hi, MPFR_RNDU);
  return "[" + lo.str(digits, MPFR_RNDD) + ", " + hi.str(digits, MPFR_RNDU) + "]";
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::Irrational ? "irrational" : "inconclusive"; }

CriticalSystem build_critical_system(const GroupPoly& p0, const Segment& seg) {
  if (p0.is_zero()) throw Error(ErrorCode::Domain, "zero polynomial");
  const size_t b = p0.nvars();
  if (seg.start.size() != b || seg.end.size() != b) {
    throw Error(ErrorCode::DimensionMismatch, "segment dimension does not match the polynomial");
  }
  CriticalSystem sys;
  sys.chart = seg.effective_chart();

  // drop binomial factors x^g - 1: they never vanish at lambda > 1 on the cone
  GroupPoly p = p0;
  for (const auto& g : binomial_candidates(b)) {
    GroupPoly q = sub(GroupPoly::monomial(p.vars(), g), GroupPoly::constant(p.vars(), 1));
    while (p.size() > 1) {
      try {
        p = exact_div(p, q);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDivisible) throw;
        break;
      }
      sys.removed.push_back(g);
    }
  }

  std::vector<Rational> A, T;
  std::vector<Integer> coef;
  for (const auto& [g, c] : p.terms()) {
    A.push_back(dot(sys.chart.origin, g));
    T.push_back(dot(sys.chart.direction, g));
    coef.push_back(c);
  }
  RatVec da, dt;
  for (size_t i = 0; i < A.size(); ++i) {
    da.push_back(A[i] - A[0]);
    dt.push_back(T[i] - T[0]);
  }
  sys.gx = rational_gcd(da);
  sys.gy = rational_gcd(dt);
  if (sys.gy == 0) throw Error(ErrorCode::Degenerate, "zero derivative polynomial: P is constant along the segment");
  if (sys.gx == 0) {
    throw Error(ErrorCode::Degenerate,
                "chart origin pairs equally with every support point; choose a chart origin off that hyperplane");
  }
  const std::vector<std::string> xy{"X", "Y"};
  sys.value = GroupPoly(xy);
  sys.derivative = GroupPoly(xy);
  for (size_t i = 0; i < A.size(); ++i) {
    Rational ex = da[i] / sys.gx, ey = dt[i] / sys.gy;
    if (ex.get_den() != 1 || ey.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral exponent");
    ExpVec e{ex.get_num().get_si(), ey.get_num().get_si()};
    sys.value.add_term(e, coef[i]);
    sys.derivative.add_term(e, coef[i] * ey.get_num());
  }
  if (sys.derivative.is_zero()) throw Error(ErrorCode::Degenerate, "zero derivative polynomial");
  return sys;
}

IntPoly resultant(const GroupPoly& f, const GroupPoly& g, size_t eliminate) {
  require_same_vars(f, g);
  return resultant_sylvester(as_coefficients(f, eliminate, false), as_coefficients(g, eliminate, false));
}

namespace {
IntPoly stripped_resultant(const GroupPoly& f, const GroupPoly& g, size_t eliminate) {
  require_same_vars(f, g);
  return resultant_sylvester(as_coefficients(f, eliminate), as_coefficients(g, eliminate));
}
}  // namespace

DenominatorBound denominator_bound(const IntPoly& e, long degree_bound) {
  if (e.is_zero()) throw Error(ErrorCode::Domain, "zero eliminant");
  if (degree_bound < 1) throw Error(ErrorCode::InvalidArgument, "degree bound must be positive");
  if (e.trail() == 0) throw Error(ErrorCode::Domain, "eliminant vanishes at 0");
  Integer lead = abs(e.lead()), cst = abs(e.trail());
  if (lead == 1 && cst == 1) throw Error(ErrorCode::Domain, "unit root: no bound");
  DenominatorBound out;
  out.c = lcm(lead, cst);
  Integer r = out.c;
  long best = 0;
  auto record = [&](const Integer& p, long v) {
    if (v > best) {
      best = v;
      out.worst_prime = p;
    }
  };
  for (unsigned long d = 2; d <= kTrialDivisionLimit && Integer(d) * d <= r; d += (d == 2 ? 1 : 2)) {
    long v = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), d)) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), d);
      ++v;
    }
    if (v) record(Integer(d), v);
  }
  if (r > 1) {
    Integer lim(kTrialDivisionLimit);
    if (r <= lim * lim) {
      record(r, 1);  // no factor up to sqrt(r): prime
    } else {
      // every prime factor exceeds the trial limit
      long k = 0;
      Integer pw(1);
      while (pw * lim <= r) {
        pw *= lim;
        ++k;
      }
      record(r, k);
      out.valuation_exact = false;
    }
  }
  out.worst_valuation = best;
  out.B = Integer(degree_bound) * best;
  return out;
}

Rational simplest_rational(const Interval& enc) {
  if (enc.hi < enc.lo) throw Error(ErrorCode::InvalidArgument, "empty interval");
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), enc.lo.get_num_mpz_t(), enc.lo.get_den_mpz_t());
  if (Rational(fl) == enc.lo) return enc.lo;
  if (Rational(fl + 1) <= enc.hi) return Rational(fl + 1);
  Rational a = enc.hi - fl, b = enc.lo - fl;  // both in (0, 1)
  Rational inner = simplest_rational(Interval{Rational(1) / a, Rational(1) / b});
  Rational out = Rational(fl) + Rational(1) / inner;
  out.canonicalize();
  return out;
}

bool exclude_rationals(const Interval& enc, const Integer& B) {
  if (B < 1) throw Error(ErrorCode::InvalidArgument, "denominator bound must be positive");
  if (enc.hi < enc.lo) throw Error(ErrorCode::InvalidArgument, "empty interval");
  if (!(enc.width() < Rational(1) / (2 * B * B))) throw Error(ErrorCode::InvalidArgument, "enclosure too wide");
  if (B > kScanLimit) throw Error(ErrorCode::Limit, "denominator bound " + B.get_str() + " exceeds the scan limit");
  const bool by_cf = simplest_rational(enc).get_den() > B;
  bool hit = false;
  const long bl = B.get_si();
  Integer lo, hi, t;
  for (long q = 1; q <= bl && !hit; ++q) {
    mpz_mul_si(t.get_mpz_t(), enc.lo.get_num_mpz_t(), q);
    mpz_cdiv_q(lo.get_mpz_t(), t.get_mpz_t(), enc.lo.get_den_mpz_t());
    mpz_mul_si(t.get_mpz_t(), enc.hi.get_num_mpz_t(), q);
    mpz_fdiv_q(hi.get_mpz_t(), t.get_mpz_t(), enc.hi.get_den_mpz_t());
    hit = lo <= hi;
  }
  if (hit == by_cf) throw Error(ErrorCode::Internal, "exclusion scan and continued-fraction check disagree");
  return !hit;
}

IrrationalityCertificate certify_slice(const GroupPoly& p, const ConeDesc& cone, const Segment& seg, int prec) {
  MinPoint mp = minimize_on_slice(p, cone, seg, prec);
  return certify_minpoint(p, mp, prec);
}

IrrationalityCertificate certify_minpoint(const GroupPoly& p, const MinPoint& mp, int prec) {
  if (prec < 10) throw Error(ErrorCode::InvalidArgument, "certification needs at least 10 digits");
  PrecisionScope scope(prec + kGuardDigits);
  IrrationalityCertificate cert;
  cert.digits = prec;
  cert.system = build_critical_system(p, mp.segment);
  const CriticalSystem& sys = cert.system;
  auto fail = [&](const std::string& why) { cert.failures.push_back(why); };

  for (const auto& g : sys.removed) {
    cert.hypotheses.push_back("binomial factor " + describe_binomial(p.vars(), g) +
                              " removed; it does not vanish at lambda > 1");
  }

  const Real sigma = mp.chart_parameter;
  const Real logl = mp.lambda.log_value;
  const Real ly = sigma * Real(sys.gy) * logl;
  const Real xn = exp(Real(sys.gx) * logl), yn = exp(ly);
  cert.sigma_value = sigma.str(prec);
  cert.ratio_value = (Real(sys.gx) / (sigma * Real(sys.gy))).str(prec);

  IntPoly ry = stripped_resultant(sys.value, sys.derivative, 0);
  if (ry.is_zero()) throw Error(ErrorCode::Degenerate, "value and derivative equations share a factor");
  cert.eliminant = clean_eliminant(ry);
  const IntPoly& S = cert.eliminant;
  if (S.degree() < 1) throw Error(ErrorCode::Degenerate, "eliminant has no roots off the unit circle");
  if (palindromic_kind(S) == 1 && S.degree() % 2 == 0) cert.reduced = palindromic_reduce(S);

  // X as a polynomial in Y-coefficients
  std::vector<IntPoly> f1 = as_coefficients(sys.value, 0);
  cert.x_degree = static_cast<long>(f1.size()) - 1;
  cert.D = cert.x_degree * S.degree();

  auto yi = isolate(S, yn, prec + 10);
  if (!yi) {
    fail("no isolating interval for Y near the numeric minimizer");
    return cert;
  }
  cert.y_enclosure = *yi;
  cert.hypotheses.push_back("Y = lambda^(" + to_string(sys.gy) + " sigma) is the unique root of the eliminant in " +
                            interval_str(*yi, 25) + " (Sturm count 1)");
  {
    Real mid((yi->lo + yi->hi) / 2);
    if (abs(mid - yn) > abs(yn) * pow10(-(prec / 2))) fail("numeric Y disagrees with the isolated root");
  }

  // minimality
  for (unsigned long q = 3; q <= kIrreduciblePrimeLimit && !cert.irreducible_prime; ++q) {
    if (!is_prime_small(q)) continue;
    if (!mpz_divisible_ui_p(S.lead().get_mpz_t(), q) && irreducible_mod_p(S, q)) {
      cert.irreducible_prime = q;
      cert.irreducible_target = "eliminant";
    } else if (cert.reduced && !mpz_divisible_ui_p(cert.reduced->lead().get_mpz_t(), q) &&
               irreducible_mod_p(*cert.reduced, q)) {
      cert.irreducible_prime = q;
      cert.irreducible_target = "reduced";
    }
  }
  bool non_unit = false;
  if (!cert.irreducible_prime) {
    fail("could not certify the minimal polynomial by a mod-p irreducibility test");
  } else if (cert.irreducible_target == "eliminant") {
    cert.hypotheses.push_back("eliminant irreducible mod " + std::to_string(*cert.irreducible_prime) +
                              ", so it is the minimal polynomial of Y");
    non_unit = !(abs(S.lead()) == 1 && abs(S.trail()) == 1);
    if (non_unit) cert.hypotheses.push_back("Y is not an algebraic unit (leading or constant coefficient is not +-1)");
  } else {
    cert.hypotheses.push_back("reduced eliminant f(A), A = Y + 1/Y, irreducible mod " +
                              std::to_string(*cert.irreducible_prime) + ", so it is the minimal polynomial of A");
    non_unit = abs(cert.reduced->lead()) != 1;
    if (non_unit) {
      cert.hypotheses.push_back("A is not an algebraic integer (leading coefficient " +
                                cert.reduced->lead().get_str() + "), so Y is not an algebraic unit");
    }
  }
  if (cert.irreducible_prime && !non_unit) fail("Y may be an algebraic unit");

  // [Q(X,Y):Q(Y)] <= deg_X F1 needs F1(X, Y) to be a nonzero polynomial in X
  bool coeff_ok = false;
  for (size_t j = f1.size(); j-- > 0 && !coeff_ok;) {
    if (nonzero_on(f1[j], *yi)) {
      coeff_ok = true;
      cert.hypotheses.push_back("coefficient of X^" + std::to_string(j) +
                                " in the value equation is nonzero on the Y enclosure");
    }
  }
  if (!coeff_ok) fail("every X-coefficient of the value equation may vanish at Y");
  cert.hypotheses.push_back("D = " + std::to_string(cert.x_degree) + " * " + std::to_string(S.degree()) + " = " +
                            std::to_string(cert.D) + " bounds [Q(X,Y):Q] and every ramification index");

  try {
    DenominatorBound db = denominator_bound(S, cert.D);
    cert.c = db.c;
    cert.B = db.B;
    cert.hypotheses.push_back("c Y and c/Y are algebraic integers for c = " + db.c.get_str() + "; |v_P(Y)| <= D v_p(c) <= " +
                              db.B.get_str() + (db.valuation_exact ? "" : " (valuation bounded, cofactor unfactored)"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Domain) throw;
    fail(e.what());
    return cert;
  }

  IntPoly rx = stripped_resultant(sys.value, sys.derivative, 1);
  if (rx.is_zero()) throw Error(ErrorCode::Degenerate, "value and derivative equations share a factor");
  auto xi = isolate(squarefree_part(strip_x_power(rx)), xn, prec + 10);
  if (!xi) {
    fail("no isolating interval for X near the numeric minimizer");
    return cert;
  }
  cert.x_enclosure = *xi;
  cert.hypotheses.push_back("X = lambda^" + to_string(sys.gx) + " is the unique root of Res_Y in " +
                            interval_str(*xi, 25));
  cert.hypotheses.push_back("the numeric minimizer lies in both isolating intervals (agreement to " +
                            std::to_string(prec / 2) + " digits checked)");
  {
    Real mid((xi->lo + xi->hi) / 2);
    if (abs(mid - xn) > abs(xn) * pow10(-(prec / 2))) fail("numeric X disagrees with the isolated root");
  }

  auto ri = ratio_interval(*xi, *yi);
  if (!ri) {
    fail("log Y enclosure contains 0");
    return cert;
  }
  cert.ratio_lo = ri->first.str(prec + 10, MPFR_RNDD);
  cert.ratio_hi = ri->second.str(prec + 10, MPFR_RNDU);
  cert.ratio = Interval{parse_rational(cert.ratio_lo), parse_rational(cert.ratio_hi)};
  {
    Real rv = Real(sys.gx) / (sigma * Real(sys.gy));
    Real mid((cert.ratio.lo + cert.ratio.hi) / 2);
    if (abs(mid - rv) > abs(rv) * pow10(-(prec / 2))) fail("numeric ratio disagrees with the enclosure");
  }

  if (!(cert.ratio.width() < Rational(1) / (2 * cert.B * cert.B))) {
    fail("ratio enclosure wider than 1/(2B^2)");
  } else if (cert.B > kScanLimit) {
    fail("B = " + cert.B.get_str() + " exceeds the scan limit");
  } else {
    cert.excluded = exclude_rationals(cert.ratio, cert.B);
    if (!cert.excluded) fail("a rational with denominator <= B lies in the ratio enclosure");
  }
  cert.hypotheses.push_back("log X / log Y = " + to_string(sys.gx) + " / (" + to_string(sys.gy) +
                            " sigma); a rational sigma forces a ratio p/q with q <= B");
  cert.verdict = cert.failures.empty() && cert.excluded ? Verdict::Irrational : Verdict::Inconclusive;
  return cert;
}

RecheckResult recheck(const IrrationalityCertificate& cert) {
  RecheckResult out;
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.failures.push_back(why);
  };
  const IntPoly& S = cert.eliminant;
  if (S.degree() < 1) {
    fail("eliminant has degree < 1");
    return out;
  }
  if (cert.D != cert.x_degree * S.degree()) fail("D does not equal x_degree * deg(eliminant)");
  try {
    DenominatorBound db = denominator_bound(S, cert.D);
    if (db.c != cert.c) fail("c does not match the eliminant");
    if (db.B != cert.B) fail("B does not match D and c");
  } catch (const Error& e) {
    fail(e.what());
    return out;
  }
  const Interval& y = cert.y_enclosure;
  if (y.lo != y.hi) {
    int sl = sign_at(S, y.lo), sh = sign_at(S, y.hi);
    if (sl == 0 || sh == 0 || sl == sh) fail("eliminant does not change sign across the Y enclosure");
    else if (sturm_count(S, y.lo, y.hi) != 1) fail("Y enclosure does not isolate a single root");
  } else if (sign_at(S, y.lo) != 0) {
    fail("Y is not a root of the eliminant");
  }
  if (cert.irreducible_prime) {
    const IntPoly* target = cert.irreducible_target == "reduced" && cert.reduced ? &*cert.reduced : &S;
    if (cert.reduced && (palindromic_kind(S) != 1 || palindromic_reduce(S) != *cert.reduced)) {
      fail("reduced eliminant is not the palindromic reduction of the eliminant");
    }
    try {
      if (!irreducible_mod_p(*target, *cert.irreducible_prime)) fail("recorded irreducibility test fails");
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  try {
    if (parse_rational(cert.ratio_lo) != cert.ratio.lo || parse_rational(cert.ratio_hi) != cert.ratio.hi) {
      fail("ratio endpoints do not match their decimal strings");
    }
  } catch (const Error& e) {
    fail(e.what());
  }
  if (cert.x_enclosure.lo > 0 && cert.y_enclosure.lo > 0) {
    PrecisionScope scope(cert.digits + kGuardDigits);
    auto ri = ratio_interval(cert.x_enclosure, cert.y_enclosure);
    if (!ri || Real(cert.ratio.lo) > ri->first || Real(cert.ratio.hi) < ri->second) {
      fail("ratio enclosure does not contain log X / log Y over the recorded enclosures");
    }
  }
  if (cert.B < 1 || cert.B > kScanLimit || !(cert.ratio.width() < Rational(1) / (2 * cert.B * cert.B))) {
    if (cert.excluded) fail("enclosure too wide or B too large for the recorded exclusion");
  } else if (exclude_rationals(cert.ratio, cert.B) != cert.excluded) {
    fail("exclusion flag does not match the scan");
  }
  if (cert.verdict == Verdict::Irrational && (!cert.excluded || !cert.failures.empty() || !cert.irreducible_prime)) {
    fail("verdict irrational without exclusion and minimality");
  }
  return out;
}

}  // namespace fm
