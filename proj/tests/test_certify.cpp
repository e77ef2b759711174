#include "doctest.h"
#include "helpers.hpp"

using namespace fmtest;

namespace {
IntPoly ip(std::vector<long> v) { return IntPoly::from_longs(v); }

std::vector<IntPoly> constants(const IntPoly& p) {
  std::vector<IntPoly> out;
  for (const auto& c : p.c) out.push_back(IntPoly(std::vector<Integer>{c}));
  return out;
}

Interval around(const std::string& centre, const std::string& half) {
  return Interval{q(centre) - q(half), q(centre) + q(half)};
}

struct Ex1 {
  ConeDesc cone = fibered_cone(eq1(), rv({1, 0}));
  Segment seg;
  IrrationalityCertificate cert;
  Ex1() {
    seg = segment_from_covector(cone, {3, 1});
    seg.chart = Chart{rv({0, 1}), rv({1, -3})};
    cert = certify_slice(eq1(), cone, seg, 50);
  }
};

const Ex1& ex1() {
  static const Ex1 e;
  return e;
}
}  // namespace

TEST_SUITE("certify") {
  TEST_CASE("resultant") {
    std::vector<std::string> xy{"X", "Y"};
    IntPoly r = resultant(P("X-Y", xy), P("X-Y^2", xy), 0);
    CHECK((r == ip({0, 1, -1}) || r == ip({0, -1, 1})));
    CHECK(resultant(P("X^2", xy), P("X", xy), 0).is_zero());
  }

  TEST_CASE("palindromic_reduce") {
    CHECK(palindromic_reduce(ip({1, -3, 1})) == ip({-3, 1}));
    CHECK(palindromic_reduce(ip({1, 0, 0, 0, 1})) == ip({-2, 0, 1}));
    CHECK_THROWS_AS(palindromic_reduce(ip({1, -3, 2})), Error);
  }

  TEST_CASE("irreducible_mod_p") {
    IntPoly f = ip({2354832, -3782016, 2422552, -778216, 128025, -9530, 200});
    CHECK(irreducible_mod_p(f, 7));
    CHECK_FALSE(irreducible_mod_p(ip({-1, 0, 1}), 7));
    CHECK(irreducible_mod_p(ip({1, 0, 1}), 3));
  }

  TEST_CASE("denominator_bound") {
    DenominatorBound b = denominator_bound(ip({200, 1, 200}), 12);
    CHECK(b.c == 200);
    CHECK(b.B == 36);
    CHECK(b.worst_prime == 2);
    CHECK(denominator_bound(ip({8, 3, 8}), 2).B == 6);
    CHECK(denominator_bound(ip({5, 0, 8}), 2).c == 40);
    CHECK_THROWS_AS(denominator_bound(ip({1, 1, 1}), 4), Error);
  }

  TEST_CASE("exclude_rationals") {
    CHECK_FALSE(exclude_rationals(Interval{q("0.4999"), q("0.5001")}, 2));
    CHECK(exclude_rationals(around("2.739707", "0.000005"), 36));
    CHECK(exclude_rationals(around("2236.999051", "0.00005"), 40));
    CHECK_THROWS_AS(exclude_rationals(Interval{q("2.7"), q("2.8")}, 36), Error);
    try {
      exclude_rationals(Interval{q("2/3") + q("1e-40"), q("2/3") + q("2e-40")}, Integer("10000001"));
      FAIL("expected a limit error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Limit);
    }
    CHECK(simplest_rational(Interval{q("0.4999"), q("0.5001")}) == q("1/2"));
    CHECK(simplest_rational(around("2.739707", "0.000005")).get_den() > 36);
    CHECK(simplest_rational(Interval{q("2.2"), q("2.4")}) == q("7/3"));
  }

  TEST_CASE("critical system on the symmetric slice") {
    ConeDesc cone = fibered_cone(eq1(), rv({1, 0}));
    Segment seg = segment_from_covector(cone, {2, 0});
    seg.chart = Chart{RatVec{q("1/2"), q("0")}, rv({0, 1})};
    CriticalSystem cs = build_critical_system(eq1(), seg);
    // the derivative equation is odd under Y -> 1/Y, so Y = 1 is a root for every X
    CHECK(equal_up_to_unit(cs.derivative, substitute_inverse(cs.derivative, 1)));
    CHECK(specialize_ones(cs.derivative, {0}).is_zero());
  }

  TEST_CASE("example 1 certificate") {
    const auto& c = ex1().cert;
    REQUIRE(c.reduced.has_value());
    CHECK(*c.reduced == ip({2354832, -3782016, 2422552, -778216, 128025, -9530, 200}));
    CHECK(c.eliminant.degree() == 12);
    CHECK(c.eliminant.lead() == 200);
    CHECK(c.c == 200);
    CHECK(c.B >= 36);
    CHECK(abs(c.ratio.lo - q("2.7397077973527441797")) < q("1e-19"));
    CHECK(abs(c.y_enclosure.lo - q("30.356400083666808489")) < q("1e-18"));
    CHECK(c.y_enclosure.width() < q("1e-50"));
    CHECK(c.excluded);
    CHECK(c.verdict == Verdict::Irrational);
    CHECK(c.failures.empty());
    CHECK(recheck(c).ok);
    CHECK(c.system.removed == std::vector<ExpVec>{{1, 0}});
  }

  TEST_CASE("penner base-face certificate") {
    GroupPoly ph = phi(penner62_spec());
    ConeDesc cone = fibered_cone(ph, rv({1, 0}));
    Segment seg = segment_from_covector(cone, {4, 0});
    seg.chart = Chart{RatVec{q("1/4"), q("0")}, rv({0, -1})};
    IrrationalityCertificate c = certify_slice(ph, cone, seg, 50);
    CHECK(c.verdict == Verdict::Irrational);
    CHECK(c.B >= 40);
    CHECK(exclude_rationals(c.ratio, c.B > 40 ? c.B : Integer(40)));
    CHECK(abs(c.ratio.lo - q("2236.9990517498322997")) < q("1e-16"));
    CHECK(recheck(c).ok);
  }

  TEST_CASE("magic manifold certificate") {
    GroupPoly m = magic72_theta();
    ConeDesc cone = fibered_cone(m, RatVec{q("7/2"), q("1"), q("0")});
    Segment seg{rv({5, 2, 2}), rv({2, 0, -2}), Chart{rv({2, 0, -2}), rv({3, 2, 4})}, std::nullopt};
    IrrationalityCertificate c = certify_slice(m, cone, seg, 50);
    CHECK(c.verdict == Verdict::Irrational);
    CHECK(c.B >= 16);
    CHECK(abs(c.ratio.lo - q("3.7811165813630729703")) < q("1e-19"));
    CHECK(recheck(c).ok);
  }

  TEST_CASE("recheck catches tampering") {
    IrrationalityCertificate c = ex1().cert;
    c.B = 2;
    CHECK_FALSE(recheck(c).ok);

    c = ex1().cert;
    c.ratio.hi += q("1/1000");
    CHECK_FALSE(recheck(c).ok);

    c = ex1().cert;
    c.y_enclosure = Interval{q("31"), q("32")};
    CHECK_FALSE(recheck(c).ok);

    c = ex1().cert;
    c.eliminant = ip({1, -3, 1});
    CHECK_FALSE(recheck(c).ok);
  }

  TEST_CASE("Y from A agrees with the minimized lambda") {
    const auto& e = ex1();
    MinPoint mp = minimize_on_slice(eq1(), e.cone, e.seg, 50);
    PrecisionScope ps(80);
    // A from the reduced polynomial by bisection on exact signs
    Rational lo = q("30.3"), hi = q("30.5");
    REQUIRE(sign_at(*e.cert.reduced, lo) != sign_at(*e.cert.reduced, hi));
    int slo = sign_at(*e.cert.reduced, lo);
    for (int i = 0; i < 200; ++i) {
      Rational mid = (lo + hi) / 2;
      (sign_at(*e.cert.reduced, mid) == slo ? lo : hi) = mid;
    }
    Real A(lo);
    Real y_from_a = (A + sqrt(A * A - Real(4))) / Real(2);
    Real y_direct = exp(mp.chart_parameter * Real(e.cert.system.gy) * mp.lambda.log_value);
    CHECK(absd((y_from_a - y_direct) / y_direct) < 1e-48);
  }

  TEST_CASE("property: resultant vanishes exactly on a shared root") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int i = 0; i < 150; ++i) {
      long a = d(rng), b = d(rng), a2 = d(rng), c = d(rng);
      IntPoly f = ip({-a, 1}) * ip({-b, 1});
      IntPoly g = ip({-a2, 1}) * ip({-c, 1});
      bool shared = a == a2 || a == c || b == a2 || b == c;
      REQUIRE(resultant_sylvester(constants(f), constants(g)).is_zero() == shared);
    }
  }

  TEST_CASE("property: squarefree part is coprime to its derivative") {
    std::mt19937_64 rng(62);
    std::uniform_int_distribution<long> d(-4, 4), e(1, 3);
    for (int i = 0; i < 120; ++i) {
      IntPoly f = ip({1});
      for (int k = 0; k < 3; ++k) {
        IntPoly lin = ip({d(rng), e(rng)});
        long m = e(rng);
        for (long j = 0; j < m; ++j) f = f * lin;
      }
      IntPoly s = squarefree_part(f);
      REQUIRE(gcd(s, derivative(s)).degree() == 0);
      REQUIRE(divides(s, f));
    }
  }

  TEST_CASE("property: Sturm counts match constructed roots") {
    std::mt19937_64 rng(63);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 120; ++i) {
      std::vector<long> roots{d(rng), d(rng), d(rng)};
      IntPoly f = ip({1});
      for (long r : roots) f = f * ip({-r, 1});
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      long inside = 0;
      for (long r : roots) inside += (r > -3 && r <= 4);
      REQUIRE(sturm_count(f, q("-3"), q("4")) == inside);
    }
  }

  TEST_CASE("property: exclusion scan agrees with the simplest rational") {
    std::mt19937_64 rng(64);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000), B(1, 60);
    for (int i = 0; i < 300; ++i) {
      Rational centre(num(rng), den(rng));
      centre.canonicalize();
      Integer b = B(rng);
      Rational half = Rational(1, 8) / (b * b);
      Interval iv{centre - half / 3, centre + half / 5};
      bool excl = exclude_rationals(iv, b);
      REQUIRE(excl == (simplest_rational(iv).get_den() > b));
    }
  }
}
