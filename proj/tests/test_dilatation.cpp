#include "doctest.h"
#include "helpers.hpp"

using namespace fmtest;

namespace {
const ConeDesc& cone1() {
  static const ConeDesc c = fibered_cone(eq1(), rv({1, 0}));
  return c;
}

Real sum_abs(const GroupPoly& p) {
  Integer s = 0;
  for (const auto& [g, c] : p.terms()) s += abs(c);
  return Real(s);
}

// Random rational point strictly inside x1 > |x2|.
RatVec random_inside(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> a(1, 40), b(-39, 39), den(1, 9);
  for (;;) {
    Rational x(a(rng), den(rng)), y(b(rng), den(rng));
    x.canonicalize();
    y.canonicalize();
    if (x > abs(y)) return {x, y};
  }
}
}  // namespace

TEST_SUITE("dilatation") {
  TEST_CASE("eval_lambda") {
    GroupPoly lin = P("u-2", {"u"});
    ConeDesc c = fibered_cone(lin, rv({1}));
    CHECK(absd(eval_lambda(lin, rv({1}), c, 50).value - Real(2)) < 1e-40);

    // top root of u^4 - 29u^3 + 76u^2 - 29u + 1, from an independent root finder
    DilatationValue v = eval_lambda(eq1(), rv({1, 0}), cone1(), 50);
    CHECK(absd(v.value - Real::parse("26.1343537178292860356657541089913590301")) < 1e-35);
    CHECK(v.lo <= v.value);
    CHECK(v.value <= v.hi);

    Real s = Real::parse("0.36500242871384123658");
    DilatationValue m = eval_lambda(eq1(), RealVec{s, Real(1) - Real(3) * s}, cone1(), 50);
    CHECK(absd(m.value - Real::parse("11506.218498881386269")) < 1e-14);
  }

  TEST_CASE("eval_lambda rejects points outside the cone") {
    CHECK_THROWS_AS(eval_lambda(eq1(), rv({1, 2}), cone1(), 30), Error);
  }

  TEST_CASE("directional_derivative") {
    CHECK(absd(directional_derivative(eq1(), to_real(rv({1, 0})), to_real(rv({0, 1})), cone1(), 50)) < 1e-40);
    CHECK(directional_derivative(eq1(), to_real(rv({1, 0})), to_real(rv({0, 0})), cone1(), 50).is_zero());

    Segment seg = segment_from_covector(cone1(), {3, 1});
    MinPoint mp = minimize_on_slice(eq1(), cone1(), seg, 50);
    Real d = directional_derivative(eq1(), mp.coordinates, to_real(seg.direction()), cone1(), 50);
    CHECK(absd(d) < 1e-40 * mp.lambda.value.to_double());
  }

  TEST_CASE("segment_from_covector") {
    Segment s = segment_from_covector(cone1(), {3, 1});
    CHECK(s.start == RatVec{q("1/4"), q("1/4")});
    CHECK(s.end == RatVec{q("1/2"), q("-1/2")});
    s = segment_from_covector(cone1(), {2, 0});
    CHECK(s.start == RatVec{q("1/2"), q("1/2")});
    CHECK(s.end == RatVec{q("1/2"), q("-1/2")});
    s = segment_from_covector(cone1(), {6, 2});
    CHECK(s.start == RatVec{q("1/8"), q("1/8")});
    CHECK(s.end == RatVec{q("1/4"), q("-1/4")});
  }

  TEST_CASE("minimize_on_slice") {
    MinPoint base = minimize_on_slice(eq1(), cone1(), segment_from_covector(cone1(), {2, 0}), 50);
    REQUIRE(base.exact.has_value());
    CHECK(*base.exact == RatVec{q("1/2"), q("0")});
    CHECK(absd(base.coordinates[1]) < 1e-40);

    MinPoint drilled = minimize_on_slice(eq1(), cone1(), segment_from_covector(cone1(), {3, 1}), 50);
    CHECK(absd(drilled.coordinates[0] - Real::parse("0.36500242871384123658")) < 1e-19);
    CHECK(absd(drilled.coordinates[1] - (Real(1) - Real(3) * drilled.coordinates[0])) < 1e-45);
    CHECK(absd(drilled.lambda.value - Real::parse("11506.218498881386269")) < 1e-14);
    CHECK(drilled.first_order_residual.to_double() <= 1e-45);

    GroupPoly m = magic72_theta();
    ConeDesc mc = fibered_cone(m, RatVec{q("7/2"), q("1"), q("0")});
    Segment ms{rv({5, 2, 2}), rv({2, 0, -2}), Chart{rv({2, 0, -2}), rv({3, 2, 4})}, std::nullopt};
    MinPoint mm = minimize_on_slice(m, mc, ms, 50);
    CHECK(absd(mm.chart_parameter - Real::parse("0.52894428324635532521")) < 1e-19);
  }

  TEST_CASE("a_module_presentation") {
    MinPoint base = minimize_on_slice(eq1(), cone1(), segment_from_covector(cone1(), {2, 0}), 50);
    AModulePresentation a = a_module_presentation(base, {2, 0});
    CHECK(absd(a.pairing - Real(1)) < 1e-40);
    CHECK(a.flags == std::vector<RationalFlag>{RationalFlag::Rational, RationalFlag::Rational});

    MinPoint drilled = minimize_on_slice(eq1(), cone1(), segment_from_covector(cone1(), {3, 1}), 50);
    AModulePresentation d = a_module_presentation(drilled, {3, 1}, true);
    CHECK(absd(d.pairing - Real(1)) < 1e-40);
    CHECK(d.flags[0] == RationalFlag::Irrational);
    CHECK(a_module_presentation(drilled, {3, 1}).flags[0] == RationalFlag::Unknown);
    CHECK_THROWS_AS(a_module_presentation(drilled, {2, 0}), Error);

    MinPoint branched = minimize_on_slice(eq1(), cone1(), segment_from_covector(cone1(), {6, 2}), 50);
    for (size_t i = 0; i < 2; ++i)
      CHECK(absd(branched.coordinates[i] * Real(2) - drilled.coordinates[i]) < 1e-40);
  }

  TEST_CASE("property: root residual") {
    std::mt19937_64 rng(51);
    Real bound = pow10(-48) * sum_abs(eq1());
    for (int i = 0; i < 100; ++i) {
      DilatationValue v = eval_lambda(eq1(), random_inside(rng), cone1(), 50);
      REQUIRE(v.residual <= bound);
    }
  }

  TEST_CASE("property: homogeneity") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 100; ++i) {
      RatVec a = random_inside(rng);
      RatVec a2{a[0] * 2, a[1] * 2};
      Real l1 = eval_lambda(eq1(), a, cone1(), 50).log_value;
      Real l2 = eval_lambda(eq1(), a2, cone1(), 50).log_value;
      REQUIRE(absd(l2 * Real(2) - l1) <= 1e-40);
    }
  }

  TEST_CASE("property: Perron bound on integral classes") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> a(1, 30), b(-29, 29);
    Real bound = sum_abs(eq1());
    int n = 0;
    while (n < 100) {
      long x = a(rng), y = b(rng);
      if (x <= std::abs(y)) continue;
      ++n;
      REQUIRE(eval_lambda(eq1(), rv({x, y}), cone1(), 30).value <= bound);
    }
  }

  TEST_CASE("property: implicit derivative matches finite differences") {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> dir(-1, 1);
    const Real h = Real::parse("1e-8");
    int n = 0;
    while (n < 100) {
      RatVec a = random_inside(rng);
      RealVec v{Real(dir(rng)), Real(dir(rng))};
      RealVec ar = to_real(a);
      RealVec ap{ar[0] + h * v[0], ar[1] + h * v[1]}, am{ar[0] - h * v[0], ar[1] - h * v[1]};
      if (!cone1().contains(ap) || !cone1().contains(am)) continue;
      Real d = directional_derivative(eq1(), ar, v, cone1(), 30);
      Real fd = (eval_lambda(eq1(), ap, cone1(), 30).value - eval_lambda(eq1(), am, cone1(), 30).value) /
                (Real(2) * h);
      ++n;
      REQUIRE(absd(fd - d) <= 1e-6 * absd(d) + 1e-12);
    }
  }

  TEST_CASE("property: minimizer scales with the covector") {
    MinPoint one = minimize_on_slice(eq1(), cone1(), segment_from_covector(cone1(), {3, 1}), 50);
    for (long k = 2; k <= 4; ++k) {
      MinPoint mk = minimize_on_slice(eq1(), cone1(), segment_from_covector(cone1(), {3 * k, k}), 50);
      for (size_t i = 0; i < 2; ++i) CHECK(absd(mk.coordinates[i] * Real(k) - one.coordinates[i]) < 1e-40);
      Real expect = one.lambda.log_value * Real(k);
      CHECK(absd(mk.lambda.log_value - expect) < 1e-40);
    }
  }

  TEST_CASE("property: first-order optimality") {
    Segment seg = segment_from_covector(cone1(), {3, 1});
    MinPoint mp = minimize_on_slice(eq1(), cone1(), seg, 50);
    CHECK(mp.first_order_residual.to_double() <= 1e-48);
    RatVec d = seg.direction();
    Real eps = Real::parse("1e-4");
    for (int sgn : {-1, 1}) {
      RealVec x{mp.coordinates[0] + Real(sgn) * eps * Real(d[0]), mp.coordinates[1] + Real(sgn) * eps * Real(d[1])};
      CHECK(eval_lambda(eq1(), x, cone1(), 50).value >= mp.lambda.value);
    }
  }
}
