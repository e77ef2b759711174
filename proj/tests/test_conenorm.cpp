#include "doctest.h"
#include "helpers.hpp"

using namespace fmtest;

TEST_SUITE("conenorm") {
  TEST_CASE("teich_norm") {
    CHECK(teich_norm(eq1(), rv({1, 0})) == 5);
    CHECK(teich_norm(eq1(), rv({0, 1})) == 2);
    CHECK(teich_norm(P("3*u^2*t^-1"), rv({4, 7})) == 0);
    CHECK(teich_norm(eq1(), RatVec{q("1/2"), q("1/3")}) == q("5/2"));
    CHECK_THROWS_AS(teich_norm(GroupPoly(UT), rv({1, 0})), Error);
  }

  TEST_CASE("fibered_cone") {
    ConeDesc c = fibered_cone(eq1(), rv({1, 0}));
    CHECK(c.dominant == ExpVec{3, 0});
    CHECK(prune_redundant(c.inequalities) == std::vector<Covector>{{1, -1}, {1, 1}});
    CHECK(c.contains(rv({3, 1})));
    CHECK_FALSE(c.contains(rv({1, 1})));
    CHECK(c.contains_closure(rv({1, 1})));

    ConeDesc one = fibered_cone(P("u-2", {"u"}), rv({1}));
    CHECK(prune_redundant(one.inequalities) == std::vector<Covector>{{1}});

    std::vector<std::string> xyz{"x", "y", "z"};
    GroupPoly m = magic72_theta();
    ConeDesc mc = fibered_cone(m, RatVec{q("7/2"), q("1"), q("0")});
    CHECK(mc.contains_closure(rv({5, 2, 2})));
    CHECK(mc.contains_closure(rv({2, 0, -2})));
    CHECK(mc.contains(RatVec{q("7/2"), q("1"), q("0")}));
  }

  TEST_CASE("fibered_cone rejects a reference without a unique dominant term") {
    CHECK_THROWS_AS(fibered_cone(eq1(), rv({0, 1})), Error);
  }

  TEST_CASE("slice_covector") {
    CHECK(slice_covector({2, 0}, Covector{1, 1}, SliceMode::Drill) == Covector{3, 1});
    CHECK(slice_covector({2, 0}, Covector{2, 2}, SliceMode::Branch, 2) == Covector{6, 2});
    CHECK(slice_covector({2, 0}, std::nullopt, SliceMode::Base) == Covector{2, 0});
    CHECK_THROWS_AS(slice_covector({2, 0}, Covector{1, 1}, SliceMode::Branch, 1), Error);
  }

  TEST_CASE("fiber_topology") {
    for (long n = 1; n <= 6; ++n) {
      FiberTopology d = fiber_topology({n, -(n - 1)}, {2, 0}, Covector{1, 1}, SliceMode::Drill);
      CHECK(d.neg_chi == 2 * n + 1);
      CHECK(d.meridian_count == 1);
      FiberTopology b = fiber_topology({n, -(n - 1)}, {2, 0}, Covector{2, 2}, SliceMode::Branch, 2);
      CHECK(b.neg_chi == 4 * n + 2);
    }
    CHECK(fiber_topology({1, 0}, {2, 0}, std::nullopt, SliceMode::Base).neg_chi == 2);
  }

  TEST_CASE("drilling_equivalent") {
    CHECK_FALSE(drilling_equivalent({1, 1}, {2, 2}, {2, 0}));
    CHECK(drilling_equivalent({1, 1}, {1, 1}, {2, 0}));
    CHECK(drilling_equivalent({1, 1}, {4, 2}, {2, 0}));
  }

  TEST_CASE("branched_admissible") {
    BranchAdmissibility a = branched_admissible({2, 2}, 1);
    CHECK(a.d == 2);
    CHECK(a.ok);
    a = branched_admissible({1, 1}, 1);
    CHECK(a.d == 1);
    CHECK_FALSE(a.ok);
    a = branched_admissible({4, 6}, 2);
    CHECK(a.d == 2);
    CHECK_FALSE(a.ok);
  }

  TEST_CASE("property: teich_norm is homogeneous") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> d(-20, 20), den(1, 9);
    for (int i = 0; i < 120; ++i) {
      GroupPoly p = random_poly(rng, UT, 5, 3);
      if (p.is_zero()) continue;
      RatVec a{Rational(d(rng), den(rng)), Rational(d(rng), den(rng))};
      a[0].canonicalize();
      a[1].canonicalize();
      RatVec a2{a[0] * 2, a[1] * 2};
      REQUIRE(teich_norm(p, a2) == 2 * teich_norm(p, a));
    }
  }

  TEST_CASE("property: the dominant term wins strictly inside the cone") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> d(-30, 30), den(1, 7);
    int inside = 0;
    const GroupPoly theta = eq1();
    ConeDesc c = fibered_cone(theta, rv({1, 0}));
    for (int i = 0; i < 400 && inside < 150; ++i) {
      RatVec a{Rational(d(rng), den(rng)), Rational(d(rng), den(rng))};
      a[0].canonicalize();
      a[1].canonicalize();
      if (!c.contains(a)) continue;
      ++inside;
      Rational top = dot(a, c.dominant);
      for (const auto& [g, coef] : theta.terms())
        if (g != c.dominant) REQUIRE(dot(a, g) < top);
    }
    CHECK(inside >= 100);
  }

  TEST_CASE("property: cone construction asserts dominance at the reference") {
    std::mt19937_64 rng(43);
    int built = 0;
    for (int i = 0; i < 150; ++i) {
      GroupPoly p = random_poly(rng, UT, 5, 3);
      if (p.is_zero()) continue;
      RatVec ref{Rational(7), Rational(3)};
      ConeDesc c;
      try {
        c = fibered_cone(p, ref);
      } catch (const Error&) {
        continue;
      }
      ++built;
      for (const auto& [g, coef] : p.terms())
        if (g != c.dominant) REQUIRE(dot(ref, c.dominant) > dot(ref, g));
    }
    CHECK(built >= 100);
  }
}
