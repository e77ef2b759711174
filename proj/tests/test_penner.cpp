#include "doctest.h"
#include "helpers.hpp"

using namespace fmtest;

namespace {
PennerSpec scalar_spec(long entry, std::vector<PennerStep> word) {
  PennerSpec s;
  s.intersection = PolyMatrix(1, 1, std::vector<GroupPoly>{GroupPoly::constant({"t"}, entry)});
  s.word = std::move(word);
  s.generic = true;
  return s;
}

bool same(const GroupPoly& got, const std::string& expr) {
  return equal_up_to_unit(got, P(expr, got.vars()));
}

const char* kQuartic =
    "u^4 - (78t^2+785t+1929+779t^-1+77t^-2)u^3 + (25t^2+2673t+21326+2673t^-1+25t^-2)u^2"
    " - (77t^2+779t+1929+785t^-1+78t^-2)u + 1";
}  // namespace

TEST_SUITE("penner") {
  TEST_CASE("twist_block") {
    PennerSpec s = penner62_spec();
    PolyMatrix zero = twist_block(s, {'a', {0, 0, 0}});
    CHECK(zero == PolyMatrix::identity(5, s.intersection.vars()));

    PolyMatrix a = twist_block(s, {'a', {1, 1, 1}});
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 2; ++j) CHECK(a.at(i, 3 + j) == s.intersection.at(i, j));

    PennerSpec one = scalar_spec(2, {{'a', {1}}, {'b', {1}}});
    PolyMatrix blk = twist_block(one, {'a', {1}});
    CHECK(blk.at(0, 0) == P("1", {"t"}));
    CHECK(blk.at(0, 1) == P("2", {"t"}));
    CHECK(blk.at(1, 0).is_zero());
    CHECK(blk.at(1, 1) == P("1", {"t"}));
  }

  TEST_CASE("phi") {
    GroupPoly phi62 = phi(penner62_spec());
    CHECK(same(phi62, std::string("(u-1)^10 * (") + kQuartic + ")"));
    CHECK(same(phi(scalar_spec(2, {{'a', {1}}, {'b', {1}}})), "u^2-6u+1"));
    CHECK(same(phi(scalar_spec(2, {{'a', {2}}, {'b', {2}}})), "u^2-18u+1"));
  }

  TEST_CASE("symmetry_check") {
    PennerSpec s = penner62_spec();
    CHECK_FALSE(symmetry_check(s));
    s.word = {{'a', {1, 1, 1}}, {'b', {1, 1}}, {'a', {2, 2, 2}}, {'b', {3, 3}}};
    CHECK(symmetry_check(s));
    CHECK(symmetry_check(scalar_spec(2, {{'a', {1}}, {'b', {1}}})));
  }

  TEST_CASE("word normalization conjugates to a-first order") {
    PennerSpec s = scalar_spec(2, {{'b', {1}}, {'a', {1}}});
    CHECK(same(phi(s), "u^2-6u+1"));
    CHECK_THROWS_AS(phi(scalar_spec(2, {{'b', {1}}})), Error);
  }

  TEST_CASE("declared intersection count must match") {
    PennerSpec s = penner62_spec();
    s.r = 13;
    CHECK_THROWS_AS(phi(s), Error);
  }

  TEST_CASE("property: proportional words are symmetric") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> k(1, 3), len(1, 3);
    PennerSpec base = penner62_spec();
    std::vector<long> v{1, 2, 1}, w{1, 1};
    for (int i = 0; i < 100; ++i) {
      PennerSpec s = base;
      s.word.clear();
      long n = len(rng);
      for (long j = 0; j < n; ++j) {
        long x = k(rng), y = k(rng);
        std::vector<long> a, b;
        for (long c : v) a.push_back(x * c);
        for (long c : w) b.push_back(y * c);
        s.word.push_back({'a', a});
        s.word.push_back({'b', b});
      }
      REQUIRE(symmetry_check(s));
    }
  }

  TEST_CASE("property: phi at t=1 matches the integer block product") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<long> k(1, 3);
    PennerSpec base = penner62_spec();
    for (int i = 0; i < 100; ++i) {
      PennerSpec s = base;
      s.word = {{'a', {k(rng), k(rng), k(rng)}}, {'b', {k(rng), k(rng)}}};
      if (i % 2) s.word.push_back({'a', {k(rng), k(rng), k(rng)}}), s.word.push_back({'b', {k(rng), k(rng)}});
      GroupPoly ph = phi(s);
      PolyMatrix prod = word_product(s, normalize_word(s.word));
      std::vector<GroupPoly> ints;
      for (const auto& row : specialize_ones(prod))
        for (const auto& x : row) ints.push_back(GroupPoly::constant({"z"}, x));
      PolyMatrix flat(5, 5, ints);
      GroupPoly cp = specialize_ones(char_det(flat, "u"), {0});
      GroupPoly e = pow(P("u-1", {"u"}), 14 - 5);
      REQUIRE(equal_up_to_unit(specialize_ones(ph, {0}), mul(e, cp)));
    }
  }

  TEST_CASE("property: twist blocks are unipotent") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<long> k(0, 4);
    PennerSpec s = penner62_spec();
    for (int i = 0; i < 100; ++i) {
      PennerStep st = (i % 2) ? PennerStep{'a', {k(rng), k(rng), k(rng)}} : PennerStep{'b', {k(rng), k(rng)}};
      REQUIRE(determinant(twist_block(s, st)) == GroupPoly::constant(s.intersection.vars(), 1));
    }
  }
}
