#include "doctest.h"
#include "helpers.hpp"

using namespace fmtest;

namespace {
PolyMatrix mat(const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& vars = {"t"}) {
  std::vector<GroupPoly> e;
  for (const auto& r : rows)
    for (const auto& s : r) e.push_back(P(s, vars));
  return PolyMatrix(rows.size(), rows[0].size(), e);
}

// det(uI - A) over Z[u] by the permutation expansion, independent of polymat.
GroupPoly int_charpoly(const std::vector<std::vector<Integer>>& a) {
  const std::vector<std::string> U{"u"};
  size_t n = a.size();
  GroupPoly total(U);
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    int sign = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    GroupPoly term = GroupPoly::constant(U, sign);
    for (size_t i = 0; i < n; ++i) {
      GroupPoly e = GroupPoly::constant(U, -a[i][perm[i]]);
      if (perm[i] == i) e = add(e, GroupPoly::variable(U, 0));
      term = mul(term, e);
    }
    total = add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

PolyMatrix random_matrix(std::mt19937_64& rng, size_t n, const std::vector<std::string>& vars) {
  std::vector<GroupPoly> e;
  for (size_t i = 0; i < n * n; ++i) e.push_back(random_poly(rng, vars, 2, 1, 3));
  return PolyMatrix(n, n, e);
}
}  // namespace

TEST_SUITE("polymat") {
  TEST_CASE("mat_mul") {
    PolyMatrix m = example1_transition();
    CHECK(mat_mul(PolyMatrix::identity(5, m.vars()), m) == m);
    CHECK(mat_mul(mat({{"1", "0"}, {"2", "1"}}), mat({{"1", "2"}, {"0", "1"}})) == mat({{"1", "2"}, {"2", "5"}}));
  }

  TEST_CASE("char_det") {
    GroupPoly d = char_det(mat({{"t", "1"}, {"1", "t^-1"}}), "u");
    CHECK(d == P("u^2 - (t+t^-1)u"));
    CHECK(char_det(PolyMatrix::identity(3, {"t"}), "u") == P("(u-1)^3"));
    CHECK(normalize_unit(char_det(example1_transition(), "u")) == normalize_unit(eq1()));
  }

  TEST_CASE("teichmuller_from_transition") {
    CHECK(normalize_unit(teichmuller_from_transition(example1_transition(), std::nullopt, "u")) == normalize_unit(eq1()));
    CHECK(teichmuller_from_transition(PolyMatrix::identity(2, {"t"}), PolyMatrix::identity(2, {"t"}), "u") == P("1"));
    CHECK(teichmuller_from_transition(mat({{"t", "0"}, {"0", "1"}}), mat({{"1"}}), "u") == P("u-t"));
  }

  TEST_CASE("size limit is a configurable guard") {
    PolyMatrix m = PolyMatrix::identity(4, {"t"});
    CHECK_THROWS_AS(determinant(m, 3), Error);
    CHECK(determinant(m, 4) == P("1", {"t"}));
  }

  TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(mat_mul(mat({{"1", "2"}}), mat({{"1", "2"}})), Error);
  }

  TEST_CASE("property: char_det at t=1 matches the integer characteristic polynomial") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
      PolyMatrix m = random_matrix(rng, 3, {"t"});
      GroupPoly d = char_det(m, "u");
      REQUIRE(specialize_ones(d, {0}) == int_charpoly(specialize_ones(m)));
    }
  }

  TEST_CASE("property: char_det of block upper-triangular matrices factors") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
      PolyMatrix a = random_matrix(rng, 2, {"t"}), b = random_matrix(rng, 2, {"t"}), c = random_matrix(rng, 2, {"t"});
      PolyMatrix big(4, 4, std::vector<std::string>{"t"});
      for (size_t r = 0; r < 2; ++r)
        for (size_t s = 0; s < 2; ++s) {
          big.at(r, s) = a.at(r, s);
          big.at(r, s + 2) = c.at(r, s);
          big.at(r + 2, s + 2) = b.at(r, s);
        }
      REQUIRE(char_det(big, "u") == mul(char_det(a, "u"), char_det(b, "u")));
    }
  }

  TEST_CASE("property: mat_mul is associative") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
      PolyMatrix a = random_matrix(rng, 3, {"t"}), b = random_matrix(rng, 3, {"t"}), c = random_matrix(rng, 3, {"t"});
      REQUIRE(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
  }
}
