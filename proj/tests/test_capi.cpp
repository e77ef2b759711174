// Links only the shared library; exercises the C surface the CLI uses.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "fibermin/fibermin.h"
#include "json.hpp"

namespace {
std::string take(char* s) {
  std::string out = s ? s : "";
  fm_string_free(s);
  return out;
}

const char* kMagic = R"({"vars":["x","y","z"],"expr":"x*y*z^-1 - x - y - x*z^-1 - y*z^-1 + 1"})";
}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("poly arithmetic and errors") {
    fm_poly *a = nullptr, *b = nullptr, *q = nullptr, *bad = nullptr;
    REQUIRE(fm_poly_parse_json(R"({"vars":["u"],"expr":"u^2-1"})", &a) == FM_OK);
    REQUIRE(fm_poly_parse_json(R"({"vars":["u"],"expr":"u-1"})", &b) == FM_OK);
    REQUIRE(fm_poly_exact_div(a, b, &q) == FM_OK);
    char* text = nullptr;
    REQUIRE(fm_poly_to_text(q, &text) == FM_OK);
    CHECK(take(text) == "u + 1");

    fm_poly* c = nullptr;
    REQUIRE(fm_poly_parse_json(R"({"vars":["u"],"expr":"u^2+1"})", &c) == FM_OK);
    CHECK(fm_poly_exact_div(c, b, &bad) == FM_NOT_DIVISIBLE);
    CHECK(bad == nullptr);
    CHECK(std::string(fm_last_error()).find("not divisible") != std::string::npos);
    CHECK(std::string(fm_status_name(FM_NOT_DIVISIBLE)).size() > 0);

    fm_poly* junk = nullptr;
    CHECK(fm_poly_parse_json("{not json", &junk) == FM_PARSE);
    CHECK(fm_poly_parse_json(nullptr, &junk) == FM_INVALID_ARGUMENT);

    fm_poly_free(a);
    fm_poly_free(b);
    fm_poly_free(c);
    fm_poly_free(q);
    fm_poly_free(nullptr);
  }

  TEST_CASE("expression parsing with explicit variables") {
    const char* vars[] = {"u", "t"};
    fm_poly *p = nullptr, *r = nullptr;
    REQUIRE(fm_poly_parse_expr("t+2+t^-1", vars, 2, &p) == FM_OK);
    REQUIRE(fm_poly_substitute_inverse(p, 1, &r) == FM_OK);
    int eq = 0;
    REQUIRE(fm_poly_equal(p, r, &eq) == FM_OK);
    CHECK(eq == 1);
    fm_poly_free(p);
    fm_poly_free(r);
  }

  TEST_CASE("minimize and certify the magic manifold slice") {
    fm_poly* p = nullptr;
    REQUIRE(fm_poly_parse_json(kMagic, &p) == FM_OK);
    fm_cone* cone = nullptr;
    REQUIRE(fm_cone_compute(p, R"(["7/2", 1, 0])", &cone) == FM_OK);
    fm_segment* seg = nullptr;
    REQUIRE(fm_segment_parse_json(
                R"({"start":[5,2,2],"end":[2,0,-2],"chart":{"origin":[2,0,-2],"direction":[3,2,4]}})", &seg) ==
            FM_OK);
    fm_minpoint* mp = nullptr;
    REQUIRE(fm_minimize(p, cone, seg, 40, &mp) == FM_OK);
    char* js = nullptr;
    REQUIRE(fm_minpoint_to_json(mp, &js) == FM_OK);
    auto j = nlohmann::json::parse(take(js));
    CHECK(j.dump().find("5.2894428") != std::string::npos);

    fm_certificate* cert = nullptr;
    REQUIRE(fm_certify(p, mp, 40, &cert) == FM_OK);
    int irr = 0, ok = 0;
    REQUIRE(fm_certificate_verdict(cert, &irr) == FM_OK);
    CHECK(irr == 1);
    char* report = nullptr;
    REQUIRE(fm_certificate_recheck(cert, &ok, &report) == FM_OK);
    CHECK(ok == 1);
    fm_string_free(report);

    char* cj = nullptr;
    REQUIRE(fm_certificate_to_json(cert, &cj) == FM_OK);
    auto cjson = nlohmann::json::parse(std::string(cj));
    fm_certificate* back = nullptr;
    REQUIRE(fm_certificate_parse_json(cj, &back) == FM_OK);
    fm_string_free(cj);
    REQUIRE(fm_certificate_recheck(back, &ok, &report) == FM_OK);
    CHECK(ok == 1);
    fm_string_free(report);

    cjson["B"] = 1;
    fm_certificate* forged = nullptr;
    REQUIRE(fm_certificate_parse_json(cjson.dump().c_str(), &forged) == FM_OK);
    REQUIRE(fm_certificate_recheck(forged, &ok, &report) == FM_OK);
    CHECK(ok == 0);
    CHECK(take(report).size() > 2);

    fm_certificate_free(forged);
    fm_certificate_free(back);
    fm_certificate_free(cert);
    fm_minpoint_free(mp);
    fm_segment_free(seg);
    fm_cone_free(cone);
    fm_poly_free(p);
  }

  TEST_CASE("norm, slice and census") {
    fm_poly* p = nullptr;
    REQUIRE(fm_poly_parse_json(R"J({"vars":["u","t"],"expr":"(u-1)(u^2-(5t+19+5t^-1)u+(14t+48+14t^-1)-(5t+19+5t^-1)u^-1+u^-2)"})J", &p) == FM_OK);
    char* n = nullptr;
    REQUIRE(fm_teich_norm(p, "[1,0]", &n) == FM_OK);
    CHECK(take(n) == "5");
    char* w = nullptr;
    REQUIRE(fm_slice_covector("[2,0]", "[2,2]", "branch", 2, &w) == FM_OK);
    CHECK(nlohmann::json::parse(take(w))["covector"] == nlohmann::json::parse("[6,2]"));
    CHECK(fm_slice_covector("[2,0]", "[1,1]", "branch", 1, &w) != FM_OK);

    fm_matrix* m = nullptr;
    REQUIRE(fm_matrix_parse_json(R"({"vars":["t"],"entries":[["t"]]})", &m) == FM_OK);
    char* cs = nullptr;
    REQUIRE(fm_census(m, 3, &cs) == FM_OK);
    CHECK(take(cs).find("-3") != std::string::npos);
    fm_matrix_free(m);
    fm_poly_free(p);
  }

  TEST_CASE("reproduce") {
    char* rep = nullptr;
    int passed = 0;
    REQUIRE(fm_reproduce("example1", 30, &rep, &passed) == FM_OK);
    CHECK(passed == 1);
    fm_string_free(rep);
    CHECK(fm_reproduce("unknown", 30, &rep, &passed) != FM_OK);
    CHECK(std::string(fm_version()).size() > 0);
  }
}
