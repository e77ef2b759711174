#include "presets.hpp"

#include <algorithm>

#include "error.hpp"

namespace fm {

namespace {

const std::vector<std::string> kUT{"u", "t"};
const std::vector<std::string> kT{"t"};

PolyMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& vars) {
  std::vector<GroupPoly> e;
  for (const auto& r : rows)
    for (const auto& x : r) e.push_back(parse_poly_expr(x, vars));
  return PolyMatrix(rows.size(), rows.front().size(), std::move(e));
}

struct Checker {
  json checks = json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, json value, json target) {
    ok = ok && pass;
    checks.push_back(json{{"name", name}, {"value", value}, {"target", target}, {"pass", pass}});
  }
  void near(const std::string& name, const Real& v, const std::string& target, const std::string& tol) {
    Real t = Real::parse(target), e = Real::parse(tol);
    add(name, abs(v - t) <= e, v.str(20), target + " +- " + tol);
  }
};

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), "stage '" + name + "' failed: " + e.what());
  }
}

ReproduceReport run_example1(int prec) {
  Checker ck;
  json rep{{"preset", "example1"}, {"prec", prec}};
  GroupPoly theta = stage("teichmuller", [] {
    return normalize_unit(teichmuller_from_transition(example1_transition(), std::nullopt, "u"));
  });
  ck.add("theta matches the printed polynomial", theta == normalize_unit(example1_theta()), to_string(theta),
         to_string(example1_theta()));
  ConeDesc cone = stage("cone", [&] { return fibered_cone(theta, {Rational(1), Rational(0)}); });
  auto irr = prune_redundant(cone.inequalities);
  ck.add("cone is x1 > |x2|", irr == std::vector<Covector>{{1, -1}, {1, 1}}, json(irr), "[[1,-1],[1,1]]");

  Segment seg = stage("slice", [&] {
    Segment s = segment_from_covector(cone, {3, 1});
    s.chart = Chart{{Rational(0), Rational(1)}, {Rational(1), Rational(-3)}};
    return s;
  });
  MinPoint mp = stage("minimize", [&] { return minimize_on_slice(theta, cone, seg, prec); });
  rep["minimum"] = minpoint_to_json(mp);
  ck.near("s*", mp.chart_parameter, "0.365002", "1e-5");
  ck.near("lambda", mp.lambda.value, "11506.21849", "1e-2");
  ck.add("first-order residual", mp.first_order_residual <= pow10(-(prec - 5)), mp.first_order_residual.str(4),
         "<= 1e-" + std::to_string(prec - 5));

  IrrationalityCertificate cert = stage("certify", [&] { return certify_minpoint(theta, mp, prec); });
  rep["certificate"] = certificate_to_json(cert);
  const std::vector<long> f{2354832, -3782016, 2422552, -778216, 128025, -9530, 200};
  ck.add("palindromic eliminant is f(A)", cert.reduced && *cert.reduced == IntPoly::from_longs(f),
         cert.reduced ? to_string(*cert.reduced, "A") : "none", "200*A^6 - 9530*A^5 + ... + 2354832");
  ck.add("f irreducible mod 7", irreducible_mod_p(IntPoly::from_longs(f), 7), true, true);
  {
    PrecisionScope ps(prec + 10);
    Real y((cert.y_enclosure.lo + cert.y_enclosure.hi) / 2);
    ck.near("Y", y, "30.35640008366680", "1e-10");
    ck.near("A", y + Real(1) / y, "30.38934206615629", "1e-10");
  }
  ck.add("ratio enclosure contains 2.739707", cert.ratio.lo <= Rational(2739717, 1000000) &&
                                                  cert.ratio.hi >= Rational(2739697, 1000000),
         cert.ratio_value, "2.739707 +- 1e-5");
  ck.add("B >= 36", cert.B >= 36, integer_to_json(cert.B), ">= 36");
  ck.add("exclusion", cert.excluded, cert.excluded, true);
  ck.add("verdict", cert.verdict == Verdict::Irrational, to_string(cert.verdict), "irrational");
  ck.add("recheck", recheck(cert).ok, recheck(cert).ok, true);

  MinPoint half = stage("branched minimize", [&] {
    Segment s = segment_from_covector(cone, {6, 2});
    return minimize_on_slice(theta, cone, s, prec);
  });
  Real diff(0);
  for (size_t i = 0; i < half.coordinates.size(); ++i) {
    diff = max(diff, abs(half.coordinates[i] * Real(2) - mp.coordinates[i]));
  }
  ck.add("w=(6,2) minimizer is half of w=(3,1)", diff <= pow10(-(prec - 10)), diff.str(4),
         "<= 1e-" + std::to_string(prec - 10));

  MinPoint base = stage("base face", [&] {
    Segment s = segment_from_covector(cone, {2, 0});
    return minimize_on_slice(theta, cone, s, prec);
  });
  ck.add("base-face minimizer is the midpoint", abs(base.coordinates[1]) <= pow10(-(prec - 10)) && base.exact,
         base.coordinates[1].str(4), "0");

  auto classes = census(example1_transition(), 1);
  json cell4 = json::array();
  for (const auto& c : classes)
    if (c.cell == 3) cell4.push_back(json{c.t_class, integer_to_json(c.multiplicity)});
  std::sort(cell4.begin(), cell4.end());
  ck.add("census m=1 cell 4 is 3t+9+3t^-1", cell4 == json::parse("[[[-1],3],[[0],9],[[1],3]]"), cell4,
         "(1,1)x3, (1,0)x9, (1,-1)x3");

  rep["checks"] = ck.checks;
  rep["passed"] = ck.ok;
  return {rep, ck.ok};
}

ReproduceReport run_penner62(int prec) {
  Checker ck;
  json rep{{"preset", "penner62"}, {"prec", prec}};
  PennerSpec spec = penner62_spec();
  GroupPoly phi_v = stage("penner-phi", [&] { return phi(spec); });
  GroupPoly quartic = parse_poly_expr(
      "u^4 - (78t^2+785t+1929+779t^-1+77t^-2)u^3 + (25t^2+2673t+21326+2673t^-1+25t^-2)u^2"
      " - (77t^2+779t+1929+785t^-1+78t^-2)u + 1",
      kUT);
  GroupPoly expected = normalize_unit(mul(pow(parse_poly_expr("u - 1", kUT), 10), quartic));
  ck.add("phi is (u-1)^10 times the printed quartic", normalize_unit(phi_v) == expected, to_string(phi_v),
         "(u-1)^10 * quartic");

  PennerSpec prop = spec;
  prop.word = {{'a', {1, 1, 1}}, {'b', {1, 1}}, {'a', {2, 2, 2}}, {'b', {3, 3}}};
  ck.add("proportional word is t-symmetric", stage("symmetry", [&] { return symmetry_check(prop); }), true, true);

  ConeDesc cone = stage("cone", [&] { return fibered_cone(phi_v, {Rational(1), Rational(0)}); });
  auto irr = prune_redundant(cone.inequalities);
  ck.add("cone is |x2| < x1/2", irr == std::vector<Covector>{{1, -2}, {1, 2}}, json(irr), "[[1,-2],[1,2]]");
  Segment seg = stage("slice", [&] {
    Segment s = segment_from_covector(cone, {4, 0});
    s.chart = Chart{{Rational(1, 4), Rational(0)}, {Rational(0), Rational(-1)}};
    return s;
  });
  MinPoint mp = stage("minimize", [&] { return minimize_on_slice(phi_v, cone, seg, prec); });
  rep["minimum"] = minpoint_to_json(mp);
  ck.near("s*", mp.chart_parameter, "0.0001117568645", "1e-12");
  {
    PrecisionScope ps(prec + 10);
    ck.near("1/(4 s*)", Real(1) / (Real(4) * mp.chart_parameter), "2236.999051", "1e-4");
  }
  IrrationalityCertificate cert = stage("certify", [&] { return certify_minpoint(phi_v, mp, prec); });
  rep["certificate"] = certificate_to_json(cert);
  Integer bmax = cert.B > 40 ? cert.B : Integer(40);
  bool excl = cert.ratio.width() < Rational(1) / (2 * bmax * bmax) && exclude_rationals(cert.ratio, bmax);
  ck.add("exclusion for q <= max(B, 40)", excl, integer_to_json(bmax), true);
  ck.add("verdict", cert.verdict == Verdict::Irrational, to_string(cert.verdict), "irrational");
  ck.add("recheck", recheck(cert).ok, recheck(cert).ok, true);
  rep["checks"] = ck.checks;
  rep["passed"] = ck.ok;
  return {rep, ck.ok};
}

ReproduceReport run_magic72(int prec) {
  Checker ck;
  json rep{{"preset", "magic72"}, {"prec", prec}};
  GroupPoly theta = magic72_theta();
  ConeDesc cone = stage("cone", [&] { return fibered_cone(theta, {Rational(7, 2), Rational(1), Rational(0)}); });
  Segment seg;
  seg.start = {Rational(5), Rational(2), Rational(2)};
  seg.end = {Rational(2), Rational(0), Rational(-2)};
  seg.chart = Chart{{Rational(2), Rational(0), Rational(-2)}, {Rational(3), Rational(2), Rational(4)}};
  MinPoint mp = stage("minimize", [&] { return minimize_on_slice(theta, cone, seg, prec); });
  rep["minimum"] = minpoint_to_json(mp);
  ck.near("t*", mp.chart_parameter, "0.528944", "1e-5");
  {
    PrecisionScope ps(prec + 10);
    ck.near("2/t*", Real(2) / mp.chart_parameter, "3.781116", "1e-5");
  }
  IrrationalityCertificate cert = stage("certify", [&] { return certify_minpoint(theta, mp, prec); });
  rep["certificate"] = certificate_to_json(cert);
  Integer bmax = cert.B > 16 ? cert.B : Integer(16);
  bool excl = cert.ratio.width() < Rational(1) / (2 * bmax * bmax) && exclude_rationals(cert.ratio, bmax);
  ck.add("exclusion for q <= max(B, 16)", excl, integer_to_json(bmax), true);
  ck.add("verdict", cert.verdict == Verdict::Irrational, to_string(cert.verdict), "irrational");
  ck.add("recheck", recheck(cert).ok, recheck(cert).ok, true);
  rep["checks"] = ck.checks;
  rep["passed"] = ck.ok;
  return {rep, ck.ok};
}

}  // namespace

PolyMatrix example1_transition() {
  return matrix_from_rows(
      {{"t+4+t^-1", "t+3+t^-1", "t+1", "1+t^-1", "0"},
       {"1", "1", "0", "0", "0"},
       {"2t+7+6t^-1+t^-2", "2t+7+6t^-1+t^-2", "t+4+t^-1", "3+6t^-1+t^-2", "t^-1"},
       {"2t^2+9t+10+3t^-1", "2t^2+9t+10+3t^-1", "t^2+5t+3", "3t+9+3t^-1", "1"},
       {"2t^2+9t+8+t^-1", "2t^2+9t+8+t^-1", "t^2+5t+1", "3t+8+t^-1", "2"}},
      kT);
}

GroupPoly example1_theta() {
  return parse_poly_expr("(u-1)(u^2 - (5t+19+5t^-1)u + (14t+48+14t^-1) - (5t+19+5t^-1)u^-1 + u^-2)", kUT);
}

PennerSpec penner62_spec() {
  PennerSpec s;
  s.intersection = matrix_from_rows({{"t+1", "1"}, {"t+4", "1+t^-1"}, {"2t", "2"}}, kT);
  s.word = {{'a', {1, 1, 1}}, {'b', {1, 1}}, {'a', {2, 1, 1}}, {'b', {2, 1}}};
  s.r = 14;
  s.generic = true;
  return s;
}

GroupPoly magic72_theta() { return parse_poly_expr("x y z^-1 - x - y - x z^-1 - y z^-1 + 1", {"x", "y", "z"}); }

std::vector<std::string> preset_names() { return {"example1", "penner62", "magic72"}; }

ReproduceReport reproduce(const std::string& preset, int prec) {
  if (prec < 20) throw Error(ErrorCode::InvalidArgument, "reproduce needs at least 20 digits");
  if (preset == "example1") return run_example1(prec);
  if (preset == "penner62") return run_penner62(prec);
  if (preset == "magic72") return run_magic72(prec);
  throw Error(ErrorCode::InvalidArgument, "unknown preset '" + preset + "' (example1, penner62, magic72)");
}

}  // namespace fm
