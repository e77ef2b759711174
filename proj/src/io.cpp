#include "io.hpp"

#include <cctype>
#include <set>

#include "error.hpp"

namespace fm {

namespace {

std::pair<size_t, size_t> line_col(const std::string& text, size_t pos) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void syntax_error(const std::string& text, size_t pos, const std::string& what) {
  auto [l, c] = line_col(text, pos);
  throw Error(ErrorCode::Parse, "line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what);
}

class ExprParser {
 public:
  ExprParser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  GroupPoly run() {
    GroupPoly p = expr();
    skip();
    if (i_ != s_.size()) syntax_error(s_, i_, std::string("unexpected '") + s_[i_] + "'");
    return p;
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& vars_;
  size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool starts_factor(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '('; }

  GroupPoly expr() {
    GroupPoly acc(vars_);
    bool first = true;
    while (true) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++i_;
      } else if (!first) {
        break;
      }
      GroupPoly t = term();
      acc = negate ? sub(acc, t) : add(acc, t);
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  GroupPoly term() {
    GroupPoly f = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i_;
        f = mul(f, factor());
      } else if (starts_factor(c)) {
        f = mul(f, factor());
      } else {
        break;
      }
    }
    return f;
  }

  long exponent() {
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++i_;
    }
    bool neg = false;
    char c = peek();
    if (c == '-' || c == '+') {
      neg = c == '-';
      ++i_;
    }
    skip();
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) syntax_error(s_, i_, "expected an integer exponent");
    if (i_ - start > 6) syntax_error(s_, start, "exponent too large");
    long e = std::stol(s_.substr(start, i_ - start));
    if (paren) {
      if (peek() != ')') syntax_error(s_, i_, "expected ')'");
      ++i_;
    }
    return neg ? -e : e;
  }

  GroupPoly factor() {
    size_t at = (skip(), i_);
    GroupPoly base = primary();
    if (peek() != '^') return base;
    ++i_;
    long e = exponent();
    if (e >= 0) {
      if (e > 10000) syntax_error(s_, at, "exponent too large");
      return pow(base, static_cast<unsigned>(e));
    }
    if (base.size() != 1 || abs(base.terms().begin()->second) != 1) {
      syntax_error(s_, at, "negative power of a non-monomial");
    }
    const auto& [g, c] = *base.terms().begin();
    ExpVec ng(g.size());
    for (size_t k = 0; k < g.size(); ++k) ng[k] = g[k] * e;
    Integer sign = (c < 0 && (e % 2 != 0)) ? Integer(-1) : Integer(1);
    return GroupPoly::monomial(vars_, ng, sign);
  }

  GroupPoly primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      GroupPoly p = expr();
      if (peek() != ')') syntax_error(s_, i_, "expected ')'");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return GroupPoly::constant(vars_, Integer(s_.substr(start, i_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(start, i_ - start);
      for (size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) return GroupPoly::variable(vars_, k);
      syntax_error(s_, start, "unknown variable '" + name + "'");
    }
    if (c == '\0') syntax_error(s_, i_, "unexpected end of expression");
    syntax_error(s_, i_, std::string("unexpected '") + c + "'");
  }
};

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> vars_from_json(const json& j) {
  const json& v = field(j, "vars");
  if (!v.is_array()) throw Error(ErrorCode::Parse, "'vars' must be an array of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& x : v) {
    if (!x.is_string()) throw Error(ErrorCode::Parse, "variable names must be strings");
    if (!seen.insert(x.get<std::string>()).second) throw Error(ErrorCode::Parse, "duplicate variable " + x.dump());
    out.push_back(x.get<std::string>());
  }
  return out;
}

json interval_to_json(const Interval& in) { return json{{"lo", rational_to_json(in.lo)}, {"hi", rational_to_json(in.hi)}}; }

Interval interval_from_json(const json& j) {
  return Interval{rational_from_json(field(j, "lo")), rational_from_json(field(j, "hi"))};
}

json terms_to_json(const GroupPoly& p) {
  json terms = json::array();
  for (const auto& [g, c] : p.terms()) terms.push_back(json{{"c", integer_to_json(c)}, {"e", g}});
  return terms;
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t pos = e.byte > 0 ? e.byte - 1 : 0;
    auto [l, c] = line_col(text, pos);
    throw Error(ErrorCode::Parse, "line " + std::to_string(l) + ", column " + std::to_string(c) + ": malformed JSON");
  }
}

GroupPoly parse_poly_expr(const std::string& text, const std::vector<std::string>& vars) {
  return ExprParser(text, vars).run();
}

json integer_to_json(const Integer& v) {
  static const Integer limit("9007199254740992");
  if (abs(v) < limit) return json(v.get_si());
  return json(v.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

json rational_to_json(const Rational& q) {
  if (q.get_den() == 1) return integer_to_json(q.get_num());
  return json(to_string(q));
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::Parse, "expected an exact rational (integer or \"p/q\" string), got " + j.dump());
}

json ratvec_to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_to_json(q));
  return a;
}

RatVec ratvec_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected an array of rationals");
  RatVec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Covector covector_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected an array of integers");
  Covector out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::Parse, "covector entries must be integers");
    out.push_back(x.get<long>());
  }
  return out;
}

json poly_to_json(const GroupPoly& p) {
  return json{{"vars", p.vars()}, {"terms", terms_to_json(p)}, {"expr", to_string(p)}};
}

GroupPoly poly_from_json(const json& j, const std::vector<std::string>& vars) {
  if (j.is_string()) return parse_poly_expr(j.get<std::string>(), vars);
  if (j.is_number_integer() || j.is_number_unsigned()) return GroupPoly::constant(vars, integer_from_json(j));
  if (!j.is_object()) throw Error(ErrorCode::Parse, "expected a polynomial");
  if (j.contains("terms")) {
    GroupPoly p(vars);
    for (const auto& t : j.at("terms")) {
      ExpVec e = covector_from_json(field(t, "e"));
      if (e.size() != vars.size()) {
        throw Error(ErrorCode::DimensionMismatch, "exponent vector has length " + std::to_string(e.size()) +
                                                      ", expected " + std::to_string(vars.size()));
      }
      p.add_term(e, integer_from_json(field(t, "c")));
    }
    return p;
  }
  return parse_poly_expr(field(j, "expr").get<std::string>(), vars);
}

GroupPoly poly_from_json(const json& j) { return poly_from_json(j, vars_from_json(j)); }

json matrix_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m.at(i, k)));
    rows.push_back(row);
  }
  return json{{"vars", m.vars()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

PolyMatrix matrix_from_json(const json& j) {
  auto vars = vars_from_json(j);
  const json& e = field(j, "entries");
  if (!e.is_array() || e.empty()) throw Error(ErrorCode::Parse, "'entries' must be a nonempty array of rows");
  const size_t rows = e.size(), cols = e.at(0).size();
  if (j.contains("rows") && j.at("rows").get<size_t>() != rows) {
    throw Error(ErrorCode::DimensionMismatch, "declared row count does not match the entries");
  }
  if (j.contains("cols") && j.at("cols").get<size_t>() != cols) {
    throw Error(ErrorCode::DimensionMismatch, "declared column count does not match the entries");
  }
  std::vector<GroupPoly> entries;
  for (size_t i = 0; i < rows; ++i) {
    if (!e.at(i).is_array() || e.at(i).size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has the wrong length");
    }
    for (const auto& x : e.at(i)) entries.push_back(poly_from_json(x, vars));
  }
  return PolyMatrix(rows, cols, std::move(entries));
}

json penner_to_json(const PennerSpec& s) {
  json word = json::array();
  for (const auto& st : s.word) word.push_back(json{{"kind", std::string(1, st.kind)}, {"mult", st.mult}});
  return json{{"intersection", matrix_to_json(s.intersection)},
              {"word", word},
              {"r", s.r},
              {"generic", s.generic},
              {"new_var", s.new_var}};
}

PennerSpec penner_from_json(const json& j) {
  PennerSpec s;
  const json& m = field(j, "intersection");
  if (m.is_array()) {
    json wrapped{{"vars", field(j, "vars")}, {"entries", m}};
    s.intersection = matrix_from_json(wrapped);
  } else {
    s.intersection = matrix_from_json(m);
  }
  for (const auto& st : field(j, "word")) {
    PennerStep step;
    std::string k = field(st, "kind").get<std::string>();
    if (k != "a" && k != "b") throw Error(ErrorCode::Parse, "step kind must be \"a\" or \"b\"");
    step.kind = k[0];
    step.mult = covector_from_json(field(st, "mult"));
    s.word.push_back(std::move(step));
  }
  if (j.contains("r")) s.r = j.at("r").get<long>();
  if (j.contains("generic")) s.generic = j.at("generic").get<bool>();
  if (j.contains("new_var")) s.new_var = j.at("new_var").get<std::string>();
  return s;
}

json segment_to_json(const Segment& s) {
  json j{{"start", ratvec_to_json(s.start)}, {"end", ratvec_to_json(s.end)}};
  if (s.chart) j["chart"] = json{{"origin", ratvec_to_json(s.chart->origin)}, {"direction", ratvec_to_json(s.chart->direction)}};
  if (s.covector) j["covector"] = *s.covector;
  return j;
}

Segment segment_from_json(const json& j) {
  Segment s;
  s.start = ratvec_from_json(field(j, "start"));
  s.end = ratvec_from_json(field(j, "end"));
  if (s.start.size() != s.end.size()) throw Error(ErrorCode::DimensionMismatch, "segment endpoints differ in length");
  if (j.contains("chart")) {
    const json& c = j.at("chart");
    s.chart = Chart{ratvec_from_json(field(c, "origin")), ratvec_from_json(field(c, "direction"))};
  }
  if (j.contains("covector")) s.covector = covector_from_json(j.at("covector"));
  return s;
}

json cone_to_json(const ConeDesc& c) {
  return json{{"dominant", c.dominant},
              {"inequalities", c.inequalities},
              {"reference", ratvec_to_json(c.reference)},
              {"irredundant", prune_redundant(c.inequalities)}};
}

ConeDesc cone_from_json(const json& j) {
  ConeDesc c;
  c.dominant = covector_from_json(field(j, "dominant"));
  for (const auto& n : field(j, "inequalities")) c.inequalities.push_back(covector_from_json(n));
  c.reference = ratvec_from_json(field(j, "reference"));
  return c;
}

json intpoly_to_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& x : p.c) a.push_back(integer_to_json(x));
  return a;
}

IntPoly intpoly_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected an ascending coefficient array");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return IntPoly(std::move(c));
}

json lambda_to_json(const DilatationValue& v, int digits) {
  return json{{"lambda", v.value.str(digits)},
              {"log_lambda", v.log_value.str(digits)},
              {"residual", v.residual.str(6)},
              {"enclosure", {v.lo.str(digits, MPFR_RNDD), v.hi.str(digits, MPFR_RNDU)}},
              {"digits", v.digits}};
}

json minpoint_to_json(const MinPoint& m) {
  json coords = json::array();
  for (const auto& x : m.coordinates) coords.push_back(x.str(m.digits));
  json j{{"parameter", m.parameter.str(m.digits)},
         {"chart_parameter", m.chart_parameter.str(m.digits)},
         {"coordinates", coords},
         {"lambda", lambda_to_json(m.lambda, m.digits)},
         {"first_order_residual", m.first_order_residual.str(6)},
         {"segment", segment_to_json(m.segment)},
         {"digits", m.digits}};
  if (m.norm_check) j["norm_check"] = m.norm_check->str(m.digits);
  if (m.exact) j["exact_midpoint"] = ratvec_to_json(*m.exact);
  return j;
}

json amodule_to_json(const AModulePresentation& a, int digits) {
  json coords = json::array(), flags = json::array();
  for (const auto& x : a.coordinates) coords.push_back(x.str(digits));
  for (auto f : a.flags) flags.push_back(to_string(f));
  return json{{"coordinates", coords}, {"pairing", a.pairing.str(digits)}, {"rational_flags", flags}};
}

json census_to_json(const std::vector<OrbitClass>& classes) {
  json a = json::array();
  for (const auto& c : classes) {
    a.push_back(json{{"m", c.u_degree},
                     {"t_class", c.t_class},
                     {"multiplicity", integer_to_json(c.multiplicity)},
                     {"cell", c.cell}});
  }
  return a;
}

json certificate_to_json(const IrrationalityCertificate& c) {
  const CriticalSystem& s = c.system;
  json system{{"value", poly_to_json(s.value)},
              {"derivative", poly_to_json(s.derivative)},
              {"gx", rational_to_json(s.gx)},
              {"gy", rational_to_json(s.gy)},
              {"chart", {{"origin", ratvec_to_json(s.chart.origin)}, {"direction", ratvec_to_json(s.chart.direction)}}},
              {"removed_binomials", s.removed}};
  json j{{"system", system},
         {"eliminant", {{"var", "Y"}, {"coefficients", intpoly_to_json(c.eliminant)}, {"text", to_string(c.eliminant, "Y")}}},
         {"x_degree", c.x_degree},
         {"D", c.D},
         {"c", integer_to_json(c.c)},
         {"B", integer_to_json(c.B)},
         {"y_enclosure", interval_to_json(c.y_enclosure)},
         {"x_enclosure", interval_to_json(c.x_enclosure)},
         {"enclosure", {{"lo", c.ratio_lo}, {"hi", c.ratio_hi}}},
         {"ratio", c.ratio_value},
         {"sigma", c.sigma_value},
         {"excluded", c.excluded},
         {"verdict", to_string(c.verdict)},
         {"hypotheses", c.hypotheses},
         {"failures", c.failures},
         {"digits", c.digits}};
  if (c.reduced) {
    j["reduced"] = {{"var", "A"}, {"coefficients", intpoly_to_json(*c.reduced)}, {"text", to_string(*c.reduced, "A")}};
  }
  if (c.irreducible_prime) j["irreducible"] = {{"prime", *c.irreducible_prime}, {"target", c.irreducible_target}};
  return j;
}

IrrationalityCertificate certificate_from_json(const json& j) {
  IrrationalityCertificate c;
  const json& s = field(j, "system");
  c.system.value = poly_from_json(field(s, "value"));
  c.system.derivative = poly_from_json(field(s, "derivative"));
  c.system.gx = rational_from_json(field(s, "gx"));
  c.system.gy = rational_from_json(field(s, "gy"));
  const json& ch = field(s, "chart");
  c.system.chart = Chart{ratvec_from_json(field(ch, "origin")), ratvec_from_json(field(ch, "direction"))};
  if (s.contains("removed_binomials"))
    for (const auto& g : s.at("removed_binomials")) c.system.removed.push_back(covector_from_json(g));
  c.eliminant = intpoly_from_json(field(field(j, "eliminant"), "coefficients"));
  if (j.contains("reduced")) c.reduced = intpoly_from_json(field(j.at("reduced"), "coefficients"));
  if (j.contains("irreducible")) {
    c.irreducible_prime = field(j.at("irreducible"), "prime").get<unsigned long>();
    c.irreducible_target = field(j.at("irreducible"), "target").get<std::string>();
  }
  c.x_degree = field(j, "x_degree").get<long>();
  c.D = field(j, "D").get<long>();
  c.c = integer_from_json(field(j, "c"));
  c.B = integer_from_json(field(j, "B"));
  c.y_enclosure = interval_from_json(field(j, "y_enclosure"));
  c.x_enclosure = interval_from_json(field(j, "x_enclosure"));
  const json& enc = field(j, "enclosure");
  c.ratio_lo = field(enc, "lo").get<std::string>();
  c.ratio_hi = field(enc, "hi").get<std::string>();
  c.ratio = Interval{parse_rational(c.ratio_lo), parse_rational(c.ratio_hi)};
  c.ratio_value = j.value("ratio", "");
  c.sigma_value = j.value("sigma", "");
  c.excluded = field(j, "excluded").get<bool>();
  std::string v = field(j, "verdict").get<std::string>();
  if (v != "irrational" && v != "inconclusive") throw Error(ErrorCode::Parse, "unknown verdict " + v);
  c.verdict = v == "irrational" ? Verdict::Irrational : Verdict::Inconclusive;
  c.hypotheses = j.value("hypotheses", std::vector<std::string>{});
  c.failures = j.value("failures", std::vector<std::string>{});
  c.digits = j.value("digits", 50);
  return c;
}

}  // namespace fm
