#include "groupring.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace fm {

void require_same_vars(const GroupPoly& p, const GroupPoly& q) {
  if (p.vars() != q.vars()) {
    throw Error(ErrorCode::DimensionMismatch, "group ring elements use different variables");
  }
}

GroupPoly GroupPoly::constant(const std::vector<std::string>& vars, const Integer& c) {
  GroupPoly p(vars);
  p.add_term(ExpVec(vars.size(), 0), c);
  return p;
}

GroupPoly GroupPoly::monomial(const std::vector<std::string>& vars, const ExpVec& e, const Integer& c) {
  if (e.size() != vars.size()) throw Error(ErrorCode::DimensionMismatch, "exponent vector length differs from variable count");
  GroupPoly p(vars);
  p.add_term(e, c);
  return p;
}

GroupPoly GroupPoly::variable(const std::vector<std::string>& vars, size_t index) {
  ExpVec e(vars.size(), 0);
  e.at(index) = 1;
  return monomial(vars, e);
}

void GroupPoly::add_term(const ExpVec& e, const Integer& c) {
  if (e.size() != vars_.size()) throw Error(ErrorCode::DimensionMismatch, "exponent vector length differs from variable count");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer GroupPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

const std::pair<const ExpVec, Integer>& GroupPoly::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::Domain, "zero polynomial has no leading term");
  return *terms_.rbegin();
}

const std::pair<const ExpVec, Integer>& GroupPoly::trailing() const {
  if (terms_.empty()) throw Error(ErrorCode::Domain, "zero polynomial has no trailing term");
  return *terms_.begin();
}

long GroupPoly::max_exp(size_t i) const {
  if (terms_.empty()) throw Error(ErrorCode::Domain, "zero polynomial");
  long m = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return m;
}

long GroupPoly::min_exp(size_t i) const {
  if (terms_.empty()) throw Error(ErrorCode::Domain, "zero polynomial");
  long m = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return m;
}

GroupPoly add(const GroupPoly& p, const GroupPoly& q) {
  require_same_vars(p, q);
  GroupPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, c);
  return r;
}

GroupPoly sub(const GroupPoly& p, const GroupPoly& q) {
  require_same_vars(p, q);
  GroupPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, -c);
  return r;
}

GroupPoly neg(const GroupPoly& p) { return scale(p, -1); }

GroupPoly scale(const GroupPoly& p, const Integer& c) {
  GroupPoly r(p.vars());
  if (c == 0) return r;
  for (const auto& [e, a] : p.terms()) r.add_term(e, a * c);
  return r;
}

GroupPoly mul(const GroupPoly& p, const GroupPoly& q) {
  require_same_vars(p, q);
  GroupPoly r(p.vars());
  const size_t n = p.nvars();
  ExpVec e(n);
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (size_t i = 0; i < n; ++i) e[i] = ep[i] + eq[i];
      r.add_term(e, cp * cq);
    }
  }
  return r;
}

GroupPoly pow(const GroupPoly& p, unsigned n) {
  GroupPoly r = GroupPoly::constant(p.vars(), 1);
  GroupPoly b = p;
  while (n) {
    if (n & 1u) r = mul(r, b);
    n >>= 1;
    if (n) b = mul(b, b);
  }
  return r;
}

GroupPoly shift(const GroupPoly& p, const ExpVec& s) {
  if (s.size() != p.nvars()) throw Error(ErrorCode::DimensionMismatch, "shift length differs from variable count");
  GroupPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    ExpVec f = e;
    for (size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    r.add_term(f, c);
  }
  return r;
}

GroupPoly exact_div(const GroupPoly& p, const GroupPoly& q) {
  require_same_vars(p, q);
  if (q.is_zero()) throw Error(ErrorCode::Domain, "division by zero polynomial");
  GroupPoly quot(p.vars());
  if (p.is_zero()) return quot;
  const size_t n = p.nvars();
  // If Q*R = P then the Newton polytope of P is the Minkowski sum, which pins
  // the coordinate range of every quotient term.
  ExpVec lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    lo[i] = p.min_exp(i) - q.min_exp(i);
    hi[i] = p.max_exp(i) - q.max_exp(i);
    if (lo[i] > hi[i]) throw Error(ErrorCode::NotDivisible, "not divisible");
  }
  const auto& [qe, qc] = q.leading();
  GroupPoly rem = p;
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading();
    if (!mpz_divisible_p(rc.get_mpz_t(), qc.get_mpz_t())) throw Error(ErrorCode::NotDivisible, "not divisible");
    ExpVec e(n);
    for (size_t i = 0; i < n; ++i) {
      e[i] = re[i] - qe[i];
      if (e[i] < lo[i] || e[i] > hi[i]) throw Error(ErrorCode::NotDivisible, "not divisible");
    }
    Integer c = rc / qc;
    quot.add_term(e, c);
    for (const auto& [fe, fc] : q.terms()) {
      ExpVec g(n);
      for (size_t i = 0; i < n; ++i) g[i] = fe[i] + e[i];
      rem.add_term(g, -fc * c);
    }
  }
  return quot;
}

GroupPoly substitute_inverse(const GroupPoly& p, size_t var_index) {
  if (var_index >= p.nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  GroupPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    ExpVec f = e;
    f[var_index] = -f[var_index];
    r.add_term(f, c);
  }
  return r;
}

GroupPoly reverse_all(const GroupPoly& p) {
  GroupPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    ExpVec f = e;
    for (auto& x : f) x = -x;
    r.add_term(f, c);
  }
  return r;
}

GroupPoly normalize_unit(const GroupPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::Domain, "cannot normalize the zero polynomial");
  ExpVec s = p.trailing().first;
  for (auto& x : s) x = -x;
  GroupPoly r = shift(p, s);
  if (r.leading().second < 0) r = neg(r);
  return r;
}

bool reversal_symmetric(const GroupPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::Domain, "zero polynomial");
  return normalize_unit(p) == normalize_unit(reverse_all(p));
}

bool equal_up_to_unit(const GroupPoly& p, const GroupPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero() && p.vars() == q.vars();
  return normalize_unit(p) == normalize_unit(q);
}

GroupPoly specialize_ones(const GroupPoly& p, const std::vector<size_t>& keep) {
  std::vector<std::string> vars;
  for (size_t k : keep) vars.push_back(p.vars().at(k));
  GroupPoly r(vars);
  for (const auto& [e, c] : p.terms()) {
    ExpVec f;
    for (size_t k : keep) f.push_back(e[k]);
    r.add_term(f, c);
  }
  return r;
}

Integer eval_ones(const GroupPoly& p) {
  Integer s(0);
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

GroupPoly embed(const GroupPoly& p, const std::vector<std::string>& vars) {
  std::vector<size_t> pos;
  for (const auto& v : p.vars()) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw Error(ErrorCode::DimensionMismatch, "variable " + v + " missing from target ring");
    pos.push_back(static_cast<size_t>(it - vars.begin()));
  }
  GroupPoly r(vars);
  for (const auto& [e, c] : p.terms()) {
    ExpVec f(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) f[pos[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

std::string to_string(const GroupPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Integer a = abs(c);
    bool unit = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (a != 1 || unit) {
      os << a.get_str();
      need_star = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << p.vars()[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace fm
