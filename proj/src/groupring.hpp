#pragma once

#include <map>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace fm {

using ExpVec = std::vector<long>;

// Laurent polynomial with integer coefficients in named commuting variables.
// Terms live in a map keyed by exponent vector (lexicographic order); zero
// coefficients are never stored.
class GroupPoly {
 public:
  using TermMap = std::map<ExpVec, Integer>;

  GroupPoly() = default;
  explicit GroupPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static GroupPoly constant(const std::vector<std::string>& vars, const Integer& c);
  static GroupPoly monomial(const std::vector<std::string>& vars, const ExpVec& e, const Integer& c = 1);
  static GroupPoly variable(const std::vector<std::string>& vars, size_t index);

  const std::vector<std::string>& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExpVec& e, const Integer& c);
  Integer coeff(const ExpVec& e) const;

  // lexicographically greatest / least support points
  const std::pair<const ExpVec, Integer>& leading() const;
  const std::pair<const ExpVec, Integer>& trailing() const;

  long max_exp(size_t i) const;
  long min_exp(size_t i) const;

  friend bool operator==(const GroupPoly& a, const GroupPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupPoly& a, const GroupPoly& b) { return !(a == b); }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

GroupPoly add(const GroupPoly& p, const GroupPoly& q);
GroupPoly sub(const GroupPoly& p, const GroupPoly& q);
GroupPoly neg(const GroupPoly& p);
GroupPoly mul(const GroupPoly& p, const GroupPoly& q);
GroupPoly scale(const GroupPoly& p, const Integer& c);
GroupPoly pow(const GroupPoly& p, unsigned n);
GroupPoly shift(const GroupPoly& p, const ExpVec& e);

// Q*R = P exactly, or throws NotDivisible.
GroupPoly exact_div(const GroupPoly& p, const GroupPoly& q);

GroupPoly substitute_inverse(const GroupPoly& p, size_t var_index);
GroupPoly reverse_all(const GroupPoly& p);

// Canonical representative modulo multiplication by +-monomials: the
// lexicographically least support point is moved to the origin and the
// lexicographically greatest coefficient is made positive.
GroupPoly normalize_unit(const GroupPoly& p);
bool reversal_symmetric(const GroupPoly& p);
bool equal_up_to_unit(const GroupPoly& p, const GroupPoly& q);

// Set the variables not listed in keep to 1.
GroupPoly specialize_ones(const GroupPoly& p, const std::vector<size_t>& keep);
Integer eval_ones(const GroupPoly& p);

// Rename/reorder: result has vars `vars`, each old variable must appear in it.
GroupPoly embed(const GroupPoly& p, const std::vector<std::string>& vars);

std::string to_string(const GroupPoly& p);

void require_same_vars(const GroupPoly& p, const GroupPoly& q);

}  // namespace fm
