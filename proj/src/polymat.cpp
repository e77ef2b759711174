#include "polymat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "error.hpp"

namespace fm {

PolyMatrix::PolyMatrix(size_t rows, size_t cols, std::vector<std::string> vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)) {
  entries_.assign(rows * cols, GroupPoly(vars_));
}

PolyMatrix::PolyMatrix(size_t rows, size_t cols, std::vector<GroupPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
  if (!entries_.empty()) vars_ = entries_.front().vars();
  for (const auto& e : entries_) {
    if (e.vars() != vars_) throw Error(ErrorCode::DimensionMismatch, "matrix entries use different variables");
  }
}

PolyMatrix PolyMatrix::identity(size_t n, const std::vector<std::string>& vars) {
  PolyMatrix m(n, n, vars);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = GroupPoly::constant(vars, 1);
  return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "shape mismatch in matrix product");
  if (a.vars() != b.vars()) throw Error(ErrorCode::DimensionMismatch, "matrices use different variables");
  PolyMatrix c(a.rows(), b.cols(), a.vars());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < b.cols(); ++j) {
      GroupPoly s(a.vars());
      for (size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s = add(s, mul(a.at(i, k), b.at(k, j)));
      }
      c.at(i, j) = std::move(s);
    }
  }
  return c;
}

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "shape mismatch in matrix sum");
  PolyMatrix c(a.rows(), a.cols(), a.vars());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = add(a.at(i, j), b.at(i, j));
  return c;
}

PolyMatrix transpose(const PolyMatrix& a) {
  PolyMatrix t(a.cols(), a.rows(), a.vars());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

PolyMatrix invert_vars(const PolyMatrix& a) {
  PolyMatrix t(a.rows(), a.cols(), a.vars());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) t.at(i, j) = reverse_all(a.at(i, j));
  return t;
}

PolyMatrix embed(const PolyMatrix& a, const std::vector<std::string>& vars) {
  PolyMatrix t(a.rows(), a.cols(), vars);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) t.at(i, j) = embed(a.at(i, j), vars);
  return t;
}

GroupPoly determinant(const PolyMatrix& m, size_t limit) {
  const size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (n > limit) throw Error(ErrorCode::Limit, "matrix size " + std::to_string(n) + " exceeds determinant limit " + std::to_string(limit));
  if (n == 0) return GroupPoly::constant(m.vars(), 1);
  // Expand along rows top to bottom; the minor of the remaining rows is
  // determined by the set of columns still unused, so memoize on that mask.
  const uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  std::vector<std::optional<GroupPoly>> memo(static_cast<size_t>(full) + 1);
  memo[0] = GroupPoly::constant(m.vars(), 1);
  // process masks in order of popcount so minors exist before they are used
  std::vector<uint32_t> masks;
  masks.reserve(full);
  for (uint32_t mask = 1; mask <= full; ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (uint32_t mask : masks) {
    const size_t k = static_cast<size_t>(std::popcount(mask));
    const size_t row = n - k;
    GroupPoly s(m.vars());
    int pos = 0;
    for (size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const GroupPoly& a = m.at(row, j);
      if (!a.is_zero()) {
        const GroupPoly& minor = *memo[mask & ~(1u << j)];
        if (!minor.is_zero()) {
          GroupPoly t = mul(a, minor);
          s = (pos % 2 == 0) ? add(s, t) : sub(s, t);
        }
      }
      ++pos;
    }
    memo[mask] = std::move(s);
  }
  return *memo[full];
}

GroupPoly char_det(const PolyMatrix& m, const std::string& new_var, size_t limit) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  if (std::find(m.vars().begin(), m.vars().end(), new_var) != m.vars().end()) {
    throw Error(ErrorCode::InvalidArgument, "variable " + new_var + " already used by the matrix");
  }
  std::vector<std::string> vars{new_var};
  vars.insert(vars.end(), m.vars().begin(), m.vars().end());
  PolyMatrix a = embed(m, vars);
  const size_t n = m.rows();
  ExpVec u(vars.size(), 0);
  u[0] = 1;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a.at(i, j) = neg(a.at(i, j));
    a.at(i, i).add_term(u, 1);
  }
  return determinant(a, limit);
}

GroupPoly teichmuller_from_transition(const PolyMatrix& pe, const std::optional<PolyMatrix>& pv,
                                      const std::string& new_var, size_t limit) {
  GroupPoly num = char_det(pe, new_var, limit);
  if (!pv) return num;
  GroupPoly den = char_det(*pv, new_var, limit);
  if (den.vars() != num.vars()) den = embed(den, num.vars());
  return exact_div(num, den);
}

std::vector<std::vector<Integer>> specialize_ones(const PolyMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i][j] = eval_ones(m.at(i, j));
  return out;
}

std::string to_string(const PolyMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m.at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace fm
