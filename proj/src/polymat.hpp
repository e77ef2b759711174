#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupring.hpp"

namespace fm {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(size_t rows, size_t cols, std::vector<std::string> vars);
  PolyMatrix(size_t rows, size_t cols, std::vector<GroupPoly> entries);

  static PolyMatrix identity(size_t n, const std::vector<std::string>& vars);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<GroupPoly>& entries() const { return entries_; }

  GroupPoly& at(size_t i, size_t j) { return entries_.at(i * cols_ + j); }
  const GroupPoly& at(size_t i, size_t j) const { return entries_.at(i * cols_ + j); }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.vars_ == b.vars_ && a.entries_ == b.entries_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<std::string> vars_;
  std::vector<GroupPoly> entries_;
};

// Size guard for cofactor expansion (2^n memo table).
inline constexpr size_t kDefaultDetLimit = 12;

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& a);
PolyMatrix invert_vars(const PolyMatrix& a);
PolyMatrix embed(const PolyMatrix& a, const std::vector<std::string>& vars);

GroupPoly determinant(const PolyMatrix& m, size_t limit = kDefaultDetLimit);

// det(uI - M) in the ring with `new_var` prepended to M's variables.
GroupPoly char_det(const PolyMatrix& m, const std::string& new_var, size_t limit = kDefaultDetLimit);

// char_det(PE) / char_det(PV); PV absent means the vertex factor cancelled.
GroupPoly teichmuller_from_transition(const PolyMatrix& pe, const std::optional<PolyMatrix>& pv,
                                      const std::string& new_var, size_t limit = kDefaultDetLimit);

// Plain integer matrix with every group variable set to 1.
std::vector<std::vector<Integer>> specialize_ones(const PolyMatrix& m);

std::string to_string(const PolyMatrix& m);

}  // namespace fm
