#pragma once

#include <string>
#include <vector>

#include "groupring.hpp"
#include "polymat.hpp"

namespace fm {

struct PennerStep {
  char kind = 'a';  // 'a' or 'b'
  std::vector<long> mult;
};

// Generic Penner construction: m a-curves, n b-curves, intersection matrix
// M_{ij} = sum_t e(a_i, t b_j) t over the group variables.
struct PennerSpec {
  PolyMatrix intersection;
  std::vector<PennerStep> word;
  long r = -1;  // total intersection count; -1 means derive from the matrix
  bool generic = false;
  std::string new_var = "u";

  size_t m() const { return intersection.rows(); }
  size_t n() const { return intersection.cols(); }
};

long intersection_count(const PolyMatrix& intersection);

// M^v for a-steps, M_w for b-steps.
PolyMatrix twist_block(const PennerSpec& spec, const PennerStep& step);

// Rotate to start with an a-step and merge neighbouring steps of one kind.
std::vector<PennerStep> normalize_word(const std::vector<PennerStep>& word);

PolyMatrix word_product(const PennerSpec& spec, const std::vector<PennerStep>& word);

GroupPoly phi(const PennerSpec& spec);
bool symmetry_check(const PennerSpec& spec);

}  // namespace fm
